"""Exact rational parsing and formatting."""

import logging
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from functools import total_ordering

logger = logging.getLogger(__name__)


def to_fraction(value: object) -> Fraction:
    """Convert an int, Fraction or numeric string to an exact Fraction.

    Floats are rejected because their binary expansion is rarely the value
    the caller meant.
    """
    if isinstance(value, bool):
        raise ValueError(f"Not a rational value: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise ValueError(f"Not a rational value: {value!r}")


def parse_rational(text: str) -> Fraction:
    """Parse `p/q`, an integer or an exact decimal such as `0.25`."""
    cleaned = text.strip()
    if not cleaned:
        raise ValueError("Empty rational value")
    try:
        return Fraction(cleaned)
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"Invalid rational value: {text!r}") from e


def format_rational(value: Fraction, digits: int = 0) -> str:
    """Render a Fraction as `p/q`, or as a decimal with `digits` places."""
    if digits > 0:
        with localcontext() as ctx:
            ctx.prec = digits + len(str(abs(value.numerator))) + 10
            exact = Decimal(value.numerator) / Decimal(value.denominator)
            quantum = Decimal(1).scaleb(-digits)
            return str(exact.quantize(quantum, rounding=ROUND_HALF_EVEN))
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational_list(text: str) -> list[Fraction]:
    """Parse a comma-separated list like `1/4,1/2,0.75`."""
    items = [item for item in text.split(",") if item.strip()]
    if not items:
        raise ValueError(f"Empty rational list: {text!r}")
    return [parse_rational(item) for item in items]


def parse_rational_range(text: str) -> list[Fraction]:
    """Parse `start:stop:step` into an inclusive exact grid.

    A plain list (`1/4,1/2`) is accepted too.
    """
    if ":" not in text:
        return parse_rational_list(text)

    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"Range must look like start:stop:step, got {text!r}")
    start, stop, step = (parse_rational(part) for part in parts)
    if step <= 0:
        raise ValueError(f"Range step must be positive, got {format_rational(step)}")
    if stop < start:
        raise ValueError(f"Range stop {format_rational(stop)} is below start")

    values = []
    current = start
    while current <= stop:
        values.append(current)
        current += step
    logger.debug(f"Parsed range {text!r} into {len(values)} values")
    return values


@total_ordering
@dataclass(frozen=True)
class ExtendedValue:
    """A rational, or +infinity when `finite` is None."""

    finite: Fraction | None = None

    @classmethod
    def of(cls, value: object) -> "ExtendedValue":
        return cls(to_fraction(value))

    @classmethod
    def infinity(cls) -> "ExtendedValue":
        return cls(None)

    @property
    def is_infinite(self) -> bool:
        return self.finite is None

    @property
    def value(self) -> Fraction:
        if self.finite is None:
            raise ValueError("Infinite value has no rational representation")
        return self.finite

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, ExtendedValue):
            return NotImplemented
        if self.finite is None:
            return False
        if other.finite is None:
            return True
        return self.finite < other.finite

    def __str__(self) -> str:
        return format_extended(self)


def format_extended(value: ExtendedValue, digits: int = 0) -> str:
    if value.finite is None:
        return "inf"
    return format_rational(value.finite, digits)
