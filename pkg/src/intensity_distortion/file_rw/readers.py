import logging
from pathlib import Path

import pandas as pd

from intensity_distortion.core.metric import MetricMatrix
from intensity_distortion.core.profile import Profile, parse_profile
from intensity_distortion.core.rational import parse_rational

logger = logging.getLogger(__name__)


def read_profile_file(path: Path) -> Profile:
    """Read a profile in the `alternatives:` / `alpha:` / `agent:` text format."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError as e:
        logger.error(f"Profile file not found: {path}")
        raise FileNotFoundError(f"Profile file not found: {path}") from e
    except PermissionError as e:
        logger.error(f"Permission denied reading profile file: {path}")
        raise PermissionError(f"Permission denied reading profile file: {path}") from e

    profile = parse_profile(text)
    logger.info(
        f"Read profile with {profile.num_agents} agents and "
        f"{profile.num_alternatives} alternatives from {path}"
    )
    return profile


def _is_rational_row(values: list[str]) -> bool:
    try:
        for value in values:
            parse_rational(value)
    except ValueError:
        return False
    return True


def read_metric_csv(path: Path) -> tuple[MetricMatrix, tuple[str, ...] | None]:
    """Read an agents-by-alternatives distance table.

    The first row is a header of alternative names when it does not parse as
    rationals. Returns the metric and the header, or None without one.
    """
    path = Path(path)
    if not path.exists():
        logger.error(f"Metric file not found: {path}")
        raise FileNotFoundError(f"Metric file not found: {path}")

    # Everything as strings so entries stay exact.
    try:
        raw = pd.read_csv(
            path,
            header=None,
            dtype=str,
            skipinitialspace=True,
            keep_default_na=False,
        )
    except pd.errors.EmptyDataError as e:
        raise ValueError(f"Metric file is empty: {path}") from e
    except pd.errors.ParserError as e:
        raise ValueError(f"Unable to parse metric file {path}: {e}") from e

    rows = [[cell.strip() for cell in row] for row in raw.itertuples(index=False)]
    header: tuple[str, ...] | None = None
    if rows and not _is_rational_row(rows[0]):
        header = tuple(rows[0])
        rows = rows[1:]
    if not rows:
        raise ValueError(f"Metric file has no distance rows: {path}")

    try:
        metric = MetricMatrix.from_rows(rows)
    except ValueError as e:
        raise ValueError(f"Invalid distance in {path}: {e}") from e
    logger.info(
        f"Read metric with {metric.num_agents} agents and "
        f"{metric.num_alternatives} alternatives from {path}"
    )
    return metric, header
