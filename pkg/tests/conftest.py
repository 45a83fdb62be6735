import sys
from pathlib import Path

# Add src directory to Python path
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from collections.abc import Iterator
from fractions import Fraction
from unittest.mock import patch

import pytest

from intensity_distortion.core.profile import Profile, parse_profile

POLAR_M2 = """\
# two agents, opposite rankings
alternatives: a1 a2
alpha: 1/2
mode: mandatory
agent: a1 >> a2
agent: a2 > a1
"""

OPPOSITE_VOLUNTARY = """\
alternatives: a b
alpha: 1/2
mode: voluntary
agent: a > b
agent: b > a
"""


@pytest.fixture
def config_dir(tmp_path: Path) -> Iterator[Path]:
    """Point the configuration layer at a temporary directory."""
    directory = tmp_path / "intensity-distortion"
    with patch(
        "intensity_distortion.core.config.get_config_dir", return_value=directory
    ):
        yield directory


@pytest.fixture
def polar_m2() -> Profile:
    return parse_profile(POLAR_M2)


@pytest.fixture
def opposite_voluntary() -> Profile:
    return parse_profile(OPPOSITE_VOLUNTARY)


@pytest.fixture
def half() -> Fraction:
    return Fraction(1, 2)
