"""File writing for profiles, metrics and sweep tables."""

import logging
from collections.abc import Sequence
from pathlib import Path

import pandas as pd

from intensity_distortion.core.metric import MetricMatrix
from intensity_distortion.core.profile import Profile, format_profile
from intensity_distortion.core.rational import format_rational

logger = logging.getLogger(__name__)


def _check_parent(path: Path) -> None:
    parent_dir = path.parent
    if not parent_dir.exists():
        raise FileNotFoundError(f"Parent directory does not exist: {parent_dir}")
    if not parent_dir.is_dir():
        raise NotADirectoryError(f"Parent path is not a directory: {parent_dir}")


def write_profile_file(profile: Profile, path: Path) -> Path:
    path = Path(path)
    _check_parent(path)
    path.write_text(format_profile(profile), encoding="utf-8")
    logger.info(f"Wrote profile to {path}")
    return path


def write_metric_csv(
    metric: MetricMatrix,
    path: Path,
    alternative_names: Sequence[str] | None = None,
) -> Path:
    """Write distances as exact rationals, with an optional header row."""
    path = Path(path)
    _check_parent(path)
    if alternative_names is not None and len(alternative_names) != metric.num_alternatives:
        raise ValueError(
            f"Got {len(alternative_names)} names for {metric.num_alternatives} alternatives"
        )

    table = pd.DataFrame(
        [[format_rational(value) for value in row] for row in metric.distances],
        columns=list(alternative_names) if alternative_names is not None else None,
    )
    table.to_csv(
        path,
        index=False,
        header=alternative_names is not None,
        encoding="utf-8",
        lineterminator="\n",
    )
    logger.info(f"Wrote {metric.num_agents}x{metric.num_alternatives} metric to {path}")
    return path


def write_table_csv(table: pd.DataFrame, path: Path) -> Path:
    """Write a sweep table; identical tables give identical bytes."""
    path = Path(path)
    if table.empty:
        raise ValueError("Table cannot be empty")
    _check_parent(path)
    table.to_csv(path, index=False, encoding="utf-8", lineterminator="\n")
    logger.info(f"Wrote {len(table)} rows to {path}")
    return path
