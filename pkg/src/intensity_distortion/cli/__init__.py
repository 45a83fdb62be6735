from intensity_distortion.cli.main import main, run

__all__ = ["main", "run"]
