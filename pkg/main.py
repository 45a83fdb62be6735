"""Main entry point for the intensity-distortion command line."""

from intensity_distortion.cli.main import run


def main() -> None:
    """Run the intensity-distortion command line."""
    run()


if __name__ == "__main__":
    main()
