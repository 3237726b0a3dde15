"""
Command line entry point.

    wql <mode> --config <path> [--out <dir>]

Exit codes: 0 success, 1 invalid configuration or arguments, 2 numerical failure.

Author : Coke
Date   : 2025-06-13
"""

import logging
import sys
from pathlib import Path

import click

from src.core.config import settings
from src.core.exceptions import EXIT_INVALID, EXIT_NUMERICAL, EXIT_OK, BaseLabException, ConfigError
from src.core.lifecycle import lifespan
from src.schemas.config import Mode, parse_config
from src.services.experiments import run

logger = logging.getLogger(__name__)

HELP = {
    Mode.EVAL: "Evaluate every bound on one point set and test function.",
    Mode.SWEEP: "Evaluate every bound over a list of sizes and seeds.",
    Mode.LEMMA1: "Evaluate the localized estimate on the ball or cone example.",
    Mode.LEMMA4: "Evaluate the ball estimate for a function vanishing at the origin.",
    Mode.AUDIT: "Follow the transport argument region by region on a bottleneck plan.",
    Mode.GEN_POINTS: "Write a generated point set.",
    Mode.PLOT: "Draw a log-log chart of two columns of a results file.",
}


def execute(mode: Mode, config_path: Path, out: Path | None) -> int:
    """
    Run one mode and translate failures into exit codes.

    Args:
        mode (Mode): Mode to run, overriding the configuration's.
        config_path (Path): Experiment configuration file.
        out (Path | None): Output directory.

    Returns:
        int: The process exit code.
    """
    with lifespan(mode.value):
        try:
            if not config_path.is_file():
                raise ConfigError(detail=f"config file not found: {config_path}")
            cfg = parse_config(config_path.read_text(encoding="utf-8"))
            run(cfg, mode, out)
        except BaseLabException as exc:
            logger.error("%s failed (%s): %s", mode.value, type(exc).__name__, exc.detail)
            return exc.exit_code
        except Exception as exc:
            logger.exception("%s failed unexpectedly: %s", mode.value, exc)
            return EXIT_NUMERICAL
    return EXIT_OK


@click.group()
@click.version_option(settings.APP_VERSION, prog_name="wql")
def cli() -> None:
    """Transport bounds for quadrature errors."""


def _register(mode: Mode) -> None:
    @cli.command(name=mode.value, help=HELP[mode])
    @click.option(
        "--config",
        "config_path",
        required=True,
        type=click.Path(dir_okay=False, path_type=Path),
        help="Experiment configuration file.",
    )
    @click.option("--out", type=click.Path(file_okay=False, path_type=Path), default=None, help="Output directory.")
    @click.pass_context
    def command(ctx: click.Context, config_path: Path, out: Path | None) -> None:
        ctx.exit(execute(mode, config_path, out))


for _mode in Mode:
    _register(_mode)


def main() -> None:
    """Console script: usage errors exit 1 like any other invalid argument."""
    try:
        code = cli.main(standalone_mode=False)
    except click.exceptions.Abort:
        sys.exit(EXIT_INVALID)
    except click.ClickException as exc:
        exc.show()
        sys.exit(EXIT_INVALID)
    sys.exit(code or EXIT_OK)


if __name__ == "__main__":
    main()
