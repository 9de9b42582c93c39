import logging
import sys
from pathlib import Path
from typing import Any, Dict, Optional, Sequence

import typer
from pydantic import ValidationError

from .config import get_settings
from .exceptions import MultipletError
from .models.models import RunConfig
from .run_pipeline import run_pipeline, write_output
from .services.verify_service import run_verify

# Configure logging
logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

app = typer.Typer(
    add_completion=False,
    help="Exact main multiplets of so*(12), so(6,6) and the so*(4r) family.",
)


def configure_logging(level: str) -> None:
    """Send log records to stderr so stdout only carries the artifact."""
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.INFO),
        format=LOG_FORMAT,
        stream=sys.stderr,
        force=True,
    )


def build_config(params: Dict[str, Any]) -> RunConfig:
    """
    Merge CLI parameters over the settings defaults.

    Raises:
        typer.BadParameter: If the combined values do not validate
    """
    settings = get_settings()

    def pick(name: str) -> Any:
        value = params.get(name)
        return getattr(settings, name) if value is None else value

    values = {
        "algebra": pick("algebra"),
        "rank": pick("rank"),
        "labels": pick("labels"),
        "edges": pick("edges"),
        "output_format": pick("output_format"),
        "verify": params.get("verify", False),
        "output": params.get("output"),
        "allow_split_any_rank": params.get("allow_split_any_rank", False),
    }
    try:
        return RunConfig(**values)
    except ValidationError as e:
        messages = "; ".join(error["msg"] for error in e.errors())
        raise typer.BadParameter(messages)


def parse_args(argv: Sequence[str]) -> RunConfig:
    """
    Parse command-line arguments into a validated RunConfig.

    Raises:
        typer.BadParameter: If the values do not validate; unknown flags raise a usage error
    """
    command = typer.main.get_command(app)
    with command.make_context("multiplets", list(argv)) as ctx:
        return build_config(ctx.params)


@app.command()
def multiplets(
    algebra: Optional[str] = typer.Option(None, "--algebra", help="so-star or so-split"),
    rank: Optional[int] = typer.Option(None, "--rank", help="Even rank n >= 4"),
    labels: Optional[str] = typer.Option(
        None, "--labels", help="'symbolic' or comma-separated positive labels"
    ),
    edges: Optional[str] = typer.Option(None, "--edges", help="reduced or all"),
    output_format: Optional[str] = typer.Option(None, "--format", help="json, dot or table"),
    verify: bool = typer.Option(False, "--verify", help="Run the verification oracles"),
    output: Optional[Path] = typer.Option(None, "--output", "-o", help="Write to a file"),
    allow_split_any_rank: bool = typer.Option(
        False, "--allow-split-any-rank", help="Allow so-split away from rank 6"
    ),
    log_level: Optional[str] = typer.Option(None, "--log-level", help="Logging level"),
):
    """Build, verify and emit a main multiplet."""
    settings = get_settings()
    configure_logging(log_level or settings.log_level)

    config = build_config(
        {
            "algebra": algebra,
            "rank": rank,
            "labels": labels,
            "edges": edges,
            "output_format": output_format,
            "verify": verify,
            "output": output,
            "allow_split_any_rank": allow_split_any_rank,
        }
    )

    try:
        if config.verify:
            report = run_verify(config, settings)
            typer.echo(report.render(), nl=False)
            if not report.passed:
                raise typer.Exit(code=1)
            return

        payload = run_pipeline(config, settings)
    except MultipletError as e:
        logger.error(f"Multiplet construction failed: {e}")
        raise typer.Exit(code=1)
    except typer.Exit:
        raise
    except Exception as e:
        logger.error(f"Unexpected error: {e}", exc_info=True)
        raise

    if config.output is None:
        typer.echo(payload.decode("utf-8"), nl=False)
    else:
        write_output(payload, config.output)


if __name__ == "__main__":
    app()
