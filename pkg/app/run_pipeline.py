# app/run_pipeline.py
"""
Multiplet pipeline that orchestrates construction, validation and emission.
"""
import logging
from pathlib import Path
from typing import Optional

from .config import Settings, get_settings
from .exceptions import GoldenTableError
from .models.models import RunConfig
from .services.export_service import emit
from .services.golden_service import GOLDEN_RANK, GoldenTableService
from .services.multiplet_service import MultipletService

# Configure logging
logger = logging.getLogger(__name__)


def load_golden(rank: int, settings: Settings) -> Optional[GoldenTableService]:
    """Golden table used for vertex names, or None away from rank 6."""
    if rank != GOLDEN_RANK:
        return None
    try:
        return GoldenTableService(settings.golden_table_path)
    except GoldenTableError as e:
        logger.warning(f"Golden table unavailable, falling back to flip-set names: {e}")
        return None


def run_pipeline(config: RunConfig, settings: Optional[Settings] = None) -> bytes:
    """
    Execute the multiplet pipeline.

    Pipeline steps:
    1. Build the ER vertices for every coset representative
    2. Detect and reduce the BGG arrows, pair by Knapp-Stein
    3. Validate and serialize in the requested format

    Returns:
        The emitted artifact
    """
    settings = settings or get_settings()
    mode = "symbolic" if config.symbolic else f"labels {config.labels}"
    logger.info(f"Building {config.algebra.value} multiplet at rank {config.rank} ({mode})")

    service = MultipletService(
        rank=config.rank,
        algebra=config.algebra,
        golden=load_golden(config.rank, settings),
    )
    multiplet = service.build_multiplet(config.labels)

    if multiplet.finite_dim is not None:
        logger.info(f"Finite-dimensional subspace at chi_0^- has dim E = {multiplet.finite_dim}")

    payload = emit(multiplet, config.output_format, config.edges)
    logger.info(f"Emitted {len(payload)} bytes as {config.output_format.value}")
    return payload


def write_output(payload: bytes, output: Path) -> None:
    """Write the artifact to a file, creating parent directories."""
    output.parent.mkdir(parents=True, exist_ok=True)
    output.write_bytes(payload)
    logger.info(f"Wrote {output}")
