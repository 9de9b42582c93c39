# app/config.py
"""
Application configuration using Pydantic Settings for validation.
"""
from functools import lru_cache
from pathlib import Path

from pydantic import Field
from pydantic_settings import BaseSettings

DEFAULT_GOLDEN_TABLE = (
    Path(__file__).resolve().parent / "configs" / "so_star_12_signatures.json"
)


class Settings(BaseSettings):
    """
    Application settings with validation.

    Environment variables (prefixed ``MULTIPLET_``) are loaded from the
    process environment or a .env file. None of them is required; command
    line flags take precedence over every value here.
    """

    # Run defaults
    algebra: str = Field(default="so-star", description="so-star or so-split")
    rank: int = Field(default=6, description="Rank n of D_n (even, >= 4)")
    labels: str = Field(
        default="symbolic",
        description="'symbolic' or comma-separated positive Dynkin labels",
    )
    edges: str = Field(default="reduced", description="reduced or all")
    output_format: str = Field(default="json", description="json, dot or table")

    # Application Settings
    log_level: str = Field(default="INFO", description="Logging level")
    golden_table_path: Path = Field(
        default=DEFAULT_GOLDEN_TABLE,
        description="Transcribed so*(12) signature table used for naming and verify",
    )

    # Verification Settings
    oracle_max_rank: int = Field(
        default=6, description="Largest rank the brute-force Weyl group oracle accepts"
    )
    verify_seed: int = Field(
        default=2014, description="Seed for random weights and label vectors"
    )
    verify_samples: int = Field(
        default=20, description="Random label vectors for the mode-consistency check"
    )

    class Config:
        env_prefix = "MULTIPLET_"
        env_file = ".env"
        env_file_encoding = "utf-8"
        case_sensitive = False
        extra = "ignore"


@lru_cache
def get_settings() -> Settings:
    """
    Get cached settings instance.

    Uses lru_cache to ensure settings are only loaded once.
    """
    return Settings()
