"""Configuration management for eds-match."""

import logging
import sys
from functools import lru_cache

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings loaded from environment variables (prefix ``EDS_``)."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="EDS_",
        case_sensitive=False,
    )

    # Brute-force oracle budget
    oracle_max_strings: int = 10_000
    oracle_max_letters: int = 10_000_000

    # References shorter than this are compared letter by letter
    lce_scan_threshold: int = 16

    # Generator
    default_rng_seed: int = 42

    # App Settings
    log_level: str = "WARNING"


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()


def setup_logging() -> None:
    """Configure logging for the application."""
    settings = get_settings()
    log_level = getattr(logging, settings.log_level.upper(), logging.WARNING)

    # stdout carries command output only
    logging.basicConfig(
        level=log_level,
        stream=sys.stderr,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
    )
