"""
Configuration Management
Environment settings and search limits for kufam
"""
import logging
import logging.config
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import yaml
from pydantic import Field
from pydantic_settings import BaseSettings

LOGGING_CONFIG_PATH = Path(__file__).parent / "logging.yaml"
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


class Settings(BaseSettings):
    """
    Settings loaded from the environment.
    Only the worker count and the log level are read from it; everything that
    can change a result is a command-line flag.
    """

    workers: int = Field(
        default=1,
        description="Worker processes for experiment trials (KUFAM_WORKERS)"
    )

    log_level: str = Field(
        default="WARNING",
        description="Logging level for standard error (KUFAM_LOG_LEVEL)"
    )

    model_config = {
        "env_prefix": "KUFAM_",
        "env_file": ".env",
        "env_file_encoding": "utf-8",
        "case_sensitive": False,
        "extra": "ignore"
    }


@dataclass
class Limits:
    """Size caps and budgets for the exact searches"""
    oracle_cap: int = 24
    exhaustive_limit: int = 20
    random_retry_cap: int = 50
    search_budget: int = 200_000
    canonical_permutation_limit: int = 50_000
    stale_rounds: int = 25


# Global settings instance
settings = Settings()


def validate_settings(current: Optional[Settings] = None) -> bool:
    """
    Validate settings values

    Returns:
        bool: True if all settings are usable
    """
    logger = logging.getLogger(__name__)
    current = current or settings

    if current.workers < 1:
        logger.error(f"KUFAM_WORKERS must be >= 1, got {current.workers}")
        return False
    if not isinstance(logging.getLevelName(current.log_level.upper()), int):
        logger.error(f"Unknown KUFAM_LOG_LEVEL: {current.log_level}")
        return False

    logger.debug(f"KUFAM_WORKERS: {current.workers}")
    logger.debug(f"KUFAM_LOG_LEVEL: {current.log_level}")
    return True


def setup_logging(level: Optional[str] = None) -> None:
    """Apply config/logging.yaml, or a basic stderr configuration when it is missing"""
    level = (level or settings.log_level).upper()
    if LOGGING_CONFIG_PATH.exists():
        with open(LOGGING_CONFIG_PATH, "r") as f:
            logging_config = yaml.safe_load(f)
        logging_config["root"]["level"] = level
        for handler in logging_config.get("handlers", {}).values():
            handler["level"] = level
        logging.config.dictConfig(logging_config)
    else:
        logging.basicConfig(level=getattr(logging, level), format=LOG_FORMAT)
