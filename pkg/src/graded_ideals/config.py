from functools import lru_cache
from typing import Literal, Optional

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Configuration for ring construction, enumeration and the theorem suite."""

    # Ring size caps
    max_ring_order: int = 65536     # Constructors reject anything larger
    table_limit: int = 4096         # Dense add/mul tables only up to this order

    # Radical search: None means the ring order
    radical_power_cap: Optional[int] = None

    # Theorem corpus
    corpus: Literal["small", "default", "large"] = "default"
    max_set_generators: int = 2
    progress: bool = False

    log_level: str = "INFO"

    # Configure .env file loading
    model_config = SettingsConfigDict(
        env_prefix="GRADED_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore"
    )


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings."""
    return Settings()
