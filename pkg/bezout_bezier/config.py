# bezout_bezier/config.py

from functools import lru_cache

from dotenv import load_dotenv
from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from bezout_bezier.constants import LOG_LEVELS, TOLERANCE_SCALE

load_dotenv()


class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="BEZOUT_BEZIER_", extra="ignore")

    # Upper bound on worker threads used to build envelope records.
    threads: int = Field(default=1, ge=1)
    log_level: str = "WARNING"
    # tol = tolerance_scale * max(1, ||(p,q)||) for the floating-point identity checks
    tolerance_scale: float = Field(default=TOLERANCE_SCALE, gt=0)
    default_curve_samples: int = Field(default=256, ge=2)
    default_width_px: int = Field(default=800, ge=16)

    @field_validator("log_level")
    @classmethod
    def known_level(cls, value: str) -> str:
        level = value.upper()
        if level not in LOG_LEVELS:
            raise ValueError(f"log_level must be one of {', '.join(LOG_LEVELS)}")
        return level


@lru_cache
def get_settings() -> Settings:
    return Settings()
