import logging
from typing import Optional

from pydantic import field_validator
from pydantic_settings import BaseSettings


def log_level_name(value) -> str:
    """Upper-cased level name, one of those the logging module knows."""
    name = str(value).upper()
    if name not in logging.getLevelNamesMapping():
        raise ValueError(f"Unknown log level {value}")
    return name


class Settings(BaseSettings):
    # Sampling
    EXTKIT_SEED: Optional[int] = None
    MAX_REJECTION_RATE: float = 0.99

    # Logging
    LOG_LEVEL: str = "WARNING"

    # Tolerances
    POLE_TOLERANCE: float = 1e-12
    PDE_TOLERANCE: float = 1e-7
    PDE_GATE_SAMPLES: int = 100
    RESIDUAL_EPSILON: float = 1e-12
    DRIFT_EPSILON: float = 1e-12
    SVD_THRESHOLD: float = 1e-8
    SINGLE_VALUEDNESS_TOLERANCE: float = 1e-9

    # Integration and differencing
    RK4_DT: float = 1e-3
    T_FINAL: float = 10.0
    RKF45_TOL: float = 1e-10
    FD_STEP: float = 1e-5
    FLOW_FD_STEP: float = 1e-6

    @field_validator("LOG_LEVEL", mode="before")
    @classmethod
    def normalise_log_level(cls, value):
        return log_level_name(value)


settings = Settings()


def get_settings() -> Settings:
    return Settings()
