"""Configuration settings for the application."""

import os
from typing import Optional

from dotenv import load_dotenv

load_dotenv()


class Settings:
    """Application settings."""

    # Worker pool (grid rows run in parallel above 1)
    MAX_WORKERS: int = max(1, int(os.getenv("GAD_MAX_WORKERS", "1")))

    # Logging
    LOG_LEVEL: Optional[str] = os.getenv("GAD_LOG_LEVEL")

    # Numerical tolerances
    PHYSICALITY_TOL: float = float(os.getenv("GAD_PHYSICALITY_TOL", "1e-9"))

    # Detector thresholds
    ZERO_TOL: float = float(os.getenv("GAD_ZERO_TOL", "1e-6"))
    SLOPE_EPS: float = float(os.getenv("GAD_SLOPE_EPS", "0.02"))
    MIN_FROZEN_LEN: float = float(os.getenv("GAD_MIN_FROZEN_LEN", "0.05"))
    KINK_THRESHOLD: float = float(os.getenv("GAD_KINK_THRESHOLD", "5.0"))

    # Sweep defaults
    GAMMA_COUNT: int = int(os.getenv("GAD_GAMMA_COUNT", "1001"))

    # Verification
    SEED: int = int(os.getenv("GAD_SEED", "20140707"))


settings = Settings()
