"""
Configuration settings for the quartic degeneration engine
"""
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Application settings"""

    # Randomized trials
    DEFAULT_SEED: int = 20240
    DEFAULT_TRIALS: int = 20
    RANDOM_COEFF_BOUND: int = 9

    # Series truncation
    LIFT_ORDER: int = 1
    MODEL_ORDER: int = 3

    # Constructions
    MAX_DESIGN_ATTEMPTS: int = 64
    MAX_COVER_DEGREE: int = 12

    # Output
    DOT_RANKDIR: str = "LR"
    JSON_INDENT: int = 2

    # Logging
    LOG_LEVEL: str = "INFO"

    class Config:
        env_file = ".env"
        case_sensitive = True


settings = Settings()
