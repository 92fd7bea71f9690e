from typing import List

from pydantic import ConfigDict
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    # API information
    PROJECT_NAME: str = "Brake Index API"
    DESCRIPTION: str = "Exact index calculus for brake orbits: iteration formulae, Real Fredholm and ECH indices, and theorem replays."
    VERSION: str = "0.1.0"

    # CORS configuration
    CORS_ORIGINS: List[str] = ["*"]

    # Logging (CLI sink level)
    LOG_LEVEL: str = "WARNING"

    # Default verification bounds
    VERIFY_MAX_MULTIPLICITY: int = 10
    VERIFY_MAX_GENUS: int = 2
    VERIFY_MAX_N: int = 12
    VERIFY_THETA_DENOMINATOR: int = 25
    VERIFY_COVER_THETA_DENOMINATOR: int = 12
    VERIFY_MAX_DEGREE: int = 5
    VERIFY_MAX_PARTS: int = 10
    VERIFY_MAX_D: int = 20
    VERIFY_MAX_K: int = 50
    VERIFY_SAMPLES: int = 1000
    VERIFY_SEED: int = 20190101
    VERIFY_MAX_LEVELS: int = 3
    VERIFY_MAX_PUNCTURES: int = 6

    # Largest iterate and partition size served over HTTP
    HTTP_MAX_MULTIPLICITY: int = 60
    HTTP_MAX_PARTITION_N: int = 20

    # Largest verification bounds served over HTTP
    HTTP_MAX_VERIFY_MULTIPLICITY: int = 8
    HTTP_MAX_VERIFY_GENUS: int = 2
    HTTP_MAX_VERIFY_N: int = 12
    HTTP_MAX_VERIFY_THETA_DENOMINATOR: int = 25
    HTTP_MAX_VERIFY_COVER_THETA_DENOMINATOR: int = 12
    HTTP_MAX_VERIFY_DEGREE: int = 5
    HTTP_MAX_VERIFY_D: int = 60
    HTTP_MAX_VERIFY_K: int = 60
    HTTP_MAX_VERIFY_SAMPLES: int = 5000
    HTTP_MAX_VERIFY_LEVELS: int = 3
    HTTP_MAX_VERIFY_PUNCTURES: int = 6

    model_config = ConfigDict(
        env_file=".env",
        case_sensitive=True,
    )


# Create settings instance
settings = Settings()
