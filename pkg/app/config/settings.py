from pydantic_settings import BaseSettings
import os
from dotenv import load_dotenv

load_dotenv()

class Settings(BaseSettings):
    PROJECT_NAME: str = "Cayley Stability Toolkit"
    API_V1_STR: str = "/api/v1"

    # Logging Configuration
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "INFO")
    LOG_FORMAT: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

    # Group Construction
    ASSOCIATIVITY_EXHAUSTIVE_MAX_ORDER: int = 64
    ASSOCIATIVITY_SAMPLE_SIZE: int = 4096
    MAX_GROUP_ORDER: int = 512
    RANDOM_SEED: int = 1729

    # Automorphism Engine
    NAIVE_MAX_VERTICES: int = 8

    # Graph Formats
    GRAPH6_MAX_VERTICES: int = 62

    # Theorem Checkers
    CHAO_MAX_PRIME: int = 17
    SWEEP_JOBS: int = int(os.getenv("SWEEP_JOBS", "1"))
    SWEEP_MAX_CLASSES: int = 12

    class Config:
        env_file = ".env"
        case_sensitive = True

settings = Settings()
