from typing import Literal

from dotenv import load_dotenv
from pydantic import ConfigDict, Field
from pydantic_settings import BaseSettings

# Load .env file automatically
load_dotenv()


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    # App settings
    APP_NAME: str = "bipartite-games"
    ENVIRONMENT: Literal["development", "test", "production"] = "development"
    LOG_LEVEL: str = "WARNING"

    # Oracle (brute force over all labeled games)
    ORACLE_MAX_N: int = Field(default=5, ge=1, le=6)
    ALLOW_N6: bool = False
    ORACLE_WORKERS: int = Field(default=1, ge=1)

    # Enumeration
    ENUMERATION_MAX_N: int = Field(default=24, ge=2)

    model_config = ConfigDict(env_file=".env", case_sensitive=True, extra="ignore")

