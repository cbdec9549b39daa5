"""
Configuration settings for the free braid toolkit
Reads all settings from environment variables
"""

import os
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Application configuration loaded from environment variables"""

    # Basic application settings
    project_name: str = os.getenv("PROJECT_NAME", "Free Braid Groups")
    project_description: str = os.getenv(
        "PROJECT_DESCRIPTION", "Free braid groups with parity and dots: words, maps and invariants"
    )
    version: str = os.getenv("VERSION", "0.1.0")

    # Logging
    log_level: str = os.getenv("LOG_LEVEL", "WARNING")

    # Search bounds for the rewriting oracle
    extra_len: int = int(os.getenv("EXTRA_LEN", "6"))  # max_len = |u| + extra_len
    max_states: int = int(os.getenv("MAX_STATES", "2000000"))
    seed: int = int(os.getenv("SEED", "0"))

    # Output
    output_format: str = os.getenv("OUTPUT_FORMAT", "text")
    parallel_profiles: bool = os.getenv("PARALLEL_PROFILES", "false").lower() == "true"

    def max_len_for(self, *lengths: int) -> int:
        """Default length cap for a search over words of the given lengths"""
        return max(lengths, default=0) + self.extra_len

    class Config:
        """Pydantic configuration"""
        env_file = ".env"
        case_sensitive = False
