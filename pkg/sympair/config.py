from typing import Literal

from pydantic_settings import BaseSettings, SettingsConfigDict

class Settings(BaseSettings):
    # Largest n for which S_n is enumerated (8! = 40320 elements)
    enumeration_bound: int = 8

    # Verification suite
    random_seed: int = 1729
    verify_samples: int = 20
    round_trip_samples: int = 100

    # Divisor Radon transform on N*
    divisor_truncation: int = 10_000
    divisor_tolerance: float = 1e-6

    log_level: str = "WARNING"
    output_format: Literal["text", "json"] = "text"

    model_config = SettingsConfigDict(env_file=".env", env_file_encoding="utf-8", env_prefix="SYMPAIR_")

settings = Settings()
