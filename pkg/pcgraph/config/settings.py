"""Central configuration for pcgraph."""

from __future__ import annotations

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class PcGraphSettings(BaseSettings):
    """Global settings for pcgraph.

    Environment variables use the PCGRAPH_ prefix, e.g. ``PCGRAPH_TOL_ZERO=1e-9``.
    """

    model_config = SettingsConfigDict(
        env_prefix="PCGRAPH_",
        case_sensitive=False,
        env_file=".env",
        extra="ignore",
    )

    # Spectral (floating point) verdicts
    tol_gap_rel: float = Field(default=1e-8, gt=0)
    tol_zero: float = Field(default=1e-8, gt=0)
    indeterminate_factor: float = Field(default=10.0, gt=1)

    # Leader controllability
    pbh_rank_tol: float = Field(default=1e-8, gt=0)
    exact_rank_max_n: int = Field(default=16, ge=0)
    subset_guard: int = Field(default=20, ge=1)

    # Searches
    census_guard: int = Field(default=7, ge=1)
    random_census_max_n: int = Field(default=64, ge=1)
    spectrum_match_tol: float = Field(default=1e-3, gt=0)
    workers: int = Field(default=1, ge=1)

    # Steering
    gramian_condition_max: float = Field(default=1e10, gt=1)
    gramian_rel_tol: float = Field(default=1e-10, gt=0)
    steer_steps: int = Field(default=2000, ge=2)

    log_level: str = "WARNING"

    def tol_gap(self, lambda_max: float) -> float:
        """Absolute eigengap tolerance for a spectrum with the given largest eigenvalue."""
        return self.tol_gap_rel * max(1.0, abs(lambda_max))


_settings: PcGraphSettings | None = None


def get_settings() -> PcGraphSettings:
    """Get cached settings instance."""
    global _settings
    if _settings is None:
        _settings = PcGraphSettings()
    return _settings


def reset_settings() -> None:
    """Drop the cached settings so the next call re-reads the environment."""
    global _settings
    _settings = None
