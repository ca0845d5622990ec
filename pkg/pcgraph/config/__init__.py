"""Configuration helpers for pcgraph."""

from pcgraph.config.settings import PcGraphSettings, get_settings, reset_settings

__all__ = ["PcGraphSettings", "get_settings", "reset_settings"]
