"""Shipped inputs: the published target spectrum, its overlay and the pinned base."""

from __future__ import annotations

from pathlib import Path

DATA_DIR = Path(__file__).resolve().parent

PUBLISHED_SPECTRUM = DATA_DIR / "published_spectrum.yaml"
STEP4_OVERLAY = DATA_DIR / "step4_overlay.txt"
PINNED_BASE = DATA_DIR / "base_pinned.txt"
STEPS_1_3_SCRIPT = DATA_DIR / "steps_1_3.pcs"
STEPS_1_5_SCRIPT = DATA_DIR / "steps_1_5.pcs"
