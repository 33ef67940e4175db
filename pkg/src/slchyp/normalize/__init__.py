"""Coordinate-normalization engine: quadric, weighted chain, quartic branch,
and cubic cone classification, all returning replayable automorphisms."""

from .auto import (
    Automorphism,
    LinearStep,
    NormalizationOutcome,
    Normalizer,
    ScaleStep,
    ShiftStep,
    UnitRescaleStep,
    automorphism_from_json,
)
from .quadric import normalize_quadric
from .steps import (
    normalize_w2_cubic,
    normalize_w3,
    normalize_w4,
    normalize_w5,
    normalize_w6,
)
from .quartic import normalize_quartic_211
from .cubiccone import classify_cubic_cone

__all__ = [
    "Automorphism",
    "LinearStep",
    "NormalizationOutcome",
    "Normalizer",
    "ScaleStep",
    "ShiftStep",
    "UnitRescaleStep",
    "automorphism_from_json",
    "classify_cubic_cone",
    "normalize_quadric",
    "normalize_quartic_211",
    "normalize_w2_cubic",
    "normalize_w3",
    "normalize_w4",
    "normalize_w5",
    "normalize_w6",
]
