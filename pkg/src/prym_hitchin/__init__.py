"""Exact computations for Hitchin systems of invariant and anti-invariant
bundles on a curve with an involution."""

from .cover_geometry import CoverData, Linearization
from .errors import PrymHitchinError
from .exact_algebra import BiPoly, Poly, PolyMatrix, Rat

__all__ = ["BiPoly", "CoverData", "Linearization", "Poly", "PolyMatrix", "PrymHitchinError", "Rat"]
__version__ = "0.1.0"
