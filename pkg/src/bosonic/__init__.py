"""Exact engine for bosonic vertex models, Demazure-Lusztig operators and
Hall-Littlewood polynomials."""

from .laurent import LaurentPoly, NotDivisible, RankMismatch
from .weyl import Permutation

__all__ = ["LaurentPoly", "NotDivisible", "RankMismatch", "Permutation"]
__version__ = "0.1.0"
