"""Exact rational toolkit for q-generalized flexible algebras."""

from .algebra import AlgebraSpec, check_q_flexible
from .bimodule import Bimodule, check_bimodule, semidirect_product
from .double import DoubleSpec, build_double, manin_verdict
from .matched_pair import MatchedPairSpec, bicrossed_product, check_matched_pair
from .octonion import build_octonion

__version__ = "0.1.0"

__all__ = [
    "AlgebraSpec", "Bimodule", "DoubleSpec", "MatchedPairSpec",
    "bicrossed_product", "build_double", "build_octonion", "check_bimodule",
    "check_matched_pair", "check_q_flexible", "manin_verdict", "semidirect_product",
]
