"""Polarity and hyperpolarity checks for left-right translation actions."""

from .actions import (ActionSpec, PolarityReport, analyze, cohomogeneity,
                      is_transitive, polarity_check,
                      product_flatness_diagnostic)
from .lie_algebras import LieAlgebra, build_classical, make_automorphism
from .numerics import ToleranceConfig
from .subalgebras import Subalgebra, diagonal_sigma, product, split_ideals

__all__ = [
    "ActionSpec", "PolarityReport", "analyze", "cohomogeneity",
    "is_transitive", "polarity_check", "product_flatness_diagnostic",
    "LieAlgebra", "build_classical", "make_automorphism",
    "ToleranceConfig", "Subalgebra", "diagonal_sigma", "product",
    "split_ideals",
]
