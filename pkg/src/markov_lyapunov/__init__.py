"""Exact Markov, Farey and Cohn trees, Lyapunov exponents of tree paths,
Minkowski's question-mark function and Markov forms."""
from .arith import IDENTITY, L, R, Mat2, QuadraticSurd, continuant, mat_mul, spectral_radius, surd_log
from .contfrac import ContinuedFraction, cf_of_rational, cf_of_surd, convergents, digits_to_turns, even_period_view
from .paths import TreePath

__version__ = "0.1.0"

__all__ = [
    "IDENTITY", "L", "R", "Mat2", "QuadraticSurd", "continuant", "mat_mul", "spectral_radius", "surd_log",
    "ContinuedFraction", "cf_of_rational", "cf_of_surd", "convergents", "digits_to_turns", "even_period_view",
    "TreePath",
]
