"""Exact Hankel determinants for Bernoulli and q-analogue sequences.

The package computes Hankel determinants over multivariate Laurent
polynomial rings with rational coefficients, entirely in exact
arithmetic, and ships a registry of machine-checked identities covering
binomial and q-binomial transform invariants, Bernoulli closed forms,
Carlitz q-Bernoulli numbers and the big q-Jacobi moment route.

Entry points: `hankel_det` for one determinant, `run_suite` for the full
identity registry, and the `qhankel` console script for both.
"""

from .errors import KernelError
from .hankel import SequenceSpec, bareiss_det, hankel_det, hankel_matrix, heilermann_det
from .polyring import (
    SYMBOLS,
    MultiPoly,
    RatFuncQ,
    gcd_q,
    lift,
    parse_poly,
    ratfunc,
    var,
)
from .report import VerifyReport
from .suite import run_suite

__version__ = "0.1.0"

__all__ = [
    "KernelError",
    "MultiPoly",
    "RatFuncQ",
    "SYMBOLS",
    "SequenceSpec",
    "VerifyReport",
    "bareiss_det",
    "gcd_q",
    "hankel_det",
    "hankel_matrix",
    "heilermann_det",
    "lift",
    "parse_poly",
    "ratfunc",
    "run_suite",
    "var",
    "__version__",
]
