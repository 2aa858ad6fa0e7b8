"""Rudin-Shapiro polynomials: exact construction, unit-circle evaluation,
certified zero counting of R_k(t) - n and the associated counting bounds."""

from .bounds import BoundReport, lemma32, lemma33, lemma34, theorem11, theorem21
from .circle import (
    EvalGrid,
    eval_grid,
    eval_point,
    sup_norm,
    tol_grid,
    verify_lemma31,
    verify_parallelogram,
)
from .core import (
    RudinShapiroPair,
    autocorrelation,
    generate,
    real_zero_count,
    reversal_identity_check,
)
from .errors import (
    ArcTooShortError,
    GridTooLargeError,
    GridTooSmallError,
    IdentityViolation,
    LevelTooLargeError,
    NonConvergenceError,
)
from .roots import RootSet, angular_count, find_roots, verify_theorem11
from .zeros import (
    Arc,
    ZeroCountReport,
    chain_check,
    count_zeros,
    oracle_count,
    proof_construction,
)

__all__ = [
    "Arc", "ArcTooShortError", "BoundReport", "EvalGrid", "GridTooLargeError",
    "GridTooSmallError", "IdentityViolation", "LevelTooLargeError",
    "NonConvergenceError", "RootSet", "RudinShapiroPair", "ZeroCountReport",
    "angular_count", "autocorrelation", "chain_check", "count_zeros", "eval_grid",
    "eval_point", "find_roots", "generate", "lemma32", "lemma33", "lemma34",
    "oracle_count", "proof_construction", "real_zero_count",
    "reversal_identity_check", "sup_norm", "theorem11", "theorem21", "tol_grid",
    "verify_lemma31", "verify_parallelogram", "verify_theorem11",
]
