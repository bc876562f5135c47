"""Exact arithmetic shared by everything else."""
from .scalar import Scalar, ZERO, ONE, OMEGA, OMEGA_NUMERIC, as_fraction
from .poly import UniPoly, BiPoly, rational_roots, resultant
from .qseries import QSeries
from .symbolic import SymCoeff, EigenCoeff
from .linalg import rref, rank, nullspace, solve_affine, det

__all__ = [
    "Scalar", "ZERO", "ONE", "OMEGA", "OMEGA_NUMERIC", "as_fraction",
    "UniPoly", "BiPoly", "rational_roots", "resultant",
    "QSeries", "SymCoeff", "EigenCoeff",
    "rref", "rank", "nullspace", "solve_affine", "det",
]
