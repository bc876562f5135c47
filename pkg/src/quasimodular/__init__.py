"""Exact symbolic computation with quasi-modular forms, nearly holomorphic
modular forms and their vector-valued counterparts."""
from .exactcore import Scalar, QSeries, SymCoeff, EigenCoeff, UniPoly, BiPoly, rational_roots
from .nhform import NHForm, raise_op, lower4, delta_power, delta_power_closed
from .quasimod import QMForm, verify_transformation
from .vvops import VVTuple, qm_to_tuple, tuple_to_qm, check_commutators, check_sl2
from .rankincohen import rc_solve, rc_apply, rc_certificate, rc_is_excluded
from .laplacian import LiftProblem, lap_closed, eigenpoly, solve_alpha, build_lift, verify_eigen
from .formsdb import eisenstein, e2_qmform, discriminant, form

__version__ = "0.1.0"
