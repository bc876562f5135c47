"""Quasi-modular forms as the tuple (f_0, ..., f_d) of companions.

f_0 is the function itself.  The companions are defined by

    f(gamma tau) = sum_r (c tau + d)^{k-r} c^r f_r(tau),

and f_r has weight k - 2r.  Every operator here acts on the whole tuple so
that the transformation law is preserved.
"""
import cmath
from dataclasses import dataclass
from fractions import Fraction

from .exactcore import as_fraction
from .nhform import (NHForm, raise_op, lower4, mul_y, nh_mul, eval_numeric,
                     truncation_bound)


class QMForm:
    __slots__ = ("weight", "components")

    def __init__(self, weight, components):
        self.weight = as_fraction(weight)
        comps = list(components)
        for r, f in enumerate(comps):
            if f.weight != self.weight - 2 * r:
                raise ValueError(f"companion {r} has weight {f.weight}, expected {self.weight - 2 * r}")
        while len(comps) > 1 and comps[-1].is_zero():
            comps.pop()
        if not comps:
            comps = [NHForm.zero(self.weight)]
        self.components = tuple(comps)

    @property
    def depth(self) -> int:
        return len(self.components) - 1

    def component(self, r) -> NHForm:
        if 0 <= r < len(self.components):
            return self.components[r]
        return NHForm.zero(self.weight - 2 * r)

    def is_zero(self):
        return all(f.is_zero() for f in self.components)

    def __add__(self, other):
        if self.weight != other.weight:
            raise ValueError("weight mismatch")
        n = max(len(self.components), len(other.components))
        return QMForm(self.weight, [self.component(r) + other.component(r) for r in range(n)])

    def __neg__(self):
        return QMForm(self.weight, [-f for f in self.components])

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        return QMForm(self.weight, [f.scale(s) for f in self.components])

    def __eq__(self, other):
        if not isinstance(other, QMForm):
            return NotImplemented
        return self.weight == other.weight and self.components == other.components

    def __repr__(self):
        return f"QMForm(k={self.weight}, depth={self.depth}, {list(self.components)})"


def qm_derive(f: QMForm) -> QMForm:
    """d/dtau; companions d f_r + (k+1-r) f_{r-1}."""
    k, d = f.weight, f.depth
    out = []
    for r in range(d + 2):
        term = raise_op(f.component(r), 0)
        if r:
            term = term + f.component(r - 1).scale(k + 1 - r)
        out.append(term)
    return QMForm(k + 2, out)


def qm_div_neg2iy(f: QMForm) -> QMForm:
    """Multiplication by Y = 1/(-2iy); companions Y f_r + f_{r-1}."""
    d = f.depth
    out = []
    for r in range(d + 2):
        term = mul_y(f.component(r))
        if r:
            term = term + f.component(r - 1)
        out.append(term)
    return QMForm(f.weight + 2, out)


def qm_delta(f: QMForm) -> QMForm:
    """delta_{k-d} for f of depth d; companions delta_{k-d} f_r + (d+1-r) f_{r-1}.

    The depth does not grow.
    """
    k, d = f.weight, f.depth
    out = []
    for r in range(d + 1):
        term = raise_op(f.component(r), k - d)
        if r:
            term = term + f.component(r - 1).scale(d + 1 - r)
        out.append(term)
    return QMForm(k + 2, out)


def qm_raise(f: QMForm, l) -> QMForm:
    """delta_l for arbitrary l, as delta_{k-d} + (k-d-l) Y."""
    l = as_fraction(l)
    k, d = f.weight, f.depth
    shift = k - d - l
    base = qm_delta(f)
    if not shift:
        return base
    return base + qm_div_neg2iy(f).scale(shift)


def qm_lower(f: QMForm) -> QMForm:
    """y^2 d/dtaubar, componentwise (a quarter of lower4)."""
    return QMForm(f.weight - 2, [lower4(c).scale(Fraction(1, 4)) for c in f.components])


def qm_shift1(f: QMForm) -> QMForm:
    """f -> f_1, whose companions are (r+1) f_{r+1}."""
    d = f.depth
    return QMForm(f.weight - 2, [f.component(r + 1).scale(r + 1) for r in range(max(d, 1))])


def qm_mul(f: QMForm, g: QMForm) -> QMForm:
    """(fg)_r = sum_{i+j=r} f_i g_j."""
    out = []
    for r in range(f.depth + g.depth + 1):
        acc = NHForm.zero(f.weight + g.weight - 2 * r)
        for i in range(r + 1):
            j = r - i
            if i <= f.depth and j <= g.depth:
                acc = acc + nh_mul(f.components[i], g.components[j])
        out.append(acc)
    return QMForm(f.weight + g.weight, out)


def qm_derive_power(f: QMForm, n: int) -> QMForm:
    for _ in range(n):
        f = qm_derive(f)
    return f


@dataclass(frozen=True)
class TransformCheck:
    ok: bool
    inconclusive: bool
    residual: float
    bound: float
    lhs: complex
    rhs: complex


def _mobius(gamma, tau):
    a, b, c, d = gamma
    return (a * tau + b) / (c * tau + d)


def verify_transformation(f: QMForm, gamma, tau: complex, tol: float, rho: complex = 1.0):
    """Numerically test f(gamma tau) = rho * sum_r j^{k-r} c^r f_r(tau).

    gamma = (a, b, c, d) with ad - bc = 1.  The check is inconclusive when
    the truncation estimate of the q-expansions is not below tol.
    """
    a, b, c, d = gamma
    if a * d - b * c != 1:
        raise ValueError("gamma must have determinant 1")
    k = f.weight
    gt = _mobius(gamma, tau)
    if gt.imag <= 0:
        raise ValueError("gamma tau left the upper half-plane")
    j = c * tau + d
    lhs = eval_numeric(f.components[0], gt)
    rhs = 0j
    bound = truncation_bound(f.components[0], gt)
    for r, fr in enumerate(f.components):
        factor = cmath.exp((float(k) - r) * cmath.log(j)) * c ** r
        rhs += factor * eval_numeric(fr, tau)
        bound += abs(factor) * truncation_bound(fr, tau)
    rhs *= rho
    resid = abs(lhs - rhs)
    inconclusive = bound >= tol
    return TransformCheck(ok=(resid <= tol) and not inconclusive, inconclusive=inconclusive,
                          residual=resid, bound=bound, lhs=lhs, rhs=rhs)
