"""Nearly holomorphic functions as polynomials in Y = 1/(-2iy).

An NHForm is sum_t c_t Y^t where the coefficients c_t come from one of the
coefficient realizations in exactcore.  With y = Im(tau) we have
d/dtau Y = Y^2 and 4y^2 d/dtaubar Y = 1, which is all the operators below
need.  The weight is bookkeeping: raising adds 2, lowering subtracts 2 and
each factor of Y counts as 2.
"""
from fractions import Fraction
from math import comb

from .exactcore import Scalar, as_fraction


class NHForm:
    __slots__ = ("weight", "parts")

    def __init__(self, weight, parts=None):
        self.weight = as_fraction(weight)
        clean = {}
        for t, c in (parts or {}).items():
            t = int(t)
            if t < 0:
                raise ValueError("negative powers of Y are not nearly holomorphic")
            if not c.is_zero():
                clean[t] = c
        self.parts = clean

    @classmethod
    def zero(cls, weight):
        return cls(weight)

    @classmethod
    def constant(cls, weight, coeff):
        return cls(weight, {0: coeff})

    def is_zero(self):
        return not self.parts

    def depth(self) -> int:
        """Highest Y-power present, -1 for zero."""
        return max(self.parts, default=-1)

    def coeff(self, t):
        return self.parts.get(t)

    def _same_weight(self, other):
        if not isinstance(other, NHForm):
            raise TypeError(f"expected NHForm, got {type(other).__name__}")
        if self.weight != other.weight:
            raise ValueError(f"weight mismatch: {self.weight} vs {other.weight}")

    def __add__(self, other):
        self._same_weight(other)
        out = dict(self.parts)
        for t, c in other.parts.items():
            out[t] = out[t] + c if t in out else c
        return NHForm(self.weight, out)

    def __neg__(self):
        return NHForm(self.weight, {t: -c for t, c in self.parts.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        s = Scalar.coerce(s)
        if s.is_zero():
            return NHForm(self.weight)
        return NHForm(self.weight, {t: c.scale(s) for t, c in self.parts.items()})

    def __mul__(self, s):
        if isinstance(s, NHForm):
            return nh_mul(self, s)
        return self.scale(s)

    def __rmul__(self, s):
        return self.scale(s)

    def with_weight(self, weight):
        return NHForm(weight, self.parts)

    def __eq__(self, other):
        if not isinstance(other, NHForm):
            return NotImplemented
        return self.weight == other.weight and self.parts == other.parts

    def __hash__(self):
        return hash((self.weight, frozenset(self.parts.items())))

    def __repr__(self):
        if not self.parts:
            return f"NHForm(w={self.weight}, 0)"
        body = " + ".join(f"[{c}]Y^{t}" for t, c in sorted(self.parts.items()))
        return f"NHForm(w={self.weight}, {body})"


def _accumulate(out, t, c):
    if t in out:
        c = out[t] + c
    if c.is_zero():
        out.pop(t, None)
    else:
        out[t] = c


def raise_op(F: NHForm, l) -> NHForm:
    """delta_l = d/dtau + l/(2iy) = d/dtau - l*Y.

    On c*Y^t this gives (dc/dtau) Y^t + (t - l) c Y^{t+1}.
    """
    l = as_fraction(l)
    out = {}
    for t, c in F.parts.items():
        for shift, dc in c.nh_derive().items():
            _accumulate(out, t + shift, dc)
        f = t - l
        if f:
            _accumulate(out, t + 1, c.scale(f))
    return NHForm(F.weight + 2, out)


def lower4(F: NHForm) -> NHForm:
    """4 y^2 d/dtaubar; sends c*Y^t to t c Y^{t-1} for holomorphic c."""
    out = {}
    for t, c in F.parts.items():
        for shift, lc in c.nh_lower().items():
            _accumulate(out, t + shift, lc)
        if t:
            _accumulate(out, t - 1, c.scale(t))
    return NHForm(F.weight - 2, out)


def mul_y(F: NHForm) -> NHForm:
    """Division by -2iy."""
    return NHForm(F.weight + 2, {t + 1: c for t, c in F.parts.items()})


def nh_derive(F: NHForm) -> NHForm:
    """Plain d/dtau, i.e. raise_op with l = 0."""
    return raise_op(F, 0)


def nh_mul(F: NHForm, G: NHForm) -> NHForm:
    out = {}
    for t1, c1 in F.parts.items():
        for t2, c2 in G.parts.items():
            _accumulate(out, t1 + t2, c1 * c2)
    return NHForm(F.weight + G.weight, out)


def laplacian_nh(F: NHForm, l) -> NHForm:
    """Delta_l = delta_{l-2} o 4y^2 d/dtaubar; eigenvalues are -Delta."""
    return raise_op(lower4(F), as_fraction(l) - 2)


def delta_power(F: NHForm, m, s: int) -> NHForm:
    """delta_{m+2s-2} o ... o delta_m applied to F (iterated raising)."""
    m = as_fraction(m)
    for i in range(s):
        F = raise_op(F, m + 2 * i)
    return F


def delta_power_closed(F: NHForm, m, s: int) -> NHForm:
    """The same power through the expansion in plain derivatives:

        delta_m^s = sum_p C(s,p) prod_{q=s-p}^{s-1} (m+q) (2iy)^{-p} d^{s-p}
    """
    m = as_fraction(m)
    derivs = [F]
    for _ in range(s):
        derivs.append(nh_derive(derivs[-1]))
    total = NHForm.zero(F.weight + 2 * s)
    for p in range(s + 1):
        coef = Fraction(comb(s, p))
        for q in range(s - p, s):
            coef *= m + q
        if not coef:
            continue
        term = derivs[s - p]
        for _ in range(p):
            term = mul_y(term)
        # (2iy)^{-1} = -Y
        total = total + term.scale(coef * (-1) ** p)
    return total


def eval_numeric(F: NHForm, tau: complex) -> complex:
    """Numeric value at tau; coefficients must be q-series."""
    y = tau.imag
    if y <= 0:
        raise ValueError("tau must lie in the upper half-plane")
    Y = 1 / (-2j * y)
    return sum(c.evaluate(tau) * Y ** t for t, c in F.parts.items()) + 0j


def truncation_bound(F: NHForm, tau: complex) -> float:
    Y = abs(1 / (2 * tau.imag))
    return sum(c.tail_bound(tau, F.weight) * Y ** t for t, c in F.parts.items())
