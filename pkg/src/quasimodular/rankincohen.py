"""Rankin-Cohen brackets for quasi-modular forms.

For f of weight k and depth d and g of weight l and depth e, the bracket

    [f, g]_n = sum_r C(n,r) a_r d^r f * d^{n-r} g

is again quasi-modular of depth <= d + e exactly when the a_r solve

    a_s (l-e+n-s-1) + a_{s+1} (k-d+s) = 0,   0 <= s < n.

Equivalently, replacing d^r f by delta_{k-d}^r f and d^{n-r} g by
delta_{l-e}^{n-r} g must not change the sum, i.e. the delta version carries
no positive powers of Y.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .exactcore import SymCoeff, as_fraction, nullspace, rank
from .nhform import NHForm, delta_power, nh_mul
from .quasimod import QMForm, qm_derive_power, qm_mul


def _nat(x):
    """x as a non-negative int if it is one, else None."""
    x = as_fraction(x)
    if x.denominator == 1 and x >= 0:
        return int(x)
    return None


def rc_is_excluded(n, k, l, d, e) -> bool:
    """The two-dimensional case: d-k and e-l natural, max(d-k, e-l) < n <= d+e-k-l+1."""
    m1, m2 = _nat(d - as_fraction(k)), _nat(e - as_fraction(l))
    if m1 is None or m2 is None:
        return False
    return max(m1, m2) < n <= m1 + m2 + 1


def rc_system(n, k, l, d, e):
    """Rows of the linear system in a_0..a_n."""
    k, l = as_fraction(k), as_fraction(l)
    rows = []
    for s in range(n):
        row = [Fraction(0)] * (n + 1)
        row[s] = l - e + n - s - 1
        row[s + 1] = k - d + s
        rows.append(row)
    return rows


def rc_closed_form(n, k, l, d, e):
    """a_r = (-1)^r prod_{j=r}^{n-1} (k-d+j) prod_{q=n-r}^{n-1} (l-e+q)."""
    k, l = as_fraction(k), as_fraction(l)
    out = []
    for r in range(n + 1):
        v = Fraction((-1) ** r)
        for j in range(r, n):
            v *= k - d + j
        for q in range(n - r, n):
            v *= l - e + q
        out.append(v)
    return out


def _fact(x):
    return factorial(x) if x >= 0 else None


def rc_excluded_basis(n, k, l, d, e):
    """The two kernel vectors in the excluded case.

    first:  a_r = (n-1-m1)! (m2+r-n)! / ((r-1-m1)! m2!)   for r > m1
    second: a_r = (n-1-m2)! (m1-r)! / ((n-1-r-m2)! m1!)   for r < n-m2
    with m1 = d-k and m2 = e-l; entries outside these ranges are zero.
    """
    m1, m2 = int(d - as_fraction(k)), int(e - as_fraction(l))
    first, second = [], []
    for r in range(n + 1):
        v = Fraction(0)
        if r >= m1 + 1:
            parts = (_fact(n - 1 - m1), _fact(m2 + r - n), _fact(r - 1 - m1), _fact(m2))
            if None not in parts:
                v = Fraction(parts[0] * parts[1], parts[2] * parts[3])
        first.append(v)
        w = Fraction(0)
        if r <= n - m2 - 1:
            parts = (_fact(n - 1 - m2), _fact(m1 - r), _fact(n - 1 - r - m2), _fact(m1))
            if None not in parts:
                w = Fraction(parts[0] * parts[1], parts[2] * parts[3])
        second.append(w)
    return first, second


@dataclass
class RCCoeffs:
    n: int
    k: Fraction
    l: Fraction
    d: int
    e: int
    excluded: bool
    kernel_dim: int
    basis: list        # each a list a_0..a_n

    def bracket(self, i=0):
        """Coefficient of d^r f * d^{n-r} g, i.e. C(n,r) a_r."""
        return [comb(self.n, r) * a for r, a in enumerate(self.basis[i])]


def _in_kernel(rows, v):
    return all(sum(x * y for x, y in zip(row, v)) == 0 for row in rows)


def rc_solve(n, k, l, d, e) -> RCCoeffs:
    """Solve the system exactly and normalise the kernel basis.

    The kernel is computed by elimination; the closed forms are only used
    to pick a canonical basis and are checked to lie in the kernel.
    """
    k, l = as_fraction(k), as_fraction(l)
    rows = rc_system(n, k, l, d, e)
    kernel = nullspace(rows, n + 1)
    excluded = rc_is_excluded(n, k, l, d, e)
    if excluded:
        cand = list(rc_excluded_basis(n, k, l, d, e))
    else:
        cand = [rc_closed_form(n, k, l, d, e)]
    if len(kernel) != len(cand):
        raise ArithmeticError(f"kernel has dimension {len(kernel)}, expected {len(cand)}")
    if not all(_in_kernel(rows, v) for v in cand) or rank(cand, n + 1) != len(cand):
        raise ArithmeticError("closed-form coefficients do not span the kernel")
    return RCCoeffs(n, k, l, d, e, excluded, len(kernel), cand)


@lru_cache(maxsize=4096)
def _certificate_terms(n, m1, m2, coeffs):
    phi = NHForm(m1, {0: SymCoeff.gen("f", m1)})
    psi = NHForm(m2, {0: SymCoeff.gen("g", m2)})
    total = None
    for r, c in enumerate(coeffs):
        if not c:
            continue
        term = nh_mul(delta_power(phi, m1, r), delta_power(psi, m2, n - r)).scale(c)
        total = term if total is None else total + term
    return total


def rc_certificate(n, k, l, d, e, bracket_coeffs):
    """Check that sum C(n,r) a_r delta^r phi delta^{n-r} psi has no Y^t, t >= 1.

    phi and psi are generic holomorphic symbols of weights k-d and l-e (only
    the raising indices matter).  Returns (ok, offending powers of Y).
    """
    m1, m2 = as_fraction(k) - d, as_fraction(l) - e
    total = _certificate_terms(n, m1, m2, tuple(as_fraction(c) for c in bracket_coeffs))
    if total is None:
        return True, []
    bad = sorted(t for t in total.parts if t >= 1)
    return not bad, bad


def rc_apply(f: QMForm, g: QMForm, n, bracket_coeffs) -> QMForm:
    """sum_r coeff_r * d^r f * d^{n-r} g on quasi-modular forms."""
    out = None
    for r, c in enumerate(bracket_coeffs):
        c = as_fraction(c)
        if not c:
            continue
        term = qm_mul(qm_derive_power(f, r), qm_derive_power(g, n - r)).scale(c)
        out = term if out is None else out + term
    if out is None:
        return QMForm(f.weight + g.weight + 2 * n, [NHForm.zero(f.weight + g.weight + 2 * n)])
    return out
