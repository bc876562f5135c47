"""Dense univariate and sparse bivariate polynomials over Q."""
from fractions import Fraction
from math import lcm, gcd

from sympy import divisors

from .linalg import det


class UniPoly:
    """Polynomial in one variable; coefficients stored low degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls):
        return cls([0, 1])

    @classmethod
    def const(cls, c):
        return cls([c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self):
        return not self.coeffs

    def __call__(self, x):
        acc = Fraction(0) if isinstance(x, (int, Fraction)) else 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        other = _upoly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return UniPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_upoly(other))

    def __rsub__(self, other):
        return _upoly(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UniPoly(c * other for c in self.coeffs)
        other = _upoly(other)
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, c):
        return UniPoly(x / Fraction(c) for x in self.coeffs)

    def __pow__(self, n):
        out = UniPoly([1])
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly([other])
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def derivative(self):
        return UniPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def monic(self):
        if self.is_zero():
            raise ZeroDivisionError("zero polynomial has no monic form")
        return self / self.lc()

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(0, len(rem) - len(other.coeffs) + 1)
        lc = other.lc()
        for i in range(len(q) - 1, -1, -1):
            f = rem[i + other.degree] / lc
            q[i] = f
            if f:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] -= f * b
        return UniPoly(q), UniPoly(rem)

    def gcd(self, other):
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        return a.monic() if not a.is_zero() else a

    def integer_primitive(self):
        """Integer coefficients with content 1 and positive leading term."""
        if self.is_zero():
            return []
        den = lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        ints = [v // g for v in ints]
        if ints[-1] < 0:
            ints = [-v for v in ints]
        return ints

    def discriminant(self) -> Fraction:
        n = self.degree
        if n < 1:
            raise ValueError("discriminant needs degree >= 1")
        if n == 1:
            return Fraction(1)
        res = resultant(self, self.derivative())
        sign = -1 if (n * (n - 1) // 2) % 2 else 1
        return sign * res / self.lc()

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}*x^{i}" for i, c in enumerate(self.coeffs) if c)


def _upoly(x):
    if isinstance(x, UniPoly):
        return x
    return UniPoly([x])


def resultant(p: UniPoly, q: UniPoly) -> Fraction:
    """Sylvester-matrix resultant."""
    m, n = p.degree, q.degree
    size = m + n
    rows = []
    pc = list(reversed(p.coeffs))
    qc = list(reversed(q.coeffs))
    for i in range(n):
        rows.append([0] * i + pc + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + qc + [0] * (size - n - 1 - i))
    return det(rows)


def rational_roots(p: UniPoly):
    """Exact rational roots with multiplicity.

    Returns (roots, residual) where roots is a list of (root, multiplicity)
    and residual is the deflated factor with no rational roots.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has every number as a root")
    roots = []
    rest = p
    zero_mult = 0
    while rest.degree > 0 and rest.coeffs[0] == 0:
        rest = UniPoly(rest.coeffs[1:])
        zero_mult += 1
    if zero_mult:
        roots.append((Fraction(0), zero_mult))
    if rest.degree < 1:
        return roots, rest
    ints = rest.integer_primitive()
    candidates = set()
    for num in divisors(abs(ints[0])):
        for den in divisors(abs(ints[-1])):
            candidates.add(Fraction(num, den))
            candidates.add(Fraction(-num, den))
    for r in sorted(candidates):
        mult = 0
        lin = UniPoly([-r, 1])
        while rest.degree >= 1 and rest(r) == 0:
            rest = rest.divmod(lin)[0]
            mult += 1
        if mult:
            roots.append((r, mult))
    roots.sort()
    return roots, rest


class BiPoly:
    """Polynomial in (lam, mu); terms keyed by (deg_lam, deg_mu)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: Fraction(v) for k, v in (terms or {}).items() if v}

    @classmethod
    def lam(cls):
        return cls({(1, 0): 1})

    @classmethod
    def mu(cls):
        return cls({(0, 1): 1})

    @classmethod
    def const(cls, c):
        return cls({(0, 0): c})

    def __add__(self, other):
        other = _bpoly(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-_bpoly(other))

    def __rsub__(self, other):
        return _bpoly(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BiPoly({k: v * other for k, v in self.terms.items()})
        other = _bpoly(other)
        out = {}
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in other.terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + a * b
        return BiPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, BiPoly) and self.terms == other.terms

    def is_zero(self):
        return not self.terms

    def degree_lam(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    def degree_mu(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    def __call__(self, lam, mu):
        return sum((v * lam ** i * mu ** j for (i, j), v in self.terms.items()), Fraction(0))

    def at_mu(self, mu) -> UniPoly:
        """Specialize mu; result is a polynomial in lam."""
        out = [Fraction(0)] * (self.degree_lam() + 1)
        for (i, j), v in self.terms.items():
            out[i] += v * Fraction(mu) ** j
        return UniPoly(out)

    def at_lam(self, lam) -> UniPoly:
        out = [Fraction(0)] * (self.degree_mu() + 1)
        for (i, j), v in self.terms.items():
            out[j] += v * Fraction(lam) ** i
        return UniPoly(out)

    def lam_coeff(self, i) -> UniPoly:
        out = [Fraction(0)] * (self.degree_mu() + 1)
        for (a, j), v in self.terms.items():
            if a == i:
                out[j] += v
        return UniPoly(out)

    def discriminant_lam(self) -> UniPoly:
        """Discriminant with respect to lam, as a polynomial in mu.

        Found by interpolation: the lam-discriminant of the specialization
        at enough integer mu values, which is exact because the degree in mu
        is bounded by (2n - 1) * deg_mu.
        """
        n = self.degree_lam()
        if n < 1:
            raise ValueError("discriminant needs lam-degree >= 1")
        lead = self.lam_coeff(n)
        if lead.degree != 0:
            raise ValueError("interpolated discriminant needs a constant leading lam-coefficient")
        bound = (2 * n - 1) * max(self.degree_mu(), 0)
        xs = [Fraction(i) for i in range(bound + 1)]
        ys = [self.at_mu(x).discriminant() for x in xs]
        return _interpolate(xs, ys)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{v}*lam^{i}*mu^{j}" for (i, j), v in sorted(self.terms.items()))


def _bpoly(x):
    if isinstance(x, BiPoly):
        return x
    if isinstance(x, UniPoly):
        return BiPoly({(i, 0): c for i, c in enumerate(x.coeffs)})
    return BiPoly({(0, 0): x})


def _interpolate(xs, ys) -> UniPoly:
    out = UniPoly()
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if not yi:
            continue
        basis = UniPoly([1])
        den = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * UniPoly([-xj, 1])
                den *= xi - xj
        out = out + basis * (yi / den)
    return out
