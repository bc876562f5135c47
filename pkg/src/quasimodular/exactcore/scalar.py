"""Exact scalars: Laurent polynomials in a formal symbol omega over Q.

omega stands for 2*pi*i.  Keeping it formal lets q-expansion derivatives
(d/dtau q = omega q) and transformation constants like 12/(2 pi i) stay
exact.
"""
from fractions import Fraction
import math


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot read {type(x).__name__} as an exact rational")


OMEGA_NUMERIC = 2j * math.pi


class Scalar:
    """Sum of c_e * omega**e with rational c_e, finitely many e (any sign)."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for e, c in terms.items():
                c = as_fraction(c)
                if c:
                    clean[int(e)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def coerce(cls, x) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        return cls({0: as_fraction(x)})

    @classmethod
    def omega(cls, exponent=1, coeff=1) -> "Scalar":
        return cls({exponent: coeff})

    @property
    def terms(self):
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_rational(self) -> bool:
        return not self._terms or set(self._terms) == {0}

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} involves omega")
        return self._terms.get(0, Fraction(0))

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def __add__(self, other):
        other = _maybe(other)
        if other is NotImplemented:
            return other
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return Scalar(out)

    __radd__ = __add__

    def __neg__(self):
        return Scalar({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = _maybe(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return ZERO
            return Scalar({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, Scalar):
            return NotImplemented
        if len(self._terms) == 1 and len(other._terms) == 1:
            (e1, c1), = self._terms.items()
            (e2, c2), = other._terms.items()
            return Scalar({e1 + e2: c1 * c2})
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return Scalar(out)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        # only monomials are units in Q[omega, 1/omega]
        if len(self._terms) != 1:
            raise ZeroDivisionError(f"{self} is not invertible")
        (e, c), = self._terms.items()
        return Scalar({-e: 1 / c})

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return Scalar({e: c / other for e, c in self._terms.items()})
        if isinstance(other, Scalar):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        return Scalar.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        out = ONE
        base = self if n >= 0 else self.inverse()
        for _ in range(abs(n)):
            out = out * base
        return out

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == ({0: Fraction(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def to_complex(self, omega=OMEGA_NUMERIC) -> complex:
        return sum(float(c) * omega ** e for e, c in self._terms.items()) + 0j

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms):
            c = self._terms[e]
            if e == 0:
                parts.append(str(c))
            elif e == 1:
                parts.append(f"{c}*w")
            else:
                parts.append(f"{c}*w^{e}")
        return " + ".join(parts)


def _maybe(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)):
        return Scalar({0: x})
    return NotImplemented


ZERO = Scalar()
ONE = Scalar({0: 1})
OMEGA = Scalar({1: 1})


def numeric_omega() -> complex:
    return complex(OMEGA_NUMERIC)


__all__ = ["Scalar", "ZERO", "ONE", "OMEGA", "as_fraction", "numeric_omega"]
