"""Symbolic coefficient rings.

SymCoeff is the differential polynomial ring Q[omega^{+-1}][g_i^{(p)}] on
holomorphic generators with d/dtau acting by g^{(p)} -> g^{(p+1)}.

EigenCoeff models a single non-holomorphic function phi of weight l0 with
Delta_{l0} phi = -mu phi, through its raising/lowering ladder.  It is a
module over the scalars, not a ring.
"""
from fractions import Fraction

from .scalar import Scalar, as_fraction


def _add_terms(a, b, sign=1):
    out = dict(a)
    for k, v in b.items():
        nv = out.get(k, None)
        nv = v * sign if nv is None else nv + v * sign
        if nv.is_zero():
            out.pop(k, None)
        else:
            out[k] = nv
    return out


class SymCoeff:
    """Polynomial in derivatives of weight-tagged holomorphic symbols.

    A monomial is a sorted tuple of (name, weight, order) factors, repeated
    for powers.  The empty tuple is the constant monomial.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        for mono, c in (terms or {}).items():
            c = Scalar.coerce(c)
            if not c.is_zero():
                clean[tuple(sorted(mono))] = clean.get(tuple(sorted(mono)), Scalar()) + c
        self.terms = {m: c for m, c in clean.items() if not c.is_zero()}
        self._hash = None

    @classmethod
    def gen(cls, name, weight=0, order=0):
        return cls({((name, as_fraction(weight), order),): 1})

    @classmethod
    def const(cls, c):
        return cls({(): c})

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            other = SymCoeff.const(other)
        if not isinstance(other, SymCoeff):
            return NotImplemented
        return SymCoeff._raw(_add_terms(self.terms, other.terms))

    __radd__ = __add__

    def __neg__(self):
        return SymCoeff._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            other = SymCoeff.const(other)
        return SymCoeff._raw(_add_terms(self.terms, other.terms, -1))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, s):
        s = Scalar.coerce(s)
        if s.is_zero():
            return SymCoeff()
        return SymCoeff._raw({m: c * s for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        if not isinstance(other, SymCoeff):
            return NotImplemented
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(sorted(m1 + m2))
                v = c1 * c2
                if m in out:
                    v = out[m] + v
                if v.is_zero():
                    out.pop(m, None)
                else:
                    out[m] = v
        return SymCoeff._raw(out)

    __rmul__ = __mul__

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    def derive(self):
        """d/dtau via the Leibniz rule."""
        out = {}
        for mono, c in self.terms.items():
            for i, (name, w, p) in enumerate(mono):
                if i and mono[i - 1] == mono[i]:
                    continue
                mult = sum(1 for f in mono if f == mono[i])
                new = tuple(sorted(mono[:i] + ((name, w, p + 1),) + mono[i + 1:]))
                v = c * mult
                if new in out:
                    v = out[new] + v
                if v.is_zero():
                    out.pop(new, None)
                else:
                    out[new] = v
        return SymCoeff._raw(out)

    def nh_derive(self):
        return {0: self.derive()}

    def nh_lower(self):
        return {}

    def zero_like(self):
        return SymCoeff()

    def weights(self):
        """Set of weights of the monomials present (order p adds 2p)."""
        return {sum((w + 2 * p for _, w, p in mono), Fraction(0)) for mono in self.terms}

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            other = SymCoeff.const(other)
        if not isinstance(other, SymCoeff):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono, c in sorted(self.terms.items()):
            body = "*".join(f"{n}{'′' * p if p < 4 else f'^({p})'}" for n, _, p in mono) or "1"
            parts.append(f"({c})*{body}")
        return " + ".join(parts)


class EigenCoeff:
    """Span of the ladder e_n, n in Z, of one eigenfunction phi = e_0.

    e_n has weight l0 + 2n.  For n >= 0 it is the n-fold raise of phi, for
    n < 0 the |n|-fold application of 4y^2 d/dtaubar.  Each e_n is again an
    eigenfunction, -Delta e_n = nu_n e_n with nu_n = mu + n(l0 + n - 1).
    """

    __slots__ = ("name", "base_weight", "mu", "terms")

    def __init__(self, name, base_weight, mu, terms=None):
        self.name = name
        self.base_weight = as_fraction(base_weight)
        self.mu = as_fraction(mu)
        self.terms = {int(n): Scalar.coerce(c) for n, c in (terms or {}).items()}
        self.terms = {n: c for n, c in self.terms.items() if not c.is_zero()}

    @classmethod
    def phi(cls, name, base_weight, mu):
        return cls(name, base_weight, mu, {0: 1})

    def _like(self, terms):
        obj = EigenCoeff.__new__(EigenCoeff)
        obj.name, obj.base_weight, obj.mu = self.name, self.base_weight, self.mu
        obj.terms = {n: c for n, c in terms.items() if not c.is_zero()}
        return obj

    def _check(self, other):
        if not isinstance(other, EigenCoeff):
            raise TypeError(f"cannot combine an eigenfunction ladder with {type(other).__name__}")
        if (self.name, self.base_weight, self.mu) != (other.name, other.base_weight, other.mu):
            raise ValueError("ladders of different eigenfunctions cannot be combined")

    def weight_of(self, n):
        return self.base_weight + 2 * n

    def eigenvalue_of(self, n):
        return self.mu + n * (self.base_weight + n - 1)

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        self._check(other)
        return self._like(_add_terms(self.terms, other.terms))

    def __neg__(self):
        return self._like({n: -c for n, c in self.terms.items()})

    def __sub__(self, other):
        self._check(other)
        return self._like(_add_terms(self.terms, other.terms, -1))

    def scale(self, s):
        s = Scalar.coerce(s)
        return self._like({n: c * s for n, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        raise TypeError("products of non-holomorphic eigenfunctions are not modelled")

    __rmul__ = __mul__

    def _raise_index(self, n):
        # delta_{w_n} e_n as (index, factor)
        if n >= 0:
            return n + 1, Fraction(1)
        return n + 1, -self.eigenvalue_of(n + 1)

    def _lower_index(self, n):
        # 4y^2 d/dtaubar e_n as (index, factor)
        if n <= 0:
            return n - 1, Fraction(1)
        return n - 1, -self.eigenvalue_of(n)

    def nh_derive(self):
        # d/dtau = delta_w + w * Y on a weight-w function
        same, up = {}, {}
        for n, c in self.terms.items():
            m, f = self._raise_index(n)
            if f:
                same[m] = same.get(m, Scalar()) + c * f
            w = self.weight_of(n)
            if w:
                up[n] = up.get(n, Scalar()) + c * w
        out = {}
        if same:
            out[0] = self._like(same)
        if up:
            out[1] = self._like(up)
        return out

    def nh_lower(self):
        low = {}
        for n, c in self.terms.items():
            m, f = self._lower_index(n)
            if f:
                low[m] = low.get(m, Scalar()) + c * f
        return {0: self._like(low)} if low else {}

    def zero_like(self):
        return self._like({})

    def __eq__(self, other):
        if not isinstance(other, EigenCoeff):
            return NotImplemented
        return (self.name, self.base_weight, self.mu, self.terms) == (
            other.name, other.base_weight, other.mu, other.terms)

    def __hash__(self):
        return hash((self.name, self.base_weight, self.mu, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{self.name}[{n}]" for n, c in sorted(self.terms.items()))
