"""Vector-valued tuples (F_0, ..., F_m) and the operators on them.

A quasi-modular form of weight k and depth <= m corresponds to the tuple
with F_s = sum_{r>=s} C(r,s) f_r (2iy)^{s-r}, where F_s has weight k - 2s.
Tuples padded with zeros represent the same element of the limit space, so
comparisons that are about the limit use limit_equal.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .exactcore import Scalar, as_fraction
from .nhform import NHForm, raise_op, lower4, mul_y
from .quasimod import QMForm


class VVTuple:
    __slots__ = ("weight", "components")

    def __init__(self, weight, components):
        self.weight = as_fraction(weight)
        comps = tuple(components)
        if not comps:
            raise ValueError("a tuple needs at least one component")
        for s, F in enumerate(comps):
            if F.weight != self.weight - 2 * s:
                raise ValueError(f"component {s} has weight {F.weight}, expected {self.weight - 2 * s}")
        self.components = comps

    @property
    def m(self) -> int:
        return len(self.components) - 1

    def component(self, s) -> NHForm:
        if 0 <= s < len(self.components):
            return self.components[s]
        return NHForm.zero(self.weight - 2 * s)

    def __add__(self, other):
        if self.weight != other.weight:
            raise ValueError("weight mismatch")
        n = max(len(self.components), len(other.components))
        return VVTuple(self.weight, [self.component(s) + other.component(s) for s in range(n)])

    def __neg__(self):
        return VVTuple(self.weight, [-F for F in self.components])

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return VVTuple(self.weight, [F.scale(c) for F in self.components])

    def is_zero(self):
        return all(F.is_zero() for F in self.components)

    def trimmed(self):
        comps = list(self.components)
        while len(comps) > 1 and comps[-1].is_zero():
            comps.pop()
        return VVTuple(self.weight, comps)

    def __eq__(self, other):
        if not isinstance(other, VVTuple):
            return NotImplemented
        return self.weight == other.weight and self.components == other.components

    def __repr__(self):
        return f"VVTuple(k={self.weight}, {list(self.components)})"


def limit_equal(S: VVTuple, T: VVTuple) -> bool:
    return S.weight == T.weight and (S - T).is_zero()


def tuple_embed(T: VVTuple) -> VVTuple:
    """The inclusion into one size up: append a zero component."""
    return VVTuple(T.weight, list(T.components) + [NHForm.zero(T.weight - 2 * len(T.components))])


def _ypow(F: NHForm, n: int) -> NHForm:
    for _ in range(n):
        F = mul_y(F)
    return F


def qm_to_tuple(f: QMForm) -> VVTuple:
    """F_s = sum_{r>=s} C(r,s) f_r (-Y)^{r-s}."""
    k, d = f.weight, f.depth
    out = []
    for s in range(d + 1):
        acc = NHForm.zero(k - 2 * s)
        for r in range(s, d + 1):
            acc = acc + _ypow(f.components[r], r - s).scale(comb(r, s) * (-1) ** (r - s))
        out.append(acc)
    return VVTuple(k, out)


def tuple_to_qm(T: VVTuple) -> QMForm:
    """Inverse map, f_r = sum_{s>=r} C(s,r) F_s Y^{s-r}."""
    k, m = T.weight, T.m
    out = []
    for r in range(m + 1):
        acc = NHForm.zero(k - 2 * r)
        for s in range(r, m + 1):
            acc = acc + _ypow(T.components[s], s - r).scale(comb(s, r))
        out.append(acc)
    return QMForm(k, out)


def vv_raise(T: VVTuple) -> VVTuple:
    """delta_{k-m} on a size-(m+1) tuple: raise(F_s, k-2s) + (m+1-s) F_{s-1}."""
    k, m = T.weight, T.m
    out = []
    for s in range(m + 1):
        term = raise_op(T.components[s], k - 2 * s)
        if s:
            term = term + T.components[s - 1].scale(m + 1 - s)
        out.append(term)
    return VVTuple(k + 2, out)


def vv_ibar_over(T: VVTuple) -> VVTuple:
    """Shift up one slot (the image of division by -2iy)."""
    return VVTuple(T.weight + 2, [NHForm.zero(T.weight + 2)] + list(T.components))


def vv_D(T: VVTuple) -> VVTuple:
    """Component s becomes (s+1) F_{s+1}; the size is kept."""
    k, m = T.weight, T.m
    return VVTuple(k - 2, [T.component(s + 1).scale(s + 1) for s in range(m + 1)])


def vv_lower(T: VVTuple) -> VVTuple:
    """y^2 d/dtaubar: component s is lower4(F_s)/4 + (s+1)/4 F_{s+1}."""
    k, m = T.weight, T.m
    out = []
    for s in range(m + 1):
        term = lower4(T.components[s]).scale(Fraction(1, 4))
        term = term + T.component(s + 1).scale(Fraction(s + 1, 4))
        out.append(term)
    return VVTuple(k - 2, out)


def vv_tilde_delta(T: VVTuple, l) -> VVTuple:
    """The limit-space raising operator with index l.

    Component s is raise(F_s, k-2s) + (k-l+1-s) F_{s-1}; the size grows by
    one.  Transported to quasi-modular forms this is delta_l on f.
    """
    l = as_fraction(l)
    k, m = T.weight, T.m
    out = []
    for s in range(m + 2):
        term = raise_op(T.component(s), k - 2 * s)
        if s:
            term = term + T.components[s - 1].scale(k - l + 1 - s)
        out.append(term)
    return VVTuple(k + 2, out)


def vv_weight(T: VVTuple) -> VVTuple:
    """W: multiplication by the ambient weight."""
    return T.scale(T.weight)


def vv_lowering(T: VVTuple, b, c) -> VVTuple:
    """b * 4y^2 d/dtaubar - c * D."""
    return vv_lower(T).scale(4 * as_fraction(b)) - vv_D(T).scale(as_fraction(c))


def vv_raising(T: VVTuple, a) -> VVTuple:
    """delta~_{a k} at ambient weight k."""
    return vv_tilde_delta(T, as_fraction(a) * T.weight)


@dataclass
class Report:
    relation: str
    params: dict
    status: str
    witness: dict = field(default_factory=dict)

    @property
    def passed(self):
        return self.status == "pass"


def scalar_witness(C: VVTuple, T: VVTuple):
    """If C = sigma * T for a scalar sigma, return sigma; otherwise None."""
    if T.is_zero():
        return Scalar() if C.is_zero() else None
    for s in range(len(T.components)):
        for t, coeff in T.components[s].parts.items():
            sigma = _coefficient_ratio(C.component(s).parts.get(t), coeff)
            if sigma is None:
                continue
            return sigma if limit_equal(C, T.scale(sigma)) else None
    return None


def _coefficient_ratio(num, den):
    terms = getattr(den, "terms", None)
    if not isinstance(terms, dict):
        return None
    for key, dc in terms.items():
        if not isinstance(dc, Scalar) or not dc.is_monomial():
            continue
        if num is None:
            return Scalar()
        nc = num.terms.get(key, Scalar())
        return nc / dc
    return None


def _record(name, params, C, T, expected):
    """Compare a commutator C with expected * T (expected may be 0)."""
    if expected == 0:
        ok = C.is_zero()
        witness = {"expected": Scalar(), "scalar": Scalar() if ok else None}
        residual = [s for s, F in enumerate(C.components) if not F.is_zero()]
    else:
        target = T.scale(expected)
        ok = limit_equal(C, target)
        witness = {"expected": expected, "scalar": scalar_witness(C, T)}
        residual = [s for s in range(max(len(C.components), len(target.components)))
                    if not (C.component(s) - target.component(s)).is_zero()]
    if not ok:
        witness["residual_components"] = residual
    return Report(name, params, "pass" if ok else "fail", witness)


def check_commutators(T: VVTuple, l) -> list:
    """The six limit-space commutator relations on one tuple T of weight k.

    shift-compat is delta~_{l+1} o S = S o delta~_l, with S the slot shift.
    """
    l = as_fraction(l)
    k = T.weight
    S, D, L = vv_ibar_over, vv_D, vv_lower
    params = {"k": k, "l": l, "size": len(T.components)}
    zero = Scalar()
    rep = []
    rep.append(_record("lower-D", params, L(D(T)) - D(L(T)), T, zero))
    rep.append(_record("shift-compat", params,
                       vv_tilde_delta(S(T), l + 1) - S(vv_tilde_delta(T, l)), T, zero))
    rep.append(_record("D-shift", params, D(S(T)) - S(D(T)), T, Scalar.coerce(1)))
    rep.append(_record("D-delta", params, D(vv_tilde_delta(T, l)) - vv_tilde_delta(D(T), l), T, Scalar.coerce(k - l)))
    rep.append(_record("lower-shift", params, L(S(T)) - S(L(T)), T, Scalar.coerce(Fraction(1, 4))))
    rep.append(_record("lower-delta", params, L(vv_tilde_delta(T, l)) - vv_tilde_delta(L(T), l - 2), T,
                       Scalar.coerce(-l / 4)))
    return rep


def check_sl2(a, b, c, T: VVTuple) -> list:
    """[W,E] = 2E, [W,F] = -2F, [E,F] = W for E = delta~_{ak}, F = b*4y^2 d/dtaubar - c*D."""
    a, b, c = (as_fraction(x) for x in (a, b, c))
    if a * b + (1 - a) * c != 1:
        raise ValueError("the triple must satisfy ab + (1-a)c = 1")
    W = vv_weight

    def E(X):
        return vv_raising(X, a)

    def F(X):
        return vv_lowering(X, b, c)

    params = {"a": a, "b": b, "c": c, "k": T.weight, "size": len(T.components)}
    rep = []
    ET, FT = E(T), F(T)
    rep.append(_record("[W,E]=2E", params, W(ET) - E(W(T)), ET, Scalar.coerce(2)))
    rep.append(_record("[W,F]=-2F", params, W(FT) - F(W(T)), FT, Scalar.coerce(-2)))
    rep.append(_record("[E,F]=W", params, E(FT) - F(ET), T, Scalar.coerce(T.weight)))
    return rep
