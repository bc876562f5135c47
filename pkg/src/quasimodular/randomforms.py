"""Random symbolic objects for the verification suites."""
import random
from fractions import Fraction

from .exactcore import Scalar, SymCoeff, EigenCoeff
from .nhform import NHForm
from .quasimod import QMForm
from .vvops import VVTuple

GENERATORS = (("g", Fraction(4)), ("h", Fraction(-3, 2)))


def random_rational(rng: random.Random, num=6, den=4, nonzero=False) -> Fraction:
    while True:
        x = Fraction(rng.randint(-num, num), rng.randint(1, den))
        if x or not nonzero:
            return x


def random_scalar(rng, with_omega=True) -> Scalar:
    e = rng.choice((-1, 0, 0, 1)) if with_omega else 0
    return Scalar({e: random_rational(rng, nonzero=True)})


def random_symcoeff(rng, max_terms=3, max_order=2, max_degree=2, with_omega=True) -> SymCoeff:
    total = SymCoeff()
    for _ in range(rng.randint(1, max_terms)):
        mono = SymCoeff.const(random_scalar(rng, with_omega))
        for _ in range(rng.randint(0, max_degree)):
            name, w = rng.choice(GENERATORS)
            mono = mono * SymCoeff.gen(name, w, rng.randint(0, max_order))
        total = total + mono
    return total


def random_eigencoeff(rng, base_weight, mu, spread=2) -> EigenCoeff:
    terms = {rng.randint(-spread, spread): random_scalar(rng, with_omega=False)
             for _ in range(rng.randint(1, 2))}
    return EigenCoeff("phi", base_weight, mu, terms)


def random_nhform(rng, weight, max_t=2, coeff=None) -> NHForm:
    coeff = coeff or (lambda: random_symcoeff(rng))
    parts = {}
    for t in range(max_t + 1):
        if rng.random() < 0.7:
            parts[t] = coeff()
    return NHForm(weight, parts)


def random_tuple(rng, weight, size, max_t=2, coeff=None) -> VVTuple:
    comps = [random_nhform(rng, weight - 2 * s, max_t, coeff) for s in range(size)]
    if comps[-1].is_zero():
        comps[-1] = NHForm(weight - 2 * (size - 1), {0: (coeff or (lambda: random_symcoeff(rng)))()})
    return VVTuple(weight, comps)


def random_eigen_tuple(rng, weight, size, base_weight=None, mu=None) -> VVTuple:
    base_weight = random_rational(rng) if base_weight is None else base_weight
    mu = random_rational(rng) if mu is None else mu
    return random_tuple(rng, weight, size, max_t=1,
                        coeff=lambda: random_eigencoeff(rng, base_weight, mu))


def random_qmform(rng, weight, depth, max_t=2) -> QMForm:
    comps = [random_nhform(rng, weight - 2 * r, max_t) for r in range(depth + 1)]
    if comps[-1].is_zero():
        comps[-1] = NHForm(weight - 2 * depth, {0: random_symcoeff(rng)})
    return QMForm(weight, comps)


def random_triple(rng):
    """Random rational (a, b, c) with ab + (1-a)c = 1."""
    while True:
        a = random_rational(rng, 5, 3)
        if a == 1:
            continue
        b = random_rational(rng, 5, 3)
        c = (1 - a * b) / (1 - a)
        return a, b, c
