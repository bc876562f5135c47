import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from quasimodular.exactcore import SymCoeff, EigenCoeff, QSeries
from quasimodular.formsdb import e4, e6
from quasimodular.nhform import (NHForm, raise_op, lower4, mul_y, nh_derive, nh_mul, laplacian_nh,
                                 delta_power, delta_power_closed, eval_numeric)
from quasimodular.randomforms import random_nhform, random_rational, random_eigencoeff

seeds = st.integers(0, 10 ** 6)


def gen(name, w, order=0):
    return SymCoeff.gen(name, w, order)


def test_raise_on_monomial():
    c = gen("g", 4)
    F = NHForm(4, {1: c})
    # delta_4(g Y) = g' Y + (1-4) g Y^2
    assert raise_op(F, 4) == NHForm(6, {1: gen("g", 4, 1), 2: c.scale(-3)})


def test_weight_mismatch_rejected():
    with pytest.raises(ValueError):
        NHForm(4, {0: gen("g", 4)}) + NHForm(2, {0: gen("g", 2)})


@given(seed=seeds)
def test_lower_raise_commutator(seed):
    # [L, delta_l] = -l on weight-l functions
    rng = random.Random(seed)
    l = random_rational(rng)
    F = random_nhform(rng, l)
    comm = lower4(raise_op(F, l)) - raise_op(lower4(F), l - 2)
    assert comm == F.scale(-l)


@given(seed=seeds)
def test_delta_power_closed_matches_iterated(seed):
    rng = random.Random(seed)
    m = random_rational(rng)
    F = random_nhform(rng, m)
    for s in range(5):
        assert delta_power(F, m, s) == delta_power_closed(F, m, s)


@pytest.mark.parametrize("n", range(6))
def test_bol_identity(n):
    phi = NHForm(-n, {0: gen("phi", -n)})
    lhs = delta_power(phi, -n, n + 1)
    rhs = phi
    for _ in range(n + 1):
        rhs = nh_derive(rhs)
    assert lhs == rhs and lhs.depth() == 0


def test_eigencoeff_is_laplace_eigenfunction():
    rng = random.Random(5)
    for _ in range(10):
        w, mu = random_rational(rng), random_rational(rng)
        phi = NHForm(w, {0: EigenCoeff.phi("phi", w, mu)})
        assert laplacian_nh(phi, w) == phi.scale(-mu)
        # raising moves the eigenvalue by the weight
        up = raise_op(phi, w)
        assert laplacian_nh(up, w + 2) == up.scale(-(mu + w))


def test_nh_mul_is_bilinear_and_raise_is_leibniz():
    rng = random.Random(8)
    for _ in range(10):
        k, l = random_rational(rng), random_rational(rng)
        F, G = random_nhform(rng, k), random_nhform(rng, l)
        assert raise_op(nh_mul(F, G), k + l) == nh_mul(raise_op(F, k), G) + nh_mul(F, raise_op(G, l))


# numeric oracle: finite differences in x and y of the evaluated function

def _numeric_dtau(f, tau, h=1e-5):
    dx = (f(tau + h) - f(tau - h)) / (2 * h)
    dy = (f(tau + 1j * h) - f(tau - 1j * h)) / (2 * h)
    return (dx - 1j * dy) / 2, (dx + 1j * dy) / 2


@pytest.mark.parametrize("tau", [0.1 + 1.1j, -0.3 + 0.9j])
def test_operators_against_finite_differences(tau):
    F = NHForm(4, {0: e4(30), 1: e6(30).scale(Fraction(1, 3)), 2: e4(30)})
    f = lambda t: eval_numeric(F, t)
    dtau, dbar = _numeric_dtau(f, tau)
    y = tau.imag
    want_raise = dtau + 4 / (2j * y) * f(tau)
    got_raise = eval_numeric(raise_op(F, 4), tau)
    assert abs(got_raise - want_raise) <= 1e-5 * (1 + abs(want_raise))
    want_lower = 4 * y * y * dbar
    got_lower = eval_numeric(lower4(F), tau)
    assert abs(got_lower - want_lower) <= 1e-5 * (1 + abs(want_lower))
    assert abs(eval_numeric(mul_y(F), tau) - f(tau) / (-2j * y)) < 1e-9 * abs(f(tau))


def test_eval_rejects_lower_half_plane():
    with pytest.raises(ValueError):
        eval_numeric(NHForm.constant(0, QSeries([1], 3)), 1 - 1j)
