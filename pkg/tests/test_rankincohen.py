import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from quasimodular.exactcore import SymCoeff, nullspace, rank
from quasimodular.formsdb import form, discriminant
from quasimodular.nhform import NHForm, delta_power, nh_mul
from quasimodular.quasimod import verify_transformation
from quasimodular.rankincohen import (rc_is_excluded, rc_system, rc_closed_form, rc_solve, rc_certificate,
                                      rc_apply)

WEIGHTS = [-1, 0, 1, 2, 3, Fraction(1, 2), Fraction(7, 3)]


def certificate_constraints(n, k, l, d, e):
    """Linear conditions on a_0..a_n read off the Y^t (t >= 1) coefficients
    of sum C(n,r) a_r delta^r phi delta^{n-r} psi for generic symbols."""
    m1, m2 = Fraction(k) - d, Fraction(l) - e
    phi = NHForm(m1, {0: SymCoeff.gen("f", m1)})
    psi = NHForm(m2, {0: SymCoeff.gen("g", m2)})
    cols = []
    for r in range(n + 1):
        term = nh_mul(delta_power(phi, m1, r), delta_power(psi, m2, n - r)).scale(comb(n, r))
        col = {}
        for t, c in term.parts.items():
            if t >= 1:
                for mono, sc in c.terms.items():
                    for ex, v in sc.terms.items():
                        col[(t, mono, ex)] = v
        cols.append(col)
    keys = sorted({key for col in cols for key in col}, key=repr)
    return [[col.get(key, Fraction(0)) for col in cols] for key in keys]


def same_span(U, V, n):
    return rank(U, n) == rank(V, n) == rank(U + V, n)


@pytest.mark.parametrize("n", range(5))
@pytest.mark.parametrize("d,e", [(0, 0), (1, 0), (1, 2), (2, 2)])
def test_kernel_matches_certificate_route(n, d, e):
    for k in WEIGHTS:
        for l in WEIGHTS:
            rows = certificate_constraints(n, k, l, d, e)
            via_cert = nullspace(rows, n + 1) if rows else [[Fraction(int(i == j)) for i in range(n + 1)]
                                                           for j in range(n + 1)]
            via_system = nullspace(rc_system(n, Fraction(k), Fraction(l), d, e), n + 1)
            assert same_span(via_cert, via_system, n + 1), (n, k, l, d, e)


def test_classical_bracket_proportional():
    # depth 0: sum (-1)^r C(n+k-1, n-r) C(n+l-1, r) f^(r) g^(n-r)
    for n in range(6):
        for k, l in [(4, 6), (2, 2), (12, 4), (6, 10)]:
            R = rc_solve(n, k, l, 0, 0)
            classical = [Fraction((-1) ** r * comb(n + k - 1, n - r) * comb(n + l - 1, r)) for r in range(n + 1)]
            ours = R.bracket(0)
            ratio = ours[0] / classical[0]
            assert [ratio * x for x in classical] == ours


def test_excluded_region_examples():
    assert rc_is_excluded(1, 0, 0, 0, 0)
    assert rc_solve(1, 0, 0, 0, 0).kernel_dim == 2
    assert not rc_is_excluded(1, Fraction(1, 2), 0, 0, 0)
    assert not rc_is_excluded(3, 0, 0, 0, 0)       # n too large
    assert rc_solve(3, 0, 0, 0, 0).kernel_dim == 1


def test_zeroth_bracket_is_product():
    assert rc_solve(0, 4, 6, 0, 0).bracket(0) == [1]


@given(n=st.integers(0, 6), d=st.integers(0, 3), e=st.integers(0, 3),
       k=st.sampled_from(WEIGHTS), l=st.sampled_from(WEIGHTS))
def test_every_basis_vector_is_certified(n, d, e, k, l):
    R = rc_solve(n, k, l, d, e)
    assert R.kernel_dim == (2 if rc_is_excluded(n, k, l, d, e) else 1)
    for i in range(len(R.basis)):
        ok, bad = rc_certificate(n, k, l, d, e, R.bracket(i))
        assert ok, bad


def test_certificate_rejects_wrong_coefficients():
    R = rc_solve(2, 4, 6, 0, 0)
    wrong = list(R.bracket(0))
    wrong[1] += 1
    ok, bad = rc_certificate(2, 4, 6, 0, 0, wrong)
    assert not ok and bad


def test_closed_form_in_kernel_off_exclusion():
    rng = random.Random(6)
    for _ in range(30):
        n, d, e = rng.randint(0, 6), rng.randint(0, 3), rng.randint(0, 3)
        k, l = rng.choice(WEIGHTS), rng.choice(WEIGHTS)
        v = rc_closed_form(n, k, l, d, e)
        for row in rc_system(n, Fraction(k), Fraction(l), d, e):
            assert sum(a * b for a, b in zip(row, v)) == 0


def test_e4_e6_bracket_is_multiple_of_delta():
    N = 20
    R = rc_solve(1, 4, 6, 0, 0)
    br = rc_apply(form("E4", N), form("E6", N), 1, R.bracket(0))
    assert br.depth == 0
    series = br.components[0].parts[0]
    D = discriminant(N)
    assert series.coeff(0).is_zero()
    ratio = series.coeff(1) / D.coeff(1)
    for i in range(1, N):
        assert series.coeff(i) == D.coeff(i) * ratio


@pytest.mark.parametrize("args", [("E2", "E4", 1), ("E2", "E2", 2)])
@pytest.mark.parametrize("gamma", [(1, 1, 0, 1), (0, -1, 1, 0)])
def test_quasimodular_brackets_transform(args, gamma):
    a, b, n = args
    f, g = form(a, 40), form(b, 40)
    R = rc_solve(n, f.weight, g.weight, f.depth, g.depth)
    br = rc_apply(f, g, n, R.bracket(0))
    assert br.depth <= f.depth + g.depth
    assert verify_transformation(br, gamma, 2j, 1e-6).ok
