import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from quasimodular.exactcore import Scalar, SymCoeff, solve_affine
from quasimodular.nhform import NHForm
from quasimodular.quasimod import qm_derive, qm_div_neg2iy, qm_delta, qm_lower, qm_shift1, qm_raise, qm_mul
from quasimodular.randomforms import (random_tuple, random_eigen_tuple, random_qmform, random_rational,
                                      random_triple)
from quasimodular.vvops import (VVTuple, limit_equal, tuple_embed, qm_to_tuple, tuple_to_qm, vv_raise,
                                vv_ibar_over, vv_D, vv_lower, vv_tilde_delta, vv_weight, vv_lowering,
                                vv_raising, check_commutators, check_sl2, scalar_witness)

seeds = st.integers(0, 10 ** 6)


def rand_T(rng, max_size=5, eigen=False):
    k = random_rational(rng)
    size = rng.randint(1, max_size)
    return random_eigen_tuple(rng, k, size) if eigen else random_tuple(rng, k, size)


@given(seed=seeds)
def test_correspondence_roundtrips(seed):
    rng = random.Random(seed)
    f = random_qmform(rng, random_rational(rng), rng.randint(0, 5))
    assert tuple_to_qm(qm_to_tuple(f)) == f
    T = rand_T(rng, 6)
    assert limit_equal(qm_to_tuple(tuple_to_qm(T)), T)


@given(seed=seeds)
def test_operators_transport(seed):
    rng = random.Random(seed)
    f = random_qmform(rng, random_rational(rng), rng.randint(0, 4))
    l = random_rational(rng)
    pairs = [
        (qm_derive, lambda T: vv_tilde_delta(T, 0)),
        (qm_div_neg2iy, vv_ibar_over),
        (qm_delta, vv_raise),
        (qm_lower, vv_lower),
        (qm_shift1, vv_D),
        (lambda g: qm_raise(g, l), lambda T: vv_tilde_delta(T, l)),
    ]
    for qop, vop in pairs:
        assert limit_equal(qm_to_tuple(qop(f)), vop(qm_to_tuple(f)))


def test_embedding_is_invisible_to_operators():
    rng = random.Random(2)
    T = rand_T(rng)
    E = tuple_embed(T)
    for op in (vv_D, vv_lower, lambda X: vv_tilde_delta(X, 3), vv_ibar_over):
        assert limit_equal(op(E), op(T))


@pytest.mark.parametrize("eigen", [False, True])
def test_commutator_table(eigen):
    rng = random.Random(11 + eigen)
    for _ in range(20):
        T = rand_T(rng, eigen=eigen)
        reps = check_commutators(T, random_rational(rng))
        assert len(reps) == 6
        assert all(r.passed for r in reps), [r for r in reps if not r.passed]


@given(seed=seeds)
def test_shift_compatibility_uses_l_plus_one(seed):
    # with index l+2 instead of l+1 the difference is exactly -S^2
    rng = random.Random(seed)
    T, l = rand_T(rng), random_rational(rng)
    S = vv_ibar_over
    literal = vv_tilde_delta(S(T), l + 2) - S(vv_tilde_delta(T, l))
    assert limit_equal(literal, -S(S(T)))
    assert not literal.is_zero()


def test_witness_reports_scalar():
    rng = random.Random(3)
    T = rand_T(rng)
    C = T.scale(Scalar.omega(1, Fraction(5, 2)))
    assert scalar_witness(C, T) == Scalar.omega(1, Fraction(5, 2))
    assert scalar_witness(T.scale(2), T) == Scalar.coerce(2)
    assert scalar_witness(T.scale(2) + tuple_embed(T), T) == Scalar.coerce(3)


def sl2_defect(a, b, c, T):
    """[E,F] - W computed directly from the operator definitions."""
    E = lambda X: vv_tilde_delta(X, a * X.weight)
    F = lambda X: vv_lower(X).scale(4 * b) - vv_D(X).scale(c)
    return E(F(T)) - F(E(T)) - T.scale(T.weight)


@pytest.mark.parametrize("triple", [(1, 1, 0), (0, 0, 1)])
def test_sl2_holds_for_classical_triples(triple):
    rng = random.Random(7)
    for _ in range(10):
        T = rand_T(rng)
        assert all(r.passed for r in check_sl2(*triple, T))


@given(seed=seeds)
def test_sl2_weight_relations_hold_for_every_triple(seed):
    rng = random.Random(seed)
    a, b, c = random_triple(rng)
    reps = {r.relation: r for r in check_sl2(a, b, c, rand_T(rng))}
    assert reps["[W,E]=2E"].passed and reps["[W,F]=-2F"].passed


@given(seed=seeds)
def test_sl2_defect_formula(seed):
    # [E,F] - W = 2 S o ((a-1) b * 4y^2 d/dtaubar - a c D), exactly
    rng = random.Random(seed)
    a, b, c = random_triple(rng)
    T = rand_T(rng)
    want = vv_ibar_over(vv_lower(T).scale(4 * (a - 1) * b) - vv_D(T).scale(a * c)).scale(2)
    assert limit_equal(sl2_defect(a, b, c, T), want)


def test_sl2_defect_vanishes_only_for_classical_triples():
    # (a-1)b = 0 and ac = 0 together with ab + (1-a)c = 1 leave (1,1,0) and (0,0,1)
    rng = random.Random(9)
    hits = set()
    for _ in range(200):
        a, b, c = random_triple(rng)
        if (a - 1) * b == 0 and a * c == 0:
            hits.add((a, b, c))
    assert hits <= {(0, 0, 1)}


def test_no_affine_index_repairs_sl2():
    # search E = delta~_{alpha k + beta}: the defect equations have no solution
    rng = random.Random(4)
    a, b, c = Fraction(-1), Fraction(-4, 3), Fraction(-1, 6)
    T = random_tuple(rng, Fraction(7, 2), 3)

    def flat(R):
        out = {}
        for s, F in enumerate(R.components):
            for t, co in F.parts.items():
                for mono, sc in co.terms.items():
                    for e, v in sc.terms.items():
                        out[(s, t, mono, e)] = v
        return out

    def defect(al, be):
        E = lambda X: vv_tilde_delta(X, al * X.weight + be)
        F = lambda X: vv_lowering(X, b, c)
        return flat(E(F(T)) - F(E(T)) - T.scale(T.weight))

    r0, r1, r2 = defect(0, 0), defect(1, 0), defect(0, 1)
    keys = sorted(set(r0) | set(r1) | set(r2), key=repr)
    rows = [[r1.get(k, 0) - r0.get(k, 0), r2.get(k, 0) - r0.get(k, 0)] for k in keys]
    assert solve_affine(rows, [-r0.get(k, 0) for k in keys], 2) is None


def test_sl2_rejects_bad_triple():
    with pytest.raises(ValueError):
        check_sl2(1, 2, 0, random_tuple(random.Random(1), 2, 1))


def test_weight_and_raising_helpers():
    rng = random.Random(5)
    T = rand_T(rng)
    assert vv_weight(T) == T.scale(T.weight)
    assert limit_equal(vv_raising(T, Fraction(1, 2)), vv_tilde_delta(T, T.weight / 2))
