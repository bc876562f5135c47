import cmath
from fractions import Fraction

import pytest

from quasimodular.exactcore import Scalar, QSeries, OMEGA_NUMERIC
from quasimodular.formsdb import sigma, eisenstein, e2, e4, e6, discriminant, e2_qmform, form
from quasimodular.nhform import NHForm, eval_numeric
from quasimodular.quasimod import QMForm, verify_transformation
from quasimodular.vvops import qm_to_tuple


def rational_coeffs(f: QSeries, n):
    return [f.coeff(i).rational() for i in range(n)]


def test_sigma_by_enumeration():
    for n in range(1, 30):
        assert sigma(n, 3) == sum(d ** 3 for d in range(1, n + 1) if n % d == 0)


def test_eisenstein_coefficients():
    assert rational_coeffs(e4(4), 4) == [1, 240, 2160, 6720]
    assert rational_coeffs(e2(3), 2) == [1, -24]
    assert e6(5).coeff(0) == Scalar.coerce(1)
    with pytest.raises(ValueError):
        eisenstein(8, 5)


def test_discriminant_is_ramanujan_tau():
    # tau(n) for n = 1..10
    want = [0, 1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920]
    assert rational_coeffs(discriminant(11), 11) == want


def test_delta_positive_on_imaginary_axis():
    v = eval_numeric(NHForm.constant(12, discriminant(30)), 2j)
    assert v.real > 0 and abs(v.imag) < 1e-12 * v.real


def test_eval_matches_direct_sum():
    q = cmath.exp(2j * cmath.pi * 2j)
    direct = 1 + 240 * sum(sigma(n, 3) * q ** n for n in range(1, 40))
    assert abs(eval_numeric(NHForm.constant(4, e4(40)), 2j) - direct) < 1e-10
    assert eval_numeric(NHForm.constant(0, QSeries([1], 5)), 0.2 + 0.5j) == 1


def test_e4_modular_at_s():
    assert verify_transformation(form("E4", 40), (0, -1, 1, 0), 2j, 1e-8).ok


def test_e2_companion_fitted_numerically():
    # fit f1 from E2(-1/tau) - tau^2 E2(tau) = f1 * tau at several points
    E2 = NHForm.constant(2, e2(60))
    taus = [2j, 0.3 + 1.5j, -0.4 + 1.2j, 1.1j]
    rhs = [eval_numeric(E2, -1 / t) - t * t * eval_numeric(E2, t) for t in taus]
    fit = sum(t.conjugate() * r for t, r in zip(taus, rhs)) / sum(abs(t) ** 2 for t in taus)
    assert abs(fit - 12 / OMEGA_NUMERIC) < 1e-8
    assert e2_qmform(5).components[1].parts[0].coeff(0) == Scalar.omega(-1, 12)


def test_e2_transforms():
    f = e2_qmform(40)
    for gamma in [(1, 1, 0, 1), (0, -1, 1, 0)]:
        assert verify_transformation(f, gamma, 2j, 1e-6).ok


def test_completed_e2_from_correspondence():
    T = qm_to_tuple(e2_qmform(10))
    F0 = T.components[0]
    assert F0.parts[0] == e2(10)
    assert F0.parts[1].coeff(0) == Scalar.omega(-1, -12)
    assert F0.parts[1].coeff(1).is_zero()


def test_ramanujan_e2():
    N = 30
    E2, E4 = e2(N), e4(N)
    lhs = [Fraction(n) * E2.coeff(n).rational() for n in range(N)]
    rhs = (E2 * E2 - E4).scale(Fraction(1, 12))
    assert lhs == rational_coeffs(rhs, N)
    # the same through the omega-aware derivative
    assert E2.derive() == rhs.scale(Scalar.omega())


def test_unknown_form_name():
    with pytest.raises(ValueError):
        form("E8", 10)
