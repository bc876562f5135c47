"""Eisenstein series, the discriminant and E2 as a quasi-modular form."""
from fractions import Fraction

from .exactcore import QSeries, Scalar
from .nhform import NHForm
from .quasimod import QMForm


def sigma(n: int, power: int) -> int:
    return sum(m ** power for m in range(1, n + 1) if n % m == 0)


def eisenstein(weight: int, order: int) -> QSeries:
    """Normalised E_k for k in {2, 4, 6}: 1 + C sum sigma_{k-1}(n) q^n."""
    const = {2: -24, 4: 240, 6: -504}
    if weight not in const:
        raise ValueError("only E2, E4 and E6 are tabulated")
    coeffs = [Fraction(1)] + [Fraction(const[weight] * sigma(n, weight - 1)) for n in range(1, order)]
    return QSeries(coeffs, order)


def e2(order):
    return eisenstein(2, order)


def e4(order):
    return eisenstein(4, order)


def e6(order):
    return eisenstein(6, order)


def discriminant(order) -> QSeries:
    """Delta = (E4^3 - E6^2) / 1728."""
    return (e4(order) ** 3 - e6(order) ** 2).scale(Fraction(1, 1728))


def modular_qmform(series: QSeries, weight) -> QMForm:
    """A modular form viewed as a quasi-modular form of depth 0."""
    return QMForm(weight, [NHForm.constant(weight, series)])


def e2_qmform(order) -> QMForm:
    """E2 with its companion: E2(-1/tau) = tau^2 E2(tau) + (12/omega) tau."""
    f1 = QSeries.constant(Scalar.omega(-1, 12), order)
    return QMForm(2, [NHForm.constant(2, e2(order)), NHForm.constant(0, f1)])


FORMS = {
    "E2": lambda order: e2_qmform(order),
    "E4": lambda order: modular_qmform(e4(order), 4),
    "E6": lambda order: modular_qmform(e6(order), 6),
    "Delta": lambda order: modular_qmform(discriminant(order), 12),
}


def form(name: str, order: int) -> QMForm:
    try:
        return FORMS[name](order)
    except KeyError:
        raise ValueError(f"unknown form {name!r}; choose from {sorted(FORMS)}") from None
