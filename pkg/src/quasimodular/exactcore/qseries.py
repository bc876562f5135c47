"""Truncated q-expansions with exact Scalar coefficients."""
import cmath
from fractions import Fraction

from .scalar import Scalar, ZERO, OMEGA, OMEGA_NUMERIC


class QSeries:
    """sum_{n = start}^{order - 1} c_n q^n, known modulo O(q^order).

    A negative start gives a finite principal part at infinity.
    """

    __slots__ = ("start", "order", "coeffs")

    def __init__(self, coeffs, order=None, start=0):
        cs = [Scalar.coerce(c) for c in coeffs]
        if order is None:
            order = start + len(cs)
        if start + len(cs) > order:
            cs = cs[: max(0, order - start)]
        cs += [ZERO] * (order - start - len(cs))
        # normalise the start so equal series compare equal
        while cs and cs[0].is_zero() and start < 0:
            cs.pop(0)
            start += 1
        self.start = start
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c, order):
        return cls([c], order)

    def coeff(self, n) -> Scalar:
        if n < self.start:
            return ZERO
        if n >= self.order:
            raise IndexError(f"q^{n} is beyond the truncation order {self.order}")
        return self.coeffs[n - self.start]

    def is_zero(self):
        return all(c.is_zero() for c in self.coeffs)

    def _align(self, other):
        start = min(self.start, other.start)
        order = min(self.order, other.order)
        return start, order

    def __add__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            other = QSeries.constant(other, self.order)
        if not isinstance(other, QSeries):
            return NotImplemented
        start, order = self._align(other)
        return QSeries([self.coeff(n) + other.coeff(n) for n in range(start, order)], order, start)

    __radd__ = __add__

    def __neg__(self):
        return QSeries([-c for c in self.coeffs], self.order, self.start)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, s):
        s = Scalar.coerce(s)
        return QSeries([c * s for c in self.coeffs], self.order, self.start)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        if not isinstance(other, QSeries):
            return NotImplemented
        start = self.start + other.start
        order = min(self.order + other.start, other.order + self.start)
        out = [ZERO] * max(0, order - start)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                n = i + j
                if n >= len(out):
                    break
                if not b.is_zero():
                    out[n] = out[n] + a * b
        return QSeries(out, order, start)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = QSeries.constant(1, self.order)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.order == other.order and self.start == other.start and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.start, self.order, self.coeffs))

    def truncate(self, order):
        order = min(order, self.order)
        return QSeries(self.coeffs[: max(0, order - self.start)], order, self.start)

    def derive(self):
        """d/dtau: each q^n picks up n * omega."""
        return QSeries(
            [c * OMEGA * (self.start + i) for i, c in enumerate(self.coeffs)],
            self.order, self.start,
        )

    # coefficient-ring contract used by NHForm: the holomorphic part of
    # d/dtau lands at the same Y-power, and 4y^2 d/dtaubar kills it.
    def nh_derive(self):
        return {0: self.derive()}

    def nh_lower(self):
        return {}

    def zero_like(self):
        return QSeries([], self.order)

    def evaluate(self, tau: complex, omega=OMEGA_NUMERIC):
        q = cmath.exp(omega * tau)
        total = 0j
        qn = q ** self.start
        for c in self.coeffs:
            total += c.to_complex(omega) * qn
            qn *= q
        return total

    def tail_bound(self, tau: complex, weight=0) -> float:
        """Heuristic size of the omitted terms n >= order at tau.

        Assumes polynomial coefficient growth |c_n| <= A (n+1)^g with g set
        by the weight, fitting A on the upper half of the known terms.
        """
        q = abs(cmath.exp(OMEGA_NUMERIC * tau))
        g = abs(float(weight)) + 2
        lo = max(self.start, (self.start + self.order) // 2)
        amp = 0.0
        for n in range(lo, self.order):
            amp = max(amp, abs(self.coeff(n).to_complex()) / (abs(n) + 1) ** g)
        if amp == 0.0:
            return 0.0
        tail = 0.0
        n = self.order
        while True:
            term = amp * (n + 1) ** g * q ** n
            tail += term
            if term < 1e-300 or (n > self.order + 50 and term < tail * 1e-17) or n > self.order + 100000:
                break
            n += 1
        return tail

    def __repr__(self):
        shown = [f"({c})q^{self.start + i}" for i, c in enumerate(self.coeffs) if not c.is_zero()][:6]
        return "QSeries(" + " + ".join(shown) + f" + O(q^{self.order}))"
