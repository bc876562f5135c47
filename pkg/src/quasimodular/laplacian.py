"""Laplacians delta o deltabar on tuples, their eigenvalues and lifts.

For a triple (a, b, c) with ab + (1-a)c = 1 the raising operator at
weight k is delta~_{ak} and the lowering operator is b*4y^2 d/dtaubar - c*D.
The Laplacian on weight-k tuples is raising(weight k-2) o lowering.  An
eigenvector T satisfies Delta T = -lambda T.

Lifts are built from a weight k-2d function phi as F_s = alpha_s *
delta^{d-s} phi.  Plugging this into the Laplacian gives, for s = 0..d,

    B_s alpha_s + R_s alpha_{s+1} + C_s alpha_{s-1} = 0

with J_s = (1-a)(k-2) - s + 1 and

    B_s = lam + s(b-c)J_s - b(mu + (d-s)(k-d-s-1))
    R_s = (b-c)(s+1)
    C_s = -b J_s (mu + (d-s+1)(k-s-d)),

where mu = 0 for meromorphic phi and mu is the eigenvalue of phi when phi
is itself a Laplace eigenfunction (needed when (1-a)(k-2) = d).
"""
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, prod

from .exactcore import BiPoly, UniPoly, Scalar, EigenCoeff, as_fraction, rational_roots, solve_affine
from .nhform import NHForm, raise_op, lower4, mul_y, laplacian_nh, delta_power, nh_derive
from .quasimod import QMForm
from .vvops import VVTuple, vv_tilde_delta, vv_lowering, limit_equal, tuple_to_qm


class LiftError(ValueError):
    """No lift exists, or the inputs do not fit the requested branch."""


@dataclass(frozen=True)
class LiftProblem:
    a: Fraction
    b: Fraction
    c: Fraction
    k: Fraction
    d: int

    def __post_init__(self):
        for name in ("a", "b", "c", "k"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))
        if self.d < 0:
            raise ValueError("depth must be non-negative")
        if self.a * self.b + (1 - self.a) * self.c != 1:
            raise ValueError("the triple must satisfy ab + (1-a)c = 1")

    @property
    def A(self) -> Fraction:
        return (1 - self.a) * (self.k - 2)

    def J(self, s) -> Fraction:
        return self.A - s + 1

    def classify(self) -> dict:
        """Which family of lifts applies.

        beta              b = 0: one eigenvalue, any phi
        beta-annihilation b = 0 and (1-a)(k-2) = d-1+j with 0 <= j < d
        mu                b != 0 and (1-a)(k-2) = d: phi must be an eigenfunction
        special           b != 0 and some C_s (s = 1..d) vanishes identically
        generic           everything else
        """
        A, d, k = self.A, self.d, self.k
        if self.b == 0:
            j = A - d + 1
            if j.denominator == 1 and 0 <= j < d:
                return {"branch": "beta-annihilation", "j": int(j)}
            return {"branch": "beta"}
        if A == d:
            return {"branch": "mu"}
        zeros = {}
        for s in range(1, d + 1):
            if self.J(s) == 0:
                zeros.setdefault(s, []).append("j")
            if k - s - d == 0:
                zeros.setdefault(s, []).append("p")
        if not zeros:
            return {"branch": "generic"}
        info = {"branch": "special", "zeros": sorted(zeros), "top": max(zeros)}
        for s, kinds in zeros.items():
            for kind in kinds:
                info[kind] = s
        return info

    # recursion coefficients; mu may be a number or a BiPoly
    def B(self, s, lam, mu):
        d, k, b, c = self.d, self.k, self.b, self.c
        return lam + s * (b - c) * self.J(s) - (mu + (d - s) * (k - d - s - 1)) * b

    def R(self, s):
        return (self.b - self.c) * (s + 1)

    def C(self, s, mu):
        d, k = self.d, self.k
        return (mu + (d - s + 1) * (k - s - d)) * (-self.b * self.J(s))


def lap_closed(T: VVTuple, a, b, c) -> VVTuple:
    """Delta T component by component.

    Component s: b Delta_{k-2s} F_s + (b-c)(s+1) delta_{k-2-2s} F_{s+1}
                 + J_s [s(b-c) F_s + b lower4(F_{s-1})]
    with J_s = (1-a)(k-2) - s + 1; the size grows by one.
    """
    a, b, c = (as_fraction(x) for x in (a, b, c))
    k, m = T.weight, T.m
    A = (1 - a) * (k - 2)
    out = []
    for s in range(m + 2):
        Fs = T.component(s)
        term = laplacian_nh(Fs, k - 2 * s).scale(b)
        term = term + raise_op(T.component(s + 1), k - 2 - 2 * s).scale((b - c) * (s + 1))
        Js = A - s + 1
        if Js:
            inner = Fs.scale(s * (b - c))
            if s:
                inner = inner + lower4(T.components[s - 1]).scale(b)
            term = term + inner.scale(Js)
        out.append(term)
    return VVTuple(k, out)


def lap_composed(T: VVTuple, a, b, c) -> VVTuple:
    """The same Laplacian as an explicit composition of the two operators."""
    a = as_fraction(a)
    low = vv_lowering(T, b, c)
    return vv_tilde_delta(low, a * low.weight)


def verify_eigen(T: VVTuple, a, b, c, lam):
    """Exact check of Delta T = -lam T.  Returns (ok, residual tuple)."""
    resid = lap_closed(T, a, b, c) + T.scale(as_fraction(lam))
    return resid.is_zero(), resid


@dataclass
class AlphaTable:
    """alpha_s = P[s] / N[s] with P[s] polynomials in (lam, mu).

    In a special branch only s >= lowest are determined this way, and
    P[lowest-1] holds the reduced eigenvalue relation.
    """
    problem: LiftProblem
    P: dict
    N: dict
    lowest: int

    def alpha(self, s, lam, mu=0) -> Fraction:
        den = self.N[s](lam, mu)
        if den == 0:
            raise ZeroDivisionError(f"alpha_{s} has a vanishing denominator here")
        return self.P[s](lam, mu) / den

    def alpha_poly(self, s) -> UniPoly:
        """alpha_s as a polynomial in lam at mu = 0."""
        den = self.N[s](0, 0)
        return self.P[s].at_mu(0) / den


def solve_alpha(prob: LiftProblem) -> AlphaTable:
    """Run the recursion from alpha_d = 1 down as far as C_s stays nonzero.

    P_s = alpha_s * prod_{i>s} (-C_i) obeys P_{s-1} = B_s P_s - R_s C_{s+1} P_{s+1},
    which keeps everything polynomial in lam and mu.
    """
    d = prob.d
    info = prob.classify()
    if info["branch"].startswith("beta"):
        raise LiftError("b = 0 uses solve_beta")
    lam, mu = BiPoly.lam(), BiPoly.mu()
    mu_sym = mu if info["branch"] == "mu" else BiPoly.const(0)
    stop = info.get("top", 0)
    P = {d + 1: BiPoly(), d: BiPoly.const(1)}
    N = {d: BiPoly.const(1)}
    for s in range(d, max(stop, 1) - 1, -1):
        Cs = prob.C(s, mu_sym)
        Cnext = prob.C(s + 1, mu_sym) if s < d else BiPoly.const(0)
        P[s - 1] = prob.B(s, lam, mu_sym) * P[s] - Cnext * P[s + 1] * prob.R(s)
        N[s - 1] = N[s] * (-Cs)
    del P[d + 1]
    if stop:
        # P[stop-1] is the reduced eigenvalue relation, not an alpha
        del N[stop - 1]
    return AlphaTable(prob, P, N, stop)


@dataclass
class EigenPoly:
    problem: LiftProblem
    branch: str
    poly: object               # BiPoly in (lam, mu); mu absent unless branch == "mu"
    raw_denominator: object    # raw relation = poly / raw_denominator
    info: dict = field(default_factory=dict)

    @property
    def degree(self) -> int:
        return self.poly.degree_lam()

    def univariate(self) -> UniPoly:
        if self.branch == "mu":
            raise ValueError("the mu-branch polynomial is bivariate; specialise mu first")
        return self.poly.at_mu(0)

    def at_mu(self, mu) -> UniPoly:
        return self.poly.at_mu(mu)

    def discriminant(self):
        if self.branch == "mu":
            return self.poly.discriminant_lam()
        u = self.univariate()
        return u.discriminant() if u.degree >= 1 else None

    def roots(self, mu=0):
        return rational_roots(self.at_mu(mu))


def eigenpoly(prob: LiftProblem) -> EigenPoly:
    """Polynomial whose roots are the possible eigenvalues.

    generic / mu: the s = 0 relation, monic of degree d+1 in lam.
    special: the relation at the top vanishing C_s, monic of lower degree;
             roots still have to pass solve_at.
    beta: lam - d(k-2+(1-d)/(1-a)).
    """
    info = prob.classify()
    d = prob.d
    lam = BiPoly.lam()
    if info["branch"].startswith("beta"):
        value = beta_eigenvalue(prob)
        return EigenPoly(prob, info["branch"], lam - value, BiPoly.const(1), info)
    table = solve_alpha(prob)
    mu_sym = BiPoly.mu() if info["branch"] == "mu" else BiPoly.const(0)
    if info["branch"] in ("generic", "mu"):
        poly = prob.B(0, lam, mu_sym) * table.P[0] - prob.C(1, mu_sym) * table.P[1] * prob.R(0) if d else prob.B(0, lam, mu_sym)
        den = table.N[0]
    else:
        top = info["top"]
        poly = table.P[top - 1]
        den = table.N[top]
    lead = poly.lam_coeff(poly.degree_lam())
    if lead.degree != 0:
        raise AssertionError("eigenvalue relation should have a constant leading coefficient")
    scale_back = lead.coeffs[0]
    return EigenPoly(prob, info["branch"], poly * (1 / scale_back), den * (1 / scale_back), info)


@dataclass
class LiftSolution:
    status: str        # "unique", "free" or "none"
    alphas: list       # alpha_0..alpha_d, free parameters set to 0
    nullity: int


def solve_at(prob: LiftProblem, lam, mu=0) -> LiftSolution:
    """Solve the full linear system for alpha_0..alpha_{d-1} at fixed lam (alpha_d = 1)."""
    lam, mu = as_fraction(lam), as_fraction(mu)
    d = prob.d
    rows, rhs = [], []
    for s in range(d + 1):
        row = [Fraction(0)] * (d + 1)
        row[s] += prob.B(s, lam, mu)
        if s < d:
            row[s + 1] += prob.R(s)
        if s > 0:
            row[s - 1] += prob.C(s, mu)
        rows.append(row[:d])
        rhs.append(-row[d])
    if d == 0:
        ok = rhs[0] == 0
        return LiftSolution("unique" if ok else "none", [Fraction(1)] if ok else [], 0)
    sol = solve_affine(rows, rhs, d)
    if sol is None:
        return LiftSolution("none", [], 0)
    x, kernel = sol
    return LiftSolution("unique" if not kernel else "free", x + [Fraction(1)], len(kernel))


def beta_eigenvalue(prob: LiftProblem) -> Fraction:
    """lam = d (k - 2 + (1-d)/(1-a)) when b = 0."""
    if prob.b != 0:
        raise LiftError("only for b = 0")
    return prob.d * (prob.k - 2 + Fraction(1 - prob.d) / (1 - prob.a))


@dataclass
class BetaTable:
    lam: Fraction
    betas: list          # beta_0..beta_d, zero at and below the truncation
    truncation: object   # j, or None when every beta is defined

    def closed_form_ok(self, prob) -> bool:
        A, d = prob.A, prob.d
        lo = 0 if self.truncation is None else self.truncation + 1
        for s in range(lo, d + 1):
            den = prod((A + 2 - 2 * d + i for i in range(d - s)), start=Fraction(1))
            if self.betas[s] != comb(d, s) / den:
                return False
        return True


def solve_beta(prob: LiftProblem) -> BetaTable:
    """beta_d = 1, beta_s = (s+1) beta_{s+1} / ((d-s)((1-a)(k-2) + 1 - d - s))."""
    lam = beta_eigenvalue(prob)
    info = prob.classify()
    d, A = prob.d, prob.A
    betas = [Fraction(0)] * (d + 1)
    betas[d] = Fraction(1)
    trunc = info.get("j")
    for s in range(d - 1, -1, -1):
        if trunc is not None and s <= trunc:
            break
        betas[s] = (s + 1) * betas[s + 1] / ((d - s) * (A + 1 - d - s))
    return BetaTable(lam, betas, trunc)


def annihilation_holds(prob: LiftProblem, phi: NHForm) -> bool:
    """delta_{k-2d}^{d-j} phi = 0, required by the truncated b = 0 lifts."""
    j = prob.classify().get("j")
    if j is None:
        return True
    return delta_power(phi, prob.k - 2 * prob.d, prob.d - j).is_zero()


def infer_mu(prob: LiftProblem, phi: NHForm) -> Fraction:
    """Eigenvalue mu with Delta_{k-2d} phi = -mu phi, read off and checked."""
    tags = {c.mu for c in phi.parts.values() if isinstance(c, EigenCoeff)}
    if lower4(phi).is_zero():
        candidates = {Fraction(0)}
    elif len(tags) == 1:
        candidates = tags
    else:
        raise LiftError("cannot read an eigenvalue off phi")
    mu = candidates.pop()
    if laplacian_nh(phi, prob.k - 2 * prob.d) != phi.scale(-mu):
        raise LiftError("phi is not a Laplace eigenfunction of weight k-2d")
    return mu


def build_lift(prob: LiftProblem, lam, phi: NHForm, mu=None) -> VVTuple:
    """The tuple F_s = alpha_s delta_{k-2d}^{d-s} phi for eigenvalue lam.

    When the linear system leaves free parameters they are set to zero; the
    result is still an eigenvector.
    """
    lam = as_fraction(lam)
    k, d = prob.k, prob.d
    if phi.weight != k - 2 * d:
        raise LiftError(f"phi must have weight k-2d = {k - 2 * d}")
    info = prob.classify()
    powers = [delta_power(phi, k - 2 * d, n) for n in range(d + 1)]
    if info["branch"].startswith("beta"):
        table = solve_beta(prob)
        if lam != table.lam:
            raise LiftError(f"for b = 0 the only eigenvalue is {table.lam}")
        if not annihilation_holds(prob, phi):
            raise LiftError("phi is not annihilated by the required power of delta")
        coeffs = table.betas
    else:
        if info["branch"] == "mu":
            mu = infer_mu(prob, phi) if mu is None else as_fraction(mu)
        else:
            if not lower4(phi).is_zero():
                raise LiftError("this branch needs a meromorphic phi")
            mu = Fraction(0)
        sol = solve_at(prob, lam, mu)
        if sol.status == "none":
            raise LiftError(f"no lift with eigenvalue {lam}")
        coeffs = sol.alphas
    return VVTuple(k, [powers[d - s].scale(coeffs[s]) for s in range(d + 1)])


def ladder_eigenvalue(prob: LiftProblem, s, mu=0) -> Fraction:
    """-Delta eigenvalue of delta^{d-s} phi: mu + (d-s)(k-d-s-1)."""
    d, k = prob.d, prob.k
    return as_fraction(mu) + (d - s) * (k - d - s - 1)


def check_ladder(prob: LiftProblem, T: VVTuple, mu=0) -> bool:
    k = prob.k
    for s, F in enumerate(T.components):
        if laplacian_nh(F, k - 2 * s) != F.scale(-ladder_eigenvalue(prob, s, mu)):
            return False
    return True


@dataclass
class EnumEntry:
    d: int
    branch: str
    roots: list            # (root, multiplicity)
    lifts: dict            # root -> status from solve_at
    residual: object = None


def enumerate_eigenvalues(a, b, c, k, depth_bound: int) -> list:
    """Rational eigenvalues of lifts from meromorphic phi, depth by depth."""
    out = []
    for d in range(depth_bound + 1):
        prob = LiftProblem(a, b, c, k, d)
        ep = eigenpoly(prob)
        # a meromorphic phi is the mu = 0 member of the mu-branch
        roots, resid = ep.roots(0)
        if ep.branch.startswith("beta"):
            lifts = {r: "unique" for r, _ in roots}
        else:
            lifts = {r: solve_at(prob, r, 0).status for r, _ in roots}
        kept = [(r, m) for r, m in roots if lifts[r] != "none"]
        out.append(EnumEntry(d, ep.branch, kept, {r: lifts[r] for r, _ in kept}, resid))
    return out


# closed forms, used as independent cross-checks

def harmonic_alpha(prob: LiftProblem, s) -> Fraction:
    """alpha_s at lam = 0 when b != c, outside the special cases:
    C(d,s) ((b-c)/b)^{d-s} / prod_{i<d-s} (k-2d+i)."""
    d, k, b, c = prob.d, prob.k, prob.b, prob.c
    den = prod((k - 2 * d + i for i in range(d - s)), start=Fraction(1))
    return comb(d, s) * ((b - c) / b) ** (d - s) / den


def bc1_alpha(prob: LiftProblem, q, s) -> Fraction:
    """alpha_s for b = c = 1 at the root lam = q(k-2d+q-1):

    C(q, d-s) prod_{i<d-s} (k-2d+i+q-1) / ((k-2d+i)((1-a)(k-2)+1-d+i)).
    """
    d, k, A = prob.d, prob.k, prob.A
    if d - s > q:
        return Fraction(0)
    out = Fraction(comb(q, d - s))
    for i in range(d - s):
        out *= Fraction(k - 2 * d + i + q - 1) / ((k - 2 * d + i) * (A + 1 - d + i))
    return out


def bc1_roots(prob: LiftProblem) -> list:
    d, k = prob.d, prob.k
    return [q * (k - 2 * d + q - 1) for q in range(d + 1)]


def qm_eigen_output(prob: LiftProblem, alphas, phi: NHForm) -> QMForm:
    """Companions of the eigenform straight from derivatives of phi:

    f_r = sum_p [sum_s (-1)^{d-s-p} C(s,r) C(d-s,p) alpha_s
                 prod_{i=p}^{d-s-1} (k-2d+i)] d^p phi Y^{d-r-p}
    """
    d, k = prob.d, prob.k
    derivs = [phi]
    for _ in range(d):
        derivs.append(nh_derive(derivs[-1]))
    comps = []
    for r in range(d + 1):
        acc = NHForm.zero(k - 2 * r)
        for p in range(d - r + 1):
            coef = Fraction(0)
            for s in range(r, d - p + 1):
                term = (-1) ** (d - s - p) * comb(s, r) * comb(d - s, p) * as_fraction(alphas[s])
                for i in range(p, d - s):
                    term *= k - 2 * d + i
                coef += term
            if coef:
                acc = acc + _ypow(derivs[p], d - r - p).scale(coef)
        comps.append(acc)
    return QMForm(k, comps)


def _ypow(F, n):
    for _ in range(n):
        F = mul_y(F)
    return F


def harmonic_qm(prob: LiftProblem, phi: NHForm) -> QMForm:
    """Eigenvalue-0 eigenform when b != 0:
    f_r = C(d,r) sum_p C(d-r,p) (b-c)^p c^{d-r-p} / (b^{d-r} prod_{i<p}(k-2d+i)) d^p phi Y^{d-r-p}."""
    d, k, b, c = prob.d, prob.k, prob.b, prob.c
    derivs = [phi]
    for _ in range(d):
        derivs.append(nh_derive(derivs[-1]))
    comps = []
    for r in range(d + 1):
        acc = NHForm.zero(k - 2 * r)
        for p in range(d - r + 1):
            den = b ** (d - r) * prod((k - 2 * d + i for i in range(p)), start=Fraction(1))
            coef = comb(d, r) * comb(d - r, p) * (b - c) ** p * c ** (d - r - p) / den
            if coef:
                acc = acc + _ypow(derivs[p], d - r - p).scale(coef)
        comps.append(acc)
    return QMForm(k, comps)


def bc1_qm(prob: LiftProblem, q, phi: NHForm) -> QMForm:
    """b = c = 1, root q:
    f_r = sum_h C(q,h) C(d-h,r) prod_{i<h} (k-2d+q-1+i)/((k-2d+i)((1-a)(k-2)+1-d+i))
          * delta^h phi Y^{d-r-h}."""
    d, k, A = prob.d, prob.k, prob.A
    powers = [delta_power(phi, k - 2 * d, h) for h in range(d + 1)]
    comps = []
    for r in range(d + 1):
        acc = NHForm.zero(k - 2 * r)
        for h in range(min(q, d - r) + 1):
            coef = Fraction(comb(q, h) * comb(d - h, r))
            for i in range(h):
                coef *= Fraction(k - 2 * d + q - 1 + i) / ((k - 2 * d + i) * (A + 1 - d + i))
            if coef:
                acc = acc + _ypow(powers[h], d - r - h).scale(coef)
        comps.append(acc)
    return QMForm(k, comps)


def beta_qm(prob: LiftProblem, phi: NHForm) -> QMForm:
    """b = 0:
    f_r = C(d,r) sum_h C(d-r,h) delta^h phi Y^{d-r-h} / prod_{i<h} ((1-a)(k-2)+2-2d+i)."""
    d, k, A = prob.d, prob.k, prob.A
    powers = [delta_power(phi, k - 2 * d, h) for h in range(d + 1)]
    comps = []
    for r in range(d + 1):
        acc = NHForm.zero(k - 2 * r)
        for h in range(d - r + 1):
            den = prod((A + 2 - 2 * d + i for i in range(h)), start=Fraction(1))
            coef = comb(d, r) * comb(d - r, h) / den
            acc = acc + _ypow(powers[h], d - r - h).scale(coef)
        comps.append(acc)
    return QMForm(k, comps)


def eigen_shift(h: NHForm, l, kappa, direction: str) -> NHForm:
    """Move between neighbouring weights of an eigenfunction ladder.

    down: h of weight l+2 with eigenvalue kappa (kappa != 0) gives
          g = lower4(h) / (-kappa) of weight l, with delta_l g = h.
    up:   h of weight l with eigenvalue kappa (kappa != -l) gives
          phi = delta_l h / (-l - kappa) of weight l+2, with lower4(phi) = h.
    """
    l, kappa = as_fraction(l), as_fraction(kappa)
    if direction == "down":
        if kappa == 0:
            raise ValueError("eigenvalue 0 has no lowering inverse")
        return lower4(h).scale(Fraction(-1) / kappa)
    if direction == "up":
        if kappa == -l:
            raise ValueError("eigenvalue -l has no raising inverse")
        return raise_op(h, l).scale(Fraction(-1) / (l + kappa))
    raise ValueError("direction must be 'up' or 'down'")
