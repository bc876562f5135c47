"""Randomised verification suites over symbolic inputs.

Every suite takes a seeded random.Random, so a run is reproducible from its
seed.  Failing cases are shrunk greedily before being reported.
"""
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .exactcore import SymCoeff, Scalar
from .nhform import NHForm, delta_power, delta_power_closed, nh_derive, raise_op
from .quasimod import QMForm, qm_derive, qm_div_neg2iy, qm_delta, qm_lower, qm_shift1
from .vvops import (VVTuple, Report, check_commutators, check_sl2, limit_equal, qm_to_tuple,
                    tuple_to_qm, vv_tilde_delta, vv_ibar_over, vv_raise, vv_lower, vv_D)
from .laplacian import (LiftProblem, lap_closed, lap_composed, eigenpoly, solve_at, build_lift,
                        verify_eigen, check_ladder, enumerate_eigenvalues, beta_eigenvalue, bc1_roots)
from .rankincohen import rc_solve, rc_certificate
from .randomforms import (random_tuple, random_qmform, random_nhform, random_rational, random_triple)


@dataclass
class SuiteResult:
    name: str
    seed: int
    reports: list = field(default_factory=list)
    counterexamples: list = field(default_factory=list)

    @property
    def passed(self):
        return all(r.passed for r in self.reports)

    def failures(self):
        return [r for r in self.reports if not r.passed]


def shrink_tuple(T: VVTuple, still_fails) -> VVTuple:
    """Greedy shrink: drop top components, then individual Y-parts."""
    changed = True
    while changed:
        changed = False
        if len(T.components) > 1:
            cand = VVTuple(T.weight, T.components[:-1])
            if still_fails(cand):
                T, changed = cand, True
                continue
        for s, F in enumerate(T.components):
            for t in list(F.parts):
                parts = dict(F.parts)
                del parts[t]
                comps = list(T.components)
                comps[s] = NHForm(F.weight, parts)
                cand = VVTuple(T.weight, comps)
                if not cand.is_zero() and still_fails(cand):
                    T, changed = cand, True
                    break
            if changed:
                break
    return T


def _sizes(rng, depth, n):
    return [rng.randint(1, depth + 1) for _ in range(n)]


def suite_sl2(rng: random.Random, depth=4, random_triples=10, tuples_per_triple=2, seed=None):
    res = SuiteResult("sl2", seed)
    triples = [(Fraction(1), Fraction(1), Fraction(0)), (Fraction(0), Fraction(0), Fraction(1))]
    triples += [random_triple(rng) for _ in range(random_triples)]
    for a, b, c in triples:
        for size in _sizes(rng, depth, tuples_per_triple):
            T = random_tuple(rng, random_rational(rng), size)
            for rep in check_sl2(a, b, c, T):
                res.reports.append(rep)
                if not rep.passed:
                    def fails(X, rel=rep.relation):
                        return any(r.relation == rel and not r.passed for r in check_sl2(a, b, c, X))
                    res.counterexamples.append({"relation": rep.relation, "params": rep.params,
                                                "tuple": shrink_tuple(T, fails)})
    return res


def suite_comrels(rng, depth=4, draws=20, seed=None):
    res = SuiteResult("comrels", seed)
    for size in _sizes(rng, depth, draws):
        T = random_tuple(rng, random_rational(rng), size)
        l = random_rational(rng)
        for rep in check_commutators(T, l):
            res.reports.append(rep)
            if not rep.passed:
                def fails(X, rel=rep.relation):
                    return any(r.relation == rel and not r.passed for r in check_commutators(X, l))
                res.counterexamples.append({"relation": rep.relation, "params": rep.params,
                                            "tuple": shrink_tuple(T, fails)})
    return res


def suite_lapeval(rng, depth=4, draws=10, seed=None):
    res = SuiteResult("lapeval", seed)
    for size in _sizes(rng, depth, draws):
        a, b, c = random_triple(rng)
        T = random_tuple(rng, random_rational(rng), size)
        ok = limit_equal(lap_closed(T, a, b, c), lap_composed(T, a, b, c))
        params = {"a": a, "b": b, "c": c, "k": T.weight, "size": size}
        res.reports.append(Report("closed=composed", params, "pass" if ok else "fail"))
        if not ok:
            res.counterexamples.append({"relation": "closed=composed", "params": params, "tuple": shrink_tuple(
                T, lambda X: not limit_equal(lap_closed(X, a, b, c), lap_composed(X, a, b, c)))})
    return res


OPERATOR_PAIRS = (
    ("derive", qm_derive, lambda T: vv_tilde_delta(T, 0)),
    ("div-neg2iy", qm_div_neg2iy, vv_ibar_over),
    ("delta", qm_delta, vv_raise),
    ("lower", qm_lower, vv_lower),
    ("shift1", qm_shift1, vv_D),
)


def suite_correspondence(rng, depth=5, draws=8, seed=None):
    res = SuiteResult("correspondence", seed)
    for _ in range(draws):
        d = rng.randint(0, depth)
        k = random_rational(rng)
        f = random_qmform(rng, k, d)
        T = random_tuple(rng, k, d + 1)
        params = {"k": k, "depth": d}
        res.reports.append(Report("qm->vv->qm", params, "pass" if tuple_to_qm(qm_to_tuple(f)) == f else "fail"))
        back = qm_to_tuple(tuple_to_qm(T))
        res.reports.append(Report("vv->qm->vv", params, "pass" if limit_equal(back, T) else "fail"))
        for name, qop, vop in OPERATOR_PAIRS:
            ok = limit_equal(qm_to_tuple(qop(f)), vop(qm_to_tuple(f)))
            res.reports.append(Report(f"transport {name}", params, "pass" if ok else "fail"))
    return res


def suite_bol(rng, max_s=6, max_n=5, draws=3, seed=None):
    res = SuiteResult("bol", seed)
    for _ in range(draws):
        F = random_nhform(rng, random_rational(rng), max_t=2)
        m = random_rational(rng)
        for s in range(max_s + 1):
            ok = delta_power(F, m, s) == delta_power_closed(F, m, s)
            res.reports.append(Report("closed=iterated", {"m": m, "s": s}, "pass" if ok else "fail"))
    for n in range(max_n + 1):
        phi = NHForm(-n, {0: SymCoeff.gen("phi", -n)})
        target = phi
        for _ in range(n + 1):
            target = nh_derive(target)
        lhs = delta_power(phi, -n, n + 1)
        ok = lhs == target and lhs.depth() <= 0
        res.reports.append(Report("bol", {"n": n}, "pass" if ok else "fail"))
    return res


RC_WEIGHTS = (-1, 0, 1, 2, 3, 4, Fraction(1, 2), Fraction(7, 3))


def suite_rc(rng=None, max_n=6, max_depth=3, weights=RC_WEIGHTS, seed=None):
    res = SuiteResult("rc", seed)
    for n in range(max_n + 1):
        for d in range(max_depth + 1):
            for e in range(max_depth + 1):
                for k in weights:
                    for l in weights:
                        params = {"n": n, "k": k, "l": l, "d": d, "e": e}
                        try:
                            R = rc_solve(n, k, l, d, e)
                        except ArithmeticError as err:
                            res.reports.append(Report("kernel", params, "fail", {"error": str(err)}))
                            continue
                        want = 2 if R.excluded else 1
                        res.reports.append(Report("kernel", params, "pass" if R.kernel_dim == want else "fail",
                                                  {"dim": R.kernel_dim, "excluded": R.excluded}))
                        for i in range(len(R.basis)):
                            ok, bad = rc_certificate(n, k, l, d, e, R.bracket(i))
                            res.reports.append(Report("certificate", dict(params, basis=i),
                                                      "pass" if ok else "fail", {"Y_powers": bad}))
    return res


def _phi(weight):
    return NHForm(weight, {0: SymCoeff.gen("phi", weight)})


def _lift_reports(res, prob, roots):
    a, b, c = prob.a, prob.b, prob.c
    for lam in roots:
        params = {"a": a, "b": b, "c": c, "k": prob.k, "d": prob.d, "lambda": lam}
        T = build_lift(prob, lam, _phi(prob.k - 2 * prob.d))
        ok, _ = verify_eigen(T, a, b, c, lam)
        res.reports.append(Report("lift is eigen", params, "pass" if ok else "fail"))
        if not prob.classify()["branch"].startswith("beta"):
            res.reports.append(Report("ladder", params, "pass" if check_ladder(prob, T) else "fail"))


def _noninteger_k(rng):
    while True:
        k = random_rational(rng, 20, 5)
        if k.denominator != 1:
            return k


def suite_eigen(rng, max_depth=3, draws=5, seed=None):
    """Eigenvalue tables and lifts for every rational root found."""
    res = SuiteResult("eigen", seed)
    # depth one: roots 0 and k-2
    found = 0
    while found < draws:
        a, b, c = random_triple(rng)
        k = _noninteger_k(rng)
        if b == 0 or b == c:
            continue
        prob = LiftProblem(a, b, c, k, 1)
        if prob.classify()["branch"] != "generic":
            continue
        found += 1
        roots = sorted(r for r, _ in eigenpoly(prob).roots()[0])
        res.reports.append(Report("depth-1 roots", {"a": a, "b": b, "c": c, "k": k},
                                  "pass" if roots == sorted({Fraction(0), k - 2}) else "fail",
                                  {"roots": roots}))
        _lift_reports(res, prob, roots)
    # b = c = 1
    for d in range(max_depth + 1):
        for _ in range(draws):
            while True:
                a, k = random_rational(rng), _noninteger_k(rng)
                prob = LiftProblem(a, 1, 1, k, d)
                if prob.classify()["branch"] == "generic":
                    break
            roots = sorted(r for r, _ in eigenpoly(prob).roots()[0])
            want = sorted(set(bc1_roots(prob)))
            res.reports.append(Report("b=c=1 roots", {"a": a, "k": k, "d": d},
                                      "pass" if roots == want else "fail", {"roots": roots}))
            _lift_reports(res, prob, roots)
    # b = 0
    for d in range(max_depth + 1):
        for _ in range(draws):
            while True:
                a, k = random_rational(rng), _noninteger_k(rng)
                if a != 1:
                    break
            prob = LiftProblem(a, 0, 1 / (1 - a), k, d)
            ep = eigenpoly(prob)
            roots = [r for r, _ in ep.roots()[0]]
            want = d * (k - 2 + Fraction(1 - d) / (1 - a))
            res.reports.append(Report("b=0 eigenvalue", {"a": a, "k": k, "d": d},
                                      "pass" if roots == [want] == [beta_eigenvalue(prob)] else "fail",
                                      {"roots": roots}))
            if prob.classify()["branch"] == "beta":
                _lift_reports(res, prob, roots)
    # no lifts: d = 1, k = 2, b != c
    while True:
        a, b, c = random_triple(rng)
        if b != 0 and b != c:
            break
    entry = enumerate_eigenvalues(a, b, c, 2, 1)[1]
    res.reports.append(Report("no lift at d=1, k=2", {"a": a, "b": b, "c": c},
                              "pass" if not entry.roots else "fail", {"roots": entry.roots}))
    return res


SUITES = {
    "sl2": suite_sl2,
    "comrels": suite_comrels,
    "lapeval": suite_lapeval,
    "correspondence": suite_correspondence,
    "bol": suite_bol,
    "rc": suite_rc,
    "eigen": suite_eigen,
}


def run_suite(name, seed=0, depth=None):
    fn = SUITES[name]
    rng = random.Random(seed)
    kwargs = {"seed": seed}
    if depth is not None and name in ("sl2", "comrels", "lapeval", "correspondence"):
        kwargs["depth"] = depth
    if name == "rc":
        return fn(None, **kwargs)
    return fn(rng, **kwargs)
