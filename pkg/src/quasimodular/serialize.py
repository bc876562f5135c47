"""JSON encoding of the exact objects.

Rationals are strings "p/q", scalars are {"omega exponent": rational},
NHForms are {"weight", "parts": {"t": coefficient}}, and quasi-modular
forms and tuples are {"kind", "weight", "components"}.
"""
import json
from dataclasses import asdict, is_dataclass
from fractions import Fraction

from .exactcore import Scalar, QSeries, SymCoeff, EigenCoeff, UniPoly, BiPoly
from .nhform import NHForm
from .quasimod import QMForm
from .vvops import VVTuple, Report


def rat(x) -> str:
    return str(Fraction(x))


def scalar_to_json(s: Scalar):
    return {str(e): rat(c) for e, c in sorted(s.terms.items())}


def scalar_from_json(obj) -> Scalar:
    if isinstance(obj, (int, str)):
        return Scalar.coerce(Fraction(obj))
    return Scalar({int(e): Fraction(c) for e, c in obj.items()})


def coeff_to_json(c):
    if isinstance(c, QSeries):
        out = {"type": "qseries", "order": c.order, "coeffs": [scalar_to_json(x) for x in c.coeffs]}
        if c.start:
            out["start"] = c.start
        return out
    if isinstance(c, SymCoeff):
        return {"type": "sym", "terms": [
            {"factors": [[n, rat(w), p] for n, w, p in mono], "coeff": scalar_to_json(v)}
            for mono, v in sorted(c.terms.items())]}
    if isinstance(c, EigenCoeff):
        return {"type": "eigen", "name": c.name, "base_weight": rat(c.base_weight), "mu": rat(c.mu),
                "terms": {str(n): scalar_to_json(v) for n, v in sorted(c.terms.items())}}
    raise TypeError(f"no JSON form for {type(c).__name__}")


def coeff_from_json(obj):
    kind = obj.get("type")
    if kind == "qseries" or (kind is None and "order" in obj):
        return QSeries([scalar_from_json(x) for x in obj["coeffs"]], obj["order"], obj.get("start", 0))
    if kind == "sym" or (kind is None and isinstance(obj.get("terms"), list)):
        terms = {}
        for t in obj["terms"]:
            mono = tuple((n, Fraction(w), int(p)) for n, w, p in t["factors"])
            terms[mono] = scalar_from_json(t["coeff"])
        return SymCoeff(terms)
    if kind == "eigen":
        return EigenCoeff(obj["name"], Fraction(obj["base_weight"]), Fraction(obj["mu"]),
                          {int(n): scalar_from_json(v) for n, v in obj["terms"].items()})
    raise ValueError(f"unrecognised coefficient {obj!r}")


def nhform_to_json(F: NHForm):
    return {"weight": rat(F.weight), "parts": {str(t): coeff_to_json(c) for t, c in sorted(F.parts.items())}}


def nhform_from_json(obj) -> NHForm:
    return NHForm(Fraction(obj["weight"]), {int(t): coeff_from_json(c) for t, c in obj["parts"].items()})


def form_to_json(x):
    if isinstance(x, QMForm):
        kind = "qmform"
    elif isinstance(x, VVTuple):
        kind = "vvtuple"
    elif isinstance(x, NHForm):
        return nhform_to_json(x)
    else:
        raise TypeError(f"no JSON form for {type(x).__name__}")
    return {"kind": kind, "weight": rat(x.weight), "components": [nhform_to_json(F) for F in x.components]}


def form_from_json(obj):
    kind = obj.get("kind")
    if kind is None and "parts" in obj:
        return nhform_from_json(obj)
    comps = [nhform_from_json(c) for c in obj["components"]]
    if kind == "qmform":
        return QMForm(Fraction(obj["weight"]), comps)
    if kind == "vvtuple":
        return VVTuple(Fraction(obj["weight"]), comps)
    raise ValueError(f"unknown kind {kind!r}")


def to_jsonable(x):
    """Generic fallback used for reports and result records."""
    if isinstance(x, bool) or x is None or isinstance(x, (int, float, str)):
        return x
    if isinstance(x, Fraction):
        return rat(x)
    if isinstance(x, Scalar):
        return scalar_to_json(x)
    if isinstance(x, complex):
        return [x.real, x.imag]
    if isinstance(x, (QMForm, VVTuple, NHForm)):
        return form_to_json(x)
    if isinstance(x, UniPoly):
        return {"coeffs": [rat(c) for c in x.coeffs]}
    if isinstance(x, BiPoly):
        return {"terms": [[i, j, rat(c)] for (i, j), c in sorted(x.terms.items())]}
    if isinstance(x, Report):
        return {"relation": x.relation, "params": to_jsonable(x.params), "status": x.status,
                "witness": to_jsonable(x.witness)}
    if is_dataclass(x):
        return to_jsonable(asdict(x))
    if isinstance(x, dict):
        return {str(k): to_jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [to_jsonable(v) for v in x]
    raise TypeError(f"cannot serialise {type(x).__name__}")


def dumps(x, **kw) -> str:
    return json.dumps(to_jsonable(x), **kw)
