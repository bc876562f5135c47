import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from quasimodular.exactcore import Scalar, QSeries, EigenCoeff
from quasimodular.formsdb import e2_qmform
from quasimodular.nhform import NHForm
from quasimodular.randomforms import random_tuple, random_qmform, random_eigen_tuple, random_rational
from quasimodular.serialize import (rat, scalar_to_json, scalar_from_json, form_to_json, form_from_json,
                                    to_jsonable, dumps)
from quasimodular.vvops import check_commutators

seeds = st.integers(0, 10 ** 6)


def roundtrip(x):
    return form_from_json(json.loads(json.dumps(form_to_json(x))))


def test_rationals_as_strings():
    assert rat(Fraction(-3, 6)) == "-1/2"
    assert rat(4) == "4"


def test_scalar_map():
    s = Scalar.omega(-1, 12) + Scalar.coerce(Fraction(1, 3))
    assert scalar_to_json(s) == {"-1": "12", "0": "1/3"}
    assert scalar_from_json(scalar_to_json(s)) == s
    assert scalar_from_json("5/2") == Scalar.coerce(Fraction(5, 2))


@given(seed=seeds)
def test_symbolic_roundtrip(seed):
    rng = random.Random(seed)
    T = random_tuple(rng, random_rational(rng), rng.randint(1, 4))
    assert roundtrip(T) == T
    f = random_qmform(rng, random_rational(rng), rng.randint(0, 3))
    assert roundtrip(f) == f
    E = random_eigen_tuple(rng, random_rational(rng), 2)
    assert roundtrip(E) == E


def test_qseries_roundtrip():
    f = e2_qmform(8)
    assert roundtrip(f) == f
    F = NHForm(0, {1: QSeries([0, 1, 2], 3, start=-1)})
    assert roundtrip(F) == F


def test_reports_serialise():
    T = random_tuple(random.Random(1), 3, 2)
    out = json.loads(dumps(check_commutators(T, 1)))
    assert {r["status"] for r in out} == {"pass"}
    assert set(out[0]) == {"relation", "params", "status", "witness"}


def test_unknown_kind_rejected():
    with pytest.raises(ValueError):
        form_from_json({"kind": "matrix", "weight": "1", "components": []})
    with pytest.raises(TypeError):
        to_jsonable(object())
