import io
import json

import pytest

from quasimodular.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    text = out.getvalue()
    return code, (json.loads(text) if text.strip() else None)


def test_rc_zeroth_bracket():
    code, res = run("rc", "--n", "0", "--k", "4", "--d", "0", "--l", "6", "--e", "0")
    assert code == 0 and res["coefficients"] == ["1"]


def test_rc_apply_builtin_forms():
    code, res = run("--order", "6", "rc", "--n", "1", "--k", "4", "--l", "6", "--apply", "E4", "E6")
    assert code == 0
    assert res["bracket"]["kind"] == "qmform"


def test_rc_apply_weight_mismatch_is_usage_error():
    code, _ = run("rc", "--n", "1", "--k", "4", "--l", "4", "--apply", "E4", "E6")
    assert code == 2


def test_eigenpoly_depth_one():
    code, res = run("eigenpoly", "--a", "0", "--b", "2", "--c", "1", "--k", "12", "--d", "1")
    assert code == 0 and res["roots"] == ["0", "10"] and res["branch"] == "generic"


def test_eigenpoly_degenerate_triple():
    # a = 1 makes (1-a)(k-2) vanish, leaving only the harmonic lift
    code, res = run("eigenpoly", "--a", "1", "--b", "1", "--c", "0", "--k", "12", "--d", "1")
    assert code == 0 and res["roots"] == ["0"] and res["branch"] == "special"


def test_eigenpoly_infers_c_and_checks_triple():
    code, res = run("eigenpoly", "--a", "1/2", "--b", "3", "--k", "7/2", "--d", "1")
    assert code == 0 and res["roots"] == ["0", "3/2"]
    code, _ = run("eigenpoly", "--a", "0", "--b", "2", "--c", "2", "--k", "12", "--d", "1")
    assert code == 2


def test_lift_then_verify(tmp_path):
    out = io.StringIO()
    assert main(["lift", "--a", "0", "--b", "2", "--c", "1", "--k", "25/2", "--d", "2", "--lambda", "0"],
                out=out) == 0
    path = tmp_path / "T.json"
    path.write_text(out.getvalue())
    code, res = run("verify-eigen", str(path), "--a", "0", "--b", "2", "--c", "1", "--lambda", "0")
    assert code == 0 and res["eigen"] is True
    code, res = run("verify-eigen", str(path), "--a", "0", "--b", "2", "--c", "1", "--lambda", "1")
    assert code == 1 and res["eigen"] is False


def test_lift_wrong_eigenvalue_is_math_failure():
    code, res = run("lift", "--a", "0", "--b", "2", "--c", "1", "--k", "12", "--d", "1", "--lambda", "3")
    assert code == 1 and "error" in res


def test_apply_chain(tmp_path):
    out = io.StringIO()
    main(["--order", "5", "forms", "emit", "--name", "E2", "--qm"], out=out)
    path = tmp_path / "e2.json"
    path.write_text(out.getvalue())
    code, res = run("apply", "derive", str(path))
    assert code == 0 and res["kind"] == "qmform" and res["weight"] == "4"
    code, res = run("apply", "to-tuple", str(path))
    assert res["kind"] == "vvtuple"
    code, _ = run("apply", "vv-D", str(path))
    assert code == 2                        # needs a tuple
    code, res = run("apply", "raise", str(path), "--l", "1")
    assert code == 0
    code, _ = run("apply", "raise", str(path))
    assert code == 2                        # missing --l


def test_forms_emit_nhform():
    code, res = run("forms", "emit", "--name", "E4", "--order", "4")
    assert code == 0
    assert [c["0"] for c in res["parts"]["0"]["coeffs"]] == ["1", "240", "2160", "6720"]


def test_verify_transform():
    code, res = run("verify-transform", "E2", "--gamma", "0,-1,1,0", "--tau", "2i")
    assert code == 0 and res["status"] == "pass"
    code, res = run("--order", "2", "verify-transform", "E4", "--gamma", "0,-1,1,0", "--tau", "0.1+0.8i")
    assert code == 1 and res["status"] == "inconclusive"


@pytest.mark.parametrize("argv", [
    ["bogus"],
    ["verify-transform", "E2", "--gamma", "1,1,1,1", "--tau", "2i"],
    ["verify-transform", "E2", "--gamma", "0,-1,1,0", "--tau", "-2i"],
    ["verify-eigen", "/no/such/file.json", "--a", "0", "--b", "1", "--lambda", "0"],
])
def test_usage_errors(argv):
    assert run(*argv)[0] == 2


def test_malformed_json(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run("apply", "derive", str(bad))[0] == 2
    bad.write_text('{"kind": "qmform", "weight": "2"}')
    assert run("apply", "derive", str(bad))[0] == 2


def test_suite_deterministic_and_seeded():
    a = run("--seed", "5", "suite", "--name", "comrels", "--reports")
    b = run("suite", "--name", "comrels", "--seed", "5", "--reports")
    assert a == b and a[0] == 0 and a[1]["seed"] == 5
    c = run("suite", "--name", "comrels", "--seed", "6", "--reports")
    assert c[1]["reports"] != a[1]["reports"]


def test_suite_sl2_reports_minimised_counterexample():
    code, res = run("suite", "--name", "sl2", "--depth", "4")
    assert code == 1
    counts = res["relations"]
    assert counts["[W,E]=2E"]["fail"] == 0 and counts["[W,F]=-2F"]["fail"] == 0
    assert counts["[E,F]=W"]["fail"] > 0
    cx = res["counterexamples"][0]
    assert cx["relation"] == "[E,F]=W"
    assert len(cx["tuple"]["components"]) <= 2
