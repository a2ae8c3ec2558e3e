import json

import pytest

from kpoincare.suites import ALIASES, FAIL, INCONCLUSIVE, PASS, Config, Report, combine_status, resolve, run_suites


def test_combine_status():
    assert combine_status([]) == PASS
    assert combine_status([PASS, PASS]) == PASS
    assert combine_status([PASS, INCONCLUSIVE]) == INCONCLUSIVE
    assert combine_status([INCONCLUSIVE, FAIL, PASS]) == FAIL


def test_resolve():
    assert resolve("theorem1") == ["poincare-ideal"]
    assert resolve(ALIASES["theorem2"]) == ["minkowski-ideal"]
    assert "qla" in resolve("all")
    with pytest.raises(KeyError):
        resolve("theorem3")


def test_exit_codes():
    for status, code in ((PASS, 0), (FAIL, 2), (INCONCLUSIVE, 3)):
        assert Report(Config(), [], {"x": status}).exit_code() == code


def _no_floats(x):
    if isinstance(x, float):
        return False
    if isinstance(x, dict):
        return all(_no_floats(v) for v in x.values())
    if isinstance(x, list):
        return all(_no_floats(v) for v in x)
    return True


def test_report_is_deterministic_and_exact():
    a = run_suites("wedge-basis", Config(seed=7)).to_json()
    b = run_suites("wedge-basis", Config(seed=7)).to_json()
    assert a == b
    d = json.loads(a)
    assert d["seed"] == 7 and "timings" not in d["config"]
    assert _no_floats(d)
    assert [r["label"] for r in d["results"]] == sorted(r["label"] for r in d["results"])


def test_timings_are_opt_in():
    d = run_suites("relations", Config(timings=True)).to_dict()
    assert all("seconds" in r for r in d["results"])


def test_text_and_latex_reports():
    rep = run_suites("relations", Config())
    assert rep.to_text().splitlines()[-1] == f"overall: {rep.status}"
    tex = rep.to_latex()
    assert tex.startswith("\\begin{tabular}") and tex.endswith("\\end{tabular}")


def test_failing_check_carries_a_witness():
    rep = run_suites("classical-limit", Config())
    bad = [r for r in rep.results if r["status"] == FAIL]
    assert bad and all(r["witness"] for r in bad)
    assert rep.exit_code() == 2
