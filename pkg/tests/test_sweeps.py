import json

import pytest

from remoteness.verifier.sweeps import SweepCheck, SweepLimits, resolve_check, sweep_consistency


@pytest.mark.parametrize("check", list(SweepCheck))
def test_small_sweeps_are_clean(check):
    limits = SweepLimits(n_max=12, kappa_max=3)
    rep = sweep_consistency(check, limits)
    assert rep.items_checked > 0
    if check is SweepCheck.EPSILON_WINDOW:
        # two boundary cases where epsilon equals the lower end exactly
        assert {(m["n"], m["m"], m["lambda"]) for m in rep.mismatches} == {(8, 16, 3), (9, 20, 3)}
        assert {m["epsilon"] for m in rep.mismatches} == {"1"}
    else:
        assert rep.ok, rep.mismatches[:3]


def test_f2_closed_form_discrepancy_is_reported_not_asserted():
    rep = sweep_consistency(SweepCheck.EPSILON_WINDOW, SweepLimits(n_max=20))
    f2 = rep.summary["f2ClosedForm"]
    assert f2["cases"] > 0
    assert f2["rederivedMatches"] == f2["cases"]
    assert f2["printedMatches"] < f2["cases"]
    first = rep.observations[0]
    assert set(first) == {"n", "m", "member", "epsilon", "printed", "rederived"}
    assert all(m["kind"] == "window" for m in rep.mismatches)


def test_check_names_and_limits():
    assert resolve_check("epsilon-window") is SweepCheck.EPSILON_WINDOW
    assert resolve_check("KAPPA_FORMULA") is SweepCheck.KAPPA_FORMULA
    with pytest.raises(ValueError):
        resolve_check("nope")
    with pytest.raises(ValueError):
        SweepLimits(n_max=63)
    assert SweepLimits.default(SweepCheck.KAPPA_FORMULA) == SweepLimits(40, 5)


def test_sweep_report_serialisation():
    rep = sweep_consistency("bpk-equality", SweepLimits(n_max=10))
    doc = json.loads(rep.dumps())
    assert doc["checkId"] == "BPK_EQUALITY" and doc["mismatchCount"] == 0
    assert doc["summary"]["example"] == {"n": 8, "m": 10, "sigma": 22}
    assert rep.to_csv().splitlines()[1].startswith("BPK_EQUALITY,")
