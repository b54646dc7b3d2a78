import json

import numpy as np
import pytest

from parabar import verify
from parabar.eigen import BarrierParams


@pytest.fixture(scope="module")
def report():
    return verify.emit_verification()


def test_default_run_passes(report):
    assert len(report.entries) >= 40
    assert report.ok, report.failures()


def test_every_suite_contributes(report):
    prefixes = {e.name.split(".")[0] for e in report.entries}
    assert prefixes == set(verify.SUITES)


def test_pass_flag_matches_tolerance(report):
    for e in report.entries:
        assert e.passed == (e.residual <= e.tolerance)
        assert e.anchor


def test_names_unique(report):
    names = [e.name for e in report.entries]
    assert len(names) == len(set(names))


def test_tightened_dft_tolerance_fails_alone(report):
    name = "spectra.dft_cross_check"
    tight = verify.emit_verification(tolerances={name: report[name].tolerance / 100})
    assert [e.name for e in tight.failures()] == [name]


def test_unknown_override_rejected():
    with pytest.raises(ValueError, match="matches no check"):
        verify.emit_verification(suite="polys", tolerances={"polys.nothing": 1.0})


def test_unknown_suite_rejected():
    with pytest.raises(ValueError):
        verify.emit_verification(suite="astrology")


def test_suite_subset():
    r = verify.emit_verification(suite=["quad", "polys"])
    assert {e.name.split(".")[0] for e in r.entries} == {"quad", "polys"}
    assert r.suite == "polys,quad"


def test_scaled_units_pass():
    r = verify.emit_verification(BarrierParams(gamma=2.0, hbar=0.5))
    assert r.ok, r.failures()


def test_random_units_pass():
    rng = np.random.default_rng(verify.DEFAULT_SEED)
    for m, gamma, hbar in rng.uniform(0.1, 10.0, size=(3, 3)):
        r = verify.emit_verification(BarrierParams(m=m, gamma=gamma, hbar=hbar))
        assert r.ok, (m, gamma, hbar, r.failures())


def test_json_is_deterministic(report):
    again = verify.emit_verification()
    assert report.to_json() == again.to_json()
    doc = json.loads(report.to_json())
    assert doc["summary"] == {"total": len(report.entries), "passed": len(report.entries), "failed": 0}


def test_seed_changes_samples_not_outcome():
    a = verify.emit_verification(suite="polys", seed=1)
    b = verify.emit_verification(suite="polys", seed=2)
    assert a.ok and b.ok
    assert a.to_json() != b.to_json()


def test_text_report(report):
    text = report.to_text()
    assert text.endswith(f"{len(report.entries)}/{len(report.entries)} checks passed\n")
    with pytest.raises(KeyError):
        report["no.such.check"]
