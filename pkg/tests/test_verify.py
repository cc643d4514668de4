import json
import os

import pytest

from skewalg.variety import MembershipCertificate, builtin_variety
from skewalg.verify import CHECKS, DESK_SUITE, Report, verify


def test_registry_names():
    expected = {"lemma1", "eq1", "lemma2", "eq4", "fm_nonzero", "skew_dim",
                "cor2_assoc", "cor2_assoc_probe", "assoc_projection", "lemma3",
                "eq6", "cor4_tiny", "engine_soundness"}
    assert expected <= set(CHECKS)


def test_unknown_check_and_params(config):
    with pytest.raises(ValueError):
        verify("nope", {}, config)
    with pytest.raises(ValueError):
        verify("lemma1", {"q": 3}, config)


def test_report_schema(config):
    r = verify("lemma1", {"m": 3}, config)
    doc = r.to_json()
    assert set(doc) == {"check", "params", "verdict", "details",
                        "certificates", "elapsed_ms"}
    assert doc["verdict"] == "pass"
    assert doc["params"] == {"m": 3}
    json.dumps(doc)  # serializable


def test_verdicts_deterministic(config):
    a = verify("skew_dim", {"d": 3}, config)
    b = verify("skew_dim", {"d": 3}, config)
    assert a.verdict == b.verdict == "pass"
    assert a.details == b.details


def test_eq1_writes_certificate_file(config):
    r = verify("eq1", {}, config)
    assert r.verdict == "pass"
    assert len(r.certificates) == 1
    path = r.certificates[0]
    assert os.path.exists(path)
    doc = json.loads(open(path).read())
    cert = MembershipCertificate.from_json(doc)
    assert cert.recheck(builtin_variety("flex"))


def test_probe_reports_without_asserting(config):
    r = verify("cor2_assoc_probe", {"degree_bound": 2}, config)
    assert r.verdict == "pass"
    assert "outcome" in r.details


def test_resource_limit_verdict(config):
    r = verify("skew_dim", {"d": 6}, config)
    assert r.verdict == "resource_limit"
    assert r.details["limit"] == "max_ambient_dimension"
    assert r.details["needed"] == 30240


def test_eq4_check(config):
    r = verify("eq4", {"k": 3}, config)
    assert r.verdict == "pass"


def test_eq6_check(config):
    r = verify("eq6", {"m": 4}, config)
    assert r.verdict == "pass"
    assert r.details["lambda"] == "2"


def test_desk_suite_layout():
    names = [name for name, _ in DESK_SUITE]
    assert names.count("lemma1") == 5
    assert names.count("lemma2") == 3
    assert names.count("fm_nonzero") == 3
    assert names.count("skew_dim") == 5
    assert names.count("lemma3") == 2
    assert "engine_soundness" in names
    for name, params in DESK_SUITE:
        assert name in CHECKS
        assert set(params) <= set(CHECKS[name].defaults)


def test_report_passed_property():
    assert Report("x", {}, "pass").passed
    assert not Report("x", {}, "fail").passed
    assert not Report("x", {}, "resource_limit").passed
