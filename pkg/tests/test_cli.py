import json

import pytest

from skewalg.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_fm_command(capsys):
    code, out, _ = run(capsys, "fm", "--m", "2")
    assert code == 0
    assert out.strip() == "(x1*x2) - (x2*x1)"


def test_fm_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "fm", "--m", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["polynomial"] == "(x1*x2) - (x2*x1)"
    assert doc["terms"] == 2


def test_skew_command(capsys):
    code, out, _ = run(capsys, "skew", "--word", "(x1*x1)")
    assert code == 0
    assert out.strip() == "(x1*x2) - (x2*x1)"


def test_dim_command(capsys):
    code, out, _ = run(capsys, "dim", "--variety", "assoc", "--multideg", "1,1,1")
    assert code == 0
    assert out.strip() == "6"


def test_dim_alt(capsys):
    code, out, _ = run(capsys, "dim", "--variety", "alt", "--multideg", "1,1,1")
    assert code == 0
    assert out.strip() == "7"


def test_basis_count(capsys):
    code, out, _ = run(capsys, "basis-count", "--degree", "5")
    assert code == 0
    assert out.strip() == "4"


def test_member_true_with_certificate(tmp_path, capsys):
    poly = tmp_path / "p.txt"
    # [x^2, y] - x o [x, y], expanded into grammar words
    poly.write_text("((x1*x1)*x2) - (x2*(x1*x1)) - (x1*(x1*x2)) + (x1*(x2*x1)) "
                    "- ((x1*x2)*x1) + ((x2*x1)*x1)")
    cert = tmp_path / "cert.json"
    code, out, _ = run(capsys, "member", "--variety", "flex",
                       "--input", str(poly), "--certify", str(cert))
    assert code == 0
    assert out.strip() == "member"
    doc = json.loads(cert.read_text())
    assert doc["variety"] == "flex"
    assert doc["generators"]


def test_member_false_exit_code(tmp_path, capsys):
    poly = tmp_path / "p.txt"
    poly.write_text("(x1*x2) - (x2*x1)")
    code, out, _ = run(capsys, "member", "--variety", "alt", "--input", str(poly))
    assert code == 1
    assert "witness" in out


def test_member_parse_error_is_usage(tmp_path, capsys):
    poly = tmp_path / "p.txt"
    poly.write_text("x1 ++ x2")
    code, _, err = run(capsys, "member", "--variety", "alt", "--input", str(poly))
    assert code == 2
    assert "error" in err


def test_verify_single_check(capsys):
    code, out, _ = run(capsys, "verify", "lemma1", "--m", "4")
    assert code == 0
    assert out.startswith("pass")


def test_verify_unknown_check(capsys):
    code, _, err = run(capsys, "verify", "conjecture9")
    assert code == 2
    assert "unknown check" in err


def test_verify_needs_argument(capsys):
    code, _, err = run(capsys, "verify")
    assert code == 2


def test_verify_json_verdict_matches_text(tmp_path, capsys):
    code1, out1, _ = run(capsys, "--cert-dir", str(tmp_path / "c1"),
                         "verify", "eq1")
    code2, out2, _ = run(capsys, "--format", "json",
                         "--cert-dir", str(tmp_path / "c2"), "verify", "eq1")
    assert code1 == code2 == 0
    assert out1.startswith("pass")
    assert json.loads(out2)["verdict"] == "pass"


def test_resource_limit_exit_code(capsys):
    code, _, err = run(capsys, "--max-ambient", "10",
                       "dim", "--variety", "alt", "--multideg", "1,1,1")
    assert code == 3
    assert "max_ambient_dimension" in err


def test_verify_resource_limit_exit(capsys):
    code, out, _ = run(capsys, "verify", "skew_dim", "--d", "6")
    assert code == 3
    assert out.startswith("resource_limit")


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as e:
        main(["fm"])  # missing --m
    assert e.value.code == 2


def test_bad_multidegree(capsys):
    with pytest.raises(SystemExit) as e:
        main(["dim", "--variety", "alt", "--multideg", "0,1"])
    assert e.value.code == 2


def test_env_override(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("SKEWALG_MAX_AMBIENT_DIMENSION", "10")
    code, _, err = run(capsys, "dim", "--variety", "alt", "--multideg", "1,1,1")
    assert code == 3
    monkeypatch.setenv("SKEWALG_MAX_AMBIENT_DIMENSION", "50")
    code, out, _ = run(capsys, "dim", "--variety", "alt", "--multideg", "1,1,1")
    assert code == 0 and out.strip() == "7"


def test_custom_variety_flow(tmp_path, capsys):
    ids = tmp_path / "ids.txt"
    # the flexible law, non-linear form; linearized on load
    ids.write_text("((x1*x2)*x1) - (x1*(x2*x1))\n")
    poly = tmp_path / "p.txt"
    poly.write_text("((x1*x2)*x1) - (x1*(x2*x1))")
    code, out, _ = run(capsys, "member", "--variety", "custom",
                       "--identities", str(ids), "--input", str(poly))
    assert code == 0

    code, out, _ = run(capsys, "dim", "--variety", "custom",
                       "--identities", str(ids), "--multideg", "2,1")
    assert code == 0
    # agrees with the builtin flexible variety at the same component
    assert out.strip() == "4"


def test_custom_variety_requires_file(capsys):
    code, _, err = run(capsys, "dim", "--variety", "custom",
                       "--multideg", "1,1,1")
    assert code == 2


def test_verify_all_desk_exits_zero(tmp_path, capsys):
    # the full desk suite; reuses session caches built by the other tests
    code, out, _ = run(capsys, "--cert-dir", str(tmp_path / "c"),
                       "verify", "--all-desk")
    assert code == 0
    lines = [l for l in out.splitlines() if l.strip()]
    assert len(lines) == 22  # one line per suite entry
    assert all(l.startswith("pass") for l in lines)


def test_verify_rejects_foreign_param(capsys):
    code, _, err = run(capsys, "verify", "eq1", "--m", "3")
    assert code == 2
    assert "does not take" in err
