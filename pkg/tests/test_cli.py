import json

import pytest

from commvar.cli import run


def run_capture(capsys, argv):
    code = run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_poincare_plain(capsys):
    code, out, _ = run_capture(capsys, ["poincare", "--type", "A1", "--n", "2"])
    assert code == 0
    assert out.strip() == "1 + t^2 + 2*t^3"


def test_poincare_latex(capsys):
    code, out, _ = run_capture(
        capsys, ["poincare", "--type", "A1", "--n", "2", "--format", "latex"]
    )
    assert code == 0
    assert out.strip() == "1 + t^{2} + 2t^{3}"


def test_betti_plain(capsys):
    code, out, _ = run_capture(capsys, ["betti", "--type", "A1", "--n", "3", "--degree", "2"])
    assert code == 0
    assert out.strip() == "3"


def test_type_aliases(capsys):
    code, su_out, _ = run_capture(capsys, ["poincare", "--type", "SU(2)", "--n", "3"])
    assert code == 0
    code, a1_out, _ = run_capture(capsys, ["poincare", "--type", "a1", "--n", "3"])
    assert code == 0
    assert su_out == a1_out


def test_json_document_structure(capsys):
    code, out, _ = run_capture(
        capsys, ["poincare", "--type", "A1", "--n", "2", "--format", "json"]
    )
    assert code == 0
    doc = json.loads(out)
    assert list(doc) == ["schema_version", "query", "result", "provenance"]
    assert doc["query"]["command"] == "poincare"
    assert doc["query"]["type"] == "A1"
    assert doc["query"]["n"] == 2
    assert doc["result"]["coefficients"] == ["1", "0", "1", "2"]
    assert doc["result"]["total_dimension"] == "4"
    assert doc["provenance"]["engine"] == "commvar"


def test_json_round_trip_byte_identical(capsys):
    for argv in (
        ["poincare", "--type", "B2", "--n", "2", "--format", "json"],
        ["equivariant", "--type", "A2", "--n", "1", "--truncate", "10", "--format", "json"],
        ["classes", "--type", "D4", "--format", "json"],
        ["char-table", "--m", "4", "--format", "json"],
        ["char-poly", "--type", "A3", "--n", "2", "--format", "json"],
        ["torsion-primes", "--type", "B3", "--format", "json"],
        ["betti", "--type", "A1", "--n", "3", "--degree", "3", "--format", "json"],
    ):
        code, out, _ = run_capture(capsys, argv)
        assert code == 0
        text = out.rstrip("\n")
        assert json.dumps(json.loads(text), indent=2) == text, argv


def test_equivariant_plain(capsys):
    code, out, _ = run_capture(
        capsys, ["equivariant", "--type", "A1", "--n", "1", "--truncate", "8"]
    )
    assert code == 0
    assert "coefficients through degree 8: [1, 0, 0, 1, 1, 0, 0, 1, 1]" in out
    assert "(1 - t^4)" in out


def test_classes_plain(capsys):
    code, out, _ = run_capture(capsys, ["classes", "--type", "B2"])
    assert code == 0
    assert "order 8" in out
    assert out.count("det(1 - s w)") == 5


def test_char_table_latex(capsys):
    code, out, _ = run_capture(capsys, ["char-table", "--m", "3", "--format", "latex"])
    assert code == 0
    assert "\\begin{tabular}{c|ccc}" in out
    assert " & (1) & (12) & (123)\\\\" in out
    assert "$\\chi_3$ & 2 & 0 & -1 \\\\" in out


def test_char_poly_plain(capsys):
    code, out, _ = run_capture(capsys, ["char-poly", "--type", "A3", "--n", "2"])
    assert code == 0
    assert (
        "<chi_1, (chi_1 + chi_4*t + chi_5*t^2 + chi_2*t^3)^2"
        " * (chi_1 + chi_4*t^2 + (chi_3 + chi_4)*t^4 + (chi_4 + chi_5)*t^6"
        " + (chi_3 + chi_5)*t^8 + chi_5*t^10 + chi_2*t^12)>" in out
    )


def test_char_poly_latex(capsys):
    code, out, _ = run_capture(
        capsys, ["char-poly", "--type", "A2", "--n", "3", "--format", "latex"]
    )
    assert code == 0
    assert (
        "\\langle \\chi_1, (\\chi_1 + \\chi_3 t + \\chi_2 t^{2})^{3}"
        " (\\chi_1 + \\chi_3 t^{2} + \\chi_3 t^{4} + \\chi_2 t^{6}) \\rangle" in out
    )


def test_torsion_primes_plain(capsys):
    code, out, _ = run_capture(capsys, ["torsion-primes", "--type", "B3"])
    assert code == 0
    assert out.strip() == "2 3"


def test_verify_single(capsys):
    code, out, _ = run_capture(capsys, ["verify", "--type", "A2", "--n", "3"])
    assert code == 0
    lines = [l for l in out.splitlines() if l.startswith("ok")]
    assert len(lines) >= 10
    assert "all checks passed" in out


def test_verify_all(capsys):
    code, out, _ = run_capture(capsys, ["verify", "--all"])
    assert code == 0
    assert "all checks passed" in out
    assert "FAIL" not in out


def test_verify_requires_type(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["verify"])
    assert exc.value.code == 2


def test_malformed_type_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["poincare", "--type", "Q7", "--n", "1"])
    assert exc.value.code == 2
    assert "SU(m)" in capsys.readouterr().err


def test_missing_subcommand_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        run([])
    assert exc.value.code == 2


def test_engine_domain_error_exit_code(capsys):
    code, _, err = run_capture(capsys, ["poincare", "--type", "A1", "--n", "-3"])
    assert code == 2
    assert "non-negative" in err


def test_char_poly_rejects_bcd(capsys):
    code, _, err = run_capture(capsys, ["char-poly", "--type", "B2", "--n", "1"])
    assert code == 2
    assert "unsupported family" in err
