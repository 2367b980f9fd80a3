import json

import pytest

from openxxz.main import EXIT_CONFIG, EXIT_OK, build_arg_parser, main


def test_invalid_N_exits_with_config_error(capsys):
    assert main(["verify-axioms", "--N", "0"]) == EXIT_CONFIG
    assert "N must lie in [1, 6]" in capsys.readouterr().err


def test_unknown_precision_rejected_by_parser():
    with pytest.raises(SystemExit) as err:
        build_arg_parser().parse_args(["solve", "--precision", "quad"])
    assert err.value.code == 2


def test_verify_axioms_report(tmp_path, capsys):
    out = tmp_path / "axioms.json"
    assert main(["verify-axioms", "--N", "3", "--seed", "7", "--out", str(out)]) == EXIT_OK

    report = json.loads(out.read_text())
    assert report["schema_version"] == 1
    assert report["passed"] is True
    assert len({c["family"] for c in report["checks"]}) == 6
    assert report["params_text"].startswith("N=3\n")
    assert "verdict: PASS" in capsys.readouterr().out


def test_reports_are_byte_identical(tmp_path):
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["solve", "--N", "1", "--seed", "11", "--out", str(first)]) == EXIT_OK
    assert main(["solve", "--N", "1", "--seed", "11", "--out", str(second)]) == EXIT_OK
    assert first.read_bytes() == second.read_bytes()


def test_scalar_product_trials(tmp_path):
    out = tmp_path / "scalar.json"
    code = main(["scalar-product", "--N", "1", "--trials", "5", "--seed", "1", "--out", str(out)])
    report = json.loads(out.read_text())
    assert code == EXIT_OK, [c["name"] for c in report["checks"] if not c["passed"]]
    assert len(report["trial_records"]) == 5
    assert max(r["relative_error"] for r in report["trial_records"]) <= 1e-7


def test_default_output_dir(tmp_path, monkeypatch):
    import openxxz.utils.file_utils as file_utils

    monkeypatch.setattr(file_utils, "OUTPUT_DIR", str(tmp_path))
    assert main(["solve", "--N", "1", "--seed", "11"]) == EXIT_OK
    assert (tmp_path / "solve_N1_seed11_double.json").exists()
