import json

from twistlines.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_check_classical_json(capsys):
    code, out, _ = run(
        capsys, "check", "--classical", "--n", "7", "--k", "3", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["verdict"] is True
    assert payload["flavor"] == "classical"
    assert set(payload) == {
        "case",
        "n",
        "k",
        "flavor",
        "flag_quotients",
        "tev_pieces",
        "psi_degree",
        "verdict",
        "notes",
    }
    assert payload["n"] == 7 and payload["k"] == 3
    assert all(isinstance(t, list) for t in payload["tev_pieces"])


def test_check_exceptional_with_expectation(capsys):
    code, out, _ = run(
        capsys, "check", "--symmetric", "--n", "4", "--k", "2", "--expect-exceptional"
    )
    assert code == 0
    assert "exceptional" in out


def test_check_exceptional_json_is_schema_stable(capsys):
    code, out, _ = run(
        capsys,
        "check",
        "--symmetric",
        "--n",
        "4",
        "--k",
        "2",
        "--expect-exceptional",
        "--format",
        "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert set(payload) == {
        "case",
        "n",
        "k",
        "flavor",
        "flag_quotients",
        "tev_pieces",
        "psi_degree",
        "verdict",
        "notes",
    }
    assert payload["verdict"] is False


def test_check_exceptional_without_expectation_fails(capsys):
    code, _, err = run(capsys, "check", "--symmetric", "--n", "4", "--k", "2")
    assert code == 1
    assert "exceptional" in err


def test_expect_exceptional_on_regular_case_fails(capsys):
    code, _, err = run(
        capsys, "check", "--classical", "--n", "4", "--k", "2", "--expect-exceptional"
    )
    assert code == 1


def test_check_skew(capsys):
    code, out, _ = run(capsys, "check", "--skew", "--n", "6", "--k", "3")
    assert code == 0
    assert "very twisting" in out


def test_check_requires_flavor(capsys):
    code, _, err = run(capsys, "check", "--n", "6", "--k", "3")
    assert code == 2
    assert "usage error" in err


def test_check_rejects_bad_prime(capsys):
    code, _, err = run(
        capsys, "check", "--classical", "--n", "6", "--k", "2", "--field", "prime:9"
    )
    assert code == 2
    code, _, err = run(
        capsys, "check", "--classical", "--n", "16", "--k", "2", "--field", "prime:3"
    )
    assert code == 2
    assert "binomial" in err


def test_check_prime_backend(capsys):
    code, out, _ = run(
        capsys,
        "check",
        "--symmetric",
        "--n",
        "9",
        "--k",
        "3",
        "--field",
        "prime:10007",
        "--format",
        "json",
    )
    assert code == 0
    assert json.loads(out)["verdict"] is True


def test_text_and_json_reports_agree(capsys):
    code, text_out, _ = run(capsys, "check", "--symmetric", "--n", "12", "--k", "3")
    assert code == 0
    code, json_out, _ = run(
        capsys, "check", "--symmetric", "--n", "12", "--k", "3", "--format", "json"
    )
    payload = json.loads(json_out)
    assert f"psi degree: {payload['psi_degree']}" in text_out
    assert str(payload["tev_pieces"]) in text_out.replace("tangent piece types: ", "")


def test_sweep_classical(capsys):
    code, out, _ = run(
        capsys, "sweep", "--classical", "--n-max", "8", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["consistent"] is True
    statuses = {(r["n"], r["k"]): r["status"] for r in payload["rows"]}
    assert statuses[(2, 1)] == "exceptional"
    assert all(
        s == "very-twisting" for key, s in statuses.items() if key != (2, 1)
    )


def test_sweep_all_flavors_text(capsys):
    code, out, _ = run(capsys, "sweep", "--n-max", "6")
    assert code == 0
    assert "consistent=yes" in out


def test_sweep_range_validation(capsys):
    code, _, err = run(capsys, "sweep", "--n-max", "30")
    assert code == 2


def test_ses_single_and_range(capsys):
    code, out, _ = run(capsys, "ses", "--a", "2", "--b", "3")
    assert code == 0
    assert "exact=True" in out
    code, out, _ = run(capsys, "ses", "--max", "4", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["all_exact"] is True
    assert len(payload["pairs"]) == 10


def test_ses_usage(capsys):
    code, _, _ = run(capsys, "ses")
    assert code == 2
    code, _, _ = run(capsys, "ses", "--a", "3", "--b", "2")
    assert code == 2


def test_orbit_commands(capsys):
    for (n, k) in [(5, 2), (6, 2)]:
        code, out, _ = run(capsys, "orbit", "--n", str(n), "--k", str(k))
        assert code == 0
        assert "matches direct construction: True" in out
        assert "(sum 0)" in out


def test_orbit_exceptional_is_usage_error(capsys):
    code, _, err = run(capsys, "orbit", "--n", "2", "--k", "1")
    assert code == 2


def test_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run(
        capsys,
        "check",
        "--classical",
        "--n",
        "5",
        "--k",
        "2",
        "--format",
        "json",
        "--out",
        str(target),
    )
    assert code == 0
    assert out == ""
    payload = json.loads(target.read_text())
    assert payload["verdict"] is True


def test_check_usage_error_on_bad_parameters(capsys):
    code, _, err = run(capsys, "check", "--classical", "--n", "5", "--k", "3")
    assert code == 2
    assert "usage error" in err


def test_sweep_text_rows_carry_quotient_and_tangent_types(capsys):
    code, text_out, _ = run(capsys, "sweep", "--classical", "--n-max", "5")
    assert code == 0
    code, json_out, _ = run(
        capsys, "sweep", "--classical", "--n-max", "5", "--format", "json"
    )
    payload = json.loads(json_out)
    for row in payload["rows"]:
        if row["status"] != "very-twisting":
            continue
        assert f"quots={row['flag_quotients']}" in text_out
        assert f"tev={row['tev_pieces']}" in text_out
        assert f"psi={row['psi_degree']}" in text_out
