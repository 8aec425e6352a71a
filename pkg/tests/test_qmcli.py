import json
import subprocess
import sys

import pytest

from oqmat.qmcli import CliConfig, main


def run(argv, capsys):
    status = main(argv)
    out = capsys.readouterr()
    return status, out.out.strip(), out.err.strip()


def test_nf_example(capsys):
    status, out, _ = run(["nf", "-n", "2", "X[2,2]*X[1,1]"], capsys)
    assert status == 0
    assert out == "X[1,1]*X[2,2] - (q - q^-1)*X[1,2]*X[2,1]"


def test_minor_and_oracle_agree(capsys):
    _, a, _ = run(["minor", "-n", "2", "[1 2|1 2]"], capsys)
    _, b, _ = run(["minor", "-n", "2", "[1 2|1 2]", "--oracle"], capsys)
    assert a == b == "X[1,1]*X[2,2] - q*X[1,2]*X[2,1]"


def test_hspec_count(capsys):
    assert run(["hspec", "count", "-n", "2", "-t", "1"], capsys)[1] == "9"
    assert run(["hspec", "count", "-n", "3", "-t", "2"], capsys)[1] == "Unknown"


def test_bialgebra_commands(capsys):
    assert run(["delta", "-n", "2", "X[1,1]"], capsys)[1] == "X[1,1] (x) X[1,1] + X[1,2] (x) X[2,1]"
    assert run(["tau", "-n", "2", "X[1,2]"], capsys)[1] == "X[2,1]"
    assert run(["counit", "-n", "2", "[1 2|1 2]"], capsys)[1] == "1"


def test_strata_commands(capsys):
    _, out, _ = run(["strata", "list", "-n", "2", "-t", "1"], capsys)
    assert len(out.splitlines()) == 4
    _, out, _ = run(["strata", "kgens", "-n", "2", "--pair", "r=(2);c=(1)"], capsys)
    assert out.splitlines() == ["[1|1]", "[1|2]", "[1 2|1 2]"]
    _, out, _ = run(["strata", "beta", "-n", "2", "--pair", "r=(1);c=(1)", "X[2,2]"], capsys)
    assert out == "Y[2,1] (x) Z[1,2]"


def test_member(tmp_path, capsys):
    gens = tmp_path / "g.txt"
    gens.write_text("X[2,1]\nX[2,2]\n")
    status, out, _ = run(["member", "-n", "2", "--gens", str(gens), "[1 2|1 2]"], capsys)
    assert status == 0 and out == "true"
    status, out, _ = run(["--json", "member", "-n", "2", "--gens", str(gens), "--certificate", "X[2,2]*X[1,1]"], capsys)
    data = json.loads(out)
    assert data["member"] is True and data["certificate"]["terms"]
    assert run(["member", "-n", "2", "--gens", str(gens), "X[1,1]"], capsys)[1] == "false"


def test_json_is_canonical(capsys):
    _, out, _ = run(["nf", "-n", "2", "X[1,1]", "--json"], capsys)
    data = json.loads(out)
    assert out == json.dumps(data, sort_keys=True, indent=2)
    assert data["result"] == "X[1,1]"


def test_verify_exit_codes(capsys):
    status, out, _ = run(["verify", "S8", "-n", "3"], capsys)
    assert status == 0 and "PASS" in out and "10 cases" in out
    status, _, err = run(["verify", "S42"], capsys)
    assert status == 3 and "unknown-suite" in err


@pytest.mark.parametrize(
    "argv, status, code",
    [
        (["nf", "-n", "2", "X[1,1] +"], 2, "parse-error"),
        (["nf", "-n", "2", "Y[1,1]"], 2, "parse-error"),
        (["nf", "-n", "2", "X[3,3]"], 3, "unknown-generator"),
        (["nf", "X[1,1]"], 2, "usage"),
        (["strata", "list", "-n", "2", "-t", "5"], 2, "usage"),
        (["minor", "-n", "2", "[1 2|1]"], 3, "size-mismatch"),
    ],
)
def test_error_statuses(argv, status, code, capsys):
    got, _, err = run(argv, capsys)
    assert got == status
    assert code in err


def test_json_error_has_position(capsys):
    status, _, err = run(["--json", "nf", "-n", "2", "X[1,1] * "], capsys)
    body = json.loads(err)
    assert status == 2 and body["error"] == "parse-error" and body["position"] == 9


def test_usage_error_from_argparse(capsys):
    assert main(["frobnicate"]) == 2
    capsys.readouterr()


def test_cli_config_invariants():
    assert CliConfig(n=3).check().n == 3
    with pytest.raises(ValueError):
        CliConfig(n=0).check()
    with pytest.raises(ValueError):
        CliConfig(degree_bound=0).check()


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "oqmat", "nf", "-n", "2", "X[2,1]*X[1,1]"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "q^-1*X[1,1]*X[2,1]"


def test_round_trip_through_subcommands(capsys):
    from oqmat.qmatrix import oqm_presentation
    from oqmat.textio import parse_element

    _, out, _ = run(["nf", "-n", "3", "X[3,3]*X[2,2]*X[1,1]"], capsys)
    _, again, _ = run(["nf", "-n", "3", out], capsys)
    assert again == out
    A = oqm_presentation(3)
    assert str(parse_element(out, A)) == out
