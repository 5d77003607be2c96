import json
import subprocess
import sys

import pytest

from zetaforest.catalog import builtin_catalog
from zetaforest.cli import main, parse_index
from zetaforest.errors import BadIndex, TerminalNotBlack, TreeSyntaxError
from zetaforest.trees import parse_tree


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


# --- parsing ------------------------------------------------------------------


def test_parse_index():
    assert parse_index("2,1,3") == (2, 1, 3)
    assert parse_index("") == ()
    assert parse_index(" 4 , 5 ") == (4, 5)
    with pytest.raises(BadIndex):
        parse_index("0,1")
    with pytest.raises(BadIndex):
        parse_index("2,x")


def test_parse_tree_examples():
    t = parse_tree("b(2:b(1:b()))")
    assert t.key == "b(2:b(1:b()))"
    assert parse_tree("b()").key == "b()"
    assert parse_tree(" b( 1:b() , 0:w( 1:b(),2:b() ) ) ").key == "b(0:w(1:b(),2:b()),1:b())"


def test_parse_tree_errors():
    with pytest.raises(TerminalNotBlack):
        parse_tree("b(1:w())")
    with pytest.raises(TreeSyntaxError) as err:
        parse_tree("b(1:q())")
    assert "position" in str(err.value)
    with pytest.raises(TreeSyntaxError):
        parse_tree("b(1:b()")
    with pytest.raises(TreeSyntaxError):
        parse_tree("b()b()")


def test_round_trip_catalog():
    for t in builtin_catalog():
        assert parse_tree(t.key).key == t.key


# --- subcommands ----------------------------------------------------------------


def test_w_command(capsys):
    code, out, _ = run_cli(capsys, "w", "--tree", "b(2:b(1:b()))")
    assert code == 0
    assert out == "yyx\n"


def test_zeta_command(capsys):
    code, out, _ = run_cli(capsys, "zeta", "--index", "1", "-M", "3")
    assert code == 0
    assert out == "3/2\n"


def test_zeta_json(capsys):
    code, out, _ = run_cli(capsys, "zeta", "--index", "2", "-M", "4", "--json")
    assert json.loads(out) == {"value": "49/36"}


def test_phi_command(capsys):
    code, out, _ = run_cli(capsys, "phi", "--index", "2")
    assert code == 0
    assert out == "2*yx\n"


def test_phi_hat_command(capsys):
    code, out, _ = run_cli(capsys, "phi-hat", "--index", "1", "--t-order", "3")
    assert out == "0 + -yx*t + -yxx*t^2 + O(t^3)\n"


def test_phi_hat_json_schema(capsys):
    code, out, _ = run_cli(capsys, "phi-hat", "--index", "1", "--t-order", "2", "--json")
    obj = json.loads(out)
    assert obj["t_order"] == 2
    assert obj["coeffs"][0] == {"terms": []}
    assert obj["coeffs"][1] == {"terms": [{"coeff": "-1", "word": "yx"}]}


def test_harvest_command(capsys):
    code, out, _ = run_cli(capsys, "harvest", "--tree", "b(1:b(1:b(),1:b()))")
    assert code == 0
    assert out == "b(1:b(0:w(1:b(),1:b())))\n"


def test_cap_phi_command(capsys):
    # odd edge index: the two re-rootings cancel on the same canonical key
    code, out, _ = run_cli(capsys, "cap-phi", "--tree", "b(1:b())")
    assert code == 0
    assert out == "0\n"
    code, out, _ = run_cli(capsys, "cap-phi", "--tree", "b(2:b())")
    assert out == "2*b(2:b())\n"


def test_cap_phi_hat_json(capsys):
    code, out, _ = run_cli(capsys, "cap-phi-hat", "--tree", "b()", "--t-order", "2", "--json")
    obj = json.loads(out)
    assert obj["t_order"] == 2
    assert obj["coeffs"][0]["terms"][0]["coeff"] == "1"
    assert obj["coeffs"][0]["terms"][0]["tree"] == {"color": "b", "edges": []}


def test_zeta_shat_command(capsys):
    code, out, _ = run_cli(
        capsys, "zeta-shat", "--tree", "b(1:b())", "-M", "3", "--t-order", "3"
    )
    assert out == "0 + -5/4*t + -9/8*t^2 + O(t^3)\n"


def test_zeta_tree_command(capsys):
    code, out, _ = run_cli(capsys, "zeta-tree", "--tree", "b(0:w(1:b(),1:b()))", "-M", "3")
    assert out == "1\n"


def test_input_error_exit_code(capsys):
    code, _, err = run_cli(capsys, "zeta", "--index", "0,1", "-M", "3")
    assert code == 2
    assert "error" in err
    code, _, err = run_cli(capsys, "w", "--tree", "b(1:w())")
    assert code == 2
    code, _, err = run_cli(capsys, "w", "--tree", "b(1:b(),1:b())")
    assert code == 2  # not harvestable


def test_unknown_suite_exit_code(capsys):
    code, _, err = run_cli(capsys, "verify", "--suite", "nope")
    assert code == 2
    assert "unknown suite" in err


def test_verify_failure_exit_code(capsys, monkeypatch):
    from zetaforest import cli as cli_mod
    from zetaforest.verify import Failure, Report

    def fake_run_suite(name, cfg):
        return Report(
            suite=name,
            config={"t_order": cfg.t_order},
            cases=1,
            failures=[Failure("index=9", "lhs=0 rhs=1")],
        )

    monkeypatch.setattr(cli_mod, "run_suite", fake_run_suite)
    code, out, _ = run_cli(capsys, "verify", "--suite", "btt")
    assert code == 1
    assert "FAIL index=9 :: lhs=0 rhs=1" in out
    assert out.endswith("status: fail\n")


def test_verify_vanish(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "vanish", "--t-order", "3")
    assert code == 0
    assert "failures: 0" in out
    assert out.endswith("status: ok\n")


def test_verify_json_schema(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--suite", "t-btt", "--t-order", "3", "--weight-max", "3", "--json"
    )
    obj = json.loads(out)
    assert code == 0
    assert obj["ok"] is True
    assert obj["failures"] == []
    assert obj["suite"] == "t-btt"
    assert obj["cases"] > 0


def test_determinism(capsys):
    args = ("verify", "--suite", "algebra", "--weight-max", "3", "-M", "5",
            "--count", "20", "--seed", "3")
    code1, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    assert (code1, out1) == (code2, out2)


def test_env_var_t_order(capsys, monkeypatch):
    monkeypatch.setenv("ZF_T_ORDER", "2")
    code, out, _ = run_cli(capsys, "phi-hat", "--index", "1")
    assert out.endswith("O(t^2)\n")
    monkeypatch.setenv("ZF_T_ORDER", "zzz")
    code, _, err = run_cli(capsys, "phi-hat", "--index", "1")
    assert code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "zetaforest", "zeta", "--index", "1,2", "-M", "5"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.endswith("\n")
