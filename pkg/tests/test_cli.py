import json

from sgk import cli

from conftest import GOLDEN


def run_cli(args):
    try:
        return cli.main(list(args))
    except SystemExit as exc:
        return exc.code


def test_validate_good_file(capsys):
    code = run_cli(["validate", str(GOLDEN / "fig_tauoflength4.json")])
    assert code == 0


def test_validate_mutant_fails(capsys):
    code = run_cli(["validate", str(GOLDEN / "mutant_01_label_swap.json")])
    assert code == 1


def test_validate_missing_file():
    code = run_cli(["validate", "/nonexistent/graph.json"])
    assert code == 2


def test_faces_json_output(capsys):
    code = run_cli(["--json", "faces", str(GOLDEN / "fig_tauoflength4.json")])
    assert code == 0
    out = json.loads(capsys.readouterr().out)
    assert out["genus"] == 0


def test_cycles_output(capsys):
    code = run_cli(["--json", "cycles", str(GOLDEN / "fig_fesc.json")])
    assert code == 0
    out = json.loads(capsys.readouterr().out)
    assert out["fescs"]


def test_casework_rules_listing(capsys):
    code = run_cli(["casework", "rules"])
    assert code == 0
    out = capsys.readouterr().out
    assert out.count("\n") >= 42


def test_casework_unknown_theorem():
    code = run_cli(["casework", "replay", "--theorem", "bogus"])
    assert code == 2


def test_sfs_excluded(capsys):
    code = run_cli(["sfs", "classify", "--slopes", "-1/2,1/6,2/7"])
    out = capsys.readouterr().out
    assert "Excluded" in out


def test_sfs_candidate(capsys):
    run_cli(["sfs", "classify", "--slopes", "1/2,1/3,1/4"])
    out = capsys.readouterr().out
    assert "Candidate" in out
