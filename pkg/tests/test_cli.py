import json
import os
import subprocess
import sys

import pytest

from heckeo.cli import build_parser, main

REGEN = os.environ.get("HECKEO_REGEN_GOLDEN") == "1"


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def write_module(tmp_path, capsys, pi, name, kind="proper"):
    path = tmp_path / name
    code, _, _ = run(["hmod", "std", "--pi", pi, "--kind", kind, "--out", str(path)], capsys)
    assert code == 0
    return path


GOLDEN_CASES = {
    "kp_enum": ["kp", "enum", "--beta", "0:1,1:1"],
    "kp_enum_big": ["kp", "enum", "--beta", "-1:1,0:2,1:1"],
    "kp_hasse": ["kp", "hasse", "--beta", "-1:1,0:2,1:1"],
    "kp_hasse_dot": ["kp", "hasse", "--beta", "0:1,1:1", "--format", "dot"],
    "kp_leq": ["kp", "leq", "--p", "0,2", "--q", "0,1;1,2"],
    "kp_orbit": ["kp", "orbit", "--lambda", "2,1,1"],
    "daha_nf": ["daha", "nf", "--n", "2", "--word", "x2 s1"],
    "daha_nf_psi": ["daha", "nf", "--n", "2", "--word", "s1 x1", "--psi"],
    "daha_central": ["daha", "central", "--n", "2", "--poly", "x1+x2"],
    "oo_verma": ["oo", "verma", "--mu", "1,0", "--depth", "2", "--trunc", "1"],
    "hmod_std": ["hmod", "std", "--pi", "0,2;-1,1", "--trunc", "1"],
    "hmod_fingerprint": ["hmod", "fingerprint", "--pi", "0,2;-1,1"],
    "phi_run": ["phi", "run", "--m", "2", "--lambda", "2,1", "--mu", "1,2", "--trunc", "1"],
    "phi_module": ["phi", "module", "--m", "2", "--lambda", "1,1", "--kind", "fast", "--trunc", "1"],
    "phi_verify_all": ["phi", "verify-all", "--m", "2", "--lambda", "1,1", "--trunc", "1"],
}


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_golden_outputs(name, capsys, golden_dir):
    code, out, err = run(GOLDEN_CASES[name], capsys)
    assert code == 0, err
    path = golden_dir / f"cli_{name}.txt"
    if REGEN:
        path.write_text(out)
    assert out == path.read_text()


def test_golden_intertwine(tmp_path, capsys, golden_dir):
    a = write_module(tmp_path, capsys, "0,2;-1,1", "a.json")
    b = write_module(tmp_path, capsys, "0,2;-1,1", "b.json")
    code, out, err = run(["hmod", "intertwine", str(a), str(b)], capsys)
    assert code == 0, err
    path = golden_dir / "cli_hmod_intertwine.txt"
    if REGEN:
        path.write_text(out)
    assert out == path.read_text()


def test_golden_fingerprint_from_file(tmp_path, capsys):
    a = write_module(tmp_path, capsys, "0,2;-1,1", "a.json")
    _, from_file, _ = run(["hmod", "fingerprint", str(a)], capsys)
    _, from_pi, _ = run(["hmod", "fingerprint", "--pi", "0,2;-1,1"], capsys)
    assert from_file == from_pi


def test_documented_examples(capsys):
    code, out, _ = run(["kp", "enum", "--beta", "0:1,1:1"], capsys)
    assert code == 0 and len(json.loads(out)) == 2
    code, out, _ = run(["daha", "central", "--n", "2", "--poly", "x1+x2"], capsys)
    assert code == 0 and json.loads(out)["central"] is True
    code, out, _ = run(["daha", "central", "--n", "2", "--poly", "x1"], capsys)
    assert json.loads(out)["central"] is False
    code, out, _ = run(["phi", "verify-all", "--m", "2", "--lambda", "2,1", "--trunc", "1"], capsys)
    assert code == 0 and json.loads(out)["status"] == "pass"


def test_negative_beta_values_parse(capsys):
    code, out, _ = run(["kp", "enum", "--beta", "-1:1,0:1"], capsys)
    assert code == 0 and len(json.loads(out)) == 2


def all_subcommands():
    parser = build_parser()
    out = []
    groups = next(a for a in parser._actions if a.__class__.__name__ == "_SubParsersAction")
    for gname, gparser in groups.choices.items():
        subs = next(a for a in gparser._actions if a.__class__.__name__ == "_SubParsersAction")
        for sname in subs.choices:
            out.append((gname, sname))
    return out


@pytest.mark.parametrize("cmd", all_subcommands(), ids=lambda c: " ".join(c))
def test_help_contract(cmd, capsys):
    with pytest.raises(SystemExit) as exc:
        main([*cmd, "--help"])
    assert exc.value.code == 0
    out = capsys.readouterr().out
    assert out.startswith("usage:")
    for flag in ("--trunc", "--seed", "--out", "--format"):
        assert flag in out


def test_every_subcommand_has_a_golden():
    covered = {tuple(v[:2]) for v in GOLDEN_CASES.values()} | {("hmod", "intertwine")}
    assert set(all_subcommands()) <= covered


@pytest.mark.parametrize("name", ["kp_hasse", "phi_run", "hmod_std"])
def test_determinism(name, capsys):
    _, first, _ = run(GOLDEN_CASES[name], capsys)
    _, second, _ = run(GOLDEN_CASES[name] + ["--seed", "0"], capsys)
    assert first == second


@pytest.mark.parametrize(
    "argv,kind",
    [
        (["kp", "enum", "--beta", "0:-1"], "KostantError"),
        (["kp", "enum", "--beta", "zz"], "KostantError"),
        (["kp", "orbit", "--lambda", "1,0"], "KostantError"),
        (["daha", "nf", "--n", "2", "--word", "s3"], "DahaError"),
        (["phi", "run", "--m", "2", "--lambda", "2,1", "--mu", "3,0"], "FunctorError"),
        (["hmod", "fingerprint"], "InputError"),
        (["kp", "enum", "--beta", "0:1", "--trunc", "-1"], "InputError"),
    ],
)
def test_invalid_input_exit_code(argv, kind, capsys):
    code, out, err = run(argv, capsys)
    assert code == 2 and out == ""
    payload = json.loads(err)
    assert payload["error"] == kind and payload["message"]


def test_usage_errors_are_json(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["kp", "enum"])
    assert exc.value.code == 2
    assert json.loads(capsys.readouterr().err)["error"] == "usage"


def test_check_failure_exit_code(tmp_path, capsys):
    a = write_module(tmp_path, capsys, "0,2;-1,1", "a.json")
    b = write_module(tmp_path, capsys, "1,3;0,2", "b.json")
    code, out, _ = run(["hmod", "intertwine", str(a), str(b)], capsys)
    assert code == 1
    assert json.loads(out)["found"] is False


def test_out_is_atomic_and_matches_stdout(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run(GOLDEN_CASES["kp_hasse"] + ["--out", str(target)], capsys)
    assert code == 0 and out == ""
    _, direct, _ = run(GOLDEN_CASES["kp_hasse"], capsys)
    assert target.read_text() == direct
    assert [p.name for p in tmp_path.iterdir()] == ["report.json"]


def test_phi_json_side_file(tmp_path, capsys):
    side = tmp_path / "rep.json"
    code, out, _ = run(["phi", "run", "--m", "2", "--lambda", "1,1", "--trunc", "1", "--json", str(side)], capsys)
    assert code == 0
    assert json.loads(side.read_text()) == json.loads(out)


def test_trunc_from_environment(monkeypatch, capsys):
    monkeypatch.setenv("HECKEO_TRUNC", "0")
    _, env_out, _ = run(["hmod", "std", "--pi", "0,2"], capsys)
    monkeypatch.delenv("HECKEO_TRUNC")
    _, flag_out, _ = run(["hmod", "std", "--pi", "0,2", "--trunc", "0"], capsys)
    assert env_out == flag_out


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "heckeo.cli", "kp", "enum", "--beta", "0:2"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == [[[0, 1], [0, 1]]]
