import json

import pytest

from effectlogic.cli import FOUND, OK, USAGE, run_command
from effectlogic.io import load_effect, load_model


@pytest.fixture
def models_dir(fixtures_dir):
    return fixtures_dir / "models"


def test_validate(models_dir, capsys):
    assert run_command(["validate", str(models_dir / "c4.ea.json")]) == OK
    assert "E1-E4: pass; basic laws: pass" in capsys.readouterr().out


def test_validate_broken(tmp_path, models_dir):
    doc = json.loads((models_dir / "c3.ea.json").read_text())
    doc["plus"][1][0] = 0
    bad = tmp_path / "bad.ea.json"
    bad.write_text(json.dumps(doc))
    assert run_command(["validate", str(bad)]) == FOUND


def test_usage_errors(tmp_path, capsys):
    assert run_command(["validate", str(tmp_path / "missing.ea.json")]) == USAGE
    (tmp_path / "junk.ea.json").write_text("{")
    assert run_command(["validate", str(tmp_path / "junk.ea.json")]) == USAGE
    assert run_command(["nope"]) == USAGE
    assert run_command(["prove", "--system", "A", "--goal", "p ->"]) == USAGE


def test_transform_round_trip(tmp_path, models_dir):
    imp = tmp_path / "hs.imp.json"
    back = tmp_path / "hs.ea.json"
    assert run_command(["transform", "--to", "implication", str(models_dir / "hs.ea.json"), "--out", str(imp)]) == OK
    assert run_command(["transform", "--to", "effect", str(imp), "--out", str(back)]) == OK
    assert load_effect(back) == load_effect(models_dir / "hs.ea.json")
    assert run_command(["roundtrip", str(imp)]) == OK


def test_imp_on_non_lattice(models_dir, capsys):
    assert run_command(["imp", "--kind", "natural", str(models_dir / "twin_atoms.ea.json")]) == FOUND
    assert run_command(["imp", "--kind", "set", str(models_dir / "twin_atoms.ea.json")]) == OK


def test_imp_out_reloads(tmp_path, models_dir):
    out = tmp_path / "b4.imp.json"
    assert run_command(["imp", "--kind", "sasaki", str(models_dir / "b4.ea.json"), "--out", str(out)]) == OK
    T, names = load_model(out)
    assert T.size == 4


def test_check_suite(models_dir):
    lattice = [str(p) for p in sorted(models_dir.glob("*.ea.json")) if "twin" not in p.name]
    assert run_command(["check", "--suite", "th10", "--model", *lattice]) == OK
    assert run_command(["check", "--suite", "th10", "--model", str(models_dir / "twin_atoms.ea.json")]) == FOUND
    assert run_command(["check", "--identity", "x -> y == y -> x", "--model", lattice[0]]) == FOUND


def test_consequence(fixtures_dir, capsys):
    args = ["consequence", "--sigma", str(fixtures_dir / "mp.sigma"), "--models", str(fixtures_dir / "lattice4")]
    assert run_command([*args, "--goal", "q == 1"]) == OK
    assert run_command([*args, "--goal", "p -> 0 == 1"]) == FOUND


def test_check_proof_and_audit(tmp_path, fixtures_dir, capsys):
    assert run_command(["export-corpus", str(tmp_path)]) == OK
    proof = tmp_path / "th9c.prf.json"
    assert run_command(["check-proof", str(proof), "--audit-models", str(fixtures_dir / "lattice4")]) == OK
    assert "Verified" in capsys.readouterr().out
    doc = json.loads(proof.read_text())
    doc["lines"][0]["formula"] = "~(" + doc["lines"][0]["formula"] + ")"
    proof.write_text(json.dumps(doc))
    assert run_command(["check-proof", str(proof)]) == FOUND
    assert "Invalid at line 1" in capsys.readouterr().out


def test_prove(tmp_path, capsys):
    out = tmp_path / "k.prf.json"
    assert run_command(["prove", "--system", "B", "--goal", "p -> 1", "--out", str(out)]) == OK
    assert run_command(["check-proof", str(out)]) == OK
    assert run_command(["prove", "--system", "A", "--goal", "p", "--max-lines", "3", "--max-nodes", "2000"]) == FOUND


def test_enumerate_and_census(tmp_path, capsys):
    assert run_command(["enumerate", "--max-size", "5", "--out", str(tmp_path)]) == OK
    assert len(list(tmp_path.glob("*.ea.json"))) == 1 + 1 + 3 + 4
    assert run_command(["enumerate", "--max-size", "7", "--out", str(tmp_path / "x")]) == USAGE
    assert not (tmp_path / "x").exists()
    out = tmp_path / "census.json"
    assert run_command(["census", "--max-size", "4", "--out", str(out)]) == OK
    assert json.loads(out.read_text())["minimal_non_lattice_size"] == "NotFoundUpToCap"
