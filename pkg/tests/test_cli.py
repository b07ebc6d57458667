import json
import subprocess
import sys

from charsimple import verify
from charsimple.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_list(capsys):
    code, out, _ = run_cli(capsys, "list")
    assert code == 0
    for sid in verify.SCENARIOS:
        assert sid in out
    code, out, _ = run_cli(capsys, "list", "--format", "json")
    assert [row["scenario"] for row in json.loads(out)] == list(verify.SCENARIOS)


def test_run_all_json(capsys):
    code, out, _ = run_cli(capsys, "run", "all", "--format", "json")
    assert code == 0
    docs = json.loads(out)
    assert [d["scenario"] for d in docs] == verify.scenario_ids(include_optional=False)
    assert all(d["verdict"] == "pass" for d in docs)


def test_unknown_scenario(capsys):
    code, _, err = run_cli(capsys, "run", "nosuch")
    assert code == 2 and "usage" in err and "nosuch" in err


def test_usage_errors(capsys):
    assert run_cli(capsys)[0] == 2
    assert run_cli(capsys, "frobnicate")[0] == 2
    assert run_cli(capsys, "run", "lemma_prime", "--enum-bound", "0")[0] == 2
    assert run_cli(capsys, "run", "lemma_prime", "--enum-bound", "ten")[0] == 2
    assert run_cli(capsys, "run", "lemma_prime", "--bogus")[0] == 2


def test_help(capsys):
    assert run_cli(capsys, "--help")[0] == 0


def test_bound_exit(capsys):
    code, out, err = run_cli(capsys, "run", "m12_lemma", "--enum-bound", "10")
    assert code == 3
    assert "[ERROR]" in out and "bound" in err


def test_missing_data_dir(capsys, tmp_path):
    code, _, err = run_cli(capsys, "run", "qabt_desk", "--data-dir", str(tmp_path / "nope"))
    assert code == 2 and "does not exist" in err


def test_env_data_dir(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("CHARSIMPLE_DATA_DIR", str(tmp_path / "nope"))
    assert run_cli(capsys, "run", "lemma_prime")[0] == 2


def test_empty_data_dir_is_a_failure_not_a_crash(capsys, tmp_path):
    code, out, err = run_cli(capsys, "run", "qabt_desk", "--data-dir", str(tmp_path))
    assert code == 1 and "[ERROR]" in out and "missing data file" in err


def test_text_and_json_agree(capsys):
    code_t, text, _ = run_cli(capsys, "run", "pOmega_arith", "hab_desk", "--q-max", "500")
    code_j, js, _ = run_cli(capsys, "run", "pOmega_arith", "hab_desk", "--q-max", "500", "--format", "json")
    assert code_t == code_j == 0
    for doc in json.loads(js):
        for row in doc["evidence"]:
            line = (
                f"{row['claim']}: computed={json.dumps(row['computed'])} "
                f"expected={json.dumps(row['expected'])} [{row['provenance']}]"
            )
            assert line in text


def test_seed_flag(capsys):
    code, out, _ = run_cli(capsys, "run", "uniform2_desk", "--seed", "3", "--format", "json")
    assert code == 0 and json.loads(out)[0]["seed"] == 3


def test_small_ranges(capsys):
    code, out, _ = run_cli(capsys, "run", "lemma_prime", "--p-max", "10", "--n-max", "5", "--format", "json")
    assert code == 0
    assert "n <= 5" in json.loads(out)[0]["evidence"][0]["claim"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "charsimple", "run", "nosuch"], capture_output=True, text=True)
    assert proc.returncode == 2
