import json
import subprocess
import sys

import pytest

from charband import dk
from charband.cli import golden_outputs, run
from charband.series import BiGradedSeries


@pytest.fixture
def cache_dir(tmp_path, monkeypatch):
    d = tmp_path / "cache"
    monkeypatch.setenv("CHARBAND_CACHE", str(d))
    return d


def invoke(capsys, *args):
    code = run(list(args))
    out, err = capsys.readouterr()
    return code, out, err


def test_lie_table(capsys, cache_dir):
    code, out, _ = invoke(capsys, "lie-table", "--max", "4")
    assert code == 0
    assert out.splitlines()[-1] == "4 : (3,1) + (2,1^2)"


def test_dk_table_row(capsys, cache_dir):
    code, out, _ = invoke(capsys, "dk-table", "--k", "3", "--row", "2,1")
    assert code == 0
    assert out == "(2,1): T^7 s[3] + 3 T^7 s[2,1] + T^7 s[1,1,1]\n"


def test_bk_band_trivial_row(capsys, cache_dir):
    code, out, _ = invoke(capsys, "bk-band", "--r", "4", "--row", "0")
    assert code == 0
    assert "3 t*l + 15 l^2 + 21 t^-1 l^3 + 10 t^-2 l^4 + 4 t^-3 l^5 + 2 t^-4 l^6" in out


def test_json_and_csv(capsys, cache_dir):
    code, out, _ = invoke(capsys, "conf-table", "--k", "3", "--format", "json")
    assert code == 0
    records = json.loads(out)
    assert {"lambda": "(1)", "k": 3, "T_exp": 1, "mu": "(2,1)", "mult": "1"} in records
    code, out, _ = invoke(capsys, "haut", "--format", "csv")
    assert out.splitlines()[0] == "s,variant,lambda,mult,invariants"


def test_other_commands(capsys, cache_dir):
    for args in (["haut"], ["x1", "--parity", "even"], ["fourth-band"], ["lie-table", "--format", "csv"]):
        code, out, _ = invoke(capsys, *args)
        assert code == 0 and out


def test_usage_errors_exit_one(capsys, cache_dir):
    for args in (["bk-band", "--r", "9"], ["dk-table"], ["nonsense"], ["dk-table", "--k", "2", "--row", "1,2"]):
        code, _, err = invoke(capsys, *args)
        assert code == 1
        assert json.loads(err.strip().splitlines()[-1])["error"] == "usage"


def test_consistency_error_exits_three(capsys, cache_dir, monkeypatch):
    bad = BiGradedSeries({2: {((), (2,)): -1}}, trunc=2, wmax=(0, 2))
    monkeypatch.setattr(dk, "gr_f_series", lambda k, s_max, N_max: bad)
    code, _, err = invoke(capsys, "--no-cache", "dk-table", "--k", "2", "--s-max", "0", "--truncation", "2")
    assert code == 3
    assert json.loads(err)["error"] == "consistency"


def test_verification_failure_exits_two(capsys, cache_dir, monkeypatch):
    import charband.cli as cli

    monkeypatch.setattr(cli, "_golden", lambda name: "tampered\n")
    code, out, err = invoke(capsys, "verify", "--max-band", "1", "--max-k", "2")
    assert code == 2
    assert "FAIL golden" in out
    assert json.loads(err)["error"] == "verification"


def test_verify_small(capsys, cache_dir):
    code, out, _ = invoke(capsys, "verify", "--max-band", "1", "--max-k", "3")
    assert code == 0
    assert "bk-band-r4" not in out
    assert "FAIL" not in out


def test_golden_files_match_current_output():
    from importlib import resources

    for name, text in golden_outputs(4).items():
        assert resources.files("charband").joinpath("golden", name).read_text() == text


def test_cold_and_warm_cache_are_identical(capsys, cache_dir):
    args = ["dk-table", "--k", "4", "--s-max", "2", "--truncation", "8"]
    _, cold, _ = invoke(capsys, *args)
    assert any(cache_dir.iterdir())
    _, warm, _ = invoke(capsys, *args)
    assert cold == warm
    _, nocache, _ = invoke(capsys, "--no-cache", *args)
    assert nocache == cold


def test_tampered_cache_recomputes_with_warning(capsys, cache_dir):
    args = ["dk-table", "--k", "3", "--s-max", "2", "--truncation", "7"]
    _, clean, _ = invoke(capsys, *args)
    (record,) = [p for p in cache_dir.iterdir() if p.name.startswith("grF-")]
    record.write_text(record.read_text().replace("1 s", "5 s", 1))
    code, out, err = invoke(capsys, *args)
    assert code == 0
    assert out == clean
    assert "hash check" in err
    code, out, err = invoke(capsys, *args)
    assert "hash check" not in err


def test_no_cache_leaves_directory_alone(capsys, cache_dir):
    invoke(capsys, "--no-cache", "dk-table", "--k", "2")
    assert not cache_dir.exists()


def test_console_script(cache_dir):
    proc = subprocess.run([sys.executable, "-m", "charband.cli", "bk-band", "--r", "7"], capture_output=True, text=True)
    assert proc.returncode == 1
    assert json.loads(proc.stderr)["error"] == "usage"
