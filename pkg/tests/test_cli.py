import json

import pytest

from cpops import cli
from cpops.cache import cache_lookup, cache_store
from cpops.characters import character_direct
from cpops.patterns import enumerate_patterns, pattern_from_json
from cpops.pops import enumerate_pops, pop_from_json
from cpops.rootsys import DominantWeight


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_dim_example(capsys):
    code, out, _ = run_cli(capsys, "dim", "--rank", "3", "--omegas", "0,0,1")
    assert code == 0
    assert out.strip() == "14"


def test_dim_irreducible_and_check(capsys):
    code, out, _ = run_cli(capsys, "dim", "--omegas", "1,1", "--irreducible",
                           "--check")
    assert code == 0
    assert out.strip() == "16"


def test_char_both_methods_text(capsys):
    code, out, _ = run_cli(capsys, "char", "--rank", "1", "--omegas", "2",
                           "--method", "both", "--format", "text")
    assert code == 0
    assert out.strip() == "e^{2ε1} + (1+q)·1 + e^{-2ε1}"


def test_char_csv_schema(capsys):
    code, out, _ = run_cli(capsys, "char", "--omegas", "0,1", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "grade,a1,a2,mult"
    assert len(lines) == 6


def test_char_json_matches_module(capsys):
    code, out, _ = run_cli(capsys, "char", "--omegas", "1,0", "--format", "json")
    assert code == 0
    blob = json.loads(out)
    assert blob["rank"] == 2
    assert sum(term["mult"] for term in blob["terms"]) == 4


def test_verify_sweep_passes(capsys):
    code, out, _ = run_cli(capsys, "verify", "--rank", "2", "--max-total", "2")
    assert code == 0
    assert "0 failure(s)" in out


def test_verify_single_weight_json(capsys):
    code, out, _ = run_cli(capsys, "verify", "--omegas", "1,0",
                           "--format", "json")
    assert code == 0
    reports = json.loads(out)
    assert len(reports) == 1 and reports[0]["ok"] is True


def test_count_matches_enumeration(capsys):
    code, out, _ = run_cli(capsys, "count", "--omegas", "1,1",
                           "--format", "json")
    assert code == 0
    counts = json.loads(out)
    assert counts["patterns"] == 16
    assert counts["pops"] == 20
    assert counts["pop_formula"] == 20


def test_patterns_stream_parses_back(capsys):
    code, out, _ = run_cli(capsys, "patterns", "--lambdas", "1,0")
    assert code == 0
    parsed = [pattern_from_json(json.loads(line)) for line in out.splitlines()]
    assert parsed == list(enumerate_patterns(DominantWeight.from_lambdas((1, 0))))


def test_pops_stream_parses_back(capsys):
    code, out, _ = run_cli(capsys, "pops", "--omegas", "2")
    assert code == 0
    parsed = [pop_from_json(json.loads(line)) for line in out.splitlines()]
    assert parsed == list(enumerate_pops(DominantWeight.from_omegas((2,))))


def test_monomials_stream(capsys):
    code, out, _ = run_cli(capsys, "monomials", "--omegas", "2")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 4
    assert "x-(1,1~)@t^1" in lines
    assert lines[-1] == "1"


def test_branch_listings(capsys):
    code, out, _ = run_cli(capsys, "branch", "--lambdas", "1,1",
                           "--kind", "filtration")
    assert code == 0
    assert len(out.splitlines()) == 3
    code, out, _ = run_cli(capsys, "branch", "--lambdas", "1,0",
                           "--kind", "shtepin-v", "--format", "json")
    assert code == 0
    assert [json.loads(line) for line in out.splitlines()] == [[0, 0], [1, 0]]
    code, out, _ = run_cli(capsys, "branch", "--lambdas", "1,0",
                           "--kind", "shtepin-l")
    assert code == 0
    assert out.splitlines() == ["[0]", "[1]"]


def test_usage_error_both_weight_forms(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["dim", "--omegas", "1", "--lambdas", "1"])
    assert exc.value.code == 2


def test_usage_error_no_weight(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["dim"])
    assert exc.value.code == 2


def test_usage_error_rank_mismatch(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["dim", "--rank", "3", "--omegas", "1,0"])
    assert exc.value.code == 2


def test_usage_error_unknown_subcommand(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["frobnicate"])
    assert exc.value.code == 2


def test_usage_error_bad_weight(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["dim", "--lambdas", "0,1"])
    assert exc.value.code == 2


def test_cache_round_trip(tmp_path):
    w = DominantWeight.from_omegas((2,))
    ch = character_direct(w)
    cache_store(str(tmp_path), w.rank, w.lam, "direct", ch)
    hit = cache_lookup(str(tmp_path), w.rank, w.lam, "direct")
    assert hit == ch


def test_cache_unknown_key_misses(tmp_path):
    assert cache_lookup(str(tmp_path), 1, (2,), "direct") is None


def test_cache_corrupt_entry_warns_and_misses(tmp_path, capsys):
    w = DominantWeight.from_omegas((2,))
    path = cache_store(str(tmp_path), w.rank, w.lam, "direct",
                       character_direct(w))
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("not json at all")
    assert cache_lookup(str(tmp_path), w.rank, w.lam, "direct") is None
    assert "warning" in capsys.readouterr().err


def test_cache_stale_version_misses(tmp_path, capsys):
    w = DominantWeight.from_omegas((2,))
    path = cache_store(str(tmp_path), w.rank, w.lam, "direct",
                       character_direct(w))
    blob = json.load(open(path))
    blob["version"] = -1
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(blob, fh)
    assert cache_lookup(str(tmp_path), w.rank, w.lam, "direct") is None
    assert "stale" in capsys.readouterr().err


def test_char_cached_output_is_byte_identical(tmp_path, capsys):
    args = ["char", "--omegas", "1,1", "--format", "json",
            "--cache-dir", str(tmp_path), "--verbose"]
    code, first, err1 = run_cli(capsys, *args)
    assert code == 0 and "cache hit" not in err1
    code, second, err2 = run_cli(capsys, *args)
    assert code == 0 and "cache hit" in err2
    assert first == second
