import json

import pytest

from powersums.bernoulli import BernoulliCache, bernoulli
from powersums.cli import default_cache_path, main
from powersums.faulhaber import faulhaber_poly, poly_from_json


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestBernoulliCommand:
    def test_plain_table(self, capsys):
        code, out, _ = run(capsys, "bernoulli", "--max", "4", "--cache", "none")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 5
        assert "B_4 = -1/30" in lines
        assert "B_3 = 0" in lines

    def test_json_single_entry(self, capsys):
        code, out, _ = run(
            capsys, "bernoulli", "--max", "0", "--format", "json", "--cache", "none"
        )
        assert code == 0
        assert out.strip() == '[{"n":0,"value":"1/1"}]'

    def test_json_round_trip(self, capsys):
        code, out, _ = run(
            capsys, "bernoulli", "--max", "12", "--format", "json", "--cache", "none"
        )
        entries = json.loads(out)
        assert entries[12] == {"n": 12, "value": "-691/2730"}

    def test_latex(self, capsys):
        code, out, _ = run(
            capsys, "bernoulli", "--max", "22", "--format", "latex", "--cache", "none"
        )
        assert code == 0
        assert "B_{22} = \\frac{854513}{138}" in out.splitlines()
        assert "B_{12} = -\\frac{691}{2730}" in out.splitlines()


class TestFaulhaberCommand:
    def test_factored_single(self, capsys):
        code, out, _ = run(
            capsys, "faulhaber", "3", "--factored", "--cache", "none"
        )
        assert code == 0
        assert out.strip() == "S_n^3 = 1/4 n^2(n+1)^2"

    def test_k0(self, capsys):
        code, out, _ = run(capsys, "faulhaber", "0", "--cache", "none")
        assert code == 0
        assert out.strip() == "S_n^0 = n"

    def test_range_emits_nine_lines(self, capsys):
        code, out, _ = run(
            capsys, "faulhaber", "--range", "13..21", "--cache", "none"
        )
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 9
        for k, line in zip(range(13, 22), lines):
            assert line.startswith(f"S_n^{k} = ")

    def test_range_may_start_at_zero(self, capsys):
        code, out, _ = run(capsys, "faulhaber", "--range", "0..2", "--cache", "none")
        assert code == 0
        assert out.splitlines()[0] == "S_n^0 = n"

    def test_latex_output(self, capsys):
        code, out, _ = run(
            capsys, "faulhaber", "10", "--format", "latex", "--cache", "none"
        )
        assert code == 0
        assert out.strip().startswith("S_n^{10} = \\frac{1}{66} (6n^{11}")

    def test_json_round_trips_through_schema(self, capsys, cache):
        code, out, _ = run(
            capsys, "faulhaber", "7", "--format", "json", "--cache", "none"
        )
        entry = json.loads(out)
        assert entry["k"] == 7
        assert poly_from_json(entry) == faulhaber_poly(7, cache)

    def test_range_json_is_a_list(self, capsys, cache):
        code, out, _ = run(
            capsys, "faulhaber", "--range", "2..4", "--format", "json",
            "--cache", "none",
        )
        entries = json.loads(out)
        assert [e["k"] for e in entries] == [2, 3, 4]
        assert poly_from_json(entries[1]) == faulhaber_poly(3, cache)

    def test_requires_exactly_one_selector(self, capsys):
        code, _, err = run(capsys, "faulhaber", "--cache", "none")
        assert code == 2
        assert "exactly one" in err
        code, _, err = run(
            capsys, "faulhaber", "3", "--range", "5..7", "--cache", "none"
        )
        assert code == 2

    def test_bad_range_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["faulhaber", "--range", "7..3", "--cache", "none"])
        assert excinfo.value.code == 2


class TestSumCommand:
    def test_closed_default(self, capsys):
        code, out, _ = run(capsys, "sum", "10", "2", "--cache", "none")
        assert (code, out.strip()) == (0, "385")

    def test_zero_terms(self, capsys):
        code, out, _ = run(capsys, "sum", "0", "5", "--cache", "none")
        assert (code, out.strip()) == (0, "0")

    def test_naive_path(self, capsys):
        code, out, _ = run(capsys, "sum", "10", "2", "--naive", "--cache", "none")
        assert (code, out.strip()) == (0, "385")

    def test_check_mode_large(self, capsys):
        code, out, _ = run(
            capsys, "sum", "1000000", "20", "--check", "--cache", "none"
        )
        assert code == 0
        value = int(out.strip())
        assert len(str(value)) == 125
        assert value % 10**6 == 300000

    def test_naive_guard_requires_force(self, capsys):
        code, _, err = run(
            capsys, "sum", "100000001", "2", "--naive", "--cache", "none"
        )
        assert code == 2
        assert "--force" in err

    def test_guard_does_not_apply_to_closed(self, capsys):
        code, out, _ = run(capsys, "sum", "100000001", "2", "--cache", "none")
        assert code == 0
        n = 100000001
        assert int(out.strip()) == n * (n + 1) * (2 * n + 1) // 6


class TestVerifyCommand:
    def test_small_grid_passes(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--max-n", "30", "--max-k", "8", "--cache", "none"
        )
        assert code == 0
        assert "all checks passed" in out

    def test_degenerate_grid_passes(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--max-n", "0", "--max-k", "0", "--cache", "none"
        )
        assert code == 0


class TestBenchCommand:
    def test_reports_and_agrees(self, capsys):
        code, out, _ = run(
            capsys, "bench", "--n", "2000", "--k", "5", "--iters", "2",
            "--cache", "none",
        )
        assert code == 0
        assert "values agree: yes" in out
        assert "speedup:" in out

    def test_degenerate_size_still_agrees(self, capsys):
        # at n=1 the closed form has no speed advantage, but it must agree
        code, out, _ = run(
            capsys, "bench", "--n", "1", "--k", "1", "--iters", "1",
            "--cache", "none",
        )
        assert code == 0
        assert "values agree: yes" in out


class TestDivideCommand:
    def test_plain(self, capsys):
        code, out, _ = run(capsys, "divide", "4", "2", "--cache", "none")
        assert code == 0
        assert "divides   : yes" in out
        assert "quotient  : 1/30 (3n^2 + 3n - 1)" in out

    def test_json(self, capsys):
        code, out, _ = run(
            capsys, "divide", "3", "3", "--format", "json", "--cache", "none"
        )
        data = json.loads(out)
        assert data["k"] == 7
        assert data["divides"] is True
        assert data["quotient"]["coeffs"] == ["3", "6", "-1", "-4", "2"]

    def test_invalid_k_fails(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["divide", "2", "0", "--cache", "none"])
        assert excinfo.value.code == 2


class TestSweepCommand:
    def test_pair_divisor_hits(self, capsys):
        code, out, _ = run(
            capsys, "sweep", "--max-n", "6", "--max-k", "6", "--divisor", "p2",
            "--format", "json", "--cache", "none",
        )
        data = json.loads(out)
        assert data["divisor"] == "n(n+1)"
        assert data["hits"] == [
            {"n": 3, "k": 3},
            {"n": 3, "k": 5},
            {"n": 4, "k": 3},
            {"n": 4, "k": 5},
        ]

    def test_triple_divisor_empty(self, capsys):
        code, out, _ = run(
            capsys, "sweep", "--max-n", "6", "--max-k", "8", "--cache", "none"
        )
        assert code == 0
        assert "0 of" in out


class TestCachePersistence:
    def test_written_and_reloaded(self, capsys, tmp_path):
        path = tmp_path / "bern.cache"
        code, _, _ = run(capsys, "bernoulli", "--max", "10", "--cache", str(path))
        assert code == 0
        assert path.exists()
        first = path.read_text()
        # second run extends the table and rewrites the file
        code, _, _ = run(capsys, "bernoulli", "--max", "14", "--cache", str(path))
        assert code == 0
        assert path.read_text().startswith(first)
        loaded = BernoulliCache.load(path)
        assert len(loaded) == 15

    def test_not_rewritten_when_nothing_new(self, capsys, tmp_path):
        path = tmp_path / "bern.cache"
        run(capsys, "bernoulli", "--max", "10", "--cache", str(path))
        stamp = path.stat().st_mtime_ns
        run(capsys, "bernoulli", "--max", "5", "--cache", str(path))
        assert path.stat().st_mtime_ns == stamp

    def test_corrupt_cache_aborts(self, capsys, tmp_path):
        path = tmp_path / "bern.cache"
        run(capsys, "bernoulli", "--max", "10", "--cache", str(path))
        lines = path.read_text().splitlines()
        lines[5] = "5 1/3"
        path.write_text("".join(line + "\n" for line in lines))
        code, _, err = run(
            capsys, "verify", "--max-n", "5", "--max-k", "3", "--cache", str(path)
        )
        assert code == 1
        assert "corrupt" in err

    def test_default_path_honors_xdg(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("XDG_CONFIG_HOME", str(tmp_path))
        assert default_cache_path() == tmp_path / "powersums" / "bernoulli.cache"
        code, _, _ = run(capsys, "bernoulli", "--max", "6")
        assert code == 0
        assert (tmp_path / "powersums" / "bernoulli.cache").exists()

    def test_shared_across_commands(self, capsys, tmp_path, cache):
        path = tmp_path / "bern.cache"
        run(capsys, "faulhaber", "8", "--cache", str(path))
        loaded = BernoulliCache.load(path)
        assert bernoulli(8, loaded) == bernoulli(8, cache)


class TestUsageErrors:
    def test_unknown_command(self):
        with pytest.raises(SystemExit) as excinfo:
            main(["frobnicate"])
        assert excinfo.value.code == 2

    def test_negative_max(self):
        with pytest.raises(SystemExit) as excinfo:
            main(["bernoulli", "--max", "-3", "--cache", "none"])
        assert excinfo.value.code == 2
