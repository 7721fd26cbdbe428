import json
import re
from pathlib import Path

from camina.catalog import builtin
from camina.chartab import character_table
from camina.cli import run_cli
from camina.reports import (
    ReportRecord,
    cached_character_table,
    chartab_cache_key,
    load_chartab,
    load_records,
    persist_records,
    persist_reports,
    save_chartab,
)
from camina.verify import VerificationReport


class TestReportPersistence:
    def test_round_trip(self, tmp_path):
        records = [
            ReportRecord("S3", 6, 4, 3, "theorem1", "PASS", {"f_holds": True}, "0.1.0", "t0"),
            ReportRecord(
                "S3",
                6,
                1,
                2,
                "lemma_b",
                "VIOLATION",
                {"witness": {"x": 3, "h": 1, "detail": "x*h is not conjugate to x"}},
                "0.1.0",
                "t0",
            ),
        ]
        path = tmp_path / "reports.jsonl"
        persist_records(records, path)
        assert load_records(path) == records
        # witness fields survive verbatim
        reloaded = load_records(path)[1]
        assert reloaded.details["witness"]["x"] == 3
        assert reloaded.details["witness"]["detail"] == "x*h is not conjugate to x"

    def test_empty_list(self, tmp_path):
        path = tmp_path / "empty.jsonl"
        persist_records([], path)
        assert path.read_text() == ""
        assert load_records(path) == []

    def test_one_object_per_line(self, tmp_path):
        reports = [VerificationReport("Q8", 8, 0, 1, "odd_order", "PASS", {"fired": True})]
        path = tmp_path / "r.jsonl"
        persist_reports(reports, path, "0.1.0", "2024-01-01T00:00:00+00:00")
        lines = path.read_text().splitlines()
        assert len(lines) == 1
        obj = json.loads(lines[0])
        assert obj["group_label"] == "Q8"
        assert obj["version"] == "0.1.0"


class TestChartabCache:
    def test_cache_equals_fresh(self, tmp_path, s4):
        fresh = character_table(s4)
        save_chartab(s4, fresh, tmp_path)
        loaded = load_chartab(s4, tmp_path)
        assert loaded is not None
        assert loaded.degree_sequence == fresh.degree_sequence
        for a, b in zip(loaded.irreducibles, fresh.irreducibles):
            assert a.values == b.values

    def test_key_stable_across_regeneration(self):
        a = builtin("S4").group()
        b = builtin("S4").group()
        assert chartab_cache_key(a) == chartab_cache_key(b)

    def test_cached_character_table_writes(self, tmp_path, q8):
        t = cached_character_table(q8, tmp_path)
        files = list(Path(tmp_path).glob("chartab-*.json"))
        assert len(files) == 1
        again = cached_character_table(q8, tmp_path)
        assert again.degree_sequence == t.degree_sequence

    def test_miss_returns_none(self, tmp_path, s3):
        assert load_chartab(s3, tmp_path) is None


class TestCli:
    def test_check_camina(self, capsys):
        rc = run_cli(["check", "--group", "S3", "--subgroup-order", "3", "--condition", "camina"])
        out = capsys.readouterr().out
        assert rc == 0
        assert "holds" in out

    def test_check_subgroup_index(self, capsys):
        rc = run_cli(["check", "--group", "S3", "--subgroup-index", "1", "--condition", "f"])
        out = capsys.readouterr().out
        assert rc == 0
        assert "fails" in out

    def test_check_subgroup_file(self, tmp_path, capsys):
        f = tmp_path / "h.grp"
        f.write_text("degree 3\n(1,2,3)\n")
        rc = run_cli(["check", "--group", "S3", "--subgroup-file", str(f), "--condition", "camina"])
        assert rc == 0
        assert "holds" in capsys.readouterr().out

    def test_chartab_q8(self, tmp_path, capsys):
        rc = run_cli(["--cache-dir", str(tmp_path), "chartab", "--group", "Q8"])
        out = capsys.readouterr().out
        assert rc == 0
        assert out.count("chi_") == 5
        assert "degree sequence: 1,1,1,1,2" in out

    def test_info(self, capsys):
        rc = run_cli(["info", "--group", "Frob(7:3)"])
        out = capsys.readouterr().out
        assert rc == 0
        assert "order 21" in out

    def test_subgroups_listing(self, capsys):
        rc = run_cli(["subgroups", "--group", "S3"])
        out = capsys.readouterr().out
        assert rc == 0
        assert len(out.strip().splitlines()) == 6

    def test_catalog_list(self, capsys):
        rc = run_cli(["catalog", "list"])
        out = capsys.readouterr().out
        assert rc == 0
        assert "S3" in out and "Q8" in out

    def test_search(self, capsys):
        rc = run_cli(["search", "--group", "A4", "--condition", "f"])
        out = capsys.readouterr().out
        assert rc == 0
        assert "4 subgroup(s) satisfy f" in out

    def test_usage_errors(self, capsys):
        assert run_cli(["check", "--group", "NOPE", "--subgroup-order", "2", "--condition", "f"]) == 1
        assert run_cli(["verify", "--claims", "bogus", "--max-order", "6"]) == 1
        assert run_cli(["nonsense"]) == 1
        assert run_cli(["check", "--group", "S3", "--subgroup-order", "5", "--condition", "f"]) == 1

    def test_cap_exit_code(self, capsys):
        rc = run_cli(["--order-cap", "10", "info", "--group", "S4"])
        assert rc == 3

    def test_parse_error_exit_code(self, tmp_path, capsys):
        f = tmp_path / "bad.grp"
        f.write_text("degree 3\n(1,2)(2,3)\n")
        rc = run_cli(["check", "--group", "S3", "--subgroup-file", str(f), "--condition", "f"])
        assert rc == 3

    def test_verify_writes_reports(self, tmp_path, capsys):
        out_file = tmp_path / "reports.jsonl"
        rc = run_cli(
            ["verify", "--catalog", "builtin", "--max-order", "8", "--claims", "theorem1", "--out", str(out_file)]
        )
        assert rc == 0
        assert out_file.exists()
        records = load_records(out_file)
        assert records and all(r.claim == "theorem1" for r in records)
        out = capsys.readouterr().out
        assert "violations: 0" in out

    def test_verify_exit_two_on_violation(self, monkeypatch, capsys):
        import camina.cli as cli_mod

        def fake_sweep_single(label, G, claims, *a, **k):
            return [VerificationReport(label, G.order, 0, 1, claims[0], "VIOLATION", {"x": 1})]

        monkeypatch.setattr(cli_mod, "sweep_single", fake_sweep_single)
        rc = run_cli(["verify", "--catalog", "builtin", "--max-order", "6", "--claims", "theorem1"])
        assert rc == 2

    def test_verify_directory_catalog(self, tmp_path, capsys):
        (tmp_path / "s3.grp").write_text("degree 3\n(1,2)\n(1,2,3)\n")
        (tmp_path / "c4.grp").write_text("degree 4\n(1,2,3,4)\n")
        rc = run_cli(["verify", "--catalog", str(tmp_path), "--max-order", "24", "--claims", "theorem1,odd_order"])
        out = capsys.readouterr().out
        assert rc == 0
        assert "violations: 0" in out

    def test_verify_jobs_determinism(self, tmp_path):
        out1 = tmp_path / "r1.jsonl"
        out2 = tmp_path / "r2.jsonl"
        args = ["verify", "--catalog", "builtin", "--max-order", "12", "--claims", "theorem1,cor2"]
        assert run_cli(args + ["--out", str(out1)]) == 0
        assert run_cli(["--jobs", "2"] + args + ["--out", str(out2)]) == 0
        strip = lambda p: re.sub(r'"timestamp":"[^"]*"', '"timestamp":null', p.read_text())
        assert strip(out1) == strip(out2)
