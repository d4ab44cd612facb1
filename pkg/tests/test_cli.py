import csv
import io
import json

import pytest

from congruence_lab.cli import (
    SweepConfig,
    expand_grid,
    main,
    run_sweep,
)


def run_cli(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestVerify:
    def test_zhao_instance_matches(self, capsys):
        code, out, _ = run_cli(
            capsys,
            ["verify", "--p", "5", "--r", "1", "--cofactor", "1",
             "--weights", "1,1,1", "--A", "1", "--format", "json"],
        )
        assert code == 0
        row = json.loads(out)[0]
        assert row["lhs"] == row["rhs"] == "3"
        assert row["modulus"] == "5"
        assert row["match"] is True

    def test_prime_square(self, capsys):
        code, _, _ = run_cli(
            capsys,
            ["verify", "--p", "3", "--r", "2", "--cofactor", "1",
             "--weights", "1,1,1", "--A", "1"],
        )
        assert code == 0

    def test_invalid_a_is_usage_error(self, capsys):
        code, _, err = run_cli(
            capsys,
            ["verify", "--p", "5", "--r", "1", "--cofactor", "1",
             "--weights", "1,1,1", "--A", "0"],
        )
        assert code == 1
        assert "error" in err

    def test_out_of_scope_mismatch_exits_2_and_warns(self, capsys):
        # the hand-checked counterexample: n = 10 shares the prime 2 with the
        # weights, lhs = 3 vs rhs = 0
        code, out, err = run_cli(
            capsys,
            ["verify", "--p", "5", "--r", "1", "--cofactor", "2",
             "--weights", "1,1,2", "--A", "2", "--format", "json"],
        )
        assert code == 2
        row = json.loads(out)[0]
        assert (row["lhs"], row["rhs"]) == ("3", "0")
        assert "out of scope" in err and "2" in err

    def test_n_form_accepted_and_validated(self, capsys):
        code, out, _ = run_cli(
            capsys,
            ["verify", "--p", "3", "--n", "45", "--weights", "1,1,1", "--A", "1",
             "--format", "json"],
        )
        assert code == 0
        assert json.loads(out)[0]["r"] == 2  # valuation inferred from n

        code, _, err = run_cli(
            capsys, ["verify", "--p", "3", "--n", "10", "--weights", "1,1,1", "--A", "1"]
        )
        assert code == 1

    def test_missing_flags_is_usage_error(self, capsys):
        code, _, _ = run_cli(capsys, ["verify", "--p", "5", "--weights", "1,1,1", "--A", "1"])
        assert code == 1


class TestSweep:
    ARGS = ["sweep", "--p", "5", "--r", "1", "--cofactors", "1,3",
            "--weights", "1,1,1:1;1,1,2:2"]

    def test_small_grid_json(self, capsys):
        code, out, err = run_cli(capsys, [*self.ARGS, "--format", "json"])
        assert code == 0
        rows = json.loads(out)
        assert len(rows) == 4
        assert all(row["match"] for row in rows)
        assert [tuple(r["a"]) for r in rows] == [(1, 1, 1), (1, 1, 2)] * 2
        assert "4 rows, 0 mismatches" in err

    def test_csv_mirrors_json(self, capsys):
        code, json_out, _ = run_cli(capsys, [*self.ARGS, "--format", "json"])
        assert code == 0
        code, csv_out, _ = run_cli(capsys, [*self.ARGS, "--format", "csv"])
        assert code == 0
        json_rows = json.loads(json_out)
        csv_rows = list(csv.DictReader(io.StringIO(csv_out)))
        assert len(csv_rows) == len(json_rows)
        for jr, cr in zip(json_rows, csv_rows):
            assert list(cr.keys()) == list(jr.keys())
            assert cr["p"] == str(jr["p"])
            assert cr["n"] == str(jr["n"])
            assert cr["a"] == ",".join(str(x) for x in jr["a"])
            assert cr["lhs"] == jr["lhs"] and cr["rhs"] == jr["rhs"]
            assert cr["match"] == ("true" if jr["match"] else "false")

    def test_reruns_identical_apart_from_timing(self, capsys):
        def canonical(text):
            rows = json.loads(text)
            for row in rows:
                row.pop("elapsed_ms")
            return json.dumps(rows)

        _, out1, _ = run_cli(capsys, [*self.ARGS, "--format", "json"])
        _, out2, _ = run_cli(capsys, [*self.ARGS, "--format", "json"])
        assert canonical(out1) == canonical(out2)

    def test_parallel_matches_serial(self, capsys, monkeypatch):
        _, serial, _ = run_cli(capsys, [*self.ARGS, "--format", "json"])
        monkeypatch.setenv("CONGRUENCE_LAB_THREADS", "2")
        _, parallel, _ = run_cli(capsys, [*self.ARGS, "--format", "json"])
        strip = lambda text: [
            {k: v for k, v in row.items() if k != "elapsed_ms"}
            for row in json.loads(text)
        ]
        assert strip(serial) == strip(parallel)

    def test_empty_grid(self, capsys):
        code, out, _ = run_cli(
            capsys,
            ["sweep", "--p", "5", "--r", "1", "--cofactors", "5",
             "--weights", "1,1,1:1", "--format", "csv"],
        )
        assert code == 0  # cofactor 5 shares a factor with p: zero rows
        lines = out.strip().splitlines()
        assert len(lines) == 1  # header row always emitted
        assert lines[0].startswith("p,r,n,a,A,lhs,rhs,modulus,match")

    def test_config_file(self, capsys, tmp_path):
        cfg = {
            "primes": [5],
            "exponents": [1],
            "cofactors": [1],
            "weights": [[1, 1, 1, 1], {"a": [1, 1, 2], "A": 2}],
            "format": "json",
        }
        path = tmp_path / "grid.json"
        path.write_text(json.dumps(cfg))
        code, out, _ = run_cli(capsys, ["sweep", "--config", str(path)])
        assert code == 0
        assert len(json.loads(out)) == 2

    def test_bad_config_rejected(self, capsys, tmp_path):
        path = tmp_path / "grid.json"
        path.write_text(json.dumps({"primez": [5]}))
        code, _, err = run_cli(capsys, ["sweep", "--config", str(path)])
        assert code == 1
        assert "primez" in err

    def test_induction_rows(self, capsys):
        code, out, _ = run_cli(
            capsys,
            ["sweep", "--p", "5", "--r", "1", "--cofactors", "1",
             "--weights", "1,1,1:1", "--qs", "3", "--ss", "1", "--format", "json"],
        )
        assert code == 0
        rows = json.loads(out)
        assert len(rows) == 2
        assert rows[1]["n"] == 15  # the lifted level q * n


class TestLemmas:
    def test_unknown_id(self, capsys):
        code, _, err = run_cli(capsys, ["lemmas", "--id", "nosuch"])
        assert code == 1
        assert "unknown lemma id" in err

    def test_reflection_subset(self, capsys):
        code, out, err = run_cli(
            capsys, ["lemmas", "--id", "reflection", "--N", "3,5", "--format", "json"]
        )
        assert code == 0
        rows = json.loads(out)
        assert len(rows) == 12  # 6 weight sets x 2 levels
        assert all(row["match"] for row in rows)

    def test_arith_prog_restricted(self, capsys):
        code, out, _ = run_cli(
            capsys, ["lemmas", "--id", "arith-prog", "--p", "3", "--r", "1", "--format", "json"]
        )
        assert code == 0
        rows = json.loads(out)
        assert rows and all(row["match"] for row in rows)
        assert {row["params"]["p"] for row in rows} == {3}

    def test_induction_suite_reports_known_counterexamples(self, capsys):
        # the lift identity fails when q divides a weight, so this suite
        # exits 2 and the mismatching rows are exactly the shared-q ones
        code, out, _ = run_cli(capsys, ["lemmas", "--id", "induction", "--format", "json"])
        assert code == 2
        rows = json.loads(out)
        bad = [row for row in rows if not row["match"]]
        assert len(bad) == 4
        for row in bad:
            params = row["params"]
            assert params["a"] == [1, 2, 3] and params["q"] in (2, 3)


class TestBernoulli:
    def test_table(self, capsys):
        code, out, _ = run_cli(capsys, ["bernoulli", "--max-index", "4"])
        assert code == 0
        lines = out.strip().splitlines()
        assert lines == [
            "B_0 = 1",
            "B_1 = -1/2",
            "B_2 = 1/6",
            "B_3 = 0",
            "B_4 = -1/30",
        ]

    def test_reduced_mod_p(self, capsys):
        code, out, _ = run_cli(capsys, ["bernoulli", "--max-index", "2", "--mod-p", "5"])
        assert code == 0
        reduced = [line.split("mod 5: ")[1] for line in out.strip().splitlines()]
        assert reduced == ["1", "2", "1"]

    def test_base_case(self, capsys):
        code, out, _ = run_cli(capsys, ["bernoulli", "--max-index", "0"])
        assert code == 0
        assert out.strip() == "B_0 = 1"

    def test_vsc_column(self, capsys):
        code, out, _ = run_cli(
            capsys, ["bernoulli", "--max-index", "8", "--check-vsc"]
        )
        assert code == 0
        for line in out.strip().splitlines()[2::2]:
            assert line.endswith("vsc: ok")

    def test_negative_index(self, capsys):
        code, _, _ = run_cli(capsys, ["bernoulli", "--max-index", "-1"])
        assert code == 1


class TestGridExpansion:
    def test_filters_apply(self):
        cfg = SweepConfig(primes=[5], exponents=[1], cofactors=[1, 5, 2],
                          weights=[(1, 1, 1, 1), (5, 1, 1, 5)], max_an=3000)
        pts = expand_grid(cfg)
        # cofactor 5 (shares p) and weights containing 5 are skipped
        assert [(p[1], p[3], p[4:7]) for p in pts] == [
            (5, 1, (1, 1, 1)),
            (5, 2, (1, 1, 1)),
        ]

    def test_an_bound(self):
        cfg = SweepConfig(primes=[13], exponents=[2], cofactors=[15],
                          weights=[(1, 1, 1, 1), (1, 2, 3, 12)], max_an=3000)
        pts = expand_grid(cfg)
        assert len(pts) == 1  # 12 * 2535 exceeds the bound

    def test_deterministic_order(self):
        cfg = SweepConfig(primes=[3, 5], exponents=[1], cofactors=[1, 2],
                          weights=[(1, 1, 1, 1)])
        assert expand_grid(cfg) == expand_grid(cfg)

    def test_run_sweep_serial_default(self):
        cfg = SweepConfig(primes=[3], exponents=[1], cofactors=[1],
                          weights=[(1, 1, 1, 1)])
        rows = run_sweep(cfg)
        assert len(rows) == 1 and rows[0]["match"]
