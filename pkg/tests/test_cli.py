import csv
import json
from pathlib import Path

import pytest

from argfacets import render_framework
from argfacets.cli import main

from oracles import make_ex1, mutual_pairs_af


@pytest.fixture
def ex1_file(tmp_path):
    p = tmp_path / "ex1.apx"
    p.write_text(render_framework(make_ex1(), "apx"))
    return p


@pytest.fixture
def fx_cnf(tmp_path):
    p = tmp_path / "fx.cnf"
    p.write_text("p cnf 1 1\n1 0\n")
    return p


def run(capsys, *argv) -> tuple[int, str]:
    code = main([str(a) for a in argv])
    return code, capsys.readouterr().out


class TestSolve:
    def test_running_example(self, capsys, ex1_file):
        code, out = run(capsys, "solve", ex1_file, "--semantics", "stab")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines == [
            "{b, p, s}",
            "{b, s, t}",
            "{m, p, w}",
            "3 extensions (exhausted)",
        ]

    def test_max_models(self, capsys, ex1_file):
        code, out = run(capsys, "solve", ex1_file, "--semantics", "stab",
                        "--max-models", "1")
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 2
        assert lines[-1] == "1 extensions (not exhausted)"

    def test_translation_instance(self, capsys, tmp_path, fx_cnf):
        code, _ = run(capsys, "gen", "std-translation", "--dimacs", fx_cnf,
                      "--out", tmp_path / "fx.apx")
        assert code == 0
        capsys.readouterr()
        code, out = run(capsys, "solve", tmp_path / "fx.apx", "--semantics", "stab")
        assert code == 0
        assert out.strip().splitlines()[-1] == "2 extensions (exhausted)"

    def test_parse_error_exit_code(self, capsys, tmp_path):
        bad = tmp_path / "bad.apx"
        bad.write_text("arg(a). nonsense")
        code = main(["solve", str(bad)])
        assert code == 2

    def test_usage_error_exit_code(self, capsys, ex1_file):
        assert main(["solve", str(ex1_file), "--semantics", "bogus"]) == 1
        assert main(["solve"]) == 1

    def test_missing_file_is_usage_error(self):
        assert main(["solve", "/nonexistent.apx"]) == 1


class TestFacets:
    def test_unconstrained(self, capsys, ex1_file):
        code, out = run(capsys, "facets", ex1_file, "--semantics", "stab")
        assert code == 0
        lines = out.strip().splitlines()
        assert "facets: b m p s t w" in lines
        assert "count: 6" in lines

    def test_approval(self, capsys, ex1_file):
        code, out = run(capsys, "facets", ex1_file, "--semantics", "stab",
                        "--approve", "s")
        assert code == 0
        assert "facets: p t" in out
        assert "count: 2" in out

    def test_full_determination(self, capsys, ex1_file):
        code, out = run(capsys, "facets", ex1_file, "--semantics", "stab",
                        "--approve", "w")
        assert code == 0
        assert "facets: \n" in out or "facets:\n" in out
        assert "count: 0" in out

    def test_unknown_argument(self, capsys, ex1_file):
        assert main(["facets", str(ex1_file), "--approve", "zzz"]) == 2

    def test_conflicting_literals(self, capsys, ex1_file):
        code = main(["facets", str(ex1_file), "--approve", "s",
                     "--disapprove", "s"])
        assert code == 2


class TestSignificance:
    def test_running_example(self, capsys, ex1_file):
        code, out = run(capsys, "significance", ex1_file, "--semantics", "stab")
        assert code == 0
        rows = [line.split("\t") for line in out.strip().splitlines()]
        assert len(rows) == 12
        assert rows[0] == ["w", "0", "1"]
        scores = {r[2] for r in rows}
        assert scores == {"1", "2/3", "1/3"}
        assert not any(r[0].lstrip("~") == "e" for r in rows)

    def test_empty_table(self, capsys, tmp_path):
        p = tmp_path / "self.apx"
        p.write_text("arg(a). att(a,a).\n")
        code, out = run(capsys, "significance", p, "--semantics", "stab")
        assert code == 0 and out.strip() == ""

    def test_admissible_on_translation(self, capsys, tmp_path, fx_cnf):
        run(capsys, "gen", "std-translation", "--dimacs", fx_cnf,
            "--out", tmp_path / "fx.apx")
        capsys.readouterr()
        code, out = run(capsys, "significance", tmp_path / "fx.apx",
                        "--semantics", "adm")
        assert code == 0
        assert len(out.strip().splitlines()) == 8


class TestGen:
    def test_std_translation_manifest(self, capsys, tmp_path, fx_cnf):
        out_path = tmp_path / "fx.apx"
        code, _ = run(capsys, "gen", "std-translation", "--dimacs", fx_cnf,
                      "--out", out_path)
        assert code == 0
        manifest = json.loads((tmp_path / "fx.apx.manifest.json").read_text())
        assert manifest["satisfiable"] is True
        assert manifest["expected_facets"]["adm"] == 4

    def test_random_reproducible(self, capsys, tmp_path):
        a, b = tmp_path / "a.apx", tmp_path / "b.apx"
        run(capsys, "gen", "random", "--n", 6, "--p", 0.25, "--seed", 7,
            "--out", a)
        run(capsys, "gen", "random", "--n", 6, "--p", 0.25, "--seed", 7,
            "--out", b)
        assert a.read_bytes() == b.read_bytes()
        assert (
            (tmp_path / "a.apx.manifest.json").read_text()
            == (tmp_path / "b.apx.manifest.json").read_text()
        )

    def test_copies(self, capsys, tmp_path, ex1_file):
        out_path = tmp_path / "copies.apx"
        code, _ = run(capsys, "gen", "copies", "--af", ex1_file, "--arg", "w",
                      "--n", 3, "--out", out_path)
        assert code == 0
        manifest = json.loads((tmp_path / "copies.apx.manifest.json").read_text())
        assert manifest["n_arguments"] == 9

    def test_satunsat(self, capsys, tmp_path, fx_cnf):
        psi = tmp_path / "psi.cnf"
        psi.write_text("p cnf 1 2\n1 0\n-1 0\n")
        out_path = tmp_path / "su.apx"
        code, _ = run(capsys, "gen", "satunsat", "--dimacs", fx_cnf,
                      "--dimacs2", psi, "--out", out_path)
        assert code == 0
        manifest = json.loads((tmp_path / "su.apx.manifest.json").read_text())
        assert manifest["positive_instance"] is True
        assert manifest["target_facets"] == 9
        assert manifest["predicted_facets"]["stab"] == 9

    def test_qbf(self, capsys, tmp_path):
        q = tmp_path / "q.qdimacs"
        q.write_text("p cnf 2 2\na 1 0\ne 2 0\n1 2 0\n-1 -2 0\n")
        out_path = tmp_path / "q.apx"
        code, _ = run(capsys, "gen", "qbf", "--qdimacs", q, "--out", out_path)
        assert code == 0
        manifest = json.loads((tmp_path / "q.apx.manifest.json").read_text())
        assert manifest["qbf_true"] is True
        assert manifest["phi_is_pref_facet"] is False

    def test_missing_flag_is_usage_error(self, capsys, tmp_path):
        assert main(["gen", "std-translation", "--out",
                     str(tmp_path / "x.apx")]) == 1


class TestBench:
    def _write_corpus(self, tmp_path):
        (tmp_path / "ex1.apx").write_text(render_framework(make_ex1(), "apx"))
        from argfacets import CnfFormula, standard_translation

        fx = standard_translation(CnfFormula(1, ((1,),)))
        fxx = standard_translation(CnfFormula(1, ((1,), (-1,))))
        (tmp_path / "fx.apx").write_text(render_framework(fx, "apx"))
        (tmp_path / "fxx.apx").write_text(render_framework(fxx, "apx"))

    def test_three_instances(self, capsys, tmp_path):
        corpus = tmp_path / "corpus"
        corpus.mkdir()
        self._write_corpus(corpus)
        out_csv = tmp_path / "bench.csv"
        code, _ = run(capsys, "bench", corpus, "--semantics", "stab",
                      "--csv", out_csv)
        assert code == 0
        rows = list(csv.DictReader(out_csv.read_text().splitlines()))
        assert len(rows) == 3
        by_name = {Path(r["instance"]).name: r for r in rows}
        assert by_name["ex1.apx"]["n_facets"] == "6"
        assert by_name["fx.apx"]["n_facets"] == "4"
        assert by_name["fxx.apx"]["n_facets"] == "4"
        assert all(r["status"] == "ok" for r in rows)
        assert all(r["exhausted"] == "true" for r in rows)

    def test_empty_directory(self, capsys, tmp_path):
        empty = tmp_path / "empty"
        empty.mkdir()
        code, out = run(capsys, "bench", empty)
        assert code == 0
        assert out.strip() == (
            "instance,semantics,n_args,n_attacks,n_extensions,exhausted,"
            "n_facets,t_enum_ms,t_facets_ms,status"
        )

    def test_count_columns_reproducible(self, capsys, tmp_path):
        corpus = tmp_path / "corpus"
        corpus.mkdir()
        self._write_corpus(corpus)

        def snapshot():
            code, out = run(capsys, "bench", corpus, "--semantics", "stab",
                            "--semantics", "pref")
            assert code == 0
            return [
                (r["instance"], r["semantics"], r["n_extensions"], r["n_facets"])
                for r in csv.DictReader(out.splitlines())
            ]

        assert snapshot() == snapshot()

    def test_model_cap_marks_not_exhausted(self, capsys, tmp_path):
        corpus = tmp_path / "corpus"
        corpus.mkdir()
        (corpus / "pairs.apx").write_text(
            render_framework(mutual_pairs_af(12), "apx")
        )
        code, out = run(capsys, "bench", corpus, "--semantics", "stab",
                        "--max-models", "100")
        assert code == 0
        row = next(csv.DictReader(out.splitlines()))
        assert row["exhausted"] == "false"
        assert row["n_extensions"] == "100"
        assert row["status"] == "ok"
        assert row["n_facets"] == "24"
