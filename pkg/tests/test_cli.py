import json

import numpy as np
import pytest

from polarcheck import cli

REPORT_FIELDS = {"cohomogeneity", "principal_point", "section_basis", "polar",
                 "hyperpolar", "residual_triple", "residual_orth",
                 "residual_abelian", "samples_used", "seed", "tolerances"}


def run(capsys, argv):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestAnalyze:
    def test_json_schema(self, capsys):
        code, out, _ = run(capsys, ["analyze", "--group", "su3", "--subgroup",
                                    "delta(sigma=id)", "--seed", "7",
                                    "--format", "json"])
        assert code == 0
        payload = json.loads(out)
        assert set(payload) == REPORT_FIELDS | {"config"}
        assert payload["cohomogeneity"] == 2
        assert payload["polar"] is True
        assert payload["hyperpolar"] is True
        assert payload["seed"] == 7
        assert len(payload["section_basis"]) == 2
        assert payload["config"] == {"group": "su3",
                                     "subgroup": "delta(sigma=id)"}

    def test_json_output_is_byte_stable(self, capsys):
        argv = ["analyze", "--group", "su3", "--subgroup", "delta(sigma=id)",
                "--seed", "7", "--format", "json"]
        _, first, _ = run(capsys, argv)
        _, second, _ = run(capsys, argv)
        assert first == second

    def test_text_output_leads_with_verdicts(self, capsys):
        code, out, _ = run(capsys, ["analyze", "--group", "su3", "--subgroup",
                                    "product(h1=so3,h2=so3)"])
        assert code == 0
        lines = out.splitlines()
        assert lines[1].startswith("polar: ")
        assert lines[2].startswith("hyperpolar: ")
        assert any(l.startswith("residual_triple") for l in lines)

    def test_seed_environment_fallback(self, capsys, monkeypatch):
        argv = ["analyze", "--group", "su3", "--subgroup", "delta(sigma=id)",
                "--format", "json"]
        monkeypatch.setenv("POLARCHECK_SEED", "7")
        _, from_env, _ = run(capsys, argv)
        monkeypatch.delenv("POLARCHECK_SEED")
        _, explicit, _ = run(capsys, argv + ["--seed", "7"])
        assert from_env == explicit

    def test_out_writes_file(self, capsys, tmp_path):
        target = tmp_path / "report.json"
        code, out, _ = run(capsys, ["analyze", "--group", "su3", "--subgroup",
                                    "delta(sigma=id)", "--format", "json",
                                    "--out", str(target)])
        assert code == 0
        assert out == ""
        assert json.loads(target.read_text())["cohomogeneity"] == 2

    def test_bad_group(self, capsys):
        code, _, err = run(capsys, ["analyze", "--group", "xyz",
                                    "--subgroup", "delta(sigma=id)"])
        assert code == 2
        assert "cannot parse group" in err

    def test_bad_subgroup(self, capsys):
        code, _, err = run(capsys, ["analyze", "--group", "su3",
                                    "--subgroup", "frobnicate(x=1)"])
        assert code == 2

    def test_bad_span_file(self, capsys, tmp_path):
        path = tmp_path / "span.txt"
        path.write_text("this is not a span file\n")
        code, _, err = run(capsys, ["analyze", "--group", "su3", "--subgroup",
                                    f"product(h1=span(file={path}),h2=zero)"])
        assert code == 2
        assert "span file" in err

    def test_non_closed_span_file(self, capsys, tmp_path):
        # two su(2) coordinate directions: a valid file, but not a subalgebra
        from polarcheck.lie_algebras import build_classical
        algebra = build_classical("su", 2)
        lines = ["4"]
        for i in range(2):
            mat = algebra.basis[i]
            lines.append(" ".join(f"{x:.17g}" for x in mat.ravel()))
        path = tmp_path / "span.txt"
        path.write_text("\n".join(lines) + "\n")
        code, _, err = run(capsys, ["analyze", "--group", "su2", "--subgroup",
                                    f"product(h1=span(file={path}),h2=zero)"])
        assert code == 2
        assert "not bracket-closed" in err
        assert "residual" in err

    def test_valid_span_file(self, capsys, tmp_path):
        # the whole of su(2) as an explicit span: a transitive action
        from polarcheck.lie_algebras import build_classical
        algebra = build_classical("su", 2)
        lines = ["4"]
        for mat in algebra.basis:
            lines.append(" ".join(f"{x:.17g}" for x in mat.ravel()))
        path = tmp_path / "span.txt"
        path.write_text("\n".join(lines) + "\n")
        code, out, _ = run(capsys, ["analyze", "--group", "su2", "--subgroup",
                                    f"product(h1=span(file={path}),h2=zero)",
                                    "--format", "json"])
        assert code == 0
        assert json.loads(out)["cohomogeneity"] == 0


class TestCatalogCommands:
    def test_list(self, capsys):
        code, out, _ = run(capsys, ["catalog-list"])
        assert code == 0
        assert "conj-su3" in out
        assert "table1-spin9-so16" in out
        assert len(out.strip().splitlines()) == 20

    def test_list_spelled_out_alias(self, capsys):
        _, dashed, _ = run(capsys, ["catalog-list"])
        _, spaced, _ = run(capsys, ["catalog", "list"])
        assert dashed == spaced

    def test_run_selected_entry(self, capsys):
        code, out, _ = run(capsys, ["catalog-run", "--entry", "conj-su3"])
        assert code == 0
        assert "PASS" in out

    def test_run_unknown_entry(self, capsys):
        code, _, err = run(capsys, ["catalog-run", "--entry", "bogus"])
        assert code == 2

    def test_run_json(self, capsys):
        code, out, _ = run(capsys, ["catalog-run", "--entry", "conj-so5",
                                    "--format", "json"])
        assert code == 0
        payload = json.loads(out)
        assert payload["failed"] == 0
        assert payload["results"][0]["entry_id"] == "conj-so5"


class TestVerifyTable1:
    def test_single_row(self, capsys):
        code, out, _ = run(capsys, ["verify-table1", "--row", "spin7-so8"])
        assert code == 0
        assert out.startswith("PASS")

    def test_row_with_parameter(self, capsys):
        code, out, _ = run(capsys, ["verify-table1", "--row", "sp-su-su",
                                    "--param", "3"])
        assert code == 0

    def test_all_rows_json(self, capsys):
        code, out, _ = run(capsys, ["verify-table1", "--format", "json"])
        assert code == 0
        payload = json.loads(out)
        assert len(payload) == 12
        assert all(r["passed"] for r in payload)

    def test_bad_row_is_invalid_input(self, capsys):
        code, _, err = run(capsys, ["verify-table1", "--row", "nope"])
        assert code == 2
        assert "unknown row" in err
