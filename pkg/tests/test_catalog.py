import pytest

from polarcheck.catalog import (TABLE1_ROWS, catalog_entries, evaluate_entry,
                                get_entry, run_known_answer_suite,
                                verify_lemma71_obstruction, verify_table1)
from polarcheck.errors import InvalidInputError


class TestTable1:
    @pytest.mark.parametrize("row_id", sorted(TABLE1_ROWS))
    def test_row_passes_at_smallest_parameter(self, row_id, tol):
        result = verify_table1(row_id, tol=tol)
        assert result.passed
        assert result.span_rank == result.dim_l

    @pytest.mark.parametrize("row_id,n", [("sp-su-su", 3),
                                          ("so-so-sp_sp1", 3)])
    def test_parameterized_rows_scale(self, row_id, n, tol):
        assert verify_table1(row_id, n=n, tol=tol).passed

    def test_unknown_row(self, tol):
        with pytest.raises(InvalidInputError):
            verify_table1("nope", tol=tol)

    def test_parameter_below_minimum(self, tol):
        with pytest.raises(InvalidInputError):
            verify_table1("sp-su-su", n=1, tol=tol)

    def test_fixed_rows_take_no_parameter(self, tol):
        with pytest.raises(InvalidInputError):
            verify_table1("spin7-so8", n=3, tol=tol)

    def test_expected_dimensions(self, tol):
        result = verify_table1("spin9-so16", tol=tol)
        assert (result.dim_h1, result.dim_h2, result.dim_l) == (36, 105, 120)
        result = verify_table1("g2-so7-so6", tol=tol)
        assert (result.dim_h1, result.dim_h2, result.dim_l) == (14, 15, 21)


class TestObstruction:
    def test_both_variants(self, tol):
        results = verify_lemma71_obstruction(tol)
        assert {r.variant for r in results} == {"standard", "spin-twisted"}
        for r in results:
            assert r.dim_h == 21
            assert r.dim_l == 28
            assert r.cohomogeneity >= 7
            assert r.passed


class TestCatalog:
    def test_entry_ids_are_unique(self):
        ids = [e.entry_id for e in catalog_entries()]
        assert len(ids) == len(set(ids))
        assert len(ids) == 20

    def test_get_entry(self):
        assert get_entry("conj-su3").kind == "action"
        with pytest.raises(InvalidInputError):
            get_entry("missing")

    def test_negative_control(self, tol):
        result = evaluate_entry(get_entry("negative-su3su3-su4"), tol)
        assert result.passed
        assert result.details["transitive"] is False

    def test_full_suite_passes(self, tol):
        summary = run_known_answer_suite(tol)
        failures = [r.entry_id for r in summary.results if not r.passed]
        assert failures == []
        assert summary.ok
        assert summary.passed == 20

    def test_entry_selection(self, tol):
        summary = run_known_answer_suite(tol, entry_ids={"conj-su3"})
        assert len(summary.results) == 1
        assert summary.results[0].entry_id == "conj-su3"

    def test_suite_under_scaled_form(self, tol):
        for scale in (0.5, 3.0):
            summary = run_known_answer_suite(
                tol, form_scale=scale,
                entry_ids={"conj-su3", "hermann-so3so3-su3",
                           "table1-g2-so7-so6"})
            assert summary.ok
