import io

import pytest

from rulerunner.bench import (CSV_HEADER, DEFAULT_PROPERTIES, BenchProperty, fit_linear, load_properties,
                              run_bench, run_once, summarize)
from rulerunner.formatters import BenchCsvFormatter

PHI1, PHI2, PHI3 = DEFAULT_PROPERTIES


class TestBench:

    def test_default_properties(self):
        assert [p.text for p in DEFAULT_PROPERTIES] == ["F a", "G ((a | b) | (c | d))",
                                                        "F ((a & X b) | (c & W d))"]
        assert "a" not in PHI1.alphabet
        assert "a" not in PHI3.alphabet and "c" not in PHI3.alphabet

    @pytest.mark.parametrize("prop", DEFAULT_PROPERTIES)
    def test_properties_run_to_the_end(self, prop):
        record = run_once(prop, 200, 0, seed=11)
        assert record.n_cells == 200
        assert record.total_ms >= record.compile_ms >= 0
        assert record.avg_ms_per_cell == pytest.approx(record.total_ms / 200)

    def test_early_verdict_is_recorded(self):
        prop = BenchProperty("any", "F b", ("b",))
        record = run_once(prop, 100, 0, seed=0, density=1.0)
        assert record.n_cells == 1

    def test_records(self):
        records = run_bench([PHI1], [10, 20], seed=5, reps=2)
        assert [(r.n_cells, r.rep, r.seed) for r in records] == [(10, 0, 5), (10, 1, 6), (20, 0, 5), (20, 1, 6)]

    def test_invalid_arguments(self):
        with pytest.raises(ValueError):
            run_bench([PHI1], [10], reps=0)
        with pytest.raises(ValueError):
            run_bench([PHI1], [0])

    def test_fit_linear(self):
        fit = fit_linear([1, 2, 3, 4], [3, 5, 7, 9])
        assert fit.slope == pytest.approx(2.0)
        assert fit.intercept == pytest.approx(1.0)
        assert fit.r_squared == pytest.approx(1.0)
        with pytest.raises(ValueError):
            fit_linear([1], [1])
        with pytest.raises(ValueError):
            fit_linear([2, 2], [1, 3])

    def test_summarize_skips_single_lengths(self):
        records = run_bench([PHI1, PHI2], [10, 40], reps=1)
        records = [r for r in records if r.formula == "phi1" or r.n_cells == 10]
        assert set(summarize(records)) == {"phi1"}

    def test_csv(self):
        out = io.StringIO()
        BenchCsvFormatter().format(run_bench([PHI1], [5]), out)
        lines = out.getvalue().splitlines()
        assert lines[0] == ",".join(CSV_HEADER)
        assert lines[1].startswith("phi1,5,0,")
        assert lines[1].endswith(",0")

    def test_load_properties(self, tmp_path):
        path = tmp_path / "formulas.cfg"
        path.write_text("; benchmark\nsafety = G (a | b)\nresponse = F (c & X d)\n", encoding="utf-8")
        properties = load_properties(str(path))
        assert [(p.name, p.text) for p in properties] == [("safety", "G (a | b)"), ("response", "F (c & X d)")]
        assert not {"c", "d"} & set(properties[1].alphabet)
