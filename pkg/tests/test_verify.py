import json
import math
from collections import Counter

import pytest

from catseries.verify import (
    IdentityCase,
    VerificationReport,
    default_registry,
    emit,
    run,
)


def _case(id="c", lhs=lambda: 1.0, rhs=lambda: 1.0, **kw):
    defaults = dict(
        tags=("s1",),
        lhs_method="lhs",
        rhs_method="rhs",
        params={},
        abs_tol=1e-12,
        rel_tol=1e-12,
    )
    defaults.update(kw)
    return IdentityCase(id=id, lhs=lhs, rhs=rhs, **defaults)


class TestRegistryShape:
    def test_at_least_forty_cases(self):
        assert len(default_registry()) >= 40

    def test_ids_unique(self):
        ids = [c.id for c in default_registry()]
        assert len(ids) == len(set(ids))

    def test_every_tag_covered(self):
        counts = Counter(t for c in default_registry() for t in c.tags)
        for tag in ("s1", "s2", "s3", "s4", "s5", "s6"):
            assert counts[tag] >= 3, tag

    def test_tolerances_positive(self):
        for c in default_registry():
            assert c.abs_tol > 0 and c.rel_tol > 0


class TestRunner:
    def test_empty_registry(self):
        report = run([])
        assert report.summary["total"] == 0
        assert report.summary["fail"] == 0

    def test_zero_tolerance_fails_on_float_noise(self):
        case = _case(
            lhs=lambda: math.sqrt(2.0) * math.sqrt(2.0),
            rhs=lambda: 2.0,
            abs_tol=5e-324,  # smallest positive float: unsatisfiable
            rel_tol=5e-324,
        )
        report = run([case])
        assert report.cases[0].classification == "FAIL"

    def test_crashing_case_is_isolated(self):
        def boom():
            raise RuntimeError("synthetic failure")

        report = run([_case(id="a", lhs=boom), _case(id="b")])
        assert report.cases[0].classification == "FAIL"
        assert "synthetic failure" in report.cases[0].error
        assert report.cases[1].classification == "PASS"

    def test_unproven_failures_become_discrepancies(self):
        case = _case(lhs=lambda: 1.0, rhs=lambda: 2.0, unproven=True)
        report = run([case])
        assert report.cases[0].classification == "PAPER-DISCREPANCY"
        assert report.summary["paper_discrepancy"] == 1
        assert report.summary["fail"] == 0

    def test_skip_reason(self):
        report = run([_case(skip_reason="not built here")])
        assert report.cases[0].classification == "SKIPPED"

    def test_grid_reports_worst_point(self):
        case = _case(
            lhs=lambda: [1.0, 5.0, 3.0],
            rhs=lambda: [1.0, 5.5, 3.0],
            abs_tol=0.1,
            rel_tol=1.0,
        )
        report = run([case])
        res = report.cases[0]
        assert res.points == 3
        assert res.lhs_value == 5.0 and res.rhs_value == 5.5
        assert res.abs_delta == pytest.approx(0.5)
        assert res.classification == "FAIL"

    def test_scaled_tolerance(self):
        case = _case(
            lhs=lambda: [1e9, 1.0],
            rhs=lambda: [1e9 + 0.01, 1.0],
            abs_tol=1e-10,
            rel_tol=1.0,
            scales=lambda: [1e9, 1.0],
        )
        report = run([case])
        assert report.cases[0].classification == "PASS"

    def test_parallel_run_matches_serial(self):
        registry = default_registry()[:8]
        serial = run(registry, parallelism=1)
        parallel = run(registry, parallelism=4)
        assert [c.id for c in serial.cases] == [c.id for c in parallel.cases]
        assert [c.classification for c in serial.cases] == [
            c.classification for c in parallel.cases
        ]

    def test_full_registry_passes(self):
        report = run(default_registry())
        failing = [c.id for c in report.cases if c.classification == "FAIL"]
        assert not failing, failing
        assert report.summary["paper_discrepancy"] == 0


class TestEmit:
    @pytest.fixture()
    def report(self) -> VerificationReport:
        return run([_case(id="one"), _case(id="two", lhs=lambda: [1.0, 2.0], rhs=lambda: [1.0, 2.0])])

    def test_json_roundtrip(self, report):
        parsed = json.loads(emit(report, "json"))
        assert parsed == report.to_json_dict()
        assert parsed["schema_version"] == "1"

    def test_json_deterministic(self, report):
        assert emit(report, "json") == emit(report, "json")

    def test_csv_header_and_rows(self, report):
        lines = emit(report, "csv").splitlines()
        assert lines[0] == "id,lhs,rhs,abs_delta,rel_delta,classification"
        assert len(lines) == 1 + len(report.cases)

    def test_markdown_row_count(self, report):
        lines = [l for l in emit(report, "markdown").splitlines() if l.startswith("|")]
        assert len(lines) == len(report.cases) + 2  # header + separator

    def test_write_to_path(self, report, tmp_path):
        path = tmp_path / "report.json"
        text = emit(report, "json", str(path))
        assert path.read_text(encoding="utf-8") == text

    def test_unknown_format(self, report):
        with pytest.raises(ValueError):
            emit(report, "yaml")

    def test_write_error_carries_path(self, report, tmp_path):
        bad = tmp_path / "missing" / "report.json"
        with pytest.raises(OSError, match="report.json"):
            emit(report, "json", str(bad))
