"""Statistics tests, cross-checked with an independent two-pass oracle."""

import random

import pytest

from qgqec import stats, tables
from qgqec.cases import CaseId
from qgqec.circuits import Counts


def two_pass_mean_var(values):
    mu = sum(values) / len(values)
    var = sum((v - mu) ** 2 for v in values) / len(values)
    return mu, var


def test_mean_examples():
    assert stats.mean_counts(tables.get_table("t1").rows()) == pytest.approx(3.2, abs=1e-12)
    assert stats.mean_counts(tables.get_table("t4").rows()) == pytest.approx(5.1, abs=1e-12)
    assert stats.mean_counts([("x", 7)]) == 7.0
    with pytest.raises(ValueError):
        stats.mean_counts([])


def test_variance_examples():
    assert stats.variance_counts([("a", 4), ("b", 4), ("c", 4)]) == 0.0
    assert stats.variance_counts(tables.get_table("t1").rows()) == pytest.approx(2.76, abs=1e-12)
    assert stats.variance_counts(tables.get_table("t3").rows()) == pytest.approx(4.24, abs=1e-12)
    with pytest.raises(ValueError):
        stats.variance_counts([])


def test_mean_variance_against_oracle_random_vectors():
    rnd = random.Random(12)
    for _ in range(1000):
        values = [rnd.randint(0, 50) for _ in range(rnd.randint(1, 30))]
        rows = [(f"o{i}", v) for i, v in enumerate(values)]
        mu, var = two_pass_mean_var(values)
        assert abs(stats.mean_counts(rows) - mu) < 1e-12
        assert abs(stats.variance_counts(rows) - var) < 1e-12


def test_error_rate_examples():
    rows = [("ok", 3), ("bad", 1)]
    assert stats.error_rate(rows, lambda o, c: o == "bad") == 25.0
    assert stats.error_rate(rows, lambda o, c: False) == 0.0
    t1 = tables.get_table("t1").rows()
    assert stats.error_rate(t1, stats.argmax_classifier(t1)) == pytest.approx(
        100 * (32 - 7) / 32, abs=1e-12
    )
    with pytest.raises(ValueError):
        stats.error_rate([("a", 0)], lambda o, c: True)


def test_argmax_classifier_is_row_level():
    # duplicated outcome with different counts: only the max-count row is correct
    t3 = tables.get_table("t3").rows()
    eta = stats.error_rate(t3, stats.argmax_classifier(t3))
    assert eta == pytest.approx(100 * (36 - 14) / 36, abs=1e-12)


def test_error_rate_invariances():
    rnd = random.Random(4)
    for _ in range(50):
        rows = [(f"o{i}", rnd.randint(0, 9)) for i in range(rnd.randint(2, 12))]
        if sum(v for _, v in rows) == 0:
            continue
        eta = stats.error_rate(rows, stats.argmax_classifier(rows))
        relabeled = [(f"x{i}", v) for i, (_, v) in enumerate(rows)]
        assert stats.error_rate(relabeled, stats.argmax_classifier(relabeled)) == eta
        scaled = [(o, 3 * v) for o, v in rows]
        assert stats.error_rate(scaled, stats.argmax_classifier(scaled)) == eta
        assert stats.mean_counts(scaled) == pytest.approx(3 * stats.mean_counts(rows))
        assert 0.0 <= eta <= 100.0


def test_counts_object_input():
    counts = Counts({"00": 6, "11": 2})
    assert stats.mean_counts(counts) == 4.0
    assert stats.variance_counts(counts) == 4.0
    assert stats.error_rate(counts, lambda o, c: o == "11") == 25.0


def test_summary_validation():
    with pytest.raises(ValueError):
        stats.StatsSummary(1.0, -0.5, 10.0, 2, 10)
    with pytest.raises(ValueError):
        stats.StatsSummary(1.0, 0.5, 120.0, 2, 10)


def _fake_report(case, family, mean, variance, eta):
    from qgqec.experiments import CaseReport

    counts = Counts({"0" * case.m_physical: 10})
    return CaseReport(
        case=case,
        family=family,
        counts=counts,
        corrected_shots=10,
        uncorrected_shots=0,
        stats=stats.StatsSummary(mean, variance, eta, 1, 10),
        error_positions=(),
        seed=1,
    )


def test_comparison_table():
    qc = _fake_report(CaseId.C1, "aqecc", 10.0, 6.0, 77.5)
    gt = _fake_report(CaseId.C1, "qoccc", 10.0, 3.25, 83.75)
    table = stats.comparison_table([(qc, gt)])
    assert len(table.rows) == 2
    csv_text = table.to_csv()
    assert csv_text.splitlines()[0] == "case,P,family,mean,variance,error_rate"
    assert "aqecc" in csv_text and "qoccc" in csv_text
    text = table.to_text()
    assert text.splitlines()[0].startswith("case")

    same = stats.comparison_table([(qc, qc)])
    assert same.rows[0]["mean"] == same.rows[1]["mean"]

    with pytest.raises(ValueError):
        stats.comparison_table([])
    other = _fake_report(CaseId.C2, "qoccc", 1.0, 0.0, 0.0)
    with pytest.raises(ValueError):
        stats.comparison_table([(qc, other)])


def test_reference_tables_ingested():
    ref = tables.reference_for("t5", "GT")
    assert ref == {"P": 1, "mean": 10.0, "variance": 3.25, "error_rate": 83.75}
    ref_qc = tables.reference_for("t5", "QC")
    assert ref_qc["variance"] == 6.0 and ref_qc["error_rate"] == 77.50
    ref_t1 = tables.reference_for("t1")
    assert ref_t1 == {"P": 1, "mean": 3.2, "variance": 1.16, "error_rate": 68.75}
    with pytest.raises(ValueError):
        tables.reference_for("t5")  # needs a column
    with pytest.raises(ValueError):
        tables.get_table("t11")


def test_paper_table_shapes():
    assert len(tables.get_table("t1").rows()) == 10
    assert len(tables.get_table("t6").rows("QC")) == 16
    assert sum(v for _, v in tables.get_table("t5").rows("QC")) == 80
    # the paper's t6 GT column genuinely sums to 81; kept verbatim
    assert sum(v for _, v in tables.get_table("t6").rows("GT")) == 81
    with pytest.raises(ValueError):
        tables.get_table("t5").rows()  # ambiguous column
