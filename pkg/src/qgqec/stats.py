"""Counts statistics: error rate, mean, population variance, comparisons.

Functions accept a Counts object, a mapping, or an explicit row list of
(outcome, count) pairs.  Row lists may contain duplicate outcome strings;
paper tables are ingested that way verbatim, and the mean deliberately
divides by the number of rows as listed.
"""

from __future__ import annotations

from dataclasses import dataclass

from qgqec.circuits import Counts

Row = tuple[str, int]


def as_rows(c) -> list[Row]:
    if isinstance(c, Counts):
        return sorted(c.counts.items())
    if isinstance(c, dict):
        return sorted((str(k), int(v)) for k, v in c.items())
    rows = [(str(o), int(v)) for o, v in c]
    return rows


@dataclass(frozen=True)
class StatsSummary:
    mean: float
    variance: float
    error_rate_percent: float
    num_outcomes: int
    total_counts: int

    def __post_init__(self):
        if self.variance < 0:
            raise ValueError("variance must be >= 0")
        if not 0.0 <= self.error_rate_percent <= 100.0:
            raise ValueError("error rate must lie in [0, 100]")

    def to_dict(self) -> dict:
        return {
            "mean": self.mean,
            "variance": self.variance,
            "error_rate_percent": self.error_rate_percent,
            "num_outcomes": self.num_outcomes,
            "total_counts": self.total_counts,
        }


def mean_counts(c) -> float:
    """(sum of counts) / (number of listed outcomes)."""
    rows = as_rows(c)
    if not rows:
        raise ValueError("no counts")
    return sum(v for _, v in rows) / len(rows)


def variance_counts(c) -> float:
    """Population variance of the listed counts."""
    rows = as_rows(c)
    if not rows:
        raise ValueError("no counts")
    mu = mean_counts(rows)
    return sum((v - mu) ** 2 for _, v in rows) / len(rows)


def error_rate(c, is_error) -> float:
    """100 x (counts classified as errors) / (all counts).

    is_error is called per row as is_error(outcome, count); the classifier
    must cover every row.
    """
    rows = as_rows(c)
    total = sum(v for _, v in rows)
    if total == 0:
        raise ValueError("zero total counts")
    bad = sum(v for o, v in rows if is_error(o, v))
    return 100.0 * bad / total


def argmax_classifier(c):
    """Row-level classifier: a row is an error iff its count is below the
    maximum count in the table."""
    rows = as_rows(c)
    if not rows:
        raise ValueError("no counts")
    top = max(v for _, v in rows)
    return lambda outcome, count: count < top


def summarize(c, is_error) -> StatsSummary:
    rows = as_rows(c)
    return StatsSummary(
        mean=mean_counts(rows),
        variance=variance_counts(rows),
        error_rate_percent=error_rate(rows, is_error),
        num_outcomes=len(rows),
        total_counts=sum(v for _, v in rows),
    )


@dataclass(frozen=True)
class ComparisonTable:
    """Per-case stats for two families side by side (long format)."""

    rows: tuple[dict, ...]  # keys: case, P, family, mean, variance, error_rate

    def to_csv(self) -> str:
        lines = ["case,P,family,mean,variance,error_rate"]
        for r in self.rows:
            lines.append(
                f"{r['case']},{r['P']},{r['family']},"
                f"{r['mean']!r},{r['variance']!r},{r['error_rate']!r}"
            )
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        header = ("case", "P", "family", "mean", "variance", "error_rate")
        table = [header] + [
            (
                r["case"],
                str(r["P"]),
                r["family"],
                f"{r['mean']:.6g}",
                f"{r['variance']:.6g}",
                f"{r['error_rate']:.6g}",
            )
            for r in self.rows
        ]
        widths = [max(len(row[i]) for row in table) for i in range(len(header))]
        lines = [
            "  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row))
            for row in table
        ]
        return "\n".join(lines) + "\n"


def comparison_table(report_pairs) -> ComparisonTable:
    """Build the side-by-side layout from (qc_report, gt_report) pairs
    aligned by case."""
    pairs = list(report_pairs)
    if not pairs:
        raise ValueError("no report pairs")
    rows = []
    for qc, gt in pairs:
        if qc.case != gt.case:
            raise ValueError(f"mismatched cases: {qc.case} vs {gt.case}")
        for rep in (qc, gt):
            rows.append(
                {
                    "case": rep.case.name,
                    "P": rep.case.capability,
                    "family": rep.family,
                    "mean": rep.stats.mean,
                    "variance": rep.stats.variance,
                    "error_rate": rep.stats.error_rate_percent,
                }
            )
    return ComparisonTable(tuple(rows))
