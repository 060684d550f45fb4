"""Direction and relative-error metrics for next-day close forecasts."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from datetime import date
from typing import Optional, Sequence

from ..errors import DataError


def direction_labels(values: Sequence[float], previous: Sequence[float]) -> list[bool]:
    """True for up moves; unchanged counts as down."""
    if len(values) != len(previous):
        raise DataError("values and previous-close lists differ in length")
    return [v > p for v, p in zip(values, previous)]


def direction_metrics(
    truth: Sequence[float],
    predicted: Sequence[float],
    previous_close: Sequence[float],
) -> tuple[float, float]:
    """(accuracy, F1 of the up class) of predicted vs actual direction."""
    if not (len(truth) == len(predicted) == len(previous_close)):
        raise DataError("metric inputs differ in length")
    if not truth:
        raise DataError("no rows to score")
    actual = direction_labels(truth, previous_close)
    labeled = direction_labels(predicted, previous_close)

    hits = sum(1 for a, b in zip(actual, labeled) if a == b)
    tp = sum(1 for a, b in zip(actual, labeled) if a and b)
    fp = sum(1 for a, b in zip(actual, labeled) if not a and b)
    fn = sum(1 for a, b in zip(actual, labeled) if a and not b)

    precision = tp / (tp + fp) if tp + fp else 0.0
    recall = tp / (tp + fn) if tp + fn else 0.0
    f1 = (
        2.0 * precision * recall / (precision + recall)
        if precision + recall
        else 0.0
    )
    return hits / len(actual), f1


def relative_error_accuracy(
    truth: Sequence[float],
    predicted: Sequence[float],
    dates: Optional[Sequence[date]] = None,
) -> tuple[float, float]:
    """Mean |(predicted - truth) / truth| and its 1-complement."""
    if len(truth) != len(predicted):
        raise DataError("metric inputs differ in length")
    if not truth:
        raise DataError("no rows to score")
    total = 0.0
    for i, (t, p) in enumerate(zip(truth, predicted)):
        if t == 0.0:
            label = dates[i].isoformat() if dates is not None else f"index {i}"
            raise DataError(f"zero truth value at {label}")
        total += abs((p - t) / t)
    mean_err = total / len(truth)
    return mean_err, 1.0 - mean_err


@dataclass(frozen=True)
class EvaluationReport:
    model: str
    direction_accuracy: float
    f1_up: float
    mean_relative_error: float
    relative_accuracy: float
    rows: tuple[tuple[date, float, float], ...]

    def __post_init__(self):
        if not 0.0 <= self.direction_accuracy <= 1.0:
            raise DataError("direction_accuracy out of [0,1]")
        if not 0.0 <= self.f1_up <= 1.0:
            raise DataError("f1_up out of [0,1]")
        if self.mean_relative_error < 0.0:
            raise DataError("mean_relative_error cannot be negative")
        if self.relative_accuracy > 1.0:
            raise DataError("relative_accuracy cannot exceed 1")
        if not self.rows:
            raise DataError("report needs at least one row")

    def to_json(self) -> str:
        payload = {
            "model": self.model,
            "direction_accuracy": self.direction_accuracy,
            "f1_up": self.f1_up,
            "mean_relative_error": self.mean_relative_error,
            "relative_accuracy": self.relative_accuracy,
            "rows": [
                {"date": d.isoformat(), "truth": t, "predicted": p}
                for d, t, p in self.rows
            ],
        }
        return json.dumps(payload, sort_keys=True)

    def rows_csv_text(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["date", "truth", "predicted"])
        for d, t, p in self.rows:
            writer.writerow([d.isoformat(), repr(t), repr(p)])
        return buf.getvalue()


def build_report(
    model: str, rows: Sequence[tuple[date, float, float]], previous_close: Sequence[float]
) -> EvaluationReport:
    dates = [r[0] for r in rows]
    truth = [r[1] for r in rows]
    predicted = [r[2] for r in rows]
    accuracy, f1 = direction_metrics(truth, predicted, previous_close)
    mean_err, rel_acc = relative_error_accuracy(truth, predicted, dates)
    return EvaluationReport(
        model=model,
        direction_accuracy=accuracy,
        f1_up=f1,
        mean_relative_error=mean_err,
        relative_accuracy=rel_acc,
        rows=tuple(rows),
    )


def plot_csv_text(reports: Sequence[EvaluationReport]) -> str:
    """Merged `date,truth,pred_<model>,...` table for external plotting."""
    if not reports:
        raise DataError("no reports to merge")
    base = reports[0].rows
    for report in reports[1:]:
        if [r[0] for r in report.rows] != [r[0] for r in base]:
            raise DataError("reports cover different dates; cannot merge")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(
        ["date", "truth"] + [f"pred_{report.model}" for report in reports]
    )
    for i, (day, truth, _) in enumerate(base):
        row = [day.isoformat(), repr(truth)]
        row += [repr(report.rows[i][2]) for report in reports]
        writer.writerow(row)
    return buf.getvalue()
