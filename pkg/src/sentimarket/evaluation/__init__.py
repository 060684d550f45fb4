"""Metrics, walk-forward backtests, and synthetic oracle data."""

from .backtest import MODEL_KINDS, REFIT_MODES, backtest
from .metrics import (
    EvaluationReport,
    build_report,
    direction_labels,
    direction_metrics,
    plot_csv_text,
    relative_error_accuracy,
)
from .synthetic import MIN_LENGTH, SyntheticScenario, generate_synthetic

__all__ = [
    "direction_labels",
    "direction_metrics",
    "relative_error_accuracy",
    "EvaluationReport",
    "build_report",
    "plot_csv_text",
    "backtest",
    "MODEL_KINDS",
    "REFIT_MODES",
    "SyntheticScenario",
    "generate_synthetic",
    "MIN_LENGTH",
]
