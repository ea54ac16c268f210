"""Trial scoring: confusion matrix, accuracy, transition counts."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import LengthMismatch
from .model import labels_to_series


@dataclass
class TrialResult:
    confusion: np.ndarray          # (3, 3) rows = truth, cols = estimate
    accuracy: float
    accuracy_after_init: float     # excluding the first init_skip seconds
    true_transitions: int
    predicted_transitions: int
    init_skip: float
    belief_series: np.ndarray = field(repr=False, default=None)
    mode_series: np.ndarray = field(repr=False, default=None)
    truth_series: np.ndarray = field(repr=False, default=None)
    t: np.ndarray = field(repr=False, default=None)


def count_transitions(series) -> int:
    series = np.asarray(series)
    if len(series) < 2:
        return 0
    return int(np.count_nonzero(np.diff(series.astype(np.int64)) != 0))


def confusion_matrix(truth, estimate) -> np.ndarray:
    out = np.zeros((3, 3), dtype=np.int64)
    np.add.at(out, (np.asarray(truth, dtype=np.int64),
                    np.asarray(estimate, dtype=np.int64)), 1)
    return out


def score_trial(mode_series, truth, t=None, init_skip: float = 0.1,
                belief_series=None) -> TrialResult:
    """Score an estimated mode series against ground-truth labels.

    truth may be ContactModeLabel segments (then t is required) or an
    already-sampled per-tick mode array.
    """
    mode_series = np.asarray(mode_series, dtype=np.int64)
    if isinstance(truth, np.ndarray) or (truth and not hasattr(truth[0], "t_start")):
        truth_series = np.asarray(truth, dtype=np.int64)
    else:
        if t is None:
            raise ValueError("t is required to sample truth labels")
        truth_series = labels_to_series(truth, t).astype(np.int64)
    if len(truth_series) != len(mode_series):
        raise LengthMismatch(
            f"estimate has {len(mode_series)} ticks, truth {len(truth_series)}")

    conf = confusion_matrix(truth_series, mode_series)
    accuracy = float(np.trace(conf)) / conf.sum()
    if t is not None and init_skip > 0:
        keep = np.asarray(t) >= (np.asarray(t)[0] + init_skip)
    else:
        keep = np.ones(len(mode_series), dtype=bool)
    late = truth_series[keep] == mode_series[keep]
    accuracy_after_init = float(np.mean(late)) if late.size else float("nan")
    return TrialResult(
        confusion=conf,
        accuracy=accuracy,
        accuracy_after_init=accuracy_after_init,
        true_transitions=count_transitions(truth_series),
        predicted_transitions=count_transitions(mode_series),
        init_skip=init_skip,
        belief_series=belief_series,
        mode_series=mode_series,
        truth_series=truth_series,
        t=None if t is None else np.asarray(t, dtype=float),
    )


def mode_recalls(conf) -> np.ndarray:
    """Per-truth-mode recall (share of each true mode correctly estimated)."""
    conf = np.asarray(conf, dtype=float)
    totals = conf.sum(axis=1)
    with np.errstate(invalid="ignore", divide="ignore"):
        return np.where(totals > 0, np.diag(conf) / totals, np.nan)


def mode_precisions(conf) -> np.ndarray:
    """Per-estimate-mode precision (share of each estimate that is correct)."""
    conf = np.asarray(conf, dtype=float)
    totals = conf.sum(axis=0)
    with np.errstate(invalid="ignore", divide="ignore"):
        return np.where(totals > 0, np.diag(conf) / totals, np.nan)
