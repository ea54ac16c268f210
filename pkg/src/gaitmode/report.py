"""Plot-ready report files for trial and sweep results (CSV / JSON)."""

from __future__ import annotations

import json
import os

import numpy as np

from .metrics import TrialResult, mode_precisions, mode_recalls
from .model import Mode
from .sweep import SweepResult

MODE_NAMES = [m.label for m in (Mode.LEFT, Mode.RIGHT, Mode.DUAL)]


def _trial_summary(res: TrialResult) -> dict:
    return {
        "kind": "trial",
        "accuracy": res.accuracy,
        "accuracy_after_init": res.accuracy_after_init,
        "init_skip_s": res.init_skip,
        "true_transitions": res.true_transitions,
        "predicted_transitions": res.predicted_transitions,
        "confusion": res.confusion.tolist(),
        "modes": MODE_NAMES,
        "recall_per_mode": [None if np.isnan(v) else v for v in mode_recalls(res.confusion)],
        "precision_per_mode": [None if np.isnan(v) else v for v in mode_precisions(res.confusion)],
    }


def _sweep_summary(res: SweepResult) -> dict:
    return {
        "kind": "sweep",
        "snr_levels_db": list(res.snr_levels_db),
        "trials_per_level": res.trials_per_level,
        "mean_accuracy": res.mean_accuracies(),
        "per_level_accuracies": [list(map(float, a)) for a in res.per_level_accuracies],
        "per_level_accuracies_after_init": [
            list(map(float, a)) for a in res.per_level_accuracies_after_init],
        "seeds": list(map(int, res.seeds)),
    }


def emit_report(result, fmt: str, path: str) -> list:
    """Write result files; fmt 'json' writes one file, 'csv' a directory.

    Returns the list of paths written.  I/O errors propagate with the
    offending path in the message.
    """
    if fmt not in ("csv", "json"):
        raise ValueError(f"unknown report format {fmt!r}")
    summary = (_trial_summary(result) if isinstance(result, TrialResult)
               else _sweep_summary(result))
    written = []
    try:
        if fmt == "json":
            with open(path, "w") as fh:
                json.dump(summary, fh, indent=2)
                fh.write("\n")
            return [path]
        os.makedirs(path, exist_ok=True)
        spath = os.path.join(path, "summary.json")
        with open(spath, "w") as fh:
            json.dump(summary, fh, indent=2)
            fh.write("\n")
        written.append(spath)
        if isinstance(result, TrialResult):
            written += _emit_trial_csv(result, path)
        else:
            written += _emit_sweep_csv(result, path)
        return written
    except OSError as exc:
        raise OSError(f"failed writing report to {path!r}: {exc}") from exc


def _emit_trial_csv(res: TrialResult, outdir: str) -> list:
    paths = []
    p = os.path.join(outdir, "confusion.csv")
    with open(p, "w") as fh:
        fh.write("truth\\estimate," + ",".join(MODE_NAMES) + "\n")
        for i, name in enumerate(MODE_NAMES):
            fh.write(name + "," + ",".join(str(int(v)) for v in res.confusion[i]) + "\n")
    paths.append(p)
    if res.t is not None and res.mode_series is not None:
        p = os.path.join(outdir, "series.csv")
        with open(p, "w") as fh:
            cols = ["t", "truth_mode", "estimated_mode"]
            has_belief = res.belief_series is not None
            if has_belief:
                cols += ["p_left", "p_right", "p_dual"]
            fh.write(",".join(cols) + "\n")
            for i in range(len(res.t)):
                row = [repr(float(res.t[i])),
                       Mode(int(res.truth_series[i])).label,
                       Mode(int(res.mode_series[i])).label]
                if has_belief:
                    row += [repr(float(v)) for v in res.belief_series[i]]
                fh.write(",".join(row) + "\n")
        paths.append(p)
    return paths


def _emit_sweep_csv(res: SweepResult, outdir: str) -> list:
    p = os.path.join(outdir, "accuracy_vs_snr.csv")
    with open(p, "w") as fh:
        fh.write("snr_db,trial,seed,accuracy,accuracy_after_init\n")
        i = 0
        for li, level in enumerate(res.snr_levels_db):
            for ti in range(res.trials_per_level):
                fh.write(
                    f"{level},{ti},{res.seeds[i]},"
                    f"{res.per_level_accuracies[li][ti]!r},"
                    f"{res.per_level_accuracies_after_init[li][ti]!r}\n")
                i += 1
    return [p]
