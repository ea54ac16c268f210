"""Trial log CSV schema: lossless export/import of frames + ground truth.

One row per tick: t, full truth state q0..q6, measured y0..y4, yd0..yd4,
tau0..tau3, truth mode name.  Floats are written with repr (shortest
round-trip form), so import(export(x)) is bit-exact.  The first line is a
version header.
"""

from __future__ import annotations

import numpy as np

from .errors import SchemaViolation, VersionMismatch
from .model import (ContactModeLabel, FrameSeries, Mode, TrialLog,
                    labels_to_series)

VERSION_HEADER = "# gaitmode-log v1"
COLUMNS = (
    ["t"]
    + [f"q{i}" for i in range(7)]
    + [f"y{i}" for i in range(5)]
    + [f"yd{i}" for i in range(5)]
    + [f"tau{i}" for i in range(4)]
    + ["mode"]
)


def export_log(log: TrialLog, path) -> None:
    truth = labels_to_series(log.labels, log.frames.t)
    f = log.frames
    with open(path, "w") as fh:
        fh.write(VERSION_HEADER + "\n")
        fh.write(",".join(COLUMNS) + "\n")
        for i in range(len(f)):
            vals = [f.t[i], *log.q_truth[i], *f.y[i], *f.ydot[i], *f.tau_mot[i]]
            fh.write(",".join(repr(float(v)) for v in vals))
            fh.write("," + Mode(int(truth[i])).label + "\n")


def import_log(path) -> TrialLog:
    with open(path) as fh:
        header = fh.readline().rstrip("\n")
        if header != VERSION_HEADER:
            raise VersionMismatch(
                f"expected {VERSION_HEADER!r}, found {header!r}")
        cols = fh.readline().rstrip("\n").split(",")
        if cols != COLUMNS:
            missing = [c for c in COLUMNS if c not in cols]
            extra = [c for c in cols if c not in COLUMNS]
            raise SchemaViolation(
                f"column mismatch (missing {missing}, unexpected {extra})",
                line=2)
        rows = []
        modes = []
        for lineno, line in enumerate(fh, start=3):
            line = line.rstrip("\n")
            if not line:
                continue
            parts = line.split(",")
            if len(parts) != len(COLUMNS):
                raise SchemaViolation(
                    f"expected {len(COLUMNS)} fields, found {len(parts)}",
                    line=lineno)
            try:
                rows.append([float(v) for v in parts[:-1]])
                modes.append(Mode.from_name(parts[-1]))
            except (ValueError, KeyError) as exc:
                raise SchemaViolation(str(exc), line=lineno) from exc
    if not rows:
        raise SchemaViolation("log contains no data rows", line=3)
    data = np.array(rows)
    t = data[:, 0]
    q = data[:, 1:8]
    frames = FrameSeries(t, data[:, 8:13], data[:, 13:18], data[:, 18:22])

    labels = []
    dt = t[1] - t[0] if len(t) > 1 else 0.0
    start = t[0]
    for i in range(1, len(t)):
        if modes[i] != modes[i - 1]:
            labels.append(ContactModeLabel(modes[i - 1], start, t[i]))
            start = t[i]
    labels.append(ContactModeLabel(modes[-1], start, t[-1] + dt))
    return TrialLog(frames=frames, clean=frames.copy(), q_truth=q,
                    labels=labels)
