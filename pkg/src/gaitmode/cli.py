"""Command line interface.

Subcommands:
  simulate  run the walker and write a trial log (CSV)
  estimate  replay a trial log through the estimator and write a report
  sweep     accuracy-vs-SNR grid over noise realizations
  report    re-render a saved JSON report into CSV tables

Every configuration key is also a flag (`--gait.duration 5`), overriding
the config file given with --config, which overrides built-in defaults.
Exit code 0 on success, 1 on any fatal error.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import __version__
from .backend import backend_name
from .config import DEFAULTS, make_fusion, make_gait, make_model, resolve_config, snr_value
from .errors import GaitmodeError
from .logio import export_log, import_log
from .metrics import TrialResult, score_trial
from .pipeline import run_estimation
from .report import emit_report
from .simulate import simulate_trial
from .sweep import SweepResult, snr_sweep


def _add_config_flags(parser):
    parser.add_argument("--config", metavar="FILE", help="key = value config file")
    for key in DEFAULTS:
        parser.add_argument(f"--{key}", metavar="V", dest=key, default=None)


def _resolve(args) -> dict:
    overrides = {k: v for k, v in vars(args).items() if k in DEFAULTS and v is not None}
    return resolve_config(args.config, overrides)


def _cmd_simulate(args) -> int:
    cfg = _resolve(args)
    log = simulate_trial(make_model(cfg), make_gait(cfg), seed=cfg["noise.seed"],
                         snr_db=snr_value(cfg))
    export_log(log, args.out)
    modes = [lab.mode.label for lab in log.labels]
    print(f"wrote {args.out}: {len(log.frames)} frames, "
          f"{len(log.labels)} contact segments ({'-'.join(modes[:6])}...)")
    return 0


def _cmd_estimate(args) -> int:
    cfg = _resolve(args)
    log = import_log(args.log)
    est = run_estimation(
        log.frames, make_model(cfg), make_fusion(cfg),
        K_O=cfg["observer.k_o"], initial_mode=cfg["fusion.initial_mode"],
        initial_mass=cfg["fusion.initial_mass"],
        velocity_cutoff_hz=cfg["observer.velocity_cutoff_hz"])
    res = score_trial(est.mode_series, log.labels, t=log.frames.t,
                      belief_series=est.belief_series)
    written = emit_report(res, args.format, args.out)
    print(f"accuracy {res.accuracy:.4f} ({res.accuracy_after_init:.4f} after "
          f"{res.init_skip*1e3:.0f} ms), transitions {res.predicted_transitions}"
          f"/{res.true_transitions} predicted/true")
    for p in written:
        print(f"wrote {p}")
    return 0


def _cmd_sweep(args) -> int:
    cfg = _resolve(args)
    res = snr_sweep(
        make_model(cfg), make_gait(cfg), make_fusion(cfg),
        K_O=cfg["observer.k_o"], levels_db=cfg["sweep.levels_db"],
        trials=cfg["sweep.trials"], base_seed=cfg["sweep.base_seed"],
        initial_mode=cfg["fusion.initial_mode"], jobs=cfg["sweep.jobs"])
    written = emit_report(res, args.format, args.out)
    for level, mean in zip(res.snr_levels_db, res.mean_accuracies()):
        print(f"  {level:6.1f} dB: mean accuracy {mean:.4f}")
    for p in written:
        print(f"wrote {p}")
    return 0


def _cmd_report(args) -> int:
    with open(args.input) as fh:
        data = json.load(fh)
    if data.get("kind") == "trial":
        res = TrialResult(
            confusion=np.array(data["confusion"], dtype=np.int64),
            accuracy=data["accuracy"],
            accuracy_after_init=data["accuracy_after_init"],
            true_transitions=data["true_transitions"],
            predicted_transitions=data["predicted_transitions"],
            init_skip=data["init_skip_s"])
    elif data.get("kind") == "sweep":
        res = SweepResult(
            snr_levels_db=data["snr_levels_db"],
            per_level_accuracies=data["per_level_accuracies"],
            trials_per_level=data["trials_per_level"],
            seeds=data["seeds"],
            per_level_accuracies_after_init=data["per_level_accuracies_after_init"])
    else:
        raise GaitmodeError(f"{args.input}: not a gaitmode report")
    for p in emit_report(res, args.format, args.out):
        print(f"wrote {p}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="gaitmode",
        description="contact-mode estimation trials for a planar five-link walker")
    ap.add_argument("--version", action="version",
                    version=f"gaitmode {__version__} ({backend_name()} kernels)")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="simulate a trial and write a log")
    p.add_argument("--out", required=True, metavar="CSV")
    _add_config_flags(p)
    p.set_defaults(fn=_cmd_simulate)

    p = sub.add_parser("estimate", help="replay a log through the estimator")
    p.add_argument("--log", required=True, metavar="CSV")
    p.add_argument("--out", required=True, metavar="PATH")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    _add_config_flags(p)
    p.set_defaults(fn=_cmd_estimate)

    p = sub.add_parser("sweep", help="accuracy vs SNR grid")
    p.add_argument("--out", required=True, metavar="PATH")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    _add_config_flags(p)
    p.set_defaults(fn=_cmd_sweep)

    p = sub.add_parser("report", help="re-render a saved JSON report")
    p.add_argument("--input", required=True, metavar="JSON")
    p.add_argument("--out", required=True, metavar="PATH")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(fn=_cmd_report)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (GaitmodeError, OSError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
