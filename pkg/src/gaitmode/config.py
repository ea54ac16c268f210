"""Plain-text key = value configuration covering every tunable.

Lines are `section.key = value`; `#` starts a comment.  Defaults live
here; a config file overrides defaults and command-line flags override the
file (see cli.py).  Vector values are comma-separated.
"""

from __future__ import annotations

import math

import numpy as np

from .fusion import FusionParams
from .gait import GaitConfig
from .model import Mode, WalkerModel

# key -> (default, parser)
_float = float
_int = int


def _floats(s):
    if isinstance(s, (list, tuple, np.ndarray)):
        return [float(v) for v in s]
    return [float(v) for v in str(s).split(",") if v.strip() != ""]


def _mode(s):
    return s if isinstance(s, Mode) else Mode.from_name(str(s))


def _opt_float(s):
    if s is None:
        return None
    txt = str(s).strip().lower()
    if txt in ("", "none", "inf", "+inf", "infinity"):
        return None
    return float(s)


DEFAULTS = {
    "model.link_masses": ("1,1,1,1,1", _floats),
    "model.link_lengths": ("0.5,0.5,0.5,0.5,0.5", _floats),
    "model.com_offsets": ("0.25,0.25,0.25,0.25,0.25", _floats),
    "model.link_inertias": ("0.0208333333333333,0.0208333333333333,"
                            "0.0208333333333333,0.0208333333333333,"
                            "0.0208333333333333", _floats),
    "model.gravity": (9.81, _float),
    "gait.step_duration": (1.2, _float),
    "gait.dual_fraction": (0.4, _float),
    "gait.step_length": (0.0, _float),
    "gait.apex_height": (0.06, _float),
    "gait.kp": (600.0, _float),
    "gait.kd": (30.0, _float),
    "gait.duration": (5.0, _float),
    "gait.rate": (1000.0, _float),
    "gait.stance_width": (0.26, _float),
    "gait.hip_height": (0.94, _float),
    "gait.shift_fraction": (0.9, _float),
    "gait.settle_time": (0.3, _float),
    "observer.k_o": (400.0, _float),
    "observer.velocity_cutoff_hz": (0.0, _float),
    "fusion.tau_t": (9.0, _float),
    "fusion.tau_b": (1.5, _float),
    "fusion.v_t": (0.02, _float),
    "fusion.v_b": (0.002, _float),
    "fusion.switch_belief": (0.5, _float),
    "fusion.initial_mode": ("dual", _mode),
    "fusion.initial_mass": (0.9, _float),
    "noise.snr_db": (None, _opt_float),
    "noise.seed": (0, _int),
    "sweep.levels_db": ("40,50,60,70,80,90", _floats),
    "sweep.trials": (30, _int),
    "sweep.base_seed": (0, _int),
    "sweep.jobs": (1, _int),
}


def default_config() -> dict:
    return {k: parser(raw) if raw is not None else None
            for k, (raw, parser) in DEFAULTS.items()}


def parse_value(key: str, raw):
    if key not in DEFAULTS:
        raise KeyError(f"unknown configuration key {key!r}")
    return DEFAULTS[key][1](raw)


def load_config_file(path) -> dict:
    """Parse `key = value` lines into a raw {key: string} mapping."""
    out = {}
    with open(path) as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected 'key = value'")
            key, raw = (s.strip() for s in line.split("=", 1))
            if key not in DEFAULTS:
                raise KeyError(f"{path}:{lineno}: unknown key {key!r}")
            out[key] = raw
    return out


def resolve_config(file_path=None, overrides=None) -> dict:
    """defaults <- config file <- explicit overrides."""
    cfg = default_config()
    if file_path:
        for key, raw in load_config_file(file_path).items():
            cfg[key] = parse_value(key, raw)
    for key, raw in (overrides or {}).items():
        cfg[key] = parse_value(key, raw)
    return cfg


def make_model(cfg) -> WalkerModel:
    return WalkerModel(
        link_masses=np.array(cfg["model.link_masses"]),
        link_lengths=np.array(cfg["model.link_lengths"]),
        com_offsets=np.array(cfg["model.com_offsets"]),
        link_inertias=np.array(cfg["model.link_inertias"]),
        gravity=cfg["model.gravity"],
    )


def make_gait(cfg) -> GaitConfig:
    return GaitConfig(
        step_duration=cfg["gait.step_duration"],
        dual_fraction=cfg["gait.dual_fraction"],
        step_length=cfg["gait.step_length"],
        apex_height=cfg["gait.apex_height"],
        pd_gains=(cfg["gait.kp"], cfg["gait.kd"]),
        duration=cfg["gait.duration"],
        rate=cfg["gait.rate"],
        stance_width=cfg["gait.stance_width"],
        hip_height=cfg["gait.hip_height"],
        shift_fraction=cfg["gait.shift_fraction"],
        settle_time=cfg["gait.settle_time"],
    )


def make_fusion(cfg) -> FusionParams:
    return FusionParams(
        tau_t=cfg["fusion.tau_t"],
        tau_b=cfg["fusion.tau_b"],
        v_t=cfg["fusion.v_t"],
        v_b=cfg["fusion.v_b"],
        switch_belief=cfg["fusion.switch_belief"],
    )


def snr_value(cfg):
    v = cfg["noise.snr_db"]
    if v is None or (isinstance(v, float) and math.isinf(v)):
        return None
    return float(v)
