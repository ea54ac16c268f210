"""Data model: walker parameters, contact modes, measurement containers.

Generalized coordinates q = (xb, yb, thb, q1, q2, q3, q4): base (hip)
position, torso angle from vertical, then left hip / left knee / right hip
/ right knee, all zero at the straight configuration.  The three base
coordinates are unactuated; the four joints are torque-actuated.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import IntEnum

import numpy as np

NQ = 7      # generalized coordinates
NY = 5      # measured coordinates (thb, q1..q4)
NU = 4      # actuated joints
LINKS = ("torso", "left_thigh", "left_shank", "right_thigh", "right_shank")


class Mode(IntEnum):
    LEFT = 0
    RIGHT = 1
    DUAL = 2

    @classmethod
    def from_name(cls, name: str) -> "Mode":
        return cls[name.strip().upper()]

    @property
    def label(self) -> str:
        return self.name.lower()


# actuation selector: B.T maps the 4 joint torques into the 7 generalized
# forces, leaving the floating-base rows zero
def actuation_selector() -> np.ndarray:
    B = np.zeros((NU, NQ))
    for j in range(NU):
        B[j, 3 + j] = 1.0
    return B


@dataclass(frozen=True)
class WalkerModel:
    """Physical parameters of the planar five-link biped.

    Link order: torso, left thigh, left shank, right thigh, right shank.
    com_offsets measure from the proximal joint along the link; inertias
    are about each link's COM.  gravity is positive down [m/s^2].
    """

    link_masses: np.ndarray
    link_lengths: np.ndarray
    com_offsets: np.ndarray
    link_inertias: np.ndarray
    gravity: float = 9.81

    def __post_init__(self):
        for name in ("link_masses", "link_lengths", "com_offsets", "link_inertias"):
            arr = np.ascontiguousarray(getattr(self, name), dtype=float)
            if arr.shape != (5,):
                raise ValueError(f"{name} must have shape (5,), got {arr.shape}")
            if not np.all(arr > 0):
                raise ValueError(f"{name} entries must be strictly positive")
            object.__setattr__(self, name, arr)
        if not self.gravity > 0:
            raise ValueError("gravity must be positive (positive-down convention)")
        par = np.concatenate([
            self.link_masses, self.link_lengths, self.com_offsets,
            self.link_inertias, [self.gravity],
        ])
        object.__setattr__(self, "_par", par)
        B = actuation_selector()
        # exactly one unit entry per actuated joint, zero floating-base rows
        assert B[:, :3].sum() == 0 and np.all(B.sum(axis=1) == 1)
        object.__setattr__(self, "_B", B)

    @property
    def param_vector(self) -> np.ndarray:
        """Packed (21,) parameter vector consumed by the kernels."""
        return self._par

    @property
    def B(self) -> np.ndarray:
        """(4, 7) actuation selector."""
        return self._B

    @property
    def total_mass(self) -> float:
        return float(self.link_masses.sum())

    @property
    def leg_length(self) -> float:
        """Thigh + shank length (both legs are built symmetric)."""
        return float(self.link_lengths[1] + self.link_lengths[2])

    @classmethod
    def default(cls) -> "WalkerModel":
        # 1 kg per link, uniform thin-rod links of 0.5 m
        masses = np.ones(5)
        lengths = np.full(5, 0.5)
        return cls(
            link_masses=masses,
            link_lengths=lengths,
            com_offsets=lengths / 2,
            link_inertias=masses * lengths**2 / 12,
            gravity=9.81,
        )


@dataclass(frozen=True)
class WalkerState:
    """Full simulator state: q (7,) and its rate (7,)."""

    q: np.ndarray
    qdot: np.ndarray

    def __post_init__(self):
        for name in ("q", "qdot"):
            arr = np.ascontiguousarray(getattr(self, name), dtype=float)
            if arr.shape != (NQ,):
                raise ValueError(f"{name} must have shape ({NQ},)")
            if not np.all(np.isfinite(arr)):
                raise ValueError(f"{name} must be finite")
            object.__setattr__(self, name, arr)


@dataclass(frozen=True)
class MeasurementFrame:
    """One estimator input tick: time, measured angles/rates, joint torques."""

    t: float
    y: np.ndarray        # (5,) thb, q1..q4 [rad]
    ydot: np.ndarray     # (5,) [rad/s]
    tau_mot: np.ndarray  # (4,) measured joint torques [N m]


class FrameSeries:
    """Columnar stream of MeasurementFrames (uniform-rate, increasing t)."""

    def __init__(self, t, y, ydot, tau_mot):
        self.t = np.ascontiguousarray(t, dtype=float)
        self.y = np.ascontiguousarray(y, dtype=float)
        self.ydot = np.ascontiguousarray(ydot, dtype=float)
        self.tau_mot = np.ascontiguousarray(tau_mot, dtype=float)
        n = len(self.t)
        if self.y.shape != (n, NY) or self.ydot.shape != (n, NY) \
                or self.tau_mot.shape != (n, NU):
            raise ValueError("inconsistent frame series shapes")
        if n > 1 and not np.all(np.diff(self.t) > 0):
            raise ValueError("frame timestamps must be strictly increasing")

    def __len__(self):
        return len(self.t)

    def __getitem__(self, i) -> MeasurementFrame:
        return MeasurementFrame(float(self.t[i]), self.y[i], self.ydot[i],
                                self.tau_mot[i])

    def __iter__(self):
        for i in range(len(self)):
            yield self[i]

    @property
    def dt(self) -> float:
        if len(self) < 2:
            raise ValueError("need at least two frames for a tick period")
        steps = np.diff(self.t)
        if np.abs(steps - steps[0]).max() > 1e-9:
            raise ValueError("frame stream is not uniform-rate")
        return float(steps[0])

    def copy(self) -> "FrameSeries":
        return FrameSeries(self.t.copy(), self.y.copy(), self.ydot.copy(),
                           self.tau_mot.copy())


@dataclass(frozen=True)
class ContactModeLabel:
    """Ground-truth contact mode over [t_start, t_end)."""

    mode: Mode
    t_start: float
    t_end: float


def labels_to_series(labels, t) -> np.ndarray:
    """Per-tick truth mode array for frame times t (labels must tile them)."""
    t = np.asarray(t, dtype=float)
    out = np.full(len(t), -1, dtype=np.int8)
    for lab in labels:
        sel = (t >= lab.t_start - 1e-12) & (t < lab.t_end - 1e-12)
        out[sel] = int(lab.mode)
    # the final frame sits exactly at the last label's t_end when the trial
    # length is an exact multiple of dt
    if len(t) and out[-1] < 0 and labels and t[-1] <= labels[-1].t_end + 1e-9:
        out[-1] = int(labels[-1].mode)
    if np.any(out < 0):
        raise ValueError("labels do not tile the frame times")
    return out


@dataclass
class TrialLog:
    """Everything one simulated trial produces.

    frames hold the measured (possibly noisy) stream the estimator sees;
    clean holds the pre-noise signals; q_truth the full simulator state and
    labels the ground-truth contact segments.
    """

    frames: FrameSeries
    clean: FrameSeries
    q_truth: np.ndarray           # (n, 7)
    labels: list = field(default_factory=list)

    @property
    def truth_series(self) -> np.ndarray:
        return labels_to_series(self.labels, self.frames.t)
