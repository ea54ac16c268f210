"""Gait plan and joint-level PD controller for the walker trials.

The trial gait is an alternating left-right stepping cycle.  Each step is a
dual-support phase (weight shift toward the staying foot) followed by a
single-support phase in which the other foot tracks a swing profile (lift
to apex, optional forward travel, descend with a small residual velocity so
touchdown produces a crisp impact).  References are phase-indexed joint
trajectories obtained by two-link IK from a task-space plan; torques are
PD tracking plus gravity-compensation feedforward solved against the
active contact set.

With apex_height <= 0 the plan degenerates to quiet standing (no liftoffs
are ever commanded).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dynamics import foot_jacobian, gravity_vector
from .model import Mode, WalkerModel

SWING_TOUCHDOWN_PHASE = 0.85  # fraction of nominal swing where the profile crosses ground
REF_BLEND_TIME = 0.08         # [s] blend from captured posture into the plan
SWING_FLOOR = -0.02           # [m] lowest commanded swing-foot height


@dataclass(frozen=True)
class GaitConfig:
    step_duration: float = 1.2    # [s] one dual + one single phase
    dual_fraction: float = 0.4    # share of the step spent in dual support
    step_length: float = 0.0      # [m] forward travel per step (0 = in place)
    apex_height: float = 0.06     # [m] swing-foot lift
    pd_gains: tuple = (600.0, 30.0)  # (kp [N m/rad], kd [N m s/rad])
    duration: float = 5.0         # [s]
    rate: float = 1000.0          # [Hz]
    stance_width: float = 0.26    # [m] front-back foot separation when standing
    hip_height: float = 0.94      # [m] planned hip height above ground
    shift_fraction: float = 0.9   # how far the hip shifts over the stance foot
    settle_time: float = 0.3      # [s] extra first dual phase to damp the start

    def __post_init__(self):
        if not (self.rate > 0 and self.duration > 0):
            raise ValueError("rate and duration must be positive")
        if not 0 < self.dual_fraction < 1:
            raise ValueError("dual_fraction must lie in (0, 1)")
        if self.step_duration <= 0:
            raise ValueError("step_duration must be positive")

    @property
    def dual_time(self) -> float:
        return self.dual_fraction * self.step_duration

    @property
    def swing_time(self) -> float:
        return (1.0 - self.dual_fraction) * self.step_duration

    @property
    def standing(self) -> bool:
        return self.apex_height <= 0.0


def smooth5(u: float) -> float:
    """C2 smoothstep on [0, 1]."""
    u = min(max(u, 0.0), 1.0)
    return u * u * u * (10.0 + u * (-15.0 + 6.0 * u))


def cycloid(u: float) -> float:
    """Monotone 0->1 ramp with zero end rates."""
    u = min(max(u, 0.0), 1.0)
    return u - math.sin(2.0 * math.pi * u) / (2.0 * math.pi)


def leg_ik(dx: float, dy: float, l1: float, l2: float) -> tuple[float, float]:
    """Two-link IK: hip->foot offset (dx, dy) to (hip, knee) joint angles.

    Angles follow the walker convention (zero = straight leg pointing down,
    CCW positive); the knee branch is fixed so the knee angle is >= 0.
    """
    d = math.hypot(dx, dy)
    d_max = (l1 + l2) * (1.0 - 1e-9)
    d_min = abs(l1 - l2) + 1e-9
    if d > d_max:
        dx, dy = dx * d_max / d, dy * d_max / d
        d = d_max
    elif d < d_min:
        d = d_min
    phi = math.atan2(dx, -dy)
    b1 = math.acos(min(1.0, max(-1.0, (l1 * l1 + d * d - l2 * l2) / (2.0 * l1 * d))))
    b2 = math.acos(min(1.0, max(-1.0, (l2 * l2 + d * d - l1 * l1) / (2.0 * l2 * d))))
    hip = phi - b1
    knee = b1 + b2
    return hip, knee


def standing_state(model: WalkerModel, gait: GaitConfig):
    """Initial standing configuration: feet split, hip centered.

    Returns (q0, anchors) with the left foot at -stance_width/2 and the
    right at +stance_width/2 on the ground line.
    """
    w = gait.stance_width
    anchors = {
        Mode.LEFT: np.array([-w / 2, 0.0]),
        Mode.RIGHT: np.array([+w / 2, 0.0]),
    }
    l1, l2 = model.link_lengths[1], model.link_lengths[2]
    q = np.zeros(7)
    q[0], q[1] = 0.0, gait.hip_height
    for side, cols in ((Mode.LEFT, (3, 4)), (Mode.RIGHT, (5, 6))):
        dx = anchors[side][0] - q[0]
        dy = anchors[side][1] - q[1]
        q[cols[0]], q[cols[1]] = leg_ik(dx, dy, l1, l2)
    return q, anchors


def _other(side: Mode) -> Mode:
    return Mode.RIGHT if side == Mode.LEFT else Mode.LEFT


class GaitController:
    """Stateful phase machine + reference generator + torque law."""

    def __init__(self, model: WalkerModel, gait: GaitConfig,
                 first_swing: Mode = Mode.LEFT):
        self.model = model
        self.gait = gait
        self.kp, self.kd = gait.pd_gains
        self._l1 = float(model.link_lengths[1])
        self._l2 = float(model.link_lengths[2])
        q0, anchors = standing_state(model, gait)
        self.anchors = {k: v.copy() for k, v in anchors.items()}
        self.phase = "dual"
        self.phase_t0 = 0.0
        self.swing = None
        self.swing_next = Mode(first_swing)
        self.entry_joints = q0[3:7].copy()
        self._hip_x = 0.0
        self._hip_x_target = self._shift_target(_other(self.swing_next))
        self._swing_origin = None
        self._swing_target_x = None
        self._first_dual = True

    # --- plan geometry -------------------------------------------------
    def _shift_target(self, stance: Mode) -> float:
        mid = 0.5 * (self.anchors[Mode.LEFT][0] + self.anchors[Mode.RIGHT][0])
        return mid + self.gait.shift_fraction * (self.anchors[stance][0] - mid)

    def _dual_duration(self) -> float:
        extra = self.gait.settle_time if self._first_dual else 0.0
        return self.gait.dual_time + extra

    # --- phase machine hooks (driven by the simulator) ------------------
    def wants_liftoff(self, t: float) -> bool:
        if self.gait.standing or self.phase != "dual":
            return False
        return (t - self.phase_t0) >= self._dual_duration()

    def notify_liftoff(self, t: float, q) -> Mode:
        side = self.swing_next
        self.phase = "single"
        self.phase_t0 = t
        self.swing = side
        self.entry_joints = np.asarray(q, dtype=float)[3:7].copy()
        self._hip_x = self._hip_x_target
        self._swing_origin = self.anchors[side].copy()
        self._swing_target_x = self._swing_origin[0] + self.gait.step_length
        self._first_dual = False
        return side

    def notify_touchdown(self, t: float, side: Mode, anchor, q) -> None:
        self.anchors[Mode(side)] = np.asarray(anchor, dtype=float).copy()
        self.phase = "dual"
        self.phase_t0 = t
        self.swing = None
        self.swing_next = _other(Mode(side))
        self.entry_joints = np.asarray(q, dtype=float)[3:7].copy()
        self._hip_x_target = self._shift_target(_other(self.swing_next))

    # --- references -----------------------------------------------------
    def _geometric_refs(self, xi: float) -> np.ndarray:
        """Joint references from the task-space plan at phase-local time xi."""
        g = self.gait
        if self.phase == "dual":
            s = smooth5(xi / self._dual_duration())
            hip_x = self._hip_x + s * (self._hip_x_target - self._hip_x)
            targets = {m: self.anchors[m] for m in (Mode.LEFT, Mode.RIGHT)}
        else:
            hip_x = self._hip_x
            phi = xi / g.swing_time
            sx = cycloid(min(phi / SWING_TOUCHDOWN_PHASE, 1.0))
            fx = self._swing_origin[0] + sx * (self._swing_target_x - self._swing_origin[0])
            fy = g.apex_height * math.sin(math.pi * min(phi, 1.2) / SWING_TOUCHDOWN_PHASE)
            fy = max(fy, SWING_FLOOR)
            targets = {m: self.anchors[m] for m in (Mode.LEFT, Mode.RIGHT)}
            targets = dict(targets)
            targets[self.swing] = np.array([fx, fy])
        hip = np.array([hip_x, g.hip_height])
        ref = np.empty(4)
        for side, cols in ((Mode.LEFT, (0, 1)), (Mode.RIGHT, (2, 3))):
            dx, dy = targets[side] - hip
            ref[cols[0]], ref[cols[1]] = leg_ik(dx, dy, self._l1, self._l2)
        return ref

    def references(self, t: float) -> tuple[np.ndarray, np.ndarray]:
        """(q_ref, qd_ref) for the four joints at absolute time t."""
        xi = max(t - self.phase_t0, 0.0)
        h = 1e-5

        def blended(x):
            geom = self._geometric_refs(x)
            w = smooth5(x / REF_BLEND_TIME)
            return self.entry_joints + w * (geom - self.entry_joints)

        lo = max(xi - h, 0.0)
        ref = blended(xi)
        dref = (blended(xi + h) - blended(lo)) / (xi + h - lo)
        return ref, dref

    # --- torque law -------------------------------------------------------
    def feedforward(self, q, contacts) -> np.ndarray:
        """Gravity-compensation torques against the active contact set."""
        G = gravity_vector(self.model, q)
        cols = [self.model.B.T]
        for side in contacts:
            cols.append(foot_jacobian(self.model, q, side).T)
        S = np.hstack(cols)
        # ridge-regularized least squares; the ridge only matters when the
        # stacked map is rank deficient
        StS = S.T @ S + 1e-9 * np.eye(S.shape[1])
        x = np.linalg.solve(StS, S.T @ G)
        return x[:4]

    def torque(self, t: float, q, qd, contacts) -> np.ndarray:
        q = np.asarray(q, dtype=float)
        qd = np.asarray(qd, dtype=float)
        ref, dref = self.references(t)
        tau = self.feedforward(q, contacts)
        tau += self.kp * (ref - q[3:7]) + self.kd * (dref - qd[3:7])
        return tau


def joint_pd_controller(controller: GaitController, t, q, qdot, contacts):
    """Functional wrapper over GaitController.torque."""
    return controller.torque(t, q, qdot, contacts)
