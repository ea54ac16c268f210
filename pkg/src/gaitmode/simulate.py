"""Hybrid-dynamics simulation of the five-link walker.

Fixed-step semi-implicit Euler at the trial rate with a KKT solve for the
pinned-foot constraint forces, plastic impacts at touchdown, event-driven
contact switching, constraint-drift stabilization (Baumgarte terms plus a
post-step projection), and measurement-noise injection at a configurable
SNR.  High-order (RK4) integrators for the unconstrained, constrained and
reduced dynamics are included for verification runs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .backend import kernels as _k
from .dynamics import energy, foot_jacobian, foot_jacobian_dot, foot_position
from .errors import SimulationDiverged, SingularConstraint
from .gait import GaitConfig, GaitController, standing_state
from .model import (ContactModeLabel, FrameSeries, Mode, TrialLog, WalkerModel)
from .reduction import reduced_model_at

ARM_HEIGHT = 0.005      # [m] swing foot must rise this far before touchdown arms
LIFT_TOL = -1e-9        # [N] vertical constraint force below this fires liftoff
BAUMGARTE_KD = 40.0     # [1/s] velocity-level constraint feedback
BAUMGARTE_KP = 400.0    # [1/s^2] position-level constraint feedback
DIVERGE_SPEED = 200.0   # [rad/s or m/s] any rate beyond this aborts the trial
MIN_HIP_HEIGHT = 0.3    # [m]


def _contact_order(contacts):
    return sorted(contacts, key=int)


def _stack_jacobians(model, q, contacts):
    return np.vstack([foot_jacobian(model, q, s) for s in contacts])


def constrained_forward_dynamics(model: WalkerModel, q, qd, f_gen, contacts,
                                 anchors=None, baumgarte=True):
    """Forward dynamics with pinned-foot constraints.

    Solves M qdd + C qd + G = f_gen + A^T lam together with the
    acceleration-level constraint A qdd + Adot qd = stabilization terms.
    lam is the physical contact force on each foot, (n_contacts, 2), so the
    vertical component is positive while the foot is loaded.
    """
    q = np.asarray(q, dtype=float)
    qd = np.asarray(qd, dtype=float)
    par = model.param_vector
    M = _k.mass_matrix(q, par)
    rhs_f = np.asarray(f_gen, dtype=float) - _k.bias_vector(q, qd, par) \
        - _k.gravity_vector(q, par)
    contacts = _contact_order(contacts)
    k = 2 * len(contacts)
    if k == 0:
        return np.linalg.solve(M, rhs_f), np.zeros((0, 2))
    A = _stack_jacobians(model, q, contacts)
    c_rhs = np.concatenate([
        -foot_jacobian_dot(model, q, qd, s) @ qd for s in contacts
    ])
    if baumgarte:
        c_rhs -= BAUMGARTE_KD * (A @ qd)
        if anchors is not None:
            err = np.concatenate([
                foot_position(model, q, s) - anchors[s] for s in contacts
            ])
            c_rhs -= BAUMGARTE_KP * err
    KKT = np.zeros((7 + k, 7 + k))
    KKT[:7, :7] = M
    KKT[:7, 7:] = -A.T
    KKT[7:, :7] = A
    rhs = np.concatenate([rhs_f, c_rhs])
    try:
        sol = np.linalg.solve(KKT, rhs)
    except np.linalg.LinAlgError as exc:
        raise SingularConstraint(f"rank-deficient contact set {contacts}") from exc
    if not np.all(np.isfinite(sol)):
        raise SingularConstraint(f"ill-conditioned contact set {contacts}")
    return sol[:7], sol[7:].reshape(-1, 2)


def impact_map(model: WalkerModel, q, qd_minus, contacts):
    """Plastic impact: project velocities onto A qdot = 0 for the new set."""
    q = np.asarray(q, dtype=float)
    qd_minus = np.asarray(qd_minus, dtype=float)
    contacts = _contact_order(contacts)
    if not contacts:
        return qd_minus.copy()
    M = _k.mass_matrix(q, model.param_vector)
    A = _stack_jacobians(model, q, contacts)
    k = A.shape[0]
    KKT = np.zeros((7 + k, 7 + k))
    KKT[:7, :7] = M
    KKT[:7, 7:] = -A.T
    KKT[7:, :7] = A
    rhs = np.concatenate([M @ qd_minus, np.zeros(k)])
    try:
        sol = np.linalg.solve(KKT, rhs)
    except np.linalg.LinAlgError as exc:
        raise SingularConstraint(f"rank-deficient impact set {contacts}") from exc
    return sol[:7]


def project_constraints(model: WalkerModel, q, qd, contacts, anchors,
                        iters: int = 2):
    """Pull (q, qd) back onto the pinned-foot manifold (drift cleanup)."""
    contacts = _contact_order(contacts)
    if not contacts:
        return q, qd
    for _ in range(iters):
        A = _stack_jacobians(model, q, contacts)
        err = np.concatenate([
            anchors[s] - foot_position(model, q, s) for s in contacts
        ])
        if np.abs(err).max() < 1e-14:
            break
        q = q + A.T @ np.linalg.solve(A @ A.T, err)
    A = _stack_jacobians(model, q, contacts)
    qd = qd - A.T @ np.linalg.solve(A @ A.T, A @ qd)
    return q, qd


@dataclass
class SimState:
    t: float
    q: np.ndarray
    qd: np.ndarray
    contacts: list
    anchors: dict
    armed: bool = False
    events: list = field(default_factory=list)  # (t, mode after the event)

    @property
    def mode(self) -> Mode:
        if len(self.contacts) == 2:
            return Mode.DUAL
        return self.contacts[0]


def _mode_of(contacts) -> Mode:
    return Mode.DUAL if len(contacts) == 2 else contacts[0]


def _check_sane(state: SimState, tick: int):
    if not np.all(np.isfinite(state.q)) or not np.all(np.isfinite(state.qd)):
        raise SimulationDiverged("non-finite state", tick=tick)
    if np.abs(state.qd).max() > DIVERGE_SPEED:
        raise SimulationDiverged("runaway velocity", tick=tick)
    if state.q[1] < MIN_HIP_HEIGHT:
        raise SimulationDiverged("walker collapsed", tick=tick)
    if abs(state.q[2]) > 1.0:
        raise SimulationDiverged("torso toppled", tick=tick)


def hybrid_step(state: SimState, ctrl: GaitController, model: WalkerModel,
                dt: float, tick: int = 0):
    """Advance one tick; fires commanded/forced liftoffs and touchdown impacts.

    Returns (state, tau_mot) where tau_mot is the torque applied over the
    tick (zero-order hold, also across an in-tick touchdown).
    """
    t, q, qd = state.t, state.q, state.qd

    # commanded liftoff at the gait clock
    if ctrl.wants_liftoff(t) and len(state.contacts) == 2:
        side = ctrl.notify_liftoff(t, q)
        state.contacts = [c for c in state.contacts if c != side]
        state.events.append((t, _mode_of(state.contacts)))
        state.armed = False

    tau = ctrl.torque(t, q, qd, state.contacts)
    f_gen = model.B.T @ tau

    # dynamics with unilateral check: a foot pulling on the ground lifts off
    while True:
        qdd, lam = constrained_forward_dynamics(
            model, q, qd, f_gen, state.contacts, anchors=state.anchors)
        popped = [s for s, l in zip(_contact_order(state.contacts), lam)
                  if l[1] < LIFT_TOL]
        if not popped:
            break
        side = popped[0]
        if len(state.contacts) == 1:
            raise SimulationDiverged(
                f"stance foot unloaded at t={t:.3f}s (flight is out of scope)",
                tick=tick)
        if side != ctrl.swing_next:
            raise SimulationDiverged(
                f"support foot {side.label} unloaded at t={t:.3f}s", tick=tick)
        ctrl.notify_liftoff(t, q)
        state.contacts = [c for c in state.contacts if c != side]
        state.events.append((t, _mode_of(state.contacts)))
        state.armed = False

    qd1 = qd + dt * qdd
    q1 = q + dt * qd1

    swing = ctrl.swing
    if swing is not None and swing not in state.contacts:
        h0 = foot_position(model, q, swing)[1]
        h1 = foot_position(model, q1, swing)[1]
        if not state.armed and h1 > ARM_HEIGHT:
            state.armed = True
        if state.armed and h1 <= 0.0 and h1 < h0:
            # within-tick event location by linear interpolation of foot height
            alpha = min(max(h0 / (h0 - h1), 0.0), 1.0)
            qda = qd + alpha * dt * qdd
            qa = q + alpha * dt * qda
            t_ev = t + alpha * dt
            new_contacts = _contact_order(state.contacts + [swing])
            qda = impact_map(model, qa, qda, new_contacts)
            anchor = np.array([foot_position(model, qa, swing)[0], 0.0])
            state.anchors[swing] = anchor
            ctrl.notify_touchdown(t_ev, swing, anchor, qa)
            state.contacts = new_contacts
            state.events.append((t_ev, _mode_of(state.contacts)))
            state.armed = False
            qdd2, _ = constrained_forward_dynamics(
                model, qa, qda, f_gen, state.contacts, anchors=state.anchors)
            qd1 = qda + (1.0 - alpha) * dt * qdd2
            q1 = qa + (1.0 - alpha) * dt * qd1

    q1, qd1 = project_constraints(model, q1, qd1, state.contacts, state.anchors)
    state.t = t + dt
    state.q = q1
    state.qd = qd1
    _check_sane(state, tick)
    return state, tau


def simulate_trial(model: WalkerModel, gait: GaitConfig, seed: int = 0,
                   snr_db=None, first_swing: Mode = Mode.LEFT) -> TrialLog:
    """Run one trial; deterministic for a fixed (model, gait, seed).

    The simulated trajectory depends only on (model, gait); the seed drives
    the measurement noise when snr_db is given.  Returns the noisy frames,
    the pre-noise frames, the full-state truth and the contact labels.
    """
    n = round(gait.duration * gait.rate)
    dt = 1.0 / gait.rate
    ctrl = GaitController(model, gait, first_swing=first_swing)
    q0, anchors = standing_state(model, gait)
    state = SimState(t=0.0, q=q0, qd=np.zeros(7),
                     contacts=[Mode.LEFT, Mode.RIGHT],
                     anchors={k: v.copy() for k, v in anchors.items()})

    t_arr = np.empty(n)
    q_arr = np.empty((n, 7))
    y_arr = np.empty((n, 5))
    yd_arr = np.empty((n, 5))
    tau_arr = np.empty((n, 4))
    events = [(0.0, Mode.DUAL)]

    for k in range(n):
        t_arr[k] = state.t
        q_arr[k] = state.q
        y_arr[k] = state.q[2:]
        yd_arr[k] = state.qd[2:]
        state, tau = hybrid_step(state, ctrl, model, dt, tick=k)
        tau_arr[k] = tau
    events.extend(state.events)

    labels = []
    t_end = n * dt
    for i, (t_ev, mode) in enumerate(events):
        nxt = events[i + 1][0] if i + 1 < len(events) else t_end
        if nxt > t_ev:
            labels.append(ContactModeLabel(mode=mode, t_start=t_ev, t_end=nxt))

    clean = FrameSeries(t_arr, y_arr, yd_arr, tau_arr)
    frames = add_noise(clean, snr_db, seed) if snr_db is not None else clean.copy()
    return TrialLog(frames=frames, clean=clean, q_truth=q_arr, labels=labels)


def add_noise(clean: FrameSeries, snr_db, seed) -> FrameSeries:
    """Additive zero-mean Gaussian noise on every measured channel.

    snr_db is a power ratio: each channel's noise std is its RMS scaled by
    10^(-snr_db/20).  Deterministic per seed; snr_db = None or +inf returns
    an identical copy.
    """
    out = clean.copy()
    if snr_db is None or math.isinf(snr_db):
        return out
    rng = np.random.default_rng(seed)
    factor = 10.0 ** (-float(snr_db) / 20.0)
    for block in (out.y, out.ydot, out.tau_mot):
        rms = np.sqrt(np.mean(block**2, axis=0))
        block += rng.standard_normal(block.shape) * (rms * factor)
    return out


# --- verification integrators (used by tests, not by the trial loop) -----

def semi_implicit_step(model, q, qd, f_gen, contacts, anchors, dt):
    qdd, _ = constrained_forward_dynamics(model, q, qd, f_gen, contacts,
                                          anchors=anchors, baumgarte=False)
    qd1 = qd + dt * qdd
    return q + dt * qd1, qd1


def rk4_step_full(model, q, qd, f_fun, contacts, t, dt):
    """RK4 on the constrained full-order dynamics (no stabilization)."""
    def acc(qq, qqd, tt):
        qdd, _ = constrained_forward_dynamics(model, qq, qqd, f_fun(tt, qq, qqd),
                                              contacts, baumgarte=False)
        return qdd

    k1v = acc(q, qd, t)
    k1q = qd
    k2v = acc(q + 0.5 * dt * k1q, qd + 0.5 * dt * k1v, t + 0.5 * dt)
    k2q = qd + 0.5 * dt * k1v
    k3v = acc(q + 0.5 * dt * k2q, qd + 0.5 * dt * k2v, t + 0.5 * dt)
    k3q = qd + 0.5 * dt * k2v
    k4v = acc(q + dt * k3q, qd + dt * k3v, t + dt)
    k4q = qd + dt * k3v
    q1 = q + dt / 6.0 * (k1q + 2 * k2q + 2 * k3q + k4q)
    qd1 = qd + dt / 6.0 * (k1v + 2 * k2v + 2 * k3v + k4v)
    return q1, qd1


def rk4_step_reduced(model, y, yd, tau_fun, mode, t, dt, tau_ext=None):
    """RK4 on the reduced single-support dynamics for one hypothesis."""
    te = np.zeros(5) if tau_ext is None else np.asarray(tau_ext, dtype=float)

    def acc(yy, yyd, tt):
        red = reduced_model_at(model, yy, yyd, tau_fun(tt, yy, yyd), mode)
        rhs = red.tau_red + te - red.C_red @ yyd - red.G_red
        return np.linalg.solve(red.M_red, rhs)

    k1v = acc(y, yd, t)
    k1y = yd
    k2v = acc(y + 0.5 * dt * k1y, yd + 0.5 * dt * k1v, t + 0.5 * dt)
    k2y = yd + 0.5 * dt * k1v
    k3v = acc(y + 0.5 * dt * k2y, yd + 0.5 * dt * k2v, t + 0.5 * dt)
    k3y = yd + 0.5 * dt * k2v
    k4v = acc(y + dt * k3y, yd + dt * k3v, t + dt)
    k4y = yd + dt * k3v
    y1 = y + dt / 6.0 * (k1y + 2 * k2y + 2 * k3y + k4y)
    yd1 = yd + dt / 6.0 * (k1v + 2 * k2v + 2 * k3v + k4v)
    return y1, yd1


def total_energy(model, q, qd) -> float:
    T, V = energy(model, q, qd)
    return T + V
