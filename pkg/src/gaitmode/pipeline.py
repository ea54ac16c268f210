"""Estimation pipeline: observer bank + Markov fusion over a frame stream.

Per tick both single-support hypotheses are reduced, both momentum
observers are stepped, the relative foot speed is computed from the joint
measurements, the transition matrix is assembled and the belief updated,
and the active mode is selected with hysteresis.

run_estimation evaluates the reduced observer terms through the fused
backend kernels (the hot path); run_estimation_reference assembles the
same quantities through the modular reduction/observer API and exists as a
cross-check.  Both produce identical series up to floating-point noise.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .backend import kernels as _k
from .errors import SingularStack
from .fusion import BeliefState, FusionParams, fusion_step, initial_belief
from .model import FrameSeries, Mode, WalkerModel
from .observer import (hold_observer, init_observer, step_observer,
                       torque_magnitude)
from .reduction import reduced_model_at


@dataclass
class EstimationResult:
    t: np.ndarray             # (n,)
    mode_series: np.ndarray   # (n,) int8 Mode values
    belief_series: np.ndarray  # (n, 3)
    torque_series: np.ndarray  # (n, 2) ||tau_hat|| per hypothesis (left, right)
    vrel_series: np.ndarray   # (n,)


def lowpass(ydot: np.ndarray, dt: float, cutoff_hz: float) -> np.ndarray:
    """First-order low-pass along axis 0 (optional velocity prefilter)."""
    if cutoff_hz <= 0:
        return ydot
    alpha = 1.0 - np.exp(-2.0 * np.pi * cutoff_hz * dt)
    out = np.empty_like(ydot)
    acc = ydot[0].copy()
    out[0] = acc
    for i in range(1, len(ydot)):
        acc += alpha * (ydot[i] - acc)
        out[i] = acc
    return out


def run_estimation(frames: FrameSeries, model: WalkerModel,
                   fusion_params: FusionParams = None, K_O=400.0,
                   initial_mode=Mode.DUAL, initial_mass: float = 0.9,
                   velocity_cutoff_hz: float = 0.0) -> EstimationResult:
    """Replay a measurement stream into mode estimates (fast path)."""
    n = len(frames)
    if n == 0:
        raise ValueError("empty frame stream")
    fusion_params = fusion_params or FusionParams()
    dt = frames.dt
    par = model.param_vector
    y = frames.y
    yd = lowpass(frames.ydot, dt, velocity_cutoff_hz)
    tau = frames.tau_mot

    k_o = np.asarray(K_O, dtype=float)
    if k_o.ndim == 0:
        k_o = np.full(5, float(k_o))
    if k_o.shape != (5,) or not np.all(k_o > 0):
        raise ValueError("K_O must be a positive scalar or (5,) vector")

    # batched fused kernels: obs[:, side] = (p (5,), beta_free (5,))
    obs = _k.observer_terms_batch(y, yd, par)
    vrel = np.linalg.norm(_k.rel_vel_batch(y, yd, par), axis=1)

    mode_series = np.empty(n, dtype=np.int8)
    belief_series = np.empty((n, 3))
    torque_series = np.empty((n, 2))

    belief = initial_belief(initial_mode, initial_mass)
    p_hat = obs[0, :, :5].copy()          # zero-innovation initialization
    tau_hat = np.zeros((2, 5))
    mode_series[0] = int(belief.active_mode)
    belief_series[0] = belief.P
    torque_series[0] = 0.0

    for i in range(1, n):
        for s in range(2):
            p = obs[i, s, :5]
            beta = obs[i, s, 5:].copy()
            beta[1:] += tau[i]            # reduced torque is zero-padded joints
            th = k_o * (p - p_hat[s])
            p_hat[s] += dt * (beta + th)
            tau_hat[s] = th
            torque_series[i, s] = np.sqrt(th @ th)
        belief = fusion_step(belief, torque_series[i, 0], torque_series[i, 1],
                             vrel[i], fusion_params)
        mode_series[i] = int(belief.active_mode)
        belief_series[i] = belief.P

    return EstimationResult(t=frames.t.copy(), mode_series=mode_series,
                            belief_series=belief_series,
                            torque_series=torque_series, vrel_series=vrel)


def run_estimation_reference(frames: FrameSeries, model: WalkerModel,
                             fusion_params: FusionParams = None, K_O=400.0,
                             initial_mode=Mode.DUAL, initial_mass: float = 0.9,
                             velocity_cutoff_hz: float = 0.0) -> EstimationResult:
    """Same pipeline through the modular reduction/observer operations.

    Slower; used to cross-validate the fused kernels.  Singular frames (a
    hypothesis whose stacked constraint matrix degenerates) hold the
    previous torque estimate and mark the observer stale.
    """
    n = len(frames)
    if n == 0:
        raise ValueError("empty frame stream")
    fusion_params = fusion_params or FusionParams()
    dt = frames.dt
    y_arr = frames.y
    yd_arr = lowpass(frames.ydot, dt, velocity_cutoff_hz)
    tau_arr = frames.tau_mot

    mode_series = np.empty(n, dtype=np.int8)
    belief_series = np.empty((n, 3))
    torque_series = np.empty((n, 2))
    vrel_series = np.empty(n)

    belief = initial_belief(initial_mode, initial_mass)
    observers = {}
    for side in (Mode.LEFT, Mode.RIGHT):
        red = reduced_model_at(model, y_arr[0], yd_arr[0], tau_arr[0], side)
        observers[side] = init_observer(side, red, yd_arr[0], K_O)
    mode_series[0] = int(belief.active_mode)
    belief_series[0] = belief.P
    torque_series[0] = 0.0
    vrel_series[0] = np.linalg.norm(
        _k.rel_vel(y_arr[0], yd_arr[0], model.param_vector))

    for i in range(1, n):
        norms = {}
        for s, side in enumerate((Mode.LEFT, Mode.RIGHT)):
            try:
                red = reduced_model_at(model, y_arr[i], yd_arr[i], tau_arr[i],
                                       side)
                observers[side], th = step_observer(observers[side], red,
                                                    yd_arr[i], dt)
            except SingularStack:
                observers[side], th = hold_observer(observers[side])
            norms[side] = torque_magnitude(th)
            torque_series[i, s] = norms[side]
        vrel_series[i] = np.linalg.norm(
            _k.rel_vel(y_arr[i], yd_arr[i], model.param_vector))
        belief = fusion_step(belief, norms[Mode.LEFT], norms[Mode.RIGHT],
                             vrel_series[i], fusion_params)
        mode_series[i] = int(belief.active_mode)
        belief_series[i] = belief.P

    return EstimationResult(t=frames.t.copy(), mode_series=mode_series,
                            belief_series=belief_series,
                            torque_series=torque_series,
                            vrel_series=vrel_series)
