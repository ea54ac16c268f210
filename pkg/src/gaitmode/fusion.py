"""Markov fusion of the observer bank into a contact-mode belief.

Per tick: the two torque magnitudes and the relative foot speed map through
sigmoids to transition probabilities, which fill a column-stochastic 3x3
transition matrix over (left, right, dual); the belief is propagated and
the emitted mode switches only when the leading mode's belief exceeds a
hysteresis threshold.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import SimplexViolation
from .model import Mode

SIMPLEX_TOL = 1e-6   # input belief must sum to 1 within this
DRIFT_TOL = 1e-9     # post-update drift beyond this is an error


@dataclass(frozen=True)
class FusionParams:
    tau_t: float = 9.0           # touchdown threshold [N m]
    tau_b: float = 1.5           # touchdown band [N m]
    v_t: float = 0.02            # liftoff threshold [m/s]
    v_b: float = 0.002           # liftoff band [m/s]
    switch_belief: float = 0.5   # hysteresis threshold in (0, 1]

    def __post_init__(self):
        if not (self.tau_b > 0 and self.v_b > 0):
            raise ValueError("band values must be positive")
        if self.tau_t < 0 or self.v_t < 0:
            raise ValueError("thresholds must be non-negative")
        if not 0 < self.switch_belief <= 1:
            raise ValueError("switch_belief must be in (0, 1]")


@dataclass(frozen=True)
class BeliefState:
    P: np.ndarray       # (3,) probabilities ordered (left, right, dual)
    active_mode: Mode

    def __post_init__(self):
        P = np.ascontiguousarray(self.P, dtype=float)
        _check_simplex(P)
        object.__setattr__(self, "P", P)


def initial_belief(mode, mass: float = 0.9) -> BeliefState:
    mode = Mode(mode)
    P = np.full(3, (1.0 - mass) / 2)
    P[int(mode)] = mass
    return BeliefState(P=P, active_mode=mode)


def sigmoid(x: float) -> float:
    # split to avoid overflow in exp for large |x|
    if x >= 0:
        return 1.0 / (1.0 + math.exp(-x))
    z = math.exp(x)
    return z / (1.0 + z)


def touchdown_probability(tau_norm_i: float, params: FusionParams) -> float:
    """P(single-support mode i -> dual) from mode i's torque magnitude."""
    if tau_norm_i < 0:
        raise ValueError("torque magnitude must be non-negative")
    return sigmoid((tau_norm_i - params.tau_t) / params.tau_b)


def liftoff_probability(v_rel_norm: float, tau_norm_i: float,
                        tau_norm_j: float, params: FusionParams) -> float:
    """P(dual -> single-support mode i).

    The velocity sigmoid gates on constraint violation; the torque ratio
    weights toward the mode whose observer reports lower external torque
    (mode i inherits the weight of the opposing magnitude j).
    """
    if tau_norm_i < 0 or tau_norm_j < 0:
        raise ValueError("torque magnitudes must be non-negative")
    total = tau_norm_i + tau_norm_j
    ratio = 0.5 if total == 0.0 else tau_norm_j / total  # degenerate 0/0 -> even split
    return sigmoid((v_rel_norm - params.v_t) / params.v_b) * ratio


def transition_matrix(pi_l_dual, pi_r_dual, pi_dual_l, pi_dual_r) -> np.ndarray:
    """Column-stochastic transition matrix over (left, right, dual)."""
    for v in (pi_l_dual, pi_r_dual, pi_dual_l, pi_dual_r):
        if not 0.0 <= v <= 1.0:
            raise ValueError("transition probabilities must lie in [0, 1]")
    total_out = pi_dual_l + pi_dual_r
    if total_out > 1.0:
        # cannot happen with the exact sigmoid-ratio product (ratios sum to
        # 1 and the sigmoid is <= 1) but guard the degenerate-ratio fallback
        pi_dual_l /= total_out
        pi_dual_r /= total_out
    return np.array([
        [1.0 - pi_l_dual, 0.0,             pi_dual_l],
        [0.0,             1.0 - pi_r_dual, pi_dual_r],
        [pi_l_dual,       pi_r_dual,       1.0 - pi_dual_l - pi_dual_r],
    ])


def _check_simplex(P):
    if P.shape != (3,):
        raise SimplexViolation("belief must have 3 entries")
    if np.any(P < -SIMPLEX_TOL) or abs(P.sum() - 1.0) > SIMPLEX_TOL:
        raise SimplexViolation(f"belief off the simplex: {P}")


def update_belief(P, Pi) -> np.ndarray:
    """P' = Pi @ P, renormalized only to absorb floating-point drift."""
    P = np.asarray(P, dtype=float)
    _check_simplex(P)
    out = np.asarray(Pi, dtype=float) @ P
    drift = abs(out.sum() - 1.0)
    if drift > DRIFT_TOL or np.any(out < -DRIFT_TOL):
        raise SimplexViolation(f"belief update drifted by {drift:.3e}")
    np.clip(out, 0.0, None, out=out)
    return out / out.sum()


def select_mode(P, current, params: FusionParams) -> Mode:
    """Hysteresis selection: switch only on belief strictly above threshold."""
    P = np.asarray(P, dtype=float)
    _check_simplex(P)
    current = Mode(current)
    lead = int(np.argmax(P))
    if lead != int(current) and P[lead] > params.switch_belief:
        return Mode(lead)
    return current


def fusion_step(belief: BeliefState, tau_norm_l: float, tau_norm_r: float,
                v_rel_norm: float, params: FusionParams) -> BeliefState:
    """One full fusion tick: build Pi, propagate the belief, apply hysteresis."""
    Pi = transition_matrix(
        touchdown_probability(tau_norm_l, params),
        touchdown_probability(tau_norm_r, params),
        liftoff_probability(v_rel_norm, tau_norm_l, tau_norm_r, params),
        liftoff_probability(v_rel_norm, tau_norm_r, tau_norm_l, params),
    )
    P = update_belief(belief.P, Pi)
    return BeliefState(P=P, active_mode=select_mode(P, belief.active_mode, params))
