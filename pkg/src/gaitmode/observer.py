"""Discrete-time generalized-momentum observers, one per contact hypothesis.

Each observer tracks the reduced momentum p = M_red ydot of its pinned-foot
model and attributes the innovation to external torque:

    p      = M_red ydot
    beta   = C_red^T ydot - G_red + tau_red
    tau_hat = K_O (p - p_hat)
    p_hat <- p_hat + dt (beta + tau_hat)

tau_hat is computed before the momentum update (the estimate's rate is held
constant over the tick).  Only positions, velocities and torques enter; no
acceleration signal is ever consumed.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .model import NY, Mode
from .reduction import ReducedModel


@dataclass(frozen=True)
class ObserverState:
    mode: Mode
    p_hat: np.ndarray    # (5,) estimated reduced momentum [kg m^2/s]
    tau_hat: np.ndarray  # (5,) estimated external torque [N m]
    K_O: np.ndarray      # (5,) diagonal observer gain [1/s]
    initialized: bool = True
    stale: bool = False  # last frame could not be evaluated (singular stack)


def _gain_vector(K_O) -> np.ndarray:
    k = np.asarray(K_O, dtype=float)
    if k.ndim == 0:
        k = np.full(NY, float(k))
    elif k.ndim == 2:
        if np.any(k != np.diag(np.diag(k))):
            raise ValueError("K_O must be diagonal")
        k = np.diag(k).astype(float)
    if k.shape != (NY,) or not np.all(k > 0):
        raise ValueError("K_O must be positive (scalar, (5,) or diagonal (5,5))")
    return k


def init_observer(mode, reduced: ReducedModel, ydot, K_O) -> ObserverState:
    """Start with zero innovation: p_hat = M_red ydot, tau_hat = 0."""
    ydot = np.asarray(ydot, dtype=float)
    return ObserverState(
        mode=Mode(mode),
        p_hat=reduced.M_red @ ydot,
        tau_hat=np.zeros(NY),
        K_O=_gain_vector(K_O),
    )


def step_observer(obs: ObserverState, reduced: ReducedModel, ydot,
                  dt: float) -> tuple[ObserverState, np.ndarray]:
    if not obs.initialized:
        raise ValueError("observer must be initialized before stepping")
    if not dt > 0:
        raise ValueError("dt must be positive")
    if reduced.mode != obs.mode:
        raise ValueError(f"reduced model is for {reduced.mode}, observer for {obs.mode}")
    ydot = np.asarray(ydot, dtype=float)
    p = reduced.M_red @ ydot
    beta = reduced.C_red.T @ ydot - reduced.G_red + reduced.tau_red
    tau_hat = obs.K_O * (p - obs.p_hat)
    p_hat = obs.p_hat + dt * (beta + tau_hat)
    new = replace(obs, p_hat=p_hat, tau_hat=tau_hat, stale=False)
    return new, tau_hat


def hold_observer(obs: ObserverState) -> tuple[ObserverState, np.ndarray]:
    """Frame could not be evaluated: keep tau_hat, flag the state stale."""
    return replace(obs, stale=True), obs.tau_hat


def torque_magnitude(tau_hat) -> float:
    tau_hat = np.asarray(tau_hat, dtype=float)
    if not np.all(np.isfinite(tau_hat)):
        raise ValueError("tau_hat must be finite")
    return float(np.linalg.norm(tau_hat))
