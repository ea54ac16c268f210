"""Constraint-consistent coordinate reduction for a pinned-foot hypothesis.

With a foot pinned (A qdot = 0) and reduced coordinates y = Y q picked as
the measured angles, velocities factor through H = [A; Y]^-1 [0; I] and the
dynamics project to

    M_red = H^T M H
    C_red = H^T C H + H^T M Hdot
    G_red = H^T G
    tau_red = H^T B^T tau_mot

which no longer involve the constraint force.  Hdot follows from
differentiating the defining identity: Hdot = -[A; Y]^-1 [Adot; 0] H.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dynamics import (DynamicsTerms, dynamics_terms, foot_jacobian,
                       foot_jacobian_dot)
from .errors import SingularStack
from .model import NQ, NU, NY, Mode, WalkerModel

COND_LIMIT = 1e8  # stacked [A; Y] above this is treated as singular


def selection_matrix(mode) -> np.ndarray:
    """(5, 7) selector picking (thb, q1..q4); identical for both modes."""
    Mode(mode)  # validate
    Y = np.zeros((NY, NQ))
    Y[np.arange(NY), 2 + np.arange(NY)] = 1.0
    return Y


def _stack(A, Y):
    A = np.asarray(A, dtype=float)
    Y = np.asarray(Y, dtype=float)
    if A.shape[1] != NQ or Y.shape != (NY, NQ) or A.shape[0] + NY != NQ:
        raise ValueError("A must be (2,7) and Y (5,7)")
    S = np.vstack([A, Y])
    cond = np.linalg.cond(S)
    if not np.isfinite(cond) or cond > COND_LIMIT:
        raise SingularStack(f"[A; Y] condition number {cond:.3e} exceeds {COND_LIMIT:g}")
    return S


def reduction_map(A, Y) -> np.ndarray:
    """H = [A; Y]^-1 [0; I] with A @ H = 0 and Y @ H = I."""
    S = _stack(A, Y)
    rhs = np.vstack([np.zeros((A.shape[0], NY)), np.eye(NY)])
    return np.linalg.solve(S, rhs)


def reduction_map_dot(A, Adot, Y, H) -> np.ndarray:
    """Hdot = -[A; Y]^-1 [Adot; 0] H (Y is constant)."""
    S = _stack(A, Y)
    Adot = np.asarray(Adot, dtype=float)
    top = np.vstack([Adot @ H, np.zeros((NY, NY))])
    return -np.linalg.solve(S, top)


@dataclass(frozen=True)
class ReducedModel:
    """Reduced terms for one single-support hypothesis."""

    mode: Mode
    Y: np.ndarray
    H: np.ndarray       # (7, 5)
    Hdot: np.ndarray    # (7, 5)
    M_red: np.ndarray   # (5, 5)
    C_red: np.ndarray   # (5, 5)
    G_red: np.ndarray   # (5,)
    tau_red: np.ndarray  # (5,)


def reduce_dynamics(terms: DynamicsTerms, H, Hdot, tau_mot, B,
                    mode=Mode.LEFT, Y=None) -> ReducedModel:
    H = np.asarray(H, dtype=float)
    Hdot = np.asarray(Hdot, dtype=float)
    tau_mot = np.asarray(tau_mot, dtype=float)
    if H.shape != (NQ, NY) or Hdot.shape != (NQ, NY) or tau_mot.shape != (NU,):
        raise ValueError("inconsistent reduction dimensions")
    if Y is None:
        Y = selection_matrix(mode)
    MH = terms.M @ H
    return ReducedModel(
        mode=Mode(mode),
        Y=Y,
        H=H,
        Hdot=Hdot,
        M_red=H.T @ MH,
        C_red=H.T @ terms.C @ H + MH.T @ Hdot,
        G_red=H.T @ terms.G,
        tau_red=H.T @ (B.T @ tau_mot),
    )


def reduced_model_at(model: WalkerModel, y, ydot, tau_mot, mode) -> ReducedModel:
    """Build the ReducedModel for one hypothesis from measured angles.

    The base position is unobservable and irrelevant (M, C, G and the
    Jacobians do not depend on it), so it is pinned at the origin; the base
    velocity is reconstructed through qdot = H ydot.
    """
    y = np.asarray(y, dtype=float)
    ydot = np.asarray(ydot, dtype=float)
    q = np.concatenate([[0.0, 0.0], y])
    Y = selection_matrix(mode)
    A = foot_jacobian(model, q, mode)
    H = reduction_map(A, Y)
    qdot = H @ ydot
    Adot = foot_jacobian_dot(model, q, qdot, mode)
    Hdot = reduction_map_dot(A, Adot, Y, H)
    terms = dynamics_terms(model, q, qdot)
    return reduce_dynamics(terms, H, Hdot, tau_mot, model.B, mode=mode, Y=Y)
