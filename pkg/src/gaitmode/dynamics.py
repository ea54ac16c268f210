"""Lagrangian dynamics and kinematics of the five-link walker.

All terms come from closed-form kernels generated offline (see
tools/gen_kernels.py): mass matrix from the link kinetic energy, Coriolis
matrix built from the Christoffel symbols of M (so Mdot = C + C^T holds
identically), gravity as the potential gradient, plus foot positions,
contact Jacobians and their time derivatives.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .backend import kernels as _k
from .model import Mode, WalkerModel


def _check_finite(name, arr, shape):
    arr = np.ascontiguousarray(arr, dtype=float)
    if arr.shape != shape:
        raise ValueError(f"{name} must have shape {shape}, got {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} must be finite")
    return arr


@dataclass(frozen=True)
class DynamicsTerms:
    """Full-order M, C, G evaluated at one state."""

    M: np.ndarray  # (7, 7)
    C: np.ndarray  # (7, 7)
    G: np.ndarray  # (7,)


@dataclass(frozen=True)
class ContactJacobians:
    A_left: np.ndarray      # (2, 7)
    A_right: np.ndarray
    Adot_left: np.ndarray
    Adot_right: np.ndarray


def mass_matrix(model: WalkerModel, q) -> np.ndarray:
    q = _check_finite("q", q, (7,))
    return _k.mass_matrix(q, model.param_vector)


def coriolis_matrix(model: WalkerModel, q, qdot) -> np.ndarray:
    q = _check_finite("q", q, (7,))
    qdot = _check_finite("qdot", qdot, (7,))
    return _k.coriolis_matrix(q, qdot, model.param_vector)


def gravity_vector(model: WalkerModel, q) -> np.ndarray:
    q = _check_finite("q", q, (7,))
    return _k.gravity_vector(q, model.param_vector)


def bias_vector(model: WalkerModel, q, qdot) -> np.ndarray:
    """C(q, qdot) @ qdot without forming C."""
    q = _check_finite("q", q, (7,))
    qdot = _check_finite("qdot", qdot, (7,))
    return _k.bias_vector(q, qdot, model.param_vector)


def dynamics_terms(model: WalkerModel, q, qdot) -> DynamicsTerms:
    return DynamicsTerms(
        M=mass_matrix(model, q),
        C=coriolis_matrix(model, q, qdot),
        G=gravity_vector(model, q),
    )


def foot_position(model: WalkerModel, q, side) -> np.ndarray:
    q = _check_finite("q", q, (7,))
    fn = _k.foot_pos_left if Mode(side) == Mode.LEFT else _k.foot_pos_right
    return fn(q, model.param_vector)


def foot_jacobian(model: WalkerModel, q, side) -> np.ndarray:
    q = _check_finite("q", q, (7,))
    fn = _k.foot_jac_left if Mode(side) == Mode.LEFT else _k.foot_jac_right
    return fn(q, model.param_vector)


def foot_jacobian_dot(model: WalkerModel, q, qdot, side) -> np.ndarray:
    q = _check_finite("q", q, (7,))
    qdot = _check_finite("qdot", qdot, (7,))
    fn = _k.foot_jacdot_left if Mode(side) == Mode.LEFT else _k.foot_jacdot_right
    return fn(q, qdot, model.param_vector)


def contact_jacobians(model: WalkerModel, q, qdot) -> ContactJacobians:
    return ContactJacobians(
        A_left=foot_jacobian(model, q, Mode.LEFT),
        A_right=foot_jacobian(model, q, Mode.RIGHT),
        Adot_left=foot_jacobian_dot(model, q, qdot, Mode.LEFT),
        Adot_right=foot_jacobian_dot(model, q, qdot, Mode.RIGHT),
    )


def relative_foot_velocity(model: WalkerModel, q, qdot) -> np.ndarray:
    """(A_left - A_right) @ qdot.

    The base-translation columns of the two Jacobians cancel, so this
    depends on joint measurements only; the kernel exploits that.
    """
    q = _check_finite("q", q, (7,))
    qdot = _check_finite("qdot", qdot, (7,))
    return _k.rel_vel(q[2:], qdot[2:], model.param_vector)


def energy(model: WalkerModel, q, qdot) -> tuple[float, float]:
    """(kinetic, potential) energy [J]."""
    q = _check_finite("q", q, (7,))
    qdot = _check_finite("qdot", qdot, (7,))
    T, V = _k.energies(q, qdot, model.param_vector)
    return float(T), float(V)


def com_position(model: WalkerModel, q) -> np.ndarray:
    q = _check_finite("q", q, (7,))
    return _k.com_position(q, model.param_vector)
