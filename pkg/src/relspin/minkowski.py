"""Minkowski-space linear algebra: 4-vectors, boosts, rotations, validation.

Metric signature is (+,-,-,-) throughout; units have c = 1.  4-vectors are
plain numpy arrays of shape (4,) ordered (t, x, y, z); Lorentz transforms are
(4, 4) arrays acting by matrix multiplication.  All functions are pure and
all returned arrays are freshly allocated.
"""

from dataclasses import dataclass

import numpy as np

from .errors import (
    NonpositiveEnergy,
    NotLorentz,
    OffShell,
    VelocityOutOfRange,
    ZeroAxis,
)

METRIC = np.diag([1.0, -1.0, -1.0, -1.0])
METRIC.setflags(write=False)

# Absolute tolerance on 4x4 matrix residuals.  Double precision keeps boost
# products good to ~gamma^2 * eps, so this holds comfortably up to gamma ~ 1e3.
TOL_GROUP = 1e-9

# Tolerance on state normalization and (scaled) mass-shell residuals.
TOL_STATE = 1e-9

# Speeds are rejected at |v| >= 1 - V_GUARD, capping gamma at ~2.2e4.
V_GUARD = 1e-9


def four_vector(t: float, x: float, y: float, z: float) -> np.ndarray:
    return np.array([t, x, y, z], dtype=float)


def three_vector(x: float, y: float, z: float) -> np.ndarray:
    return np.array([x, y, z], dtype=float)


def minkowski_dot(a: np.ndarray, b: np.ndarray) -> float:
    """Metric contraction a.b = a0*b0 - a1*b1 - a2*b2 - a3*b3."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return float(a[0] * b[0] - a[1:] @ b[1:])


def lorentz_factor(v: np.ndarray) -> float:
    """gamma = 1/sqrt(1 - |v|^2); raises VelocityOutOfRange at |v| >= 1 - V_GUARD."""
    v = np.asarray(v, dtype=float)
    speed2 = float(v @ v)
    limit = 1.0 - V_GUARD
    if speed2 >= limit * limit:
        raise VelocityOutOfRange(
            f"speed {np.sqrt(speed2):.12g} exceeds the allowed maximum {limit}"
        )
    return 1.0 / np.sqrt(1.0 - speed2)


def momentum_from_velocity(v: np.ndarray, mass: float) -> np.ndarray:
    """On-shell 4-momentum (gamma*m, gamma*m*v) of a particle with velocity v."""
    v = np.asarray(v, dtype=float)
    if mass <= 0.0:
        raise OffShell(f"mass must be positive, got {mass}")
    g = lorentz_factor(v)
    return np.concatenate(([g * mass], g * mass * v))


def velocity_of(p: np.ndarray) -> np.ndarray:
    """Velocity p_spatial / p0 of a 4-momentum with positive energy."""
    p = np.asarray(p, dtype=float)
    if p[0] <= 0.0:
        raise NonpositiveEnergy(f"4-momentum must have positive energy, got p0 = {p[0]}")
    return p[1:] / p[0]


def mass_shell_residual(p: np.ndarray, mass: float) -> float:
    """|p.p - m^2|, the raw off-shell residual."""
    return abs(minkowski_dot(p, p) - mass * mass)


def require_on_shell(p: np.ndarray, mass: float, tol: float = TOL_STATE) -> None:
    """Raise unless p.p = m^2 (scaled tolerance) with p0 > 0 and m > 0.

    The residual of p.p - m^2 for a momentum assembled in floating point grows
    like (p0)^2 * eps, so the tolerance scales with max(1, p0^2).
    """
    p = np.asarray(p, dtype=float)
    if mass <= 0.0:
        raise OffShell(f"mass must be positive, got {mass}")
    if p[0] <= 0.0:
        raise NonpositiveEnergy(f"4-momentum must have positive energy, got p0 = {p[0]}")
    residual = mass_shell_residual(p, mass)
    if residual > tol * max(1.0, p[0] * p[0]):
        raise OffShell(
            f"momentum {p.tolist()} is off the mass shell for m = {mass}: "
            f"|p.p - m^2| = {residual:.3e}"
        )


def boost_from_velocity(v: np.ndarray) -> np.ndarray:
    """Rotationless pure boost taking (m, 0) to (gamma*m, gamma*m*v).

    Block form: L[0,0] = gamma, L[0,i] = L[i,0] = gamma*v_i,
    L[i,j] = delta_ij + (gamma^2/(gamma+1)) v_i v_j.  The spatial coefficient
    equals (gamma-1)/|v|^2 exactly and stays finite as v -> 0.
    """
    v = np.asarray(v, dtype=float)
    g = lorentz_factor(v)
    out = np.eye(4)
    out[0, 0] = g
    out[0, 1:] = g * v
    out[1:, 0] = g * v
    out[1:, 1:] += (g * g / (g + 1.0)) * np.outer(v, v)
    return out


def rotation_about_axis(axis: np.ndarray, angle: float) -> np.ndarray:
    """Spatial rotation by `angle` (radians) about `axis`, as a 4x4 transform.

    Time row and column are (1, 0, 0, 0); the spatial block is the Rodrigues
    rotation about the normalized axis.
    """
    axis = np.asarray(axis, dtype=float)
    norm = float(np.linalg.norm(axis))
    if norm < 1e-150:
        raise ZeroAxis("rotation axis must have nonzero length")
    n = axis / norm
    k = np.array([
        [0.0, -n[2], n[1]],
        [n[2], 0.0, -n[0]],
        [-n[1], n[0], 0.0],
    ])
    out = np.eye(4)
    out[1:, 1:] = np.eye(3) + np.sin(angle) * k + (1.0 - np.cos(angle)) * (k @ k)
    return out


@dataclass(frozen=True)
class LorentzCheck:
    """Diagnostics of the defining identity L~ g L = g.

    residual:  max-abs entry of L~ g L - g
    det:       determinant of L
    time_time: the L[0,0] entry (>= 1 for orthochronous transforms)
    """

    residual: float
    det: float
    time_time: float

    def passes(self, tol: float = TOL_GROUP) -> bool:
        return (
            self.residual < tol
            and abs(self.det - 1.0) < tol
            and self.time_time >= 1.0 - tol
        )


def validate_lorentz(transform: np.ndarray) -> LorentzCheck:
    """Measure how far a 4x4 matrix is from a proper orthochronous transform."""
    lam = np.asarray(transform, dtype=float)
    residual = float(np.max(np.abs(lam.T @ METRIC @ lam - METRIC)))
    return LorentzCheck(
        residual=residual,
        det=float(np.linalg.det(lam)),
        time_time=float(lam[0, 0]),
    )


def require_lorentz(transform: np.ndarray, tol: float = TOL_GROUP) -> np.ndarray:
    """Return the matrix as a float array, raising NotLorentz if it fails checks."""
    lam = np.asarray(transform, dtype=float)
    if lam.shape != (4, 4):
        raise NotLorentz(f"expected a 4x4 matrix, got shape {lam.shape}")
    check = validate_lorentz(lam)
    if not check.passes(tol):
        raise NotLorentz(
            "matrix is not a proper orthochronous Lorentz transform: "
            f"residual {check.residual:.3e}, det {check.det:.12g}, "
            f"L[0,0] {check.time_time:.12g}"
        )
    return lam


def lorentz_inverse(transform: np.ndarray) -> np.ndarray:
    """Inverse via the closed form g L~ g (no numerical matrix inversion)."""
    lam = require_lorentz(transform)
    return METRIC @ lam.T @ METRIC
