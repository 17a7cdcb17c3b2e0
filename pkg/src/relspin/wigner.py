"""Standard boosts, Wigner rotations and their action on spin-1/2 states.

A change of inertial frame maps a momentum eigenstate to the transformed
momentum while rotating the spin by the momentum-dependent rotation
W(L, p) = inverse(boost(L p)) . L . boost(p), the composition of standard
boosts left over by the frame change.  For spin 1/2 that rotation acts on
the 2-spinor through its SU(2) representative and on the Bloch vector as an
ordinary 3-dimensional rotation.
"""

from dataclasses import dataclass

import numpy as np

from .errors import InvalidState, NotRotation
from .minkowski import (
    TOL_GROUP,
    TOL_STATE,
    lorentz_inverse,
    mass_shell_residual,
    require_lorentz,
    require_on_shell,
)

PAULI_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
PAULI_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
PAULI_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
PAULI = np.stack([PAULI_X, PAULI_Y, PAULI_Z])
for _m in (PAULI_X, PAULI_Y, PAULI_Z, PAULI):
    _m.setflags(write=False)

# Below this rotation angle the antisymmetric part already equals
# angle * axis to cubic order, so the generic axis formula is skipped.
SMALL_ANGLE = 1e-6


def standard_boost(p: np.ndarray, mass: float) -> np.ndarray:
    """Rotationless boost taking the rest momentum (m, 0, 0, 0) to p.

    Built directly from the momentum: L[0,0] = p0/m, L[0,i] = L[i,0] = p_i/m,
    L[i,j] = delta_ij + p_i p_j / (m (p0 + m)), which reproduces p exactly
    when applied to (m, 0, 0, 0).
    """
    p = np.asarray(p, dtype=float)
    require_on_shell(p, mass)
    out = np.eye(4)
    out[0, 0] = p[0] / mass
    out[0, 1:] = p[1:] / mass
    out[1:, 0] = p[1:] / mass
    out[1:, 1:] += np.outer(p[1:], p[1:]) / (mass * (p[0] + mass))
    return out


def rotation_check(r: np.ndarray) -> tuple[float, float]:
    """(orthogonality residual max|R~R - I|, det R) for a 3x3 matrix."""
    r = np.asarray(r, dtype=float)
    residual = float(np.max(np.abs(r.T @ r - np.eye(3))))
    return residual, float(np.linalg.det(r))


def require_rotation(r: np.ndarray, tol: float = TOL_GROUP) -> np.ndarray:
    r = np.asarray(r, dtype=float)
    if r.shape != (3, 3):
        raise NotRotation(f"expected a 3x3 matrix, got shape {r.shape}")
    residual, det = rotation_check(r)
    if residual >= tol or abs(det - 1.0) >= tol:
        raise NotRotation(
            f"matrix is not a proper rotation: orthogonality residual "
            f"{residual:.3e}, det {det:.12g}"
        )
    return r


def wigner_rotation(
    transform: np.ndarray, p: np.ndarray, mass: float
) -> tuple[np.ndarray, np.ndarray]:
    """The rotation left over when `transform` is sandwiched between boosts.

    Returns (W, R): the full 4x4 transform W = inverse(boost(L p)) . L . boost(p),
    which fixes the rest momentum (m, 0, 0, 0), and its spatial 3x3 block R.
    Raises NotRotation if W fails to be a pure spatial rotation within
    TOL_GROUP, which signals numerical breakdown rather than a recoverable
    condition.
    """
    lam = require_lorentz(transform)
    p = np.asarray(p, dtype=float)
    w = lorentz_inverse(standard_boost(lam @ p, mass)) @ lam @ standard_boost(p, mass)
    time_residual = max(
        float(np.max(np.abs(w[0, :] - np.array([1.0, 0.0, 0.0, 0.0])))),
        float(np.max(np.abs(w[:, 0] - np.array([1.0, 0.0, 0.0, 0.0])))),
    )
    if time_residual >= TOL_GROUP:
        raise NotRotation(
            f"little-group residual {time_residual:.3e} exceeds {TOL_GROUP}; "
            "the composed transform does not fix the rest momentum"
        )
    rot = require_rotation(w[1:, 1:])
    return w, rot


def axis_angle(r: np.ndarray) -> tuple[np.ndarray, float]:
    """Axis-angle decomposition of a proper rotation, with angle in [0, pi].

    At angle 0 the axis is conventionally +z.  Near pi the axis is recovered
    from the symmetric part (the antisymmetric part degenerates there); its
    overall sign is then fixed from the antisymmetric part when possible and
    is otherwise immaterial, since R(n, pi) = R(-n, pi).
    """
    r = require_rotation(r)
    cos_t = float(np.clip((np.trace(r) - 1.0) / 2.0, -1.0, 1.0))
    angle = float(np.arccos(cos_t))
    anti = 0.5 * np.array([r[2, 1] - r[1, 2], r[0, 2] - r[2, 0], r[1, 0] - r[0, 1]])
    sin_t = float(np.linalg.norm(anti))
    if angle < SMALL_ANGLE:
        if sin_t == 0.0:
            return np.array([0.0, 0.0, 1.0]), angle
        return anti / sin_t, angle
    if np.pi - angle < SMALL_ANGLE:
        # symmetric part: (R + R~)/2 - cos(t) I = (1 - cos(t)) n n~
        sym = 0.5 * (r + r.T) - cos_t * np.eye(3)
        diag = np.clip(np.diagonal(sym) / (1.0 - cos_t), 0.0, None)
        pivot = int(np.argmax(diag))
        axis = sym[:, pivot] / ((1.0 - cos_t) * np.sqrt(diag[pivot]))
        axis = axis / np.linalg.norm(axis)
        if sin_t > 0.0 and float(anti @ axis) < 0.0:
            axis = -axis
        return axis, angle
    return anti / sin_t, angle


def su2_from_rotation(r: np.ndarray) -> np.ndarray:
    """SU(2) representative cos(t/2) I - i sin(t/2) (n . sigma) of a rotation.

    The axis-angle branch with angle in [0, pi] fixes the global sign; the
    other sign represents the same rotation and the same physics.  For any
    spinor phi, bloch_vector(D @ phi) = R @ bloch_vector(phi).
    """
    axis, angle = axis_angle(r)
    half = 0.5 * angle
    return np.cos(half) * np.eye(2, dtype=complex) - 1.0j * np.sin(half) * (
        axis[0] * PAULI_X + axis[1] * PAULI_Y + axis[2] * PAULI_Z
    )


def bloch_vector(spinor: np.ndarray) -> np.ndarray:
    """Expectation values of the Pauli matrices in a 2-spinor."""
    phi = np.asarray(spinor, dtype=complex)
    return np.real(np.einsum("i,kij,j->k", phi.conj(), PAULI, phi))


def spinor_from_bloch(r: np.ndarray) -> np.ndarray:
    """Unit spinor whose Bloch vector is the unit vector along r."""
    r = np.asarray(r, dtype=float)
    norm = float(np.linalg.norm(r))
    if norm == 0.0:
        raise InvalidState("cannot build a spinor for a zero Bloch vector")
    n = r / norm
    theta = np.arccos(np.clip(n[2], -1.0, 1.0))
    phase = np.arctan2(n[1], n[0])
    return np.array([np.cos(theta / 2.0), np.exp(1.0j * phase) * np.sin(theta / 2.0)])


def _frozen(array: np.ndarray, dtype) -> np.ndarray:
    out = np.array(array, dtype=dtype)
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class Branch:
    """One momentum eigenstate of a superposition: amplitude, momentum, spin."""

    amplitude: complex
    momentum: np.ndarray
    spin: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "amplitude", complex(self.amplitude))
        object.__setattr__(self, "momentum", _frozen(self.momentum, float))
        object.__setattr__(self, "spin", _frozen(self.spin, complex))
        if self.momentum.shape != (4,):
            raise InvalidState(f"branch momentum must have shape (4,), got {self.momentum.shape}")
        if self.spin.shape != (2,):
            raise InvalidState(f"branch spin must have shape (2,), got {self.spin.shape}")


@dataclass(frozen=True, eq=False)
class ParticleState:
    """Finite superposition of (amplitude, momentum, spin) branches.

    Spin is kept attached to its momentum branch; there is no standalone spin
    state for a superposition of momenta, and the reduced spin density matrix
    obtained by tracing momenta out is lossy (see measurement.paradox notes).

    Invariants, checked on construction: amplitudes sum to unit probability,
    every momentum is on the mass shell with positive energy, and branch
    momenta are pairwise distinct.
    """

    branches: tuple[Branch, ...]
    mass: float

    def __post_init__(self):
        object.__setattr__(self, "branches", tuple(self.branches))
        object.__setattr__(self, "mass", float(self.mass))
        if not self.branches:
            raise InvalidState("a particle state needs at least one branch")
        if self.mass <= 0.0:
            raise InvalidState(f"mass must be positive, got {self.mass}")
        total = sum(abs(b.amplitude) ** 2 for b in self.branches)
        if abs(total - 1.0) > TOL_STATE:
            raise InvalidState(f"branch amplitudes are not normalized: sum |c|^2 = {total!r}")
        for b in self.branches:
            require_on_shell(b.momentum, self.mass)
            norm = float(np.vdot(b.spin, b.spin).real)
            if abs(norm - 1.0) > TOL_STATE:
                raise InvalidState(f"branch spinor is not normalized: |phi|^2 = {norm!r}")
        for i, a in enumerate(self.branches):
            for b in self.branches[i + 1:]:
                scale = max(1.0, float(np.max(np.abs(a.momentum))))
                if float(np.max(np.abs(a.momentum - b.momentum))) <= 1e-12 * scale:
                    raise InvalidState(
                        f"branch momenta must be pairwise distinct, got duplicate "
                        f"{a.momentum.tolist()}"
                    )

    @classmethod
    def single(cls, momentum: np.ndarray, spin: np.ndarray, mass: float) -> "ParticleState":
        return cls(branches=(Branch(1.0 + 0.0j, momentum, spin),), mass=mass)

    def amplitudes(self) -> np.ndarray:
        return np.array([b.amplitude for b in self.branches])

    def momenta(self) -> np.ndarray:
        return np.stack([b.momentum for b in self.branches])


def transform_state(transform: np.ndarray, state: ParticleState) -> ParticleState:
    """Frame-change a state: momenta map to L p, spins rotate by W(L, p).

    Branch amplitudes are unchanged.  For discrete orthonormal branches the
    frame change is unitary branch by branch, so the continuum density
    normalization factor sqrt((L p)^0 / p^0) is not multiplied into the
    amplitudes; branch_density_weights exposes it for inspection.
    """
    lam = require_lorentz(transform)
    new_branches = []
    for b in state.branches:
        _, rot = wigner_rotation(lam, b.momentum, state.mass)
        spin = su2_from_rotation(rot) @ b.spin
        new_branches.append(Branch(b.amplitude, lam @ b.momentum, spin))
    return ParticleState(branches=tuple(new_branches), mass=state.mass)


def branch_density_weights(transform: np.ndarray, state: ParticleState) -> np.ndarray:
    """Per-branch continuum normalization Jacobians sqrt((L p)^0 / p^0).

    These weights belong to delta-normalized momentum wavefunctions; they are
    reported for inspection and deliberately not applied to the discrete
    amplitudes, which stay unit-normalized under transform_state.
    """
    lam = require_lorentz(transform)
    return np.array(
        [np.sqrt((lam @ b.momentum)[0] / b.momentum[0]) for b in state.branches]
    )


def state_mass_residuals(state: ParticleState) -> np.ndarray:
    """Raw |p.p - m^2| per branch; diagnostic helper for tests and checks."""
    return np.array([mass_shell_residual(b.momentum, state.mass) for b in state.branches])
