"""Electromagnetic field tensors, frame transforms, and the dipole tensor.

Encoding convention (contravariant components, metric diag(1,-1,-1,-1)):

    F[0,i] = -E_i      F[i,0] = +E_i      F[i,j] = -eps_ijk B_k

so for example B = z_hat gives F[1,2] = -1, F[2,1] = +1.  With this choice
conjugation by the velocity-u pure boost realizes the textbook 3-vector laws

    E' = E_par + gamma (E - u x B)_perp
    B' = B_par + gamma (B + u x E)_perp

and transforming with the inverse of a particle's standard boost therefore
yields the familiar rest-frame fields E0 = E_par + gamma (E + v x B)_perp,
B0 = B_par + gamma (B - v x E)_perp.  Any consistent sign choice gives the
same physics; this one also makes the magnetic/electric dipole-moment tensor
of a moving spin equal the boosted rest-frame tensor entry for entry.

The dipole tensor reuses the same layout with operator-valued entries:
E-slot gamma*d_hat and B-slot -gamma*mu_hat, where for rest-frame moment
mu0 = alpha*s the moving-frame moments are

    mu_hat = alpha [s - (gamma/(gamma+1)) v (v . s)]
    d_hat  = alpha (v x s).
"""

import numpy as np

from .errors import DegenerateField, NotAntisymmetric
from .minkowski import TOL_GROUP, lorentz_factor, standard_boost_inverse_placeholder  # noqa: F401

# Fields with |B| at or below this are treated as having no quantization axis.
B_EPS = 1e-12


def _assemble_antisymmetric(e_part: np.ndarray, b_part: np.ndarray) -> np.ndarray:
    """Pack E-slot and B-slot components, each of shape (3, *rest), into the
    antisymmetric (4, 4, *rest) layout documented in the module docstring."""
    rest = e_part.shape[1:]
    dtype = np.result_type(e_part.dtype, b_part.dtype, float)
    out = np.zeros((4, 4) + rest, dtype=dtype)
    for i in range(3):
        out[0, i + 1] = -e_part[i]
        out[i + 1, 0] = e_part[i]
    out[1, 2] = -b_part[2]
    out[2, 1] = b_part[2]
    out[1, 3] = b_part[1]
    out[3, 1] = -b_part[1]
    out[2, 3] = -b_part[0]
    out[3, 2] = b_part[0]
    return out


def tensor_from_fields(e_field: np.ndarray, b_field: np.ndarray) -> np.ndarray:
    """Antisymmetric 4x4 field tensor for electric and magnetic 3-vectors."""
    e = np.asarray(e_field, dtype=float)
    b = np.asarray(b_field, dtype=float)
    return _assemble_antisymmetric(e.reshape(3), b.reshape(3))


def fields_from_tensor(tensor: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Inverse of tensor_from_fields; raises NotAntisymmetric on bad input."""
    f = np.asarray(tensor, dtype=float)
    residual = float(np.max(np.abs(f + f.T)))
    if residual > TOL_GROUP:
        raise NotAntisymmetric(
            f"field tensor must be antisymmetric, max |F + F~| = {residual:.3e}"
        )
    e = f[1:, 0].copy()
    b = np.array([-f[2, 3], f[1, 3], -f[1, 2]])
    return e, b


def transform_tensor(transform: np.ndarray, tensor: np.ndarray) -> np.ndarray:
    """Conjugate a rank-2 tensor: L F L~ on the two spacetime indices.

    Works for plain (4, 4) field tensors and for operator-valued tensors of
    shape (4, 4, ...) such as the dipole tensor.
    """
    lam = np.asarray(transform, dtype=float)
    f = np.asarray(tensor)
    return np.einsum("ma,nb,ab...->mn...", lam, lam, f)


def rest_frame_field(p: np.ndarray, mass: float, tensor: np.ndarray) -> np.ndarray:
    """Apparatus field tensor seen in the rest frame of a particle with
    momentum p: conjugation by the inverse of the standard boost."""
    from .minkowski import lorentz_inverse
    from .wigner import standard_boost

    return transform_tensor(lorentz_inverse(standard_boost(p, mass)), tensor)


def magnetic_axis(tensor: np.ndarray) -> np.ndarray:
    """Unit vector along the magnetic field of a tensor (the quantization
    axis of a Stern-Gerlach measurement whose field that is)."""
    _, b = fields_from_tensor(tensor)
    norm = float(np.linalg.norm(b))
    if norm <= B_EPS:
        raise DegenerateField(
            f"magnetic field magnitude {norm:.3e} is at or below {B_EPS}; "
            "no quantization axis is defined"
        )
    return b / norm


def _cross_first_axis(v: np.ndarray, s: np.ndarray) -> np.ndarray:
    """(v x s)_i for a plain 3-vector v and s of shape (3, *rest)."""
    return np.stack([
        v[1] * s[2] - v[2] * s[1],
        v[2] * s[0] - v[0] * s[2],
        v[0] * s[1] - v[1] * s[0],
    ])


def dipole_moments(v: np.ndarray, spin: np.ndarray, alpha: float = 1.0):
    """Magnetic and electric dipole moments of a moving particle whose
    rest-frame magnetic moment is alpha * spin (and electric moment zero).

    `spin` has shape (3, *rest): three 2x2 Hermitian operators for the
    quantum case, or a plain 3-vector for the classical (Bloch) case.
    Returns (mu, d) with the same trailing shape.
    """
    v = np.asarray(v, dtype=float).reshape(3)
    spin = np.asarray(spin)
    g = lorentz_factor(v)
    v_dot_s = np.tensordot(v, spin, axes=(0, 0))
    v_outer = v.reshape((3,) + (1,) * (spin.ndim - 1)) * v_dot_s[np.newaxis, ...]
    mu = alpha * (spin - (g / (g + 1.0)) * v_outer)
    d = alpha * _cross_first_axis(v, spin)
    return mu, d


def dipole_tensor(v: np.ndarray, spin_ops: np.ndarray, alpha: float = 1.0) -> np.ndarray:
    """Antisymmetric tensor packaging (gamma*d, -gamma*mu) like (E, B).

    For operator-valued spin_ops of shape (3, 2, 2) the result has shape
    (4, 4, 2, 2) with Hermitian 2x2 entries; a plain (3,) Bloch-style vector
    gives a (4, 4) c-number tensor.  Conjugating with a Lorentz transform via
    transform_tensor commutes with rebuilding at the new velocity from the
    Wigner-rotated rest-frame spin.
    """
    v = np.asarray(v, dtype=float).reshape(3)
    g = lorentz_factor(v)
    mu, d = dipole_moments(v, spin_ops, alpha)
    return _assemble_antisymmetric(g * d, -g * mu)
