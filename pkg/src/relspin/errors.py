"""Exception types raised by the physics layer.

Every error names the violated precondition in its message so that callers
(and the service/CLI layers) can surface it verbatim.
"""


class PhysicsError(ValueError):
    """Base class for domain errors: bad inputs, broken invariants."""


class VelocityOutOfRange(PhysicsError):
    """Speed is not in [0, 1 - V_GUARD); the Lorentz factor would blow up."""


class ZeroAxis(PhysicsError):
    """A rotation axis with zero length was supplied."""


class NotLorentz(PhysicsError):
    """A 4x4 matrix failed the metric-preservation / orthochronous checks."""


class NotRotation(PhysicsError):
    """A 3x3 matrix is not a proper rotation within tolerance."""


class OffShell(PhysicsError):
    """A 4-momentum does not satisfy p.p = m^2 within tolerance."""


class NonpositiveEnergy(PhysicsError):
    """A 4-momentum has time component <= 0."""


class NotAntisymmetric(PhysicsError):
    """A field tensor is not antisymmetric within tolerance."""


class DegenerateField(PhysicsError):
    """The magnetic field vanishes; no quantization axis exists."""


class DegenerateBlock(PhysicsError):
    """A measurement block has (near-)zero eigenvalues for some momentum."""


class DegenerateCoupling(PhysicsError):
    """The rest-frame spatial part of a 4-vector coupling vanishes."""


class AxesCoincide(PhysicsError):
    """All per-momentum quantization axes are parallel; the momentum-spin
    correlation this scenario is meant to exhibit cannot appear."""


class InvalidState(PhysicsError):
    """A particle state violates its invariants (normalization, mass shell,
    duplicate momenta)."""
