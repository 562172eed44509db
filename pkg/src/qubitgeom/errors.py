"""Exception types raised by qubitgeom operations."""


class QubitGeomError(ValueError):
    """Base class for all qubitgeom validation errors."""


class NonHermitianInput(QubitGeomError):
    """A matrix required to be Hermitian failed the symmetry check."""


class BadDimension(QubitGeomError):
    """An array has the wrong shape or dimension for the operation."""


class UnphysicalBloch(QubitGeomError):
    """Bloch vector lies outside the unit ball."""


class NotUnital(QubitGeomError):
    """Operation requires a unital channel (zero translation part)."""


class NotCP(QubitGeomError):
    """Operation requires a completely positive channel."""


class UnknownName(QubitGeomError):
    """Unknown catalog entry."""


class WeightsNotNormalized(QubitGeomError):
    """Mixture weights do not sum to one."""


class EmptyIntersection(QubitGeomError):
    """Constrained projection slice does not intersect the CP tetrahedron."""


class OutsideCube(QubitGeomError):
    """Eta vector lies outside the positive-map cube [-1, 1]^3."""


class SymmetryViolation(QubitGeomError):
    """Eta vector does not satisfy the protocol's symmetry constraint."""


class DisturbanceOutOfRange(QubitGeomError):
    """Disturbance level outside the supported range."""
