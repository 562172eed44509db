"""Single-qubit states and channels.

States are 2x2 density matrices or, equivalently, real Bloch vectors s with
rho = (I + s . sigma) / 2. A channel acts on Bloch vectors as an affine map
s -> A s + b. Unital channels (b = 0) with diagonal A are parameterised by
the diagonal eta = (eta_x, eta_y, eta_z); the completely positive ones form
a regular tetrahedron in eta-space (see the geometry module).

Complete positivity is tested through the Choi matrix: the channel applied
to one half of a maximally entangled pair. The Choi matrix is normalised to
trace 1 here, so its eigenvalues of a diagonal unital channel are exactly
the four Pauli mixture weights.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .errors import (
    BadDimension,
    NotUnital,
    UnknownName,
    UnphysicalBloch,
)
from .linalg import PAULIS, SIGMA_X, SIGMA_Y, SIGMA_Z

UNITAL_TOL = 1e-12


def _readonly(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=float)
    a.setflags(write=False)
    return a


def bloch_to_density(s: np.ndarray) -> np.ndarray:
    """Density matrix (I + s . sigma) / 2 of a Bloch vector."""
    s = np.asarray(s, dtype=float)
    if s.shape != (3,):
        raise BadDimension(f"Bloch vector must have 3 components, got {s.shape}")
    norm = np.linalg.norm(s)
    if norm > 1.0 + 1e-10:
        raise UnphysicalBloch(f"|s| = {norm} exceeds 1")
    rho = 0.5 * (np.eye(2, dtype=complex) + s[0] * SIGMA_X + s[1] * SIGMA_Y + s[2] * SIGMA_Z)
    return rho


def density_to_bloch(rho: np.ndarray) -> np.ndarray:
    """Bloch vector s_i = Tr(rho sigma_i)."""
    rho = np.asarray(rho, dtype=complex)
    return np.array(
        [np.trace(rho @ p).real for p in (SIGMA_X, SIGMA_Y, SIGMA_Z)]
    )


@dataclass(frozen=True)
class AffineChannel:
    """Affine Bloch-vector map s -> A s + b.

    A is a real 3x3 matrix, b a real translation. Instances are immutable.
    """

    A: np.ndarray
    b: np.ndarray = field(default_factory=lambda: np.zeros(3))

    def __post_init__(self):
        object.__setattr__(self, "A", _readonly(np.reshape(self.A, (3, 3))))
        object.__setattr__(self, "b", _readonly(np.reshape(self.b, (3,))))

    @classmethod
    def from_eta(cls, eta) -> "AffineChannel":
        """Diagonal unital channel with squeezing parameters eta."""
        eta = np.asarray(eta, dtype=float)
        return cls(np.diag(eta), np.zeros(3))

    @property
    def is_unital(self) -> bool:
        return bool(np.linalg.norm(self.b) <= UNITAL_TOL)

    @property
    def is_diagonal(self) -> bool:
        off = self.A - np.diag(np.diag(self.A))
        return self.is_unital and np.max(np.abs(off)) <= 1e-12

    @property
    def eta(self) -> np.ndarray:
        """Diagonal of A; meaningful for diagonal unital channels."""
        return np.diag(self.A).copy()


def apply(ch: AffineChannel, s: np.ndarray) -> np.ndarray:
    """Image A s + b of a Bloch vector under the channel."""
    return ch.A @ np.asarray(s, dtype=float) + ch.b


def apply_density(ch: AffineChannel, rho: np.ndarray) -> np.ndarray:
    """Action of the channel on a 2x2 matrix, extended linearly.

    For a density matrix this is bloch_to_density(apply(ch, s)); the linear
    extension to arbitrary 2x2 matrices is what the Choi construction needs.
    """
    rho = np.asarray(rho, dtype=complex)
    tr = np.trace(rho)
    m = np.array([np.trace(rho @ p) for p in (SIGMA_X, SIGMA_Y, SIGMA_Z)])
    m_out = ch.A @ m + tr * ch.b
    out = 0.5 * tr * np.eye(2, dtype=complex)
    for k in range(3):
        out = out + 0.5 * m_out[k] * PAULIS[k + 1]
    return out


def choi(ch: AffineChannel) -> np.ndarray:
    """Trace-1 Choi matrix (id x S)(|Psi+><Psi+|) of the channel.

    |Psi+> = (|00> + |11>)/sqrt(2); the channel acts on the second factor.
    The result is Hermitian with unit trace; it is positive semidefinite
    iff the channel is completely positive.
    """
    C = np.zeros((4, 4), dtype=complex)
    for i in range(2):
        for j in range(2):
            E = np.zeros((2, 2), dtype=complex)
            E[i, j] = 1.0
            block = 0.5 * apply_density(ch, E)
            C[2 * i : 2 * i + 2, 2 * j : 2 * j + 2] = block
    return C


def is_cp(ch: AffineChannel, tol: float = 1e-9) -> tuple[bool, float]:
    """Complete-positivity test via the Choi spectrum.

    Returns (flag, min_eigenvalue) where flag is True iff the smallest
    Choi eigenvalue is >= -tol.
    """
    w, _ = linalg.hermitian_eig(choi(ch))
    min_eig = float(w[0])
    return min_eig >= -tol, min_eig


def is_positive_unital(ch: AffineChannel, tol: float = 1e-9) -> bool:
    """Positivity test for a unital channel: A must contract the ball."""
    if not ch.is_unital:
        raise NotUnital("positivity test implemented for unital channels only")
    _, sigma, _ = linalg.svd3(ch.A)
    return bool(sigma[0] <= 1.0 + tol)


@dataclass(frozen=True)
class CanonicalForm:
    """Rotation-diagonal-rotation factorisation A = Q diag(delta) Q^T R.

    Q and R are proper rotations; delta is a signed diagonal whose absolute
    values are the singular values of A in descending order.
    """

    Q: np.ndarray
    delta: np.ndarray
    R: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "Q", _readonly(np.reshape(self.Q, (3, 3))))
        object.__setattr__(self, "delta", _readonly(np.reshape(self.delta, (3,))))
        object.__setattr__(self, "R", _readonly(np.reshape(self.R, (3, 3))))

    def reconstruct(self) -> np.ndarray:
        return self.Q @ np.diag(self.delta) @ self.Q.T @ self.R


def canonical_form(ch: AffineChannel) -> CanonicalForm:
    """Factor a unital channel as a rotation, a diagonal squeeze, a rotation.

    Built from the SVD A = U diag(sigma) V^T. Improper factors are repaired
    by sign flips absorbed into delta so that Q and R always come out as
    proper rotations; the sign pattern of delta is chosen with as few
    negative entries as possible. Works for singular A and det(A) < 0.
    """
    if not ch.is_unital:
        raise NotUnital("canonical form requires a unital channel")
    U, sigma, V = linalg.svd3(ch.A)
    d1 = sigma.copy()
    Q = U.copy()
    if np.linalg.det(U) < 0:
        Q[:, 2] = -Q[:, 2]
        d1[2] = -d1[2]
    # Need det(S) = det(V^T) so that R = Q S V^T is proper.
    if np.linalg.det(V) < 0:
        S = np.array([1.0, 1.0, -1.0])
    else:
        S = np.array([1.0, 1.0, 1.0])
    delta = d1 * S
    R = Q @ np.diag(S) @ V.T
    return CanonicalForm(Q, delta, R)


_CATALOG = {
    "identity": (1.0, 1.0, 1.0),
    "rot_x": (1.0, -1.0, -1.0),
    "rot_y": (-1.0, 1.0, -1.0),
    "rot_z": (-1.0, -1.0, 1.0),
    "transpose": (1.0, -1.0, 1.0),
    "universal_not": (-1.0, -1.0, -1.0),
    "pancake": (1.0, 1.0, 0.0),
}


def catalog(name: str, p: float | None = None) -> AffineChannel:
    """Named channels: the tetrahedron vertices, the classic non-CP positive
    maps (transpose, universal_not, pancake), and depolarize(p)."""
    if name == "depolarize":
        if p is None:
            raise UnknownName("depolarize requires a probability parameter")
        if not 0.0 <= p <= 1.0:
            raise UnknownName(f"depolarize probability {p} outside [0, 1]")
        return AffineChannel.from_eta((1.0 - p, 1.0 - p, 1.0 - p))
    if name not in _CATALOG:
        raise UnknownName(f"unknown channel name {name!r}")
    return AffineChannel.from_eta(_CATALOG[name])


def channel_to_json(ch: AffineChannel) -> dict:
    """Shared JSON schema: {"eta": [...]} for diagonal unital channels,
    {"A": [[...]], "b": [...]} otherwise."""
    if ch.is_diagonal:
        return {"eta": list(ch.eta)}
    return {"A": ch.A.tolist(), "b": ch.b.tolist()}


def channel_from_json(obj: dict) -> AffineChannel:
    """Parse the shared JSON channel schema."""
    if "eta" in obj:
        eta = np.asarray(obj["eta"], dtype=float)
        if eta.shape != (3,):
            raise BadDimension("eta must have 3 components")
        return AffineChannel.from_eta(eta)
    if "A" in obj:
        A = np.asarray(obj["A"], dtype=float)
        b = np.asarray(obj.get("b", np.zeros(3)), dtype=float)
        return AffineChannel(A, b)
    raise BadDimension("channel JSON must contain 'eta' or 'A'")
