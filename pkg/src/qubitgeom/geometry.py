"""Geometry of diagonal unital channels in eta-space.

The completely positive diagonal unital channels form a regular tetrahedron
D with vertices at the identity (1,1,1) and the three pi-rotations
R_x = (1,-1,-1), R_y = (-1,1,-1), R_z = (-1,-1,1). Equivalently D is cut
out of the cube [-1,1]^3 by the four half-spaces

    |eta_x + eta_y| <= 1 + eta_z,    |eta_x - eta_y| <= 1 - eta_z.

This module provides membership tests, the linear correspondence with Pauli
mixtures, Euclidean (and constrained) projection onto D - the best-CP
approximation of a positive map - and the decomposition of any positive
diagonal unital map into a convex mixture of a CP part and a CP part
composed with the transpose.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import EmptyIntersection, OutsideCube, WeightsNotNormalized

# Rows n with D = {eta : n . eta <= 1}; row k is opposite vertex k of
# (identity, R_x, R_y, R_z) and n . eta = 1 - 4 * weight_k.
FACE_NORMALS = np.array(
    [
        [-1.0, -1.0, -1.0],
        [-1.0, 1.0, 1.0],
        [1.0, -1.0, 1.0],
        [1.0, 1.0, -1.0],
    ]
)

VERTICES = np.array(
    [
        [1.0, 1.0, 1.0],
        [1.0, -1.0, -1.0],
        [-1.0, 1.0, -1.0],
        [-1.0, -1.0, 1.0],
    ]
)

# Cube corners outside D; corner k is the antipode of vertex k.
NONCP_CORNERS = -VERTICES

TRANSPOSE_ETA = np.array([1.0, -1.0, 1.0])


def _eta(eta) -> np.ndarray:
    eta = np.asarray(eta, dtype=float)
    if eta.shape != (3,):
        raise ValueError(f"eta must have 3 components, got shape {eta.shape}")
    return eta


def in_D(eta, tol: float = 1e-9) -> bool:
    """Tetrahedron membership: true iff eta is a CP diagonal unital map."""
    eta = _eta(eta)
    return bool(np.all(FACE_NORMALS @ eta <= 1.0 + tol))


@dataclass(frozen=True)
class PauliMixture:
    """Weights (p_I, p_x, p_y, p_z) over the four tetrahedron vertices.

    Weights always sum to 1; they are all nonnegative exactly when the
    corresponding eta lies in D. Negative entries are allowed and flagged
    through `signed` so that positive-but-not-CP maps keep an (affine)
    decomposition.
    """

    p: np.ndarray

    def __post_init__(self):
        p = np.array(self.p, dtype=float).reshape(4)
        p.setflags(write=False)
        object.__setattr__(self, "p", p)

    @property
    def signed(self) -> bool:
        return bool(np.min(self.p) < -1e-12)


def pauli_weights(eta) -> PauliMixture:
    """Vertex weights of eta: p_k = (1 - n_k . eta) / 4."""
    eta = _eta(eta)
    return PauliMixture((1.0 - FACE_NORMALS @ eta) / 4.0)


def mixture_to_eta(p) -> np.ndarray:
    """Convex (or affine) combination of the vertices; inverse of
    pauli_weights."""
    p = np.asarray(p.p if isinstance(p, PauliMixture) else p, dtype=float)
    if abs(p.sum() - 1.0) > 1e-12:
        raise WeightsNotNormalized(f"weights sum to {p.sum()}, expected 1")
    return VERTICES.T @ p


def compose(a, b) -> np.ndarray:
    """Composition of two diagonal maps: componentwise product."""
    return _eta(a) * _eta(b)


def _project_polytope(y: np.ndarray, free: np.ndarray, fixed_vals: np.ndarray,
                      tol: float = 1e-9) -> np.ndarray:
    """Nearest point of D intersected with {eta[~free] = fixed_vals} to y.

    Enumerates active sets of the four face constraints and solves each KKT
    system; the projection onto a nonempty convex polytope is always among
    the feasible candidates. Raises EmptyIntersection when none exists.
    """
    n_fixed = int(np.sum(~free))
    eqs = []
    rhs = []
    for idx, is_free in enumerate(free):
        if not is_free:
            row = np.zeros(3)
            row[idx] = 1.0
            eqs.append(row)
    E = np.array(eqs).reshape(n_fixed, 3)
    e = np.asarray(fixed_vals, dtype=float).reshape(n_fixed)

    best = None
    best_d2 = np.inf
    for size in range(4):
        for active in combinations(range(4), size):
            C = FACE_NORMALS[list(active)]
            m = n_fixed + len(active)
            K = np.zeros((3 + m, 3 + m))
            K[:3, :3] = np.eye(3)
            G = np.vstack([E, C]) if m else np.zeros((0, 3))
            K[:3, 3:] = G.T
            K[3:, :3] = G
            rhs_vec = np.concatenate([y, e, np.ones(len(active))])
            try:
                sol = np.linalg.solve(K, rhs_vec)
            except np.linalg.LinAlgError:
                sol, *_ = np.linalg.lstsq(K, rhs_vec, rcond=None)
            x = sol[:3]
            if m and np.max(np.abs(G @ x - rhs_vec[3:])) > tol:
                continue  # inconsistent active set
            if np.any(FACE_NORMALS @ x > 1.0 + tol):
                continue
            d2 = float(np.sum((x - y) ** 2))
            if d2 < best_d2 - 1e-15:
                best_d2 = d2
                best = x
    if best is None:
        raise EmptyIntersection("constraint slice does not meet the tetrahedron")
    return best


def project_to_D(eta) -> np.ndarray:
    """Euclidean nearest point of the tetrahedron D.

    The trace inner product on diagonal unital maps reduces to the
    Euclidean metric in eta-space, so this is the best-CP approximation.
    """
    eta = _eta(eta)
    if in_D(eta, tol=0.0):
        return eta.copy()
    return _project_polytope(eta, np.ones(3, dtype=bool), np.zeros(0))


def project_constrained(eta, free_mask, fixed_values) -> np.ndarray:
    """Nearest point of D within an axis-aligned affine slice.

    free_mask marks the coordinates allowed to vary; fixed_values pins the
    remaining coordinates, in coordinate order. Raises EmptyIntersection
    when the slice misses D.
    """
    eta = _eta(eta)
    free = np.asarray(free_mask, dtype=bool).reshape(3)
    fixed_vals = np.asarray(fixed_values, dtype=float).reshape(int(np.sum(~free)))
    return _project_polytope(eta, free, fixed_vals)


@dataclass(frozen=True)
class SWDecomposition:
    """Positive map as p * cp1 + (1 - p) * (cp2 o transpose).

    cp1 and cp2 both lie in D; corner = compose(cp2, transpose) is the
    non-CP cube corner whose pyramid contains the input.
    """

    p: float
    cp1: np.ndarray
    corner: np.ndarray
    cp2: np.ndarray

    def reconstruct(self) -> np.ndarray:
        return self.p * self.cp1 + (1.0 - self.p) * compose(self.cp2, TRANSPOSE_ETA)


def sw_decompose(eta) -> SWDecomposition:
    """Split a positive diagonal unital map into CP and CP-after-transpose.

    Inside D the split is trivial (p = 1). Outside, eta lies in exactly one
    of the four pyramids between a face of D and the cube corner behind it;
    the line from that corner through eta meets the opposite face of D at
    cp1, and the corner itself is a transposed tetrahedron vertex cp2.
    """
    eta = _eta(eta)
    if np.max(np.abs(eta)) > 1.0 + 1e-12:
        raise OutsideCube(f"eta {eta} outside [-1, 1]^3")
    slack = FACE_NORMALS @ eta
    if np.all(slack <= 1.0 + 1e-12):
        cp2 = np.array([1.0, 1.0, 1.0])
        return SWDecomposition(1.0, eta.copy(), compose(cp2, TRANSPOSE_ETA), cp2)
    k = int(np.argmax(slack))  # the single violated face
    corner = NONCP_CORNERS[k]
    # eta = lam * corner + (1 - lam) * cp1 with cp1 on the face n_k . x = 1.
    lam = (slack[k] - 1.0) / 2.0
    if lam > 1.0 - 1e-14:
        cp1 = corner / 3.0  # centroid of the opposite face
    else:
        cp1 = (eta - lam * corner) / (1.0 - lam)
    cp2 = compose(corner, TRANSPOSE_ETA)  # transpose is an involution
    return SWDecomposition(float(1.0 - lam), cp1, corner, cp2)
