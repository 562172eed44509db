"""Small dense linear-algebra kernel for dimensions up to 8.

Everything here operates on plain numpy arrays: complex square matrices of
dimension 2, 4 or 8, and real 3x3 matrices. All functions are pure.
"""

from __future__ import annotations

import numpy as np

from .errors import BadDimension, NonHermitianInput

HERMITIAN_TOL = 1e-12

SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
PAULIS = (np.eye(2, dtype=complex), SIGMA_X, SIGMA_Y, SIGMA_Z)


def require_hermitian(M: np.ndarray, tol: float = HERMITIAN_TOL) -> np.ndarray:
    M = np.asarray(M, dtype=complex)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise BadDimension(f"expected a square matrix, got shape {M.shape}")
    dev = np.max(np.abs(M - M.conj().T))
    if dev > tol:
        raise NonHermitianInput(f"Hermitian deviation {dev:.3e} exceeds {tol:.1e}")
    return M


def hermitian_eig(M: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix.

    Returns (eigenvalues, eigenvectors) with real eigenvalues sorted
    ascending and orthonormal eigenvectors as columns.

    Raises NonHermitianInput if M is not Hermitian within 1e-12.
    """
    M = require_hermitian(M)
    w, V = np.linalg.eigh(M)
    return w, V


def svd3(A: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Singular value decomposition of a real 3x3 matrix.

    Returns (U, sigma, V) with A = U @ diag(sigma) @ V.T, U and V
    orthogonal, and sigma nonnegative in descending order.
    """
    A = np.asarray(A, dtype=float)
    if A.shape != (3, 3):
        raise BadDimension(f"expected 3x3, got shape {A.shape}")
    U, s, Vt = np.linalg.svd(A)
    return U, s, Vt.T


def unitary_exp(H: np.ndarray, t: float) -> np.ndarray:
    """exp(-i H t) for Hermitian H, via eigendecomposition (hbar = 1)."""
    w, V = hermitian_eig(H)
    phases = np.exp(-1j * w * t)
    return (V * phases) @ V.conj().T


def partial_trace_ancilla(rho: np.ndarray, ancilla_dim: int = 4) -> np.ndarray:
    """Trace out the ancilla of a qubit (x) ancilla state.

    Tensor ordering is system (x) ancilla, row-major: index =
    qubit_index * ancilla_dim + ancilla_index.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (2 * ancilla_dim, 2 * ancilla_dim):
        raise BadDimension(
            f"expected dim {2 * ancilla_dim}, got shape {rho.shape}"
        )
    r = rho.reshape(2, ancilla_dim, 2, ancilla_dim)
    return np.einsum("iaja->ij", r)
