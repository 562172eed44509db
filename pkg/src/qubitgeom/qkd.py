"""Symmetric incoherent eavesdropping on four-state and six-state QKD.

Eve couples a probe to each transmitted qubit; in a symmetric incoherent
attack the resulting channel between Alice and Bob is a Pauli channel with
eta_x = eta_z = eta (four-state) or eta_x = eta_y = eta_z = eta (six-state).
The disturbance D = (1 - eta) / 2 is the matched-basis error rate, the
fidelity F = 1 - D the matched-basis agreement rate, and Eve's probability
of correctly guessing an agreed bit from her probe is

    p_c = 1/2 + 1/2 sqrt(1 - overlap^2 / F),

where overlap = <E00|E11> is the inner product of the two probe states Eve
must discriminate. For the four-state protocol overlap = (eta + eta_y)/2,
so Eve pushes eta_y to the tetrahedron boundary eta_y = 2 eta_min - 1; for
the six-state protocol overlap = eta and no freedom remains. The optimum
is valid for nonnegative eta_min, i.e. disturbance at most 1/2.

probe_overlaps_dilation recomputes D, F and the overlap from an explicit
four-dimensional probe dilation with Kraus pieces sqrt(p_k) sigma_k, and
serves as the independent oracle for the closed forms.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import geometry
from .errors import DisturbanceOutOfRange, NotCP, SymmetryViolation
from .linalg import PAULIS

_SYMMETRY_TOL = 1e-9


class Protocol(enum.Enum):
    FOUR_STATE = "four-state"
    SIX_STATE = "six-state"


@dataclass(frozen=True)
class AttackReport:
    """Summary of a symmetric incoherent attack."""

    protocol: Protocol
    eta: np.ndarray
    disturbance: float
    fidelity: float
    overlap: float
    p_c: float

    def to_json(self) -> dict:
        return {
            "protocol": self.protocol.value,
            "eta": self.eta.tolist(),
            "D": self.disturbance,
            "F": self.fidelity,
            "overlap": self.overlap,
            "p_c": self.p_c,
        }


def _symmetric_component(protocol: Protocol, eta: np.ndarray) -> float:
    eta = np.asarray(eta, dtype=float).reshape(3)
    if protocol is Protocol.FOUR_STATE:
        if abs(eta[0] - eta[2]) > _SYMMETRY_TOL:
            raise SymmetryViolation("four-state attacks need eta_x = eta_z")
        return float(eta[0])
    if abs(eta[0] - eta[1]) > _SYMMETRY_TOL or abs(eta[1] - eta[2]) > _SYMMETRY_TOL:
        raise SymmetryViolation("six-state attacks need eta_x = eta_y = eta_z")
    return float(eta[0])


def overlap(protocol: Protocol, eta) -> float:
    """Probe overlap <E00|E11>: (eta + eta_y)/2 four-state, eta six-state."""
    eta = np.asarray(eta, dtype=float).reshape(3)
    sym = _symmetric_component(protocol, eta)
    if protocol is Protocol.FOUR_STATE:
        return (sym + float(eta[1])) / 2.0
    return sym


def success_probability(protocol: Protocol, eta) -> float:
    """Eve's optimal guessing probability on matched, agreeing bits."""
    eta = np.asarray(eta, dtype=float).reshape(3)
    if not geometry.in_D(eta):
        raise NotCP(f"attack channel {eta} is not CP")
    sym = _symmetric_component(protocol, eta)
    F = (1.0 + sym) / 2.0
    ov = overlap(protocol, eta)
    return 0.5 + 0.5 * np.sqrt(max(0.0, 1.0 - ov * ov / F))


def optimal_attack(protocol: Protocol, d_max: float) -> AttackReport:
    """Eve's best symmetric attack at disturbance budget d_max.

    Minimises |<E00|E11>| over the CP channels with symmetric component at
    least eta_min = 1 - 2 d_max; the minimiser sits on the tetrahedron
    boundary (four-state) or is forced to eta = eta_min (six-state).
    """
    if not 0.0 <= d_max <= 0.5:
        raise DisturbanceOutOfRange(f"d_max {d_max} outside [0, 1/2]")
    eta_min = 1.0 - 2.0 * d_max
    if protocol is Protocol.FOUR_STATE:
        eta = np.array([eta_min, 2.0 * eta_min - 1.0, eta_min])
    else:
        eta = np.array([eta_min, eta_min, eta_min])
    ov = overlap(protocol, eta)
    F = (1.0 + eta_min) / 2.0
    p_c = 0.5 + 0.5 * np.sqrt(max(0.0, 1.0 - ov * ov / F))
    return AttackReport(protocol, eta, d_max, 1.0 - d_max, ov, float(p_c))


def probe_overlaps_dilation(eta) -> tuple[float, float, float]:
    """(F, D, overlap) from the explicit probe dilation.

    Kraus operators sqrt(p_k) sigma_k give probe states
    |E_ij> = sum_k <j| K_k |i> |k> in a 4-dimensional probe space; the
    returned scalars are <E00|E00>, <E01|E01> and Re<E00|E11> in the
    computational basis.
    """
    return _dilation_overlaps(eta, np.eye(2, dtype=complex))


def _dilation_overlaps(eta, basis: np.ndarray) -> tuple[float, float, float]:
    """Dilation overlaps with qubit basis vectors given by the columns of
    `basis` (used to verify basis independence for symmetric attacks)."""
    eta = np.asarray(eta, dtype=float).reshape(3)
    if not geometry.in_D(eta):
        raise NotCP(f"eta {eta} is not CP")
    p = np.clip(geometry.pauli_weights(eta).p, 0.0, None)
    kraus = [np.sqrt(pk) * sigma for pk, sigma in zip(p, PAULIS)]
    ket = [basis[:, 0], basis[:, 1]]

    def E(i, j):
        return np.array([ket[j].conj() @ (K @ ket[i]) for K in kraus])

    E00, E01, E11 = E(0, 0), E(0, 1), E(1, 1)
    F = float(np.real(E00.conj() @ E00))
    D = float(np.real(E01.conj() @ E01))
    ov = float(np.real(E00.conj() @ E11))
    return F, D, ov


def brute_force_optimum(protocol: Protocol, d_max: float,
                        resolution: float) -> np.ndarray:
    """Grid-search oracle for optimal_attack.

    Scans the protocol's free eta components over the CP region with
    symmetric component >= eta_min, minimising |overlap|; ties are broken
    by lexicographically smallest eta.
    """
    if not 0.0 < resolution <= 0.1:
        raise DisturbanceOutOfRange(f"resolution {resolution} outside (0, 0.1]")
    if not 0.0 <= d_max <= 0.5:
        raise DisturbanceOutOfRange(f"d_max {d_max} outside [0, 1/2]")
    eta_min = 1.0 - 2.0 * d_max
    sym_grid = np.arange(eta_min, 1.0 + resolution / 2.0, resolution)
    if protocol is Protocol.SIX_STATE:
        # Diagonal segment of D: every grid point with s in [eta_min, 1] is CP.
        vals = np.abs(sym_grid)
        k = int(np.lexsort((sym_grid, vals))[0])
        s = sym_grid[k]
        return np.array([s, s, s])
    y_grid = np.arange(-1.0, 1.0 + resolution / 2.0, resolution)
    S, Y = np.meshgrid(sym_grid, y_grid, indexing="ij")
    pts = np.stack([S.ravel(), Y.ravel(), S.ravel()], axis=1)
    feasible = np.all(pts @ geometry.FACE_NORMALS.T <= 1.0 + 1e-9, axis=1)
    pts = pts[feasible]
    vals = np.abs((pts[:, 0] + pts[:, 1]) / 2.0)
    k = int(np.lexsort((pts[:, 2], pts[:, 1], pts[:, 0], vals))[0])
    return pts[k]
