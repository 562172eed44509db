"""Dynamical generation of diagonal unital channels.

Coupling a qubit to a four-dimensional ancilla with a fixed Hamiltonian

    H = alpha_x sx (x) (|a1><a2| + h.c.)
      + alpha_y sy (x) (|a1><a3| + h.c.)
      + alpha_z sz (x) (|a1><a4| + h.c.),      alpha_x^2+alpha_y^2+alpha_z^2 = 1,

and tracing out the ancilla after a time t produces the diagonal channel

    eta(t) = (1,1,1) cos^2 t + (2 alpha^2 - 1) sin^2 t        (hbar = 1),

a straight line in eta-space from the identity vertex to a point on the
opposite face of the tetrahedron. Conversely any CP point is reachable by
choosing the couplings and the time, which `design_coupling` inverts in
closed form. `simulate_reduced` runs the full 8-dimensional unitary and
serves as the independent oracle for the closed form.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import channel as qchannel
from . import geometry, linalg
from .errors import NotCP, QubitGeomError

_ANCILLA_DIM = 4


@dataclass(frozen=True)
class CouplingSpec:
    """Normalised coupling strengths (alpha_x, alpha_y, alpha_z)."""

    alpha: np.ndarray

    def __post_init__(self):
        a = np.array(self.alpha, dtype=float).reshape(3)
        if abs(np.sum(a * a) - 1.0) > 1e-12:
            raise QubitGeomError(f"alpha^2 sums to {np.sum(a * a)}, expected 1")
        a.setflags(write=False)
        object.__setattr__(self, "alpha", a)

    @classmethod
    def from_alpha2(cls, alpha2) -> "CouplingSpec":
        """Build from the squared couplings (nonnegative, summing to 1)."""
        a2 = np.asarray(alpha2, dtype=float).reshape(3)
        if np.min(a2) < -1e-12:
            raise QubitGeomError("squared couplings must be nonnegative")
        return cls(np.sqrt(np.clip(a2, 0.0, None)))


def eta_of_t(spec: CouplingSpec, t: float) -> np.ndarray:
    """Closed-form channel parameters after evolving for time t."""
    c2 = np.cos(t) ** 2
    s2 = np.sin(t) ** 2
    return c2 * np.ones(3) + s2 * (2.0 * spec.alpha**2 - 1.0)


def design_coupling(target) -> tuple[CouplingSpec, float]:
    """Couplings and time that generate a given CP diagonal channel.

    Inverts eta_of_t: writes target = cos^2(t) (1,1,1) + sin^2(t) f with f
    on the face of the tetrahedron opposite the identity. Returns t in
    [0, pi/2]; the identity target is degenerate and yields t = 0 with the
    conventional coupling (1, 0, 0).
    """
    target = np.asarray(target, dtype=float).reshape(3)
    if not geometry.in_D(target, tol=1e-9):
        raise NotCP(f"target {target} is not a CP diagonal channel")
    s2 = (3.0 - np.sum(target)) / 4.0
    if s2 <= 1e-15:
        return CouplingSpec(np.array([1.0, 0.0, 0.0])), 0.0
    c2 = 1.0 - s2
    f = (target - c2) / s2
    alpha2 = (f + 1.0) / 2.0
    alpha2 = np.clip(alpha2, 0.0, None)
    alpha2 = alpha2 / np.sum(alpha2)
    t = float(np.arcsin(np.sqrt(np.clip(s2, 0.0, 1.0))))
    return CouplingSpec.from_alpha2(alpha2), t


def total_hamiltonian(spec: CouplingSpec) -> np.ndarray:
    """The 8-dimensional coupling Hamiltonian (qubit (x) ancilla)."""
    H = np.zeros((8, 8), dtype=complex)
    paulis = (linalg.SIGMA_X, linalg.SIGMA_Y, linalg.SIGMA_Z)
    for i, (a, sigma) in enumerate(zip(spec.alpha, paulis)):
        hop = np.zeros((_ANCILLA_DIM, _ANCILLA_DIM), dtype=complex)
        hop[0, i + 1] = 1.0
        hop[i + 1, 0] = 1.0
        H += a * np.kron(sigma, hop)
    return H


def simulate_reduced(spec: CouplingSpec, t: float, rho0: np.ndarray) -> np.ndarray:
    """Full-Hilbert-space evolution: evolve rho0 (x) |a1><a1| by
    exp(-iHt) and trace out the ancilla."""
    rho0 = linalg.require_hermitian(rho0)
    anc = np.zeros((_ANCILLA_DIM, _ANCILLA_DIM), dtype=complex)
    anc[0, 0] = 1.0
    full = np.kron(rho0, anc)
    U = linalg.unitary_exp(total_hamiltonian(spec), t)
    evolved = U @ full @ U.conj().T
    return linalg.partial_trace_ancilla(evolved, _ANCILLA_DIM)


@dataclass(frozen=True)
class Trajectory:
    """Sampled path t -> eta(t) in channel-parameter space."""

    times: np.ndarray
    etas: np.ndarray  # shape (n, 3)

    def __post_init__(self):
        times = np.array(self.times, dtype=float).reshape(-1)
        etas = np.array(self.etas, dtype=float).reshape(len(times), 3)
        times.setflags(write=False)
        etas.setflags(write=False)
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "etas", etas)


def trajectory(spec: CouplingSpec, t_grid) -> Trajectory:
    """Evaluate eta_of_t over an ascending grid of times."""
    t_grid = np.asarray(t_grid, dtype=float).reshape(-1)
    if len(t_grid) > 1 and np.any(np.diff(t_grid) < 0):
        raise QubitGeomError("time grid must be ascending")
    etas = np.array([eta_of_t(spec, t) for t in t_grid])
    return Trajectory(t_grid, etas)


def trajectory_to_csv(traj: Trajectory) -> str:
    """CSV rendering: header t,eta_x,eta_y,eta_z and one row per sample,
    floats at 17 significant digits."""
    lines = ["t,eta_x,eta_y,eta_z"]
    for t, eta in zip(traj.times, traj.etas):
        row = [format(float(v), ".17g") for v in (t, *eta)]
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"


def induced_channel(spec: CouplingSpec, t: float) -> qchannel.AffineChannel:
    """The diagonal channel generated at time t, as an AffineChannel."""
    return qchannel.AffineChannel.from_eta(eta_of_t(spec, t))
