"""Quantum-network simulation of unital single-qubit channels.

Any unital CP channel factors (see channel.canonical_form) into a rotation,
a diagonal Pauli mixture, and another rotation. The network realises the
mixture with an ancilla register prepared in a superposition whose
amplitude-squares are the mixture weights; only those weights matter for
the induced channel, so amplitudes are kept real and nonnegative here.

run_exact applies the three stages on the density matrix directly;
run_sampled draws mixture branches with a seeded generator (numpy PCG64)
and averages, converging to run_exact at the usual 1/sqrt(n) rate.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import channel as qchannel
from . import geometry
from .errors import NotCP, NotUnital, QubitGeomError

# Bloch-rotation matrices of the four Pauli conjugations.
_VERTEX_ROTATIONS = [np.diag(v) for v in geometry.VERTICES]


@dataclass(frozen=True)
class NetworkSpec:
    """Compiled network: pre-rotation u1, Pauli-mixture amplitudes,
    post-rotation u2 (all acting on Bloch vectors)."""

    u1: np.ndarray
    u2: np.ndarray
    amplitudes: np.ndarray

    def __post_init__(self):
        u1 = np.array(self.u1, dtype=float).reshape(3, 3)
        u2 = np.array(self.u2, dtype=float).reshape(3, 3)
        amps = np.array(self.amplitudes, dtype=float).reshape(4)
        if abs(np.sum(amps**2) - 1.0) > 1e-12:
            raise QubitGeomError("amplitudes must have unit square-sum")
        for M in (u1, u2):
            if np.max(np.abs(M.T @ M - np.eye(3))) > 1e-10 or np.linalg.det(M) < 0:
                raise QubitGeomError("u1, u2 must be proper rotations")
        for a in (u1, u2, amps):
            a.setflags(write=False)
        object.__setattr__(self, "u1", u1)
        object.__setattr__(self, "u2", u2)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def weights(self) -> np.ndarray:
        return self.amplitudes**2

    def to_json(self) -> dict:
        return {
            "u1": self.u1.tolist(),
            "u2": self.u2.tolist(),
            "amplitudes": self.amplitudes.tolist(),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "NetworkSpec":
        return cls(np.asarray(obj["u1"]), np.asarray(obj["u2"]),
                   np.asarray(obj["amplitudes"]))


def compile_channel(ch: qchannel.AffineChannel) -> NetworkSpec:
    """Compile a unital CP channel into the rotation/mixture/rotation form.

    The canonical factorisation A = Q diag(delta) Q^T R may hand back a
    signed diagonal outside the CP tetrahedron even for CP input; flipping
    two signs of delta is itself a pi-rotation, which is folded into the
    pre-rotation. Diagonal CP channels compile without rotations.
    """
    if not ch.is_unital:
        raise NotUnital("the network realises unital channels only")
    ok, min_eig = qchannel.is_cp(ch)
    if not ok:
        raise NotCP(f"channel is not CP (Choi min eigenvalue {min_eig:.3e})")

    if ch.is_diagonal and geometry.in_D(ch.eta):
        weights = np.clip(geometry.pauli_weights(ch.eta).p, 0.0, None)
        amps = np.sqrt(weights / np.sum(weights))
        return NetworkSpec(np.eye(3), np.eye(3), amps)

    form = qchannel.canonical_form(ch)
    for flip in _VERTEX_ROTATIONS:
        v = np.diag(flip)
        delta = form.delta * v
        if geometry.in_D(delta):
            u1 = flip @ form.Q.T @ form.R
            u2 = form.Q
            weights = np.clip(geometry.pauli_weights(delta).p, 0.0, None)
            amps = np.sqrt(weights / np.sum(weights))
            return NetworkSpec(u1, u2, amps)
    raise NotCP("no sign convention places the diagonal inside the tetrahedron")


def run_exact(spec: NetworkSpec, rho0: np.ndarray) -> np.ndarray:
    """Exact (density-matrix) execution of the network."""
    s = qchannel.density_to_bloch(np.asarray(rho0, dtype=complex))
    s = spec.u1 @ s
    s = geometry.mixture_to_eta(geometry.PauliMixture(spec.weights)) * s
    s = spec.u2 @ s
    return qchannel.bloch_to_density(s)


def run_sampled(spec: NetworkSpec, rho0: np.ndarray, n: int,
                seed: int) -> tuple[np.ndarray, float]:
    """Monte Carlo execution: sample mixture branches and average.

    Deterministic for a fixed seed (numpy default_rng, PCG64). Returns the
    averaged density matrix and a multinomial standard-error estimate.
    """
    if n < 1:
        raise QubitGeomError("sample count must be >= 1")
    rng = np.random.default_rng(seed)
    weights = spec.weights
    counts = rng.multinomial(n, weights / np.sum(weights))
    s0 = spec.u1 @ qchannel.density_to_bloch(np.asarray(rho0, dtype=complex))
    s_avg = np.zeros(3)
    for k, c in enumerate(counts):
        if c:
            s_avg += (c / n) * (geometry.VERTICES[k] * s0)
    s_avg = spec.u2 @ s_avg
    # Convexity keeps |s_avg| <= |s0| <= 1 up to float fuzz.
    norm = np.linalg.norm(s_avg)
    if norm > 1.0:
        s_avg = s_avg / norm
    p_hat = counts / n
    stderr = float(np.sqrt(max(0.0, 1.0 - np.sum(p_hat**2)) / n))
    return qchannel.bloch_to_density(s_avg), stderr


def induced_channel(spec: NetworkSpec) -> qchannel.AffineChannel:
    """Affine channel implemented by the network (for roundtrip checks)."""
    mix = np.diag(geometry.mixture_to_eta(geometry.PauliMixture(spec.weights)))
    return qchannel.AffineChannel(spec.u2 @ mix @ spec.u1, np.zeros(3))
