"""Geometry of single-qubit channels.

Unital single-qubit channels in their Bloch-sphere affine form: complete
positivity via the Choi matrix, the tetrahedron of CP diagonal maps and
projections onto it (best-CP approximation), Hamiltonian generation of
channels, network simulation, optimal QKD eavesdropping, and the
decomposition of positive maps into CP plus CP-after-transpose.
"""

from .channel import (
    AffineChannel,
    CanonicalForm,
    apply,
    apply_density,
    bloch_to_density,
    canonical_form,
    catalog,
    channel_from_json,
    channel_to_json,
    choi,
    density_to_bloch,
    is_cp,
    is_positive_unital,
)
from .dynamics import (
    CouplingSpec,
    Trajectory,
    design_coupling,
    eta_of_t,
    simulate_reduced,
    trajectory,
    trajectory_to_csv,
)
from .errors import (
    BadDimension,
    DisturbanceOutOfRange,
    EmptyIntersection,
    NonHermitianInput,
    NotCP,
    NotUnital,
    OutsideCube,
    QubitGeomError,
    SymmetryViolation,
    UnknownName,
    UnphysicalBloch,
    WeightsNotNormalized,
)
from .geometry import (
    PauliMixture,
    SWDecomposition,
    compose,
    in_D,
    mixture_to_eta,
    pauli_weights,
    project_constrained,
    project_to_D,
    sw_decompose,
)
from .linalg import hermitian_eig, partial_trace_ancilla, svd3, unitary_exp
from .network import NetworkSpec, compile_channel, run_exact, run_sampled
from .qkd import (
    AttackReport,
    Protocol,
    brute_force_optimum,
    optimal_attack,
    overlap,
    probe_overlaps_dilation,
    success_probability,
)

__all__ = [
    "AffineChannel", "CanonicalForm", "apply", "apply_density",
    "bloch_to_density", "canonical_form", "catalog", "channel_from_json",
    "channel_to_json", "choi", "density_to_bloch", "is_cp",
    "is_positive_unital",
    "CouplingSpec", "Trajectory", "design_coupling", "eta_of_t",
    "simulate_reduced", "trajectory", "trajectory_to_csv",
    "PauliMixture", "SWDecomposition", "compose", "in_D", "mixture_to_eta",
    "pauli_weights", "project_constrained", "project_to_D", "sw_decompose",
    "hermitian_eig", "partial_trace_ancilla", "svd3", "unitary_exp",
    "NetworkSpec", "compile_channel", "run_exact", "run_sampled",
    "AttackReport", "Protocol", "brute_force_optimum", "optimal_attack",
    "overlap", "probe_overlaps_dilation", "success_probability",
    "QubitGeomError", "NonHermitianInput", "BadDimension", "UnphysicalBloch",
    "NotUnital", "NotCP", "UnknownName", "WeightsNotNormalized",
    "EmptyIntersection", "OutsideCube", "SymmetryViolation",
    "DisturbanceOutOfRange",
]

__version__ = "0.1.0"
