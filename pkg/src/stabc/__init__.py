"""Phase-space complexity of finite-dimensional quantum states.

Heisenberg-Weyl operator algebra with exact phase bookkeeping, characteristic
functions and their L^p moments, the commutator/anticommutator complexity
quantifier (with an independent closed-form route), stabilizer and SIC
extremal-state machinery, and convexity diagnostics.
"""

from .charfun import CharTable, char_table, lp_moment, reconstruct, sqrt_char_table
from .complexity import (
    ComplexityReport,
    ConvexityViolation,
    RhoPFamily,
    batch_complexity,
    complexity_by_definition,
    complexity_by_moments,
    complexity_report,
    complexity_upper_bound,
    concavity_witness,
    convexity_scan,
    convexity_witness_states,
    jordan_lie_terms,
    near_pure_curvature_offset,
    pure_complexity_floor,
    qubit_complexity,
    rho_p_complexity_analytic,
    rho_p_expansion_residual,
    rho_p_second_derivative,
    rho_p_state,
)
from .errors import (
    DimensionMismatchError,
    NegativeEigenvalueError,
    NoKnownFiducialError,
    NotHermitianError,
    NotNormalizedError,
    NotPrimeError,
    NotUnitaryError,
    StateFileError,
)
from .matcore import (
    DIM_CAP,
    DensityState,
    haar_unitary,
    hermitian_eig,
    hs_inner,
    hs_norm,
    mix,
    psd_sqrt,
    random_mixed,
    random_pure,
)
from .states import (
    BlochVector,
    FiducialCandidate,
    StabilizerSet,
    bloch_to_state,
    certify_fiducial,
    enumerate_stabilizer_states,
    known_fiducial,
    state_to_bloch,
)
from .weyl import (
    PhaseExponent,
    WeylIndex,
    WeylOperator,
    clifford_conjugation_table,
    fourier_gate,
    is_clifford,
    omega,
    tau_power,
    weyl_basis_check,
    weyl_coefficient_table,
    weyl_expand,
    weyl_matrix,
    weyl_op,
    weyl_product_phase,
    weyl_stack,
)

__version__ = "0.1.0"

__all__ = [
    "BlochVector",
    "CharTable",
    "ComplexityReport",
    "ConvexityViolation",
    "DIM_CAP",
    "DensityState",
    "DimensionMismatchError",
    "FiducialCandidate",
    "NegativeEigenvalueError",
    "NoKnownFiducialError",
    "NotHermitianError",
    "NotNormalizedError",
    "NotPrimeError",
    "NotUnitaryError",
    "PhaseExponent",
    "RhoPFamily",
    "StabilizerSet",
    "StateFileError",
    "WeylIndex",
    "WeylOperator",
    "batch_complexity",
    "bloch_to_state",
    "certify_fiducial",
    "char_table",
    "clifford_conjugation_table",
    "complexity_by_definition",
    "complexity_by_moments",
    "complexity_report",
    "complexity_upper_bound",
    "concavity_witness",
    "convexity_scan",
    "convexity_witness_states",
    "enumerate_stabilizer_states",
    "fourier_gate",
    "haar_unitary",
    "hermitian_eig",
    "hs_inner",
    "hs_norm",
    "is_clifford",
    "jordan_lie_terms",
    "known_fiducial",
    "lp_moment",
    "mix",
    "near_pure_curvature_offset",
    "omega",
    "psd_sqrt",
    "pure_complexity_floor",
    "qubit_complexity",
    "random_mixed",
    "random_pure",
    "reconstruct",
    "rho_p_complexity_analytic",
    "rho_p_expansion_residual",
    "rho_p_second_derivative",
    "rho_p_state",
    "sqrt_char_table",
    "state_to_bloch",
    "tau_power",
    "weyl_basis_check",
    "weyl_coefficient_table",
    "weyl_expand",
    "weyl_matrix",
    "weyl_op",
    "weyl_product_phase",
    "weyl_stack",
]
