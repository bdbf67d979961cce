"""Canonical state families: Bloch-vector qubit states, the pure stabilizer
states of prime dimension, and SIC-POVM fiducial vectors with certification.

The stabilizer enumeration and the fiducial constants are never trusted as
given: every enumerated state is certified against the extremal complexity
value it must attain, and every built-in fiducial is passed through the
overlap certificate at construction.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import (
    DimensionMismatchError,
    NoKnownFiducialError,
    NotNormalizedError,
    NotPrimeError,
)
from .matcore import DensityState, check_dim, hs_norm
from .weyl import WeylIndex, weyl_coefficient_table, weyl_matrix

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)

STABILIZER_DIM_MAX = 13

_BLOCH_NORM_TOL = 1e-12
_FIDUCIAL_TOL = 1e-8
_EXTREMAL_TOL = 1e-9


@dataclass(frozen=True)
class BlochVector:
    """Real 3-vector representing a qubit state rho = (1 + r . sigma) / 2."""

    r1: float
    r2: float
    r3: float

    def __post_init__(self):
        if self.norm() > 1.0 + _BLOCH_NORM_TOL:
            raise ValueError(f"Bloch vector norm {self.norm()} exceeds 1")

    def norm(self) -> float:
        return float(np.sqrt(self.r1**2 + self.r2**2 + self.r3**2))

    def as_array(self) -> np.ndarray:
        return np.array([self.r1, self.r2, self.r3], dtype=float)


def bloch_to_state(b: BlochVector) -> DensityState:
    """Qubit density operator (1 + r . sigma) / 2."""
    if not isinstance(b, BlochVector):
        b = BlochVector(*(float(x) for x in b))
    rho = 0.5 * (np.eye(2, dtype=complex) + b.r1 * SIGMA_X + b.r2 * SIGMA_Y + b.r3 * SIGMA_Z)
    return DensityState(rho, check=False)


def state_to_bloch(rho: DensityState) -> BlochVector:
    """Bloch components r_a = tr(rho sigma_a) of a qubit state."""
    if rho.dim != 2:
        raise DimensionMismatchError(f"Bloch representation needs dimension 2, got {rho.dim}")
    comps = []
    for sigma in (SIGMA_X, SIGMA_Y, SIGMA_Z):
        val = complex(np.trace(rho.rho @ sigma))
        if abs(val.imag) > 1e-12:
            raise ValueError(f"Bloch component has imaginary part {val.imag:.3e}")
        comps.append(val.real)
    return BlochVector(*comps)


def _pure_state_complexity(rho: DensityState) -> float:
    # For projectors sqrt(rho) = rho, so the moment formula needs no eigensolve.
    table = weyl_coefficient_table(rho.rho)
    d = rho.dim
    return float(d * d - np.sum(np.abs(table) ** 4))


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % q for q in range(2, int(n**0.5) + 1))


@dataclass(frozen=True)
class StabilizerSet:
    """All pure stabilizer states of a prime dimension, grouped by generator.

    states[i * dim + m] is the m-th eigenstate (eigenvalues sorted by phase)
    of the displacement operator generating class i, where the generator
    classes are (0, 1) followed by (1, m) for m = 0 .. d-1.
    """

    dim: int
    generators: tuple[WeylIndex, ...]
    states: tuple[DensityState, ...]


def enumerate_stabilizer_states(d: int) -> StabilizerSet:
    """The d (d + 1) pure stabilizer states of a prime dimension d <= 13.

    Each of the d + 1 maximal cyclic subgroups of the displacement group is
    represented by a generator; the joint eigenstates are its eigenvectors.
    Every returned state is certified to attain the extremal complexity value
    d^2 - d, and the set is checked to be pairwise distinct.
    """
    d = check_dim(d)
    if not _is_prime(d):
        raise NotPrimeError(f"stabilizer enumeration needs a prime dimension, got {d}")
    if d > STABILIZER_DIM_MAX:
        raise ValueError(f"stabilizer enumeration capped at d <= {STABILIZER_DIM_MAX}, got {d}")

    generators = [WeylIndex(0, 1, d)] + [WeylIndex(1, m, d) for m in range(d)]
    states: list[DensityState] = []
    floor = d * d - d
    for gen in generators:
        # Unitary generator: the complex Schur form is diagonal, so the Schur
        # basis is an exactly orthonormal eigenbasis.
        t, q = scipy.linalg.schur(weyl_matrix(d, gen.k, gen.l), output="complex")
        phases = np.angle(np.diagonal(t)) % (2 * np.pi)
        for col in np.argsort(phases):
            state = DensityState.pure(q[:, col])
            c = _pure_state_complexity(state)
            if abs(c - floor) > _EXTREMAL_TOL:
                raise ArithmeticError(
                    f"stabilizer eigenstate of {gen} has complexity {c}, expected {floor}"
                )
            states.append(state)

    for i in range(len(states)):
        for j in range(i + 1, len(states)):
            if hs_norm(states[i].rho - states[j].rho) <= 1e-6:
                raise ArithmeticError("stabilizer enumeration produced duplicate states")
    return StabilizerSet(d, tuple(generators), tuple(states))


@dataclass(frozen=True)
class FiducialCandidate:
    """A unit vector with its SIC-overlap certificate."""

    dim: int
    vector: np.ndarray
    certified: bool
    max_deviation: float

    def projector(self) -> DensityState:
        return DensityState.pure(self.vector)


def certify_fiducial(f: np.ndarray) -> tuple[bool, float]:
    """Check the SIC symmetry condition on the displacement orbit of f.

    Computes |<f| D(k,l) |f>|^2 for all (k, l) != (0, 0) and reports the
    maximum deviation from 1/(d+1); the candidate is certified iff that
    deviation is at most 1e-8.
    """
    f = np.asarray(f, dtype=complex).reshape(-1)
    d = check_dim(f.size)
    n = np.linalg.norm(f)
    if abs(n - 1.0) > 1e-10:
        raise NotNormalizedError(f"fiducial candidate has norm {n}, expected 1 within 1e-10")
    table = weyl_coefficient_table(np.outer(f, f.conj()))
    overlaps = np.abs(table) ** 2
    overlaps[0, 0] = 1.0 / (d + 1)  # excluded point
    deviation = float(np.abs(overlaps - 1.0 / (d + 1)).max())
    return deviation <= _FIDUCIAL_TOL, deviation


def known_fiducial(d: int) -> FiducialCandidate:
    """Built-in SIC fiducial vector for d = 2 or d = 3, certified on the spot.

    d = 2: the T-type vector with Bloch direction (1, 1, 1)/sqrt(3);
    d = 3: the unit vector proportional to (0, 1, -1).
    The overlap certificate, not the hardcoded constant, is the source of
    truth: construction fails if certification does.
    """
    d = check_dim(d)
    if d == 2:
        ct = np.sqrt((1 + 1 / np.sqrt(3)) / 2)
        st = np.sqrt((1 - 1 / np.sqrt(3)) / 2)
        vec = np.array([ct, np.exp(1j * np.pi / 4) * st], dtype=complex)
    elif d == 3:
        vec = np.array([0.0, 1.0, -1.0], dtype=complex) / np.sqrt(2)
    else:
        raise NoKnownFiducialError(f"no built-in fiducial for dimension {d}")
    certified, deviation = certify_fiducial(vec)
    if not certified:
        raise ArithmeticError(f"built-in fiducial for d={d} failed certification ({deviation:.3e})")
    vec.setflags(write=False)
    return FiducialCandidate(d, vec, certified, deviation)
