"""Discrete Heisenberg-Weyl operator algebra.

The displacement operators on C^d are built from the cyclic shift X
(X|j> = |j+1 mod d>) and the clock Z (Z|j> = omega^j |j>, omega = exp(2 pi i/d))
as

    D(k, l) = tau^(k l) X^k Z^l,        tau = -exp(i pi / d).

tau is a primitive 2d-th root of unity for even d and a d-th root for odd d;
omega = tau^2 in both cases.  All phase arithmetic is done on integer
exponents of tau modulo 2d, so group relations hold exactly:

    D(k,l) D(s,t) = tau^e D((k+s) mod d, (l+t) mod d),
    e = k l + s t + 2 l s - k' l'   (mod 2d),

with (k', l') the reduced index.  When no index reduction occurs the exponent
collapses to the familiar l s - k t; the extra term is the reduction
correction, which matters for even d where tau^d = -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DimensionMismatchError, NotUnitaryError
from .matcore import check_dim, hs_norm

UNITARY_TOL = 1e-10
# Overlap modulus within this (times d) of d detects proportionality to a
# single displacement operator; exact group structure sits ~6 orders above
# floating noise at the target dimensions.
CLIFFORD_OVERLAP_TOL = 1e-8
_PHASE_SNAP_TOL = 1e-6

_STACK_CACHE_MAX_DIM = 16


def omega(d: int) -> complex:
    """Primitive d-th root of unity exp(2 pi i / d)."""
    return np.exp(2j * np.pi / d)


def tau_power(d: int, e) -> complex | np.ndarray:
    """tau^e with tau = -exp(i pi / d), for integer exponent(s) e.

    The exponent is reduced mod 2d before exponentiation so the returned
    angle is always in [0, 2 pi).
    """
    m = (np.asarray(e, dtype=np.int64) * (d + 1)) % (2 * d)
    val = np.exp(1j * np.pi * m / d)
    return complex(val) if np.isscalar(e) or np.ndim(e) == 0 else val


@dataclass(frozen=True)
class WeylIndex:
    """Phase-space point (k, l) in Z_d x Z_d."""

    k: int
    l: int
    dim: int

    def __post_init__(self):
        check_dim(self.dim)
        if not (0 <= self.k < self.dim and 0 <= self.l < self.dim):
            raise ValueError(
                f"index ({self.k}, {self.l}) out of range for dimension {self.dim}"
            )


@dataclass(frozen=True)
class PhaseExponent:
    """Integer exponent e of tau, stored modulo 2d."""

    exponent: int
    dim: int

    def __post_init__(self):
        check_dim(self.dim)
        object.__setattr__(self, "exponent", self.exponent % (2 * self.dim))

    @property
    def value(self) -> complex:
        """The unimodular phase tau^e."""
        return tau_power(self.dim, self.exponent)


@dataclass(frozen=True)
class WeylOperator:
    """A displacement operator together with its phase-space index."""

    index: WeylIndex
    matrix: np.ndarray

    @property
    def dim(self) -> int:
        return self.index.dim


def weyl_matrix(d: int, k: int, l: int) -> np.ndarray:
    """Matrix of D(k, l); single nonzero per column: D[(j+k) mod d, j] = tau^(kl+2lj)."""
    d = check_dim(d)
    if not (0 <= k < d and 0 <= l < d):
        raise ValueError(f"index ({k}, {l}) out of range for dimension {d}")
    j = np.arange(d)
    m = np.zeros((d, d), dtype=complex)
    m[(j + k) % d, j] = tau_power(d, k * l + 2 * l * j)
    return m


def weyl_op(d: int, k: int, l: int) -> WeylOperator:
    """Construct D(k, l) with its index; D(0, 0) is the identity."""
    m = weyl_matrix(d, k, l)
    m.setflags(write=False)
    return WeylOperator(WeylIndex(k, l, d), m)


def _build_stack(d: int) -> np.ndarray:
    j = np.arange(d)
    stack = np.zeros((d, d, d, d), dtype=complex)
    for k in range(d):
        for l in range(d):
            stack[k, l, (j + k) % d, j] = tau_power(d, k * l + 2 * l * j)
    stack.setflags(write=False)
    return stack


@lru_cache(maxsize=8)
def _cached_stack(d: int) -> np.ndarray:
    return _build_stack(d)


def weyl_stack(d: int) -> np.ndarray:
    """All d^2 displacement matrices as an array indexed [k, l]."""
    d = check_dim(d)
    if d <= _STACK_CACHE_MAX_DIM:
        return _cached_stack(d)
    return _build_stack(d)


def weyl_coefficient_table(a: np.ndarray) -> np.ndarray:
    """Table of tr(D(k, l) A) over all (k, l), without materializing operators.

    Uses the one-nonzero-per-column structure: tr(D(k,l) A) =
    tau^(kl) sum_j omega^(lj) A[j, (j+k) mod d].
    """
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    d = check_dim(a.shape[0])
    j = np.arange(d)
    gathered = a[j[None, :], (j[None, :] + j[:, None]) % d]  # [k, j] = A[j, (j+k)%d]
    fourier = np.exp(2j * np.pi * np.outer(j, j) / d)  # [j, l] = omega^(jl)
    return tau_power(d, np.outer(j, j)) * (gathered @ fourier)


def weyl_expand(coefficients: np.ndarray) -> np.ndarray:
    """Exact inverse of :func:`weyl_coefficient_table`.

    Expands A = (1/d) sum tr(D(k,l)^dag A) D(k,l) over the orthogonal operator
    basis.  The adjoint coefficients come from the stored table through
    D(k,l)^dag = tau^(-e) D(-k, -l) with the integer group-law exponent e, so
    for Hermitian A this coincides with the conjugate-coefficient expansion
    (1/d) sum c* D, and for general A the round trip is still exact.
    """
    c = np.asarray(coefficients, dtype=complex)
    if c.ndim != 2 or c.shape[0] != c.shape[1]:
        raise ValueError(f"expected a square coefficient table, got shape {c.shape}")
    d = check_dim(c.shape[0])
    j = np.arange(d)
    rev = (d - j) % d
    kl = np.outer(j, j)
    # D(k,l) D(-k,-l) = tau^e 1 with e = k l + (-k)(-l) + 2 l (-k) mod 2d.
    e = (kl + np.outer(rev, rev) + 2 * np.outer(j, rev).T) % (2 * d)
    adjoint = tau_power(d, -e) * c[np.ix_(rev, rev)]  # [k, l] = tr(D(k,l)^dag A)
    fourier = np.exp(2j * np.pi * np.outer(j, j) / d)
    h = (adjoint * tau_power(d, kl)) @ fourier / d  # [k, j]
    out = np.empty((d, d), dtype=complex)
    out[(j[:, None] + j[None, :]) % d, j[None, :]] = h
    return out


def weyl_product_phase(a: WeylIndex, b: WeylIndex) -> tuple[PhaseExponent, WeylIndex]:
    """Exact group law: matrix(a) @ matrix(b) = tau^e * matrix(reduced index)."""
    if a.dim != b.dim:
        raise DimensionMismatchError(f"dimension mismatch {a.dim} vs {b.dim}")
    d = a.dim
    k2 = (a.k + b.k) % d
    l2 = (a.l + b.l) % d
    e = (a.k * a.l + b.k * b.l + 2 * a.l * b.k - k2 * l2) % (2 * d)
    return PhaseExponent(e, d), WeylIndex(k2, l2, d)


def weyl_basis_check(d: int) -> bool:
    """True iff tr(D(k,l) D(s,t)^dag) = d delta delta over all d^4 index pairs."""
    d = check_dim(d)
    flat = weyl_stack(d).reshape(d * d, d * d)
    gram = flat @ flat.conj().T
    return float(np.abs(gram - d * np.eye(d * d)).max()) <= 1e-10 * d


def fourier_gate(d: int) -> np.ndarray:
    """Discrete Fourier unitary F[j, k] = omega^(jk) / sqrt(d).

    F normalizes the displacement group: conjugation maps D(k, l) to
    D(-l mod d, k) up to a tau power, so :func:`clifford_conjugation_table`
    always succeeds on it.
    """
    d = check_dim(d)
    j = np.arange(d)
    return np.exp(2j * np.pi * np.outer(j, j) / d) / np.sqrt(d)


def _snap_phase(d: int, measured: complex) -> PhaseExponent | None:
    """Nearest tau^e to a measured unimodular phase; None if nothing is close."""
    candidates = tau_power(d, np.arange(2 * d))
    dist = np.abs(candidates - measured)
    e = int(np.argmin(dist))
    if dist[e] > _PHASE_SNAP_TOL:
        return None
    return PhaseExponent(e, d)


def clifford_conjugation_table(
    u: np.ndarray,
) -> dict[tuple[int, int], tuple[PhaseExponent, WeylIndex]] | None:
    """Conjugation action of a unitary on the displacement operators.

    For each (k, l) the image u D(k,l) u^dag is projected onto the operator
    basis.  If every image is proportional to a single displacement operator
    (overlap modulus d within tolerance, phase on the tau lattice) the full
    permutation-with-phase table is returned; otherwise None, meaning u does
    not normalize the displacement group.
    """
    u = np.asarray(u, dtype=complex)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        raise NotUnitaryError(f"expected a square matrix, got shape {u.shape}")
    d = check_dim(u.shape[0])
    defect = hs_norm(u.conj().T @ u - np.eye(d))
    if defect > UNITARY_TOL * d:
        raise NotUnitaryError(f"unitarity defect {defect:.3e} exceeds {UNITARY_TOL * d:.3e}")

    udag = u.conj().T
    table: dict[tuple[int, int], tuple[PhaseExponent, WeylIndex]] = {}
    for k in range(d):
        for l in range(d):
            image = u @ weyl_matrix(d, k, l) @ udag
            # tr(D(s,t)^dag image) = conj(tr(D(s,t) image^dag))
            overlaps = np.conjugate(weyl_coefficient_table(image.conj().T))
            hits = np.argwhere(np.abs(np.abs(overlaps) - d) <= CLIFFORD_OVERLAP_TOL * d)
            if len(hits) != 1:
                return None
            s, t = (int(hits[0][0]), int(hits[0][1]))
            phase = _snap_phase(d, overlaps[s, t] / d)
            if phase is None:
                return None
            table[(k, l)] = (phase, WeylIndex(s, t, d))
    return table


def is_clifford(u: np.ndarray) -> bool:
    """Whether conjugation by u permutes the displacement operators (up to phase)."""
    return clifford_conjugation_table(u) is not None
