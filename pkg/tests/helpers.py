"""Independent oracle constructions shared by the test modules.

Everything here is built the slow, obvious way (explicit matrix powers,
explicit traces) so it cannot share failure modes with the structured
implementations under test.
"""

import numpy as np


def naive_weyl_matrix(d: int, k: int, l: int) -> np.ndarray:
    """tau^(kl) X^k Z^l from explicit matrix powers."""
    x = np.zeros((d, d), dtype=complex)
    x[(np.arange(d) + 1) % d, np.arange(d)] = 1.0
    z = np.diag(np.exp(2j * np.pi * np.arange(d) / d))
    tau = -np.exp(1j * np.pi / d)
    return tau ** (k * l) * np.linalg.matrix_power(x, k) @ np.linalg.matrix_power(z, l)


def naive_char_table(a: np.ndarray) -> np.ndarray:
    """tr(D(k,l) A) by explicit operator construction and np.trace."""
    d = a.shape[0]
    out = np.empty((d, d), dtype=complex)
    for k in range(d):
        for l in range(d):
            out[k, l] = np.trace(naive_weyl_matrix(d, k, l) @ a)
    return out


def naive_jordan_lie(s: np.ndarray, dkl: np.ndarray) -> tuple[float, float]:
    """(J, I) from the anticommutator/commutator norms, nothing shared."""
    anti = dkl @ s + s @ dkl
    comm = dkl @ s - s @ dkl
    j = 0.5 * np.trace(anti @ anti.conj().T).real
    i = 0.5 * np.trace(comm @ comm.conj().T).real
    return float(j), float(i)


def random_hermitian(d: int, rng: np.random.Generator) -> np.ndarray:
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    return (g + g.conj().T) / 2
