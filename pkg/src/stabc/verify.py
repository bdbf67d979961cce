"""Named verification suites behind the ``verify`` CLI command.

Each suite replays one block of the library's quantitative claims on freshly
sampled states and returns :class:`CheckResult` rows with stable, greppable
check ids.  Sub-seeds derive from the master seed by a fixed counter scheme,
``SeedSequence([master_seed, suite_code])``, so every suite is individually
reproducible regardless of which other suites ran.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .charfun import char_table, lp_moment, reconstruct, sqrt_char_table
from .complexity import (
    RhoPFamily,
    batch_complexity,
    complexity_by_definition,
    complexity_by_moments,
    complexity_report,
    complexity_upper_bound,
    concavity_witness,
    convexity_scan,
    convexity_witness_states,
    near_pure_curvature_offset,
    pure_complexity_floor,
    qubit_complexity,
    rho_p_complexity_analytic,
    rho_p_second_derivative,
    rho_p_expansion_residual,
    rho_p_state,
)
from .matcore import (
    DensityState,
    haar_unitary,
    hs_norm,
    psd_sqrt,
    random_mixed,
    random_pure,
)
from .states import (
    bloch_to_state,
    BlochVector,
    certify_fiducial,
    enumerate_stabilizer_states,
    known_fiducial,
)
from .weyl import (
    WeylIndex,
    clifford_conjugation_table,
    fourier_gate,
    tau_power,
    weyl_basis_check,
    weyl_matrix,
    weyl_product_phase,
    weyl_stack,
)

DEFAULT_DIMS = (2, 3, 4, 5)
_PRIMES = (2, 3, 5, 7, 11, 13)


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    observed: float
    tolerance: float | None
    passed: bool
    note: str = ""


def _rng_for(seed: int, suite_code: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([int(seed), int(suite_code)]))


def _leq(check_id: str, observed: float, tol: float, note: str = "") -> CheckResult:
    return CheckResult(check_id, float(observed), float(tol), bool(observed <= tol), note)


def _sample_states(d: int, n: int, rng: np.random.Generator) -> list[DensityState]:
    """Deterministic mix of pure, rank-2 and full-rank states."""
    out = []
    for i in range(n):
        rank = (1, min(2, d), d)[i % 3]
        out.append(random_mixed(d, rank, rng))
    return out


# -- suites -------------------------------------------------------------------


def suite_weyl(dims=None, samples=None, seed=0) -> list[CheckResult]:
    dims = tuple(dims) if dims else (2, 3, 4, 5, 7)
    rng = _rng_for(seed, 1)
    results = []
    for d in dims:
        ok = weyl_basis_check(d)
        results.append(
            CheckResult(f"weyl-basis-orthogonality-d{d}", 1.0 if ok else 0.0,
                        None, ok, "1 = orthogonal operator basis")
        )
    for d in dims:
        if d > 8:
            continue
        worst = 0.0
        for k1 in range(d):
            for l1 in range(d):
                for k2 in range(d):
                    for l2 in range(d):
                        a, b = WeylIndex(k1, l1, d), WeylIndex(k2, l2, d)
                        phase, c = weyl_product_phase(a, b)
                        resid = hs_norm(
                            weyl_matrix(d, k1, l1) @ weyl_matrix(d, k2, l2)
                            - phase.value * weyl_matrix(d, c.k, c.l)
                        )
                        worst = max(worst, resid)
        results.append(_leq(f"weyl-product-law-residual-d{d}", worst, 1e-12 * d))
    for d in dims:
        if d % 2 == 0 or d > 8:
            continue
        ok = True
        for k1 in range(d):
            for l1 in range(d):
                for k2 in range(d - k1):
                    for l2 in range(d - l1):
                        e, _ = weyl_product_phase(WeylIndex(k1, l1, d), WeylIndex(k2, l2, d))
                        if e.exponent != (l1 * k2 - k1 * l2) % (2 * d):
                            ok = False
        results.append(CheckResult(f"weyl-unreduced-exponent-law-d{d}", 1.0 if ok else 0.0,
                                   None, ok, "1 = exponent matches ls-kt"))
    for d in dims:
        rho = random_mixed(d, d, rng)
        base = complexity_by_moments(rho)
        ops = weyl_stack(d)
        phases = np.exp(2j * np.pi * rng.uniform(size=(d, d)))
        table = np.einsum("klij,ji->kl", ops, psd_sqrt(rho)) * phases
        rephased = d * d - float(np.sum(np.abs(table) ** 4))
        results.append(_leq(f"weyl-phase-convention-independence-d{d}", abs(rephased - base), 1e-12))
    return results


def suite_charfun(dims=None, samples=None, seed=0) -> list[CheckResult]:
    dims = tuple(dims) if dims else DEFAULT_DIMS
    n = int(samples) if samples else 200
    rng = _rng_for(seed, 2)
    results = []
    for d in dims:
        worst_rt = 0.0
        for _ in range(8):
            a = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
            worst_rt = max(worst_rt, hs_norm(reconstruct(char_table(a)) - a))
        results.append(_leq(f"charfun-roundtrip-d{d}", worst_rt, 1e-10 * d))

        worst_parseval = 0.0
        for _ in range(8):
            a = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
            total = float(np.sum(np.abs(char_table(a).values) ** 2))
            worst_parseval = max(worst_parseval, abs(total - d * float(np.vdot(a, a).real)))
        results.append(_leq(f"charfun-parseval-d{d}", worst_parseval, 1e-9))

        worst_norm = 0.0
        for state in _sample_states(d, n, rng):
            total = float(np.sum(np.abs(sqrt_char_table(state).values) ** 2))
            worst_norm = max(worst_norm, abs(total - d))
        results.append(_leq(f"charfun-sqrt-table-normalization-d{d}", worst_norm, 1e-8))

        worst_collapse = 0.0
        for _ in range(20):
            state = random_pure(d, rng)
            worst_collapse = max(
                worst_collapse,
                float(np.abs(char_table(state).values - sqrt_char_table(state).values).max()),
            )
        results.append(_leq(f"charfun-pure-table-collapse-d{d}", worst_collapse, 1e-10))

        lo = (1 + (d - 1) / (d + 1)) ** 0.25
        hi = d**0.25
        worst_out = 0.0
        for _ in range(500 if samples is None else n):
            m4 = lp_moment(char_table(random_pure(d, rng)), 4.0)
            worst_out = max(worst_out, lo - m4, m4 - hi)
        results.append(_leq(f"charfun-pure-moment4-bracket-d{d}", worst_out, 1e-9))
    return results


def suite_tradeoff(dims=None, samples=None, seed=0) -> list[CheckResult]:
    dims = tuple(dims) if dims else DEFAULT_DIMS
    n = int(samples) if samples else 200
    rng = _rng_for(seed, 3)
    results = []
    for d in dims:
        worst = 0.0
        for state in _sample_states(d, n, rng):
            rep = complexity_report(state)
            worst = max(worst, float(np.abs(rep.jordan_table + rep.lie_table - 2.0).max()))
        results.append(_leq(f"tradeoff-sum-defect-d{d}", worst, 1e-10))
    return results


def suite_dual_path(dims=None, samples=None, seed=0) -> list[CheckResult]:
    dims = tuple(dims) if dims else DEFAULT_DIMS
    n = int(samples) if samples else 200
    rng = _rng_for(seed, 4)
    results = []
    for d in dims:
        worst = 0.0
        for state in _sample_states(d, n, rng):
            worst = max(worst, abs(complexity_by_definition(state) - complexity_by_moments(state)))
        results.append(_leq(f"dual-path-gap-d{d}", worst, 1e-9 * d * d))
    return results


def suite_bounds(dims=None, samples=None, seed=0) -> list[CheckResult]:
    dims = tuple(dims) if dims else (2, 3, 5)
    n = int(samples) if samples else 1000
    rng = _rng_for(seed, 5)
    results = []
    for d in dims:
        pure = np.stack([random_pure(d, rng).rho for _ in range(n)])
        c_pure = batch_complexity(pure)
        floor, ceil = pure_complexity_floor(d), complexity_upper_bound(d)
        results.append(_leq(f"bounds-pure-floor-defect-d{d}", float((floor - c_pure).max()), 1e-9))
        results.append(_leq(f"bounds-pure-ceiling-defect-d{d}", float((c_pure - ceil).max()), 1e-9))

        mixed = np.stack([random_mixed(d, int(rng.integers(1, d + 1)), rng).rho for _ in range(n)])
        c_mixed = batch_complexity(mixed)
        results.append(_leq(f"bounds-mixed-floor-defect-d{d}", float((-c_mixed).max()), 1e-9))
        results.append(_leq(f"bounds-mixed-ceiling-defect-d{d}", float((c_mixed - ceil).max()), 1e-9))
        results.append(
            _leq(f"bounds-maximally-mixed-zero-d{d}",
                 abs(complexity_by_moments(DensityState.maximally_mixed(d))), 1e-10)
        )
    return results


def suite_clifford(dims=None, samples=None, seed=0) -> list[CheckResult]:
    dims = tuple(dims) if dims else (2, 3, 5, 7)
    n = int(samples) if samples else 100
    rng = _rng_for(seed, 6)
    results = []
    for d in dims:
        f = fourier_gate(d)
        table = clifford_conjugation_table(f)
        results.append(CheckResult(f"clifford-fourier-table-d{d}", 1.0 if table else 0.0,
                                   None, table is not None, "1 = conjugation table exists"))
        worst = 0.0
        for state in _sample_states(d, n, rng):
            rotated = DensityState(f @ state.rho @ f.conj().T, check=False)
            worst = max(worst, abs(complexity_by_moments(rotated) - complexity_by_moments(state)))
        results.append(_leq(f"clifford-invariance-gap-d{d}", worst, 1e-9))

        u = haar_unitary(d, rng)
        haar_table = clifford_conjugation_table(u)
        results.append(CheckResult(
            f"clifford-haar-rejected-d{d}", 0.0 if haar_table is None else 1.0,
            None, haar_table is None, "0 = Haar unitary not Clifford"))

        gap = 0.0
        for _ in range(16):
            state = random_pure(d, rng)
            u = haar_unitary(d, rng)
            rotated = DensityState(u @ state.rho @ u.conj().T, check=False)
            gap = max(gap, abs(complexity_by_moments(rotated) - complexity_by_moments(state)))
            if gap > 1e-3:
                break
        results.append(CheckResult(f"clifford-generic-unitary-moves-value-d{d}", gap, None,
                                   gap > 1e-3, "invariance is Clifford-specific (gap > 1e-3)"))
    return results


def suite_complementarity(dims=None, samples=None, seed=0) -> list[CheckResult]:
    dims = tuple(dims) if dims else (2, 3, 5)
    n = int(samples) if samples else 500
    rng = _rng_for(seed, 7)
    results = []
    for d in dims:
        states = [random_pure(d, rng) for _ in range(n)]
        m4_fourth = np.array(
            [float(np.sum(np.abs(char_table(s).values) ** 4)) for s in states]
        )
        c = batch_complexity(np.stack([s.rho for s in states]))
        worst = float(np.abs(m4_fourth + c - d * d).max())
        results.append(_leq(f"complementarity-pure-sum-defect-d{d}", worst, 1e-8))
    return results


def suite_qubit(dims=None, samples=None, seed=0) -> list[CheckResult]:
    n = int(samples) if samples else 1000
    rng = _rng_for(seed, 8)
    worst = 0.0
    for i in range(n):
        direction = rng.standard_normal(3)
        direction /= np.linalg.norm(direction)
        radius = 1.0 if i % 2 == 0 else float(rng.uniform() ** (1 / 3))
        b = BlochVector(*(radius * direction))
        gap = abs(complexity_by_moments(bloch_to_state(b)) - qubit_complexity(b))
        worst = max(worst, gap)
    return [_leq("qubit-closed-form-gap", worst, 1e-9)]


def suite_rho_p(dims=None, samples=None, seed=0) -> list[CheckResult]:
    dims = tuple(dims) if dims else DEFAULT_DIMS
    results = []

    for d in dims:
        psi = DensityState.pure(np.eye(d, dtype=complex)[:, 0])
        fam = RhoPFamily(psi, 0.5)
        c_psi = complexity_by_moments(psi)
        worst = 0.0
        for p in np.linspace(0.0, 1.0, 21):
            analytic = rho_p_complexity_analytic(replace(fam, p=float(p)), c_psi)
            generic = complexity_by_moments(rho_p_state(replace(fam, p=float(p))))
            worst = max(worst, abs(analytic - generic))
        results.append(_leq(f"mixing-family-closed-form-gap-d{d}", worst, 1e-9))

        curv = rho_p_second_derivative(fam, 0.001, 1e-4)
        target = d * d * (d - 1)
        results.append(_leq(f"mixing-family-origin-curvature-error-d{d}",
                            abs(curv - target) / target, 0.01,
                            f"curvature {curv:.4f} vs {target}"))

        edge = rho_p_second_derivative(fam, 1.0 - 1e-4, 5e-5)
        if d == 2:
            ok = np.isfinite(edge) and edge > 0.0
            note = f"curvature {edge:.4f} stays finite and positive (offset {near_pure_curvature_offset(d):.3f})"
        else:
            ok = edge < 0.0
            note = f"curvature {edge:.4f} negative near the pure end"
        results.append(CheckResult(f"mixing-family-near-pure-curvature-sign-d{d}",
                                   float(edge), None, bool(ok), note))

        ratios = []
        eps = 1e-2
        while eps > 1.2e-4:
            r_big = rho_p_expansion_residual(fam, eps)
            r_half = rho_p_expansion_residual(fam, eps / 2)
            ratios.append(r_big / r_half)
            eps /= 2
        worst_ratio = max(abs(r - 4.0) for r in ratios)
        results.append(_leq(f"mixing-family-expansion-quadratic-d{d}", worst_ratio, 1.0,
                            f"halving ratios {['%.3f' % r for r in ratios]}"))

    for d in dims:
        lhs, rhs = concavity_witness(d)
        results.append(CheckResult(f"nonconcavity-witness-d{d}", rhs - lhs, None,
                                   rhs - lhs > 1.0,
                                   f"mixed {lhs:.2e} < mean-projector {rhs:.6f}"))
    return results


def suite_convexity(dims=None, samples=None, seed=0) -> list[CheckResult]:
    dims = tuple(dims) if dims else (2, 3)
    results = []
    for d in dims:
        n = int(samples) if samples else (100000 if d == 2 else 20000)
        violations = convexity_scan(d, n, np.random.SeedSequence([int(seed), 9, d]))
        count = len(violations)
        if d == 2:
            results.append(CheckResult(f"convexity-violations-d{d}", float(count), 0.0,
                                       count == 0, f"{n} sampled mixtures"))
        else:
            rho_a, rho_b, lam = convexity_witness_states(d)
            mixture = DensityState(lam * rho_a.rho + (1 - lam) * rho_b.rho, check=False)
            c_mix = complexity_by_moments(mixture)
            c_avg = lam * complexity_by_moments(rho_a) + (1 - lam) * complexity_by_moments(rho_b)
            results.append(CheckResult(
                f"convexity-witness-found-d{d}", float(count), None, count >= 1,
                f"witness mixture {c_mix:.4f} > average {c_avg:.4f} (+{n} random samples)"))
    return results


def suite_stabilizers(dims=None, samples=None, seed=0) -> list[CheckResult]:
    dims = tuple(d for d in (dims or (2, 3, 5)) if d in _PRIMES)
    rng = _rng_for(seed, 10)
    results = []
    for d in dims:
        group = enumerate_stabilizer_states(d)
        count_ok = len(group.states) == d * (d + 1)
        results.append(CheckResult(f"stabilizer-count-d{d}", float(len(group.states)), None,
                                   count_ok, f"expected {d * (d + 1)}"))
        floor = pure_complexity_floor(d)
        worst = max(abs(complexity_by_moments(s) - floor) for s in group.states)
        results.append(_leq(f"stabilizer-floor-attainment-d{d}", worst, 1e-9))

        n = int(samples) if samples else 300
        c = batch_complexity(np.stack([random_pure(d, rng).rho for _ in range(n)]))
        results.append(_leq(f"stabilizer-floor-not-undercut-d{d}", float((floor - c).max()), 1e-9))
    return results


def suite_fiducials(dims=None, samples=None, seed=0) -> list[CheckResult]:
    results = []
    for d in (2, 3):
        fid = known_fiducial(d)
        results.append(_leq(f"fiducial-overlap-deviation-d{d}", fid.max_deviation, 1e-10))
        c = complexity_by_moments(fid.projector())
        results.append(_leq(f"fiducial-ceiling-attainment-d{d}",
                            abs(c - complexity_upper_bound(d)), 1e-9))
        worst = 0.0
        for k in range(d):
            for l in range(d):
                dkl = weyl_matrix(d, k, l)
                orbit = DensityState(dkl @ fid.projector().rho @ dkl.conj().T, check=False)
                worst = max(worst, abs(complexity_by_moments(orbit) - c))
        results.append(_leq(f"fiducial-orbit-invariance-d{d}", worst, 1e-9))

    _, basis_dev = certify_fiducial(np.array([1.0, 0.0], dtype=complex))
    results.append(CheckResult("fiducial-basis-state-rejected-d2", basis_dev, None,
                               basis_dev >= 0.5, "stabilizer state fails the overlap symmetry"))
    return results


SUITES = {
    "weyl": suite_weyl,
    "charfun": suite_charfun,
    "tradeoff": suite_tradeoff,
    "dual-path": suite_dual_path,
    "bounds": suite_bounds,
    "clifford": suite_clifford,
    "complementarity": suite_complementarity,
    "qubit": suite_qubit,
    "rho-p": suite_rho_p,
    "convexity": suite_convexity,
    "stabilizers": suite_stabilizers,
    "fiducials": suite_fiducials,
}


def run_suites(names, dims=None, samples=None, seed=0) -> list[tuple[str, list[CheckResult]]]:
    """Run the requested suites (or all of them) and collect their results."""
    if not names or names == ["all"]:
        names = list(SUITES)
    out = []
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or 'all'")
        out.append((name, SUITES[name](dims=dims, samples=samples, seed=seed)))
    return out
