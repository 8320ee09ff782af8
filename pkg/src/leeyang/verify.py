"""Cross-route verification checks.

Each check pits an implementation against an independent route (exhaustive
enumeration, polynomial roots, closed forms, or an algebraic identity) and
reports the worst observed residual against a fixed tolerance. The default
parameters are the acceptance-grade ones; the CLI's --quick profile shrinks
the sweeps for interactive runs.
"""
from __future__ import annotations

import inspect
import math
import time
from dataclasses import dataclass, field

import numpy as np

from . import ising, szego
from .cmv import band_permutation, bandwidth_offsets, floquet_matrix, reorder
from .dynamics import (FIBONACCI_RULES, cat_map_orbit, cat_map_orbit_float64,
                       constant, cat_map_precision_bits, fibonacci_word,
                       couplings_from_word, sample_orbit, shifted_cosine,
                       substitution_fixed_point)
from .dynamics.models import ModelSpec, realize
from .errors import LeeYangError
from .sequences import CouplingSequence
from .spectral import (LabelGroup, circular_distance, detect_gaps, eigenphases,
                       fibonacci_label_group, label_gaps, lee_yang_zeros,
                       markov_label_group, stationary_vector, zeros_of_discriminant)


@dataclass
class CheckResult:
    name: str
    passed: bool
    statistic: float
    tolerance: float
    elapsed: float
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": bool(self.passed),
                "statistic": float(self.statistic), "tolerance": float(self.tolerance),
                "elapsed_seconds": round(self.elapsed, 3), "details": self.details}


def _finish(name, worst, tol, t0, **details) -> CheckResult:
    return CheckResult(name, worst <= tol, float(worst), tol, time.time() - t0, details)


def check_trace_formula(seed: int = 42, cases: int = 200, n_max: int = 12,
                        tol: float = 1e-10) -> CheckResult:
    """Transfer-product partition function against the exhaustive spin sum."""
    t0 = time.time()
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(cases):
        n = int(rng.integers(1, n_max + 1))
        ps = rng.uniform(1e-3, 3.0, n)
        zeta = np.exp(2j * np.pi * rng.uniform())
        brute = ising.partition_bruteforce(ps, zeta)
        trace = ising.partition_via_trace(ps, zeta)
        worst = max(worst, abs(trace - brute) / abs(brute))
    return _finish("trace_formula_oracle", worst, tol, t0, cases=cases, n_max=n_max)


def _best_cyclic_match(a: np.ndarray, b: np.ndarray) -> float:
    """Hausdorff-style worst pairing distance over cyclic alignments of sorted phases."""
    best = np.inf
    for shift in range(a.size):
        worst = float(np.max(circular_distance(np.roll(a, shift), b)))
        best = min(best, worst)
        if best == 0.0:
            break
    return best


def check_zero_sets(seed: int = 43, n_max: int = 8, tol: float = 1e-7) -> CheckResult:
    """Pipeline eigenphases against roots of the brute-force zeta polynomial."""
    t0 = time.time()
    rng = np.random.default_rng(seed)
    worst = 0.0
    for n in range(1, n_max + 1):
        ps = rng.uniform(0.05, 2.0, n)
        phases = lee_yang_zeros(ps)
        roots = np.roots(ising.partition_polynomial(ps)[::-1])
        if roots.size != 2 * n or len(phases) != 2 * n:
            return _finish("zero_set_equivalence", np.inf, tol, t0, failed_count_at=n)
        root_phases = np.sort(np.angle(roots) / (2.0 * np.pi) % 1.0)
        worst = max(worst, _best_cyclic_match(phases.phases, root_phases))
    return _finish("zero_set_equivalence", worst, tol, t0, n_max=n_max)


def check_unit_circle(max_dim: int = 1600, tol: float = 1e-10) -> CheckResult:
    """Lee-Yang certificate: every pipeline eigenvalue sits on the unit circle."""
    t0 = time.time()
    chain_len = max_dim // 2
    runs = {}
    word = substitution_fixed_point(FIBONACCI_RULES, "a", chain_len)
    ps = couplings_from_word(word, {"a": 2.0 / 3.0, "b": 0.01})
    runs[f"fibonacci_chain_{chain_len}"] = lee_yang_zeros(ps).max_circle_deviation

    small = min(400, max_dim)
    for kind in ("cat-map", "skew-shift", "uamo"):
        spec = ModelSpec(kind, small)
        runs[f"{kind}_{small}"] = zeros_of_discriminant(realize(spec).alphas).max_circle_deviation
    spec = ModelSpec("skew-shift", small, params={"sampler": {"kind": "pure-cosine", "lam": 0.9}})
    runs[f"skew-shift_cos_{small}"] = zeros_of_discriminant(realize(spec).alphas).max_circle_deviation

    worst = max(runs.values())
    return _finish("unit_circle_certificate", worst, tol, t0, **runs)


def check_det_identity(seed: int = 44, sizes=(2, 4, 8, 16), draws: int = 50,
                       tol: float = 1e-9) -> CheckResult:
    """Characteristic polynomial against the discriminant form, both boundary phases."""
    t0 = time.time()
    rng = np.random.default_rng(seed)
    worst = 0.0
    for n in sizes:
        alphas = (rng.uniform(-1, 1, n) + 1j * rng.uniform(-1, 1, n)) * 0.6
        for _ in range(draws):
            z = np.exp(2j * np.pi * rng.uniform())
            for theta in (np.pi / 2, np.pi):
                worst = max(worst, szego.det_discriminant_residual(alphas, z, theta))
    return _finish("determinant_identity", worst, tol, t0, sizes=list(sizes), draws=draws)


def check_algebraic_identities(seed: int = 45, draws: int = 60) -> CheckResult:
    """The three 2x2 / trace identities behind the zero-set equivalence."""
    t0 = time.time()
    rng = np.random.default_rng(seed)
    interleave_worst = witness_worst = doubling_worst = 0.0
    for _ in range(draws):
        alpha = complex(*rng.uniform(-0.7, 0.7, 2))
        z = np.exp(2j * np.pi * rng.uniform()) * rng.uniform(0.5, 1.5)
        step = szego.szego_matrix(alpha, z) @ szego.szego_matrix(0.0, z)
        interleave_worst = max(interleave_worst,
                               float(np.max(np.abs(step - szego.szego_matrix(alpha, z * z)))))
        beta = rng.uniform(1.05, 4.0)
        lhs, rhs = szego.ising_szego_conjugation(beta, z)
        witness_worst = max(witness_worst, float(np.max(np.abs(lhs - rhs))))
        n = int(rng.integers(1, 7)) * 2
        alphas = (rng.uniform(-1, 1, n) + 1j * rng.uniform(-1, 1, n)) * 0.5
        zc = np.exp(2j * np.pi * rng.uniform())
        d1 = szego.discriminant(alphas, zc)
        d2 = szego.discriminant(np.concatenate([alphas, alphas]), zc)
        doubling_worst = max(doubling_worst, abs(d2 - (d1 * d1 - 2.0)))
    passed = interleave_worst <= 1e-13 and witness_worst <= 1e-13 and doubling_worst <= 1e-10
    result = CheckResult("algebraic_identities", passed,
                         max(interleave_worst, witness_worst, doubling_worst),
                         1e-10, time.time() - t0,
                         {"interleave_step": interleave_worst,
                          "conjugation_witness": witness_worst,
                          "discriminant_doubling": doubling_worst})
    return result


def check_bandwidth(seed: int = 46, n_min: int = 6, n_max: int = 512,
                    phase_tol: float = 1e-10, theta: float = np.pi / 2,
                    eigen_stride: int = 1) -> CheckResult:
    """Reordered matrices are 9-banded with unchanged spectra, every even size."""
    t0 = time.time()
    rng = np.random.default_rng(seed)
    worst_offset = 0
    worst_phase = 0.0
    for n in range(n_min, n_max + 1, 2):
        alphas = (rng.uniform(-1, 1, n) + 1j * rng.uniform(-1, 1, n)) * 0.6
        fl = floquet_matrix(alphas, theta)
        tilde = reorder(fl, band_permutation(n))
        worst_offset = max(worst_offset, bandwidth_offsets(tilde))
        if ((n - n_min) // 2) % eigen_stride == 0:
            before = eigenphases(fl).phases
            after = eigenphases(tilde).phases
            worst_phase = max(worst_phase, float(np.max(circular_distance(before, after))))
    passed = worst_offset <= 4 and worst_phase <= phase_tol
    return CheckResult("bandwidth_reduction", passed, float(worst_phase), phase_tol,
                       time.time() - t0,
                       {"max_offset": worst_offset, "offset_bound": 4,
                        "n_range": [n_min, n_max], "eigen_stride": eigen_stride})


def check_fibonacci_labels(iterations: int = 14, widest: int = 10, m_max: int = 30,
                           threshold_multiplier: float = 5.0) -> CheckResult:
    """Widest-gap labels of the Fibonacci chain against Z + gamma*Z."""
    t0 = time.time()
    word = fibonacci_word(iterations)
    ps = couplings_from_word(word, {"a": 2.0 / 3.0, "b": 0.01})
    n = len(ps)
    phases = lee_yang_zeros(ps)
    report = label_gaps(detect_gaps(phases, threshold_multiplier, "paper"),
                        fibonacci_label_group(), m_max)
    top = report.widest(widest)
    tol = 10.0 / n
    if len(top) < widest:
        return _finish("fibonacci_gap_labels", np.inf, tol, t0,
                       chain_length=n, gaps_found=len(report.gaps))
    worst = max(g.match.residual for g in top)
    matches = [{"label": g.label, "n": g.match.n, "m": g.match.m,
                "residual": g.match.residual, "length": g.length} for g in top]
    return _finish("fibonacci_gap_labels", worst, tol, t0,
                   chain_length=n, gaps_found=len(report.gaps), matches=matches)


def check_catmap_precision(count: int = 200, tol: float = 1e-14,
                           divergence_floor: float = 0.1,
                           divergence_onset: int = 40) -> CheckResult:
    """Precision gate: doubled-precision stability, and the double-only failure mode."""
    t0 = time.time()
    steps = count - 1
    bits = cat_map_precision_bits(steps)
    sampler = shifted_cosine()

    def coefficients(precision: int) -> np.ndarray:
        x = constant("1/sqrt2", precision)
        y = constant("1/sqrt3", precision)
        return sample_orbit(cat_map_orbit(x, y, steps), sampler).alphas.real

    base = coefficients(bits)
    doubled = coefficients(2 * bits)
    stability = float(np.max(np.abs(base - doubled)))

    naive_orbit = cat_map_orbit_float64(1.0 / math.sqrt(2.0), 1.0 / math.sqrt(3.0), steps)
    naive = np.array([0.5 + math.cos(2.0 * math.pi * y) / 3.0 for _, y in naive_orbit])
    late = np.abs(naive - base)[divergence_onset:]
    divergence = float(np.max(late)) if late.size else 0.0

    passed = stability <= tol and divergence >= divergence_floor
    return CheckResult("catmap_precision_gate", passed, stability, tol, time.time() - t0,
                       {"bits": bits, "count": count,
                        "double_run_divergence": divergence,
                        "divergence_floor": divergence_floor,
                        "divergence_onset": divergence_onset})


def check_markov(seed: int = 47, draws: int = 5, tol: float = 1e-12,
                 exact_tol: float = 1e-15) -> CheckResult:
    """Stationary vectors on random primitive chains plus hand-solved 2-state cases."""
    t0 = time.time()
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(draws):
        P = rng.uniform(0.05, 1.0, (5, 5))
        P /= P.sum(axis=1, keepdims=True)
        p = stationary_vector(P)
        worst = max(worst, float(np.sum(np.abs(p @ P - p))))

    uniform = stationary_vector(np.full((2, 2), 0.5))
    skewed = stationary_vector(np.array([[0.0, 1.0], [0.5, 0.5]]))
    exact_err = max(float(np.max(np.abs(uniform - 0.5))),
                    float(np.max(np.abs(skewed - np.array([1.0, 2.0]) / 3.0))))
    group = markov_label_group(np.array([[0.0, 1.0], [0.5, 0.5]]), 1)
    gen_err = min(abs(g - 1.0 / 3.0) for g in group.generators)

    passed = worst <= tol and exact_err <= exact_tol and gen_err <= exact_tol
    return CheckResult("markov_label_generators", passed, worst, tol, time.time() - t0,
                       {"two_state_error": exact_err, "cylinder_generator_error": gen_err,
                        "draws": draws})


ACCEPTANCE_CHECKS = (
    check_trace_formula,
    check_zero_sets,
    check_unit_circle,
    check_det_identity,
    check_algebraic_identities,
    check_bandwidth,
    check_fibonacci_labels,
    check_catmap_precision,
    check_markov,
)

QUICK_OVERRIDES = {
    "check_unit_circle": {"max_dim": 400},
    "check_bandwidth": {"n_max": 128, "eigen_stride": 4},
    "check_fibonacci_labels": {"iterations": 10},
    "check_catmap_precision": {"count": 80},
}


def run_suite(seed: int = 42, quick: bool = False) -> dict:
    """Run every check; returns a JSON-ready report with an overall verdict."""
    results = []
    for check in ACCEPTANCE_CHECKS:
        kwargs = dict(QUICK_OVERRIDES.get(check.__name__, {})) if quick else {}
        if "seed" in inspect.signature(check).parameters:
            kwargs.setdefault("seed", seed)
        try:
            results.append(check(**kwargs))
        except LeeYangError as exc:
            results.append(CheckResult(check.__name__, False, float("inf"), 0.0, 0.0,
                                       {"error": f"{type(exc).__name__}: {exc}"}))
    report = {
        "seed": seed,
        "profile": "quick" if quick else "full",
        "all_passed": all(r.passed for r in results),
        "checks": [r.to_dict() for r in results],
    }
    return report
