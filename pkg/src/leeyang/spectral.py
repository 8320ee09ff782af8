"""Eigenphases of unitary matrices, zero distributions, gaps, and labels.

Phases live on [0, 1): an eigenvalue lambda is recorded as
arg(lambda) / 2pi mod 1. The partition-function pipeline for a chain of N
couplings produces 2N phases (the chain's zero count); counting measures
can be normalized either by the chain length ("paper", total mass 2) or by
the matrix dimension ("operator", total mass 1).

Gap labels are integrated-density heights on plateaus, measured from the
reference phase 0 (the point z = 1, which sits inside a gap for
ferromagnetic couplings). Known label groups are Z, Z + gamma*Z, or an
explicit generated set (e.g. Markov cylinder measures).
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field, replace

import numpy as np

from .cmv import FloquetMatrix, floquet_matrix, floquet_matrix_doubled
from .errors import (ConvergenceError, DomainError, NonUnitaryError,
                     PairingError, ResourceCapError)
from .ising import couplings_to_verblunsky, interleave_with_zeros
from .sequences import CoefficientSequence, CouplingSequence

EIGEN_DIM_CAP = 4000

UNITARITY_TOL = 1e-10
CIRCLE_TOL = 1e-10
PAIRING_TOL = 1e-8


def circular_distance(a, b):
    """Distance on the phase circle R/Z."""
    d = np.abs(np.asarray(a) - np.asarray(b)) % 1.0
    return np.minimum(d, 1.0 - d)


@dataclass(frozen=True)
class EigenphaseList:
    """Sorted eigenvalue phases of a unitary matrix, with the circle certificate."""

    phases: np.ndarray = field(repr=False)
    source_dim: int
    max_circle_deviation: float
    chain_length: int | None = None
    deviations: np.ndarray | None = field(default=None, repr=False)

    def __post_init__(self):
        self.phases.setflags(write=False)
        if self.deviations is not None:
            self.deviations.setflags(write=False)

    def __len__(self) -> int:
        return int(self.phases.size)

    def circle_deviations(self) -> np.ndarray:
        """Per-phase |(|lambda| - 1)|, or the recorded maximum as a filler."""
        if self.deviations is not None:
            return self.deviations
        return np.full(len(self), self.max_circle_deviation)

    def spacings(self) -> np.ndarray:
        """Cyclic consecutive spacings; they partition the circle (sum = 1)."""
        ph = self.phases
        gaps = np.diff(ph)
        wrap = 1.0 - ph[-1] + ph[0]
        return np.concatenate([gaps, [wrap]])


def eigenphases(source, unitarity_tol: float = UNITARITY_TOL,
                circle_tol: float = CIRCLE_TOL,
                chain_length: int | None = None,
                dim_cap: int = EIGEN_DIM_CAP) -> EigenphaseList:
    """All eigenvalues of a unitary matrix as sorted phases in [0, 1).

    The input is rejected if it fails the unitarity check, and the result is
    rejected if any computed eigenvalue strays from the unit circle beyond
    `circle_tol`; the worst deviation is recorded on the result either way.
    """
    matrix = source.matrix if isinstance(source, FloquetMatrix) else np.asarray(source, dtype=complex)
    n = matrix.shape[0]
    if matrix.shape != (n, n):
        raise DomainError(f"matrix must be square, got {matrix.shape}")
    if n > dim_cap:
        raise ResourceCapError(f"dimension {n} exceeds eigensolver cap {dim_cap}")
    defect = float(np.max(np.abs(matrix.conj().T @ matrix - np.eye(n))))
    if defect > unitarity_tol:
        raise NonUnitaryError(f"unitarity defect {defect:.3e} exceeds {unitarity_tol:.1e}")
    values = np.linalg.eigvals(matrix)
    per_value = np.abs(np.abs(values) - 1.0)
    deviation = float(np.max(per_value))
    if deviation > circle_tol:
        raise NonUnitaryError(f"eigenvalue left the unit circle by {deviation:.3e}")
    raw = np.angle(values) / (2.0 * np.pi) % 1.0
    order = np.argsort(raw)
    return EigenphaseList(raw[order], n, deviation, chain_length, per_value[order])


def lee_yang_zeros(ps, dim_cap: int = EIGEN_DIM_CAP) -> EigenphaseList:
    """Partition-function zeros of a ferromagnetic chain as eigenphases.

    Pipeline: couplings -> alpha = exp(-2p) -> zero-interleave -> Floquet
    matrix of dimension 2N at boundary phase pi/2 -> eigenphases. The 2N
    phases are the phases of the 2N zeros of the chain's partition function.
    """
    if not isinstance(ps, CouplingSequence):
        ps = CouplingSequence(np.asarray(ps, dtype=float))
    doubled = interleave_with_zeros(couplings_to_verblunsky(ps))
    fl = floquet_matrix(doubled, np.pi / 2)
    return eigenphases(fl, chain_length=len(ps), dim_cap=dim_cap)


def _pair_doubled_phases(phases: np.ndarray, tol: float) -> np.ndarray:
    """Collapse a doubled spectrum to its distinct values by adjacent pairing."""
    n2 = phases.size
    best = None
    for offset in (0, 1):
        rolled = np.roll(phases, -offset)
        left, right = rolled[0::2], rolled[1::2]
        worst = float(np.max(circular_distance(left, right)))
        merged = (left + circular_distance(left, right) / 2.0) % 1.0
        if best is None or worst < best[0]:
            best = (worst, merged)
    worst, merged = best
    if worst > tol:
        raise PairingError(f"doubled eigenphases failed to pair within {tol:.1e} (gap {worst:.3e})")
    return np.sort(merged)


def zeros_of_discriminant(alphas, pairing_tol: float = PAIRING_TOL,
                          dim_cap: int = EIGEN_DIM_CAP) -> EigenphaseList:
    """The N discriminant zeros of a coefficient sequence, as phases.

    Even length: eigenphases of the Floquet matrix at boundary phase pi/2.
    Odd length: the period-doubled matrix at boundary phase pi carries each
    zero twice; the doubled spectrum is paired and collapsed.
    """
    if not isinstance(alphas, CoefficientSequence):
        alphas = CoefficientSequence(np.asarray(alphas, dtype=complex))
    if len(alphas) % 2 == 0:
        return eigenphases(floquet_matrix(alphas, np.pi / 2), dim_cap=dim_cap)
    doubled = eigenphases(floquet_matrix_doubled(alphas), dim_cap=dim_cap)
    merged = _pair_doubled_phases(doubled.phases, pairing_tol)
    return EigenphaseList(merged, doubled.source_dim, doubled.max_circle_deviation)


# ---------------------------------------------------------------------------
# integrated density of states


def _resolve_denominator(phases: EigenphaseList, normalization: str) -> int:
    if normalization == "operator":
        return len(phases)
    if normalization == "paper":
        if phases.chain_length is None:
            raise DomainError("'paper' normalization needs a chain length on the phase list")
        return phases.chain_length
    raise DomainError(f"unknown normalization {normalization!r}")


@dataclass(frozen=True)
class IDSCurve:
    """Right-continuous counting step function theta -> #{phases in (0, theta]} / den."""

    phases: np.ndarray = field(repr=False)
    denominator: int
    normalization: str

    def __post_init__(self):
        self.phases.setflags(write=False)

    def value(self, theta: float) -> float:
        lo = int(np.searchsorted(self.phases, 0.0, side="right"))
        hi = int(np.searchsorted(self.phases, theta, side="right"))
        return max(hi - lo, 0) / self.denominator

    def value_left(self, theta: float) -> float:
        lo = int(np.searchsorted(self.phases, 0.0, side="right"))
        hi = int(np.searchsorted(self.phases, theta, side="left"))
        return max(hi - lo, 0) / self.denominator

    def total_mass(self) -> float:
        return self.value(1.0)

    def jump_points(self) -> list:
        """(theta, value after the jump) at each distinct jump location."""
        out = []
        for theta in np.unique(self.phases):
            if theta > 0.0:
                out.append((float(theta), self.value(float(theta))))
        return out

    def sup_distance(self, other: "IDSCurve") -> float:
        """Sup-norm distance of two counting curves, via both jump sets."""
        worst = 0.0
        for theta in np.union1d(self.phases, other.phases):
            t = float(theta)
            worst = max(worst,
                        abs(self.value(t) - other.value(t)),
                        abs(self.value_left(t) - other.value_left(t)))
        return worst


def ids(phases: EigenphaseList, normalization: str = "operator") -> IDSCurve:
    """Counting curve of the phases under the requested normalization."""
    return IDSCurve(phases.phases, _resolve_denominator(phases, normalization), normalization)


# ---------------------------------------------------------------------------
# gaps and labels


@dataclass(frozen=True)
class LabelGroup:
    """A known countable label group: Z, Z + gamma*Z, or an explicit generated set."""

    kind: str
    gamma: float | None = None
    generators: tuple = ()

    @classmethod
    def integers(cls) -> "LabelGroup":
        return cls("integers")

    @classmethod
    def rank2(cls, gamma: float) -> "LabelGroup":
        if not math.isfinite(gamma):
            raise DomainError("generator must be finite")
        return cls("rank2", gamma=float(gamma))

    @classmethod
    def generated(cls, generators) -> "LabelGroup":
        gens = tuple(float(g) for g in generators)
        if not gens or not all(math.isfinite(g) for g in gens):
            raise DomainError("need a nonempty list of finite generators")
        return cls("generated", generators=gens)


def fibonacci_label_group() -> LabelGroup:
    """Z + gamma*Z with gamma the inverse golden mean (sqrt(5) - 1) / 2."""
    return LabelGroup.rank2((math.sqrt(5.0) - 1.0) / 2.0)


@dataclass(frozen=True)
class LabelMatch:
    n: int
    m: int
    residual: float
    generator: float | None = None


def match_label(label: float, group: LabelGroup, m_max: int) -> LabelMatch:
    """Best group element n + m*gamma (|m| <= m_max) for the given label.

    Ties are broken toward smaller |m|, then smaller |n|. For the integers
    the answer is the nearest integer with m = 0; for a generated group the
    search runs over each generator separately and reports the one used.
    """
    if m_max < 0:
        raise DomainError("m_max must be >= 0")
    if group.kind == "integers":
        n = round(label)
        return LabelMatch(int(n), 0, abs(label - n), None)
    if group.kind == "rank2":
        return _match_rank2(label, group.gamma, m_max)
    if group.kind == "generated":
        best = None
        for g in group.generators:
            cand = _match_rank2(label, g, m_max)
            key = (cand.residual, abs(cand.m), abs(cand.n))
            if best is None or key < best[0]:
                best = (key, replace(cand, generator=g))
        return best[1]
    raise DomainError(f"unknown group kind {group.kind!r}")


def _match_rank2(label: float, gamma: float, m_max: int) -> LabelMatch:
    best = None
    for m in range(-m_max, m_max + 1):
        n = round(label - m * gamma)
        residual = abs(label - (n + m * gamma))
        key = (residual, abs(m), abs(n))
        if best is None or key < best[0]:
            best = (key, LabelMatch(int(n), int(m), residual, gamma))
    return best[1]


@dataclass(frozen=True)
class Gap:
    """A flagged spectral gap: the open arc (left, right) with its IDS plateau."""

    left: float
    right: float
    length: float
    label: float
    match: LabelMatch | None = None


@dataclass(frozen=True)
class GapReport:
    gaps: tuple
    mean_spacing: float
    threshold: float
    denominator: int
    normalization: str

    def widest(self, count: int) -> list:
        return sorted(self.gaps, key=lambda g: -g.length)[:count]


def detect_gaps(phases: EigenphaseList, threshold_multiplier: float = 5.0,
                normalization: str = "operator") -> GapReport:
    """All cyclic arcs between consecutive phases longer than the threshold.

    The threshold is `threshold_multiplier` times the mean spacing (finite
    spectra have no exact gaps, so a gap is declared when an arc is
    anomalously long). Each gap's label is the counting-curve plateau,
    measured from reference phase 0 at the arc midpoint.
    """
    if len(phases) < 2:
        raise DomainError("need at least two phases")
    denominator = _resolve_denominator(phases, normalization)
    curve = IDSCurve(phases.phases, denominator, normalization)
    spacings = phases.spacings()
    mean = 1.0 / len(phases)
    threshold = threshold_multiplier * mean
    found = []
    ph = phases.phases
    for k, space in enumerate(spacings):
        if space > threshold:
            left = float(ph[k])
            right = float(ph[(k + 1) % len(ph)])
            mid = (left + space / 2.0) % 1.0
            found.append(Gap(left, right, float(space), curve.value(mid)))
    return GapReport(tuple(found), mean, threshold, denominator, normalization)


def label_gaps(report: GapReport, group: LabelGroup, m_max: int) -> GapReport:
    """Attach the best group-element match to every gap in the report."""
    labeled = tuple(replace(g, match=match_label(g.label, group, m_max)) for g in report.gaps)
    return replace(report, gaps=labeled)


# ---------------------------------------------------------------------------
# Markov label groups


def _is_primitive(support: np.ndarray) -> bool:
    size = support.shape[0]
    power = np.eye(size, dtype=bool)
    reach = support.astype(bool)
    for _ in range(size * size):
        power = power @ reach
        if power.all():
            return True
    return False


def stationary_vector(transition: np.ndarray, tol: float = 1e-13,
                      max_iter: int = 200_000) -> np.ndarray:
    """Left fixed probability vector of a row-stochastic matrix, by power iteration."""
    size = transition.shape[0]
    p = np.full(size, 1.0 / size)
    for _ in range(max_iter):
        nxt = p @ transition
        nxt /= nxt.sum()
        if float(np.sum(np.abs(nxt - p))) <= 1e-16:
            p = nxt
            break
        p = nxt
    residual = float(np.sum(np.abs(p @ transition - p)))
    if residual > tol:
        raise ConvergenceError(f"power iteration stalled at residual {residual:.3e}")
    return p


def markov_label_group(transition, max_word_len: int) -> LabelGroup:
    """Label group generated by cylinder measures of a primitive Markov chain.

    The measure of the cylinder on a word u is p_{u_1} * prod P_{u_j, u_{j+1}}
    over admissible words (positive transition at every step); all such
    measures for words up to the given length generate the group.
    """
    P = np.asarray(transition, dtype=float)
    size = P.shape[0]
    if P.shape != (size, size):
        raise DomainError(f"transition matrix must be square, got {P.shape}")
    if np.min(P) < 0.0:
        raise DomainError("transition probabilities must be nonnegative")
    rows = P.sum(axis=1)
    if np.max(np.abs(rows - 1.0)) > 1e-12:
        raise DomainError("rows must sum to one")
    if max_word_len < 1:
        raise DomainError("max_word_len must be >= 1")
    support = P > 0.0
    if not _is_primitive(support):
        raise DomainError("support pattern is not primitive")
    p = stationary_vector(P)

    measures = set()
    frontier = [((a,), p[a]) for a in range(size)]
    for _ in range(max_word_len):
        measures.update(value for _, value in frontier)
        frontier = [
            (word + (b,), value * P[word[-1], b])
            for word, value in frontier
            for b in range(size)
            if support[word[-1], b]
        ]
    return LabelGroup.generated(sorted(measures))


# ---------------------------------------------------------------------------
# spacing histogram


@dataclass(frozen=True)
class SpacingHistogram:
    edges: np.ndarray = field(repr=False)
    counts: np.ndarray = field(repr=False)

    def __post_init__(self):
        self.edges.setflags(write=False)
        self.counts.setflags(write=False)

    def proportions(self) -> np.ndarray:
        return self.counts / self.counts.sum()


def gap_histogram(phases: EigenphaseList, bins: int) -> SpacingHistogram:
    """Histogram of the cyclic consecutive spacings; total count = #phases."""
    if bins < 1:
        raise DomainError("bins must be >= 1")
    spacings = phases.spacings()
    counts, edges = np.histogram(spacings, bins=bins, range=(0.0, float(np.max(spacings))))
    return SpacingHistogram(edges, counts)
