"""Unitary CMV Floquet matrices, finite sections, and band reordering.

A period-N coefficient sequence (N even) with twisted boundary condition
u_{k+N} = e^{i theta} u_k yields the N x N unitary Floquet matrix
F_N(theta) = L_N * M_N, where L_N and M_N are block-diagonal in 2x2
rotation-like blocks

    Theta(alpha) = [[conj(alpha), rho], [rho, -alpha]],  rho = sqrt(1-|alpha|^2),

L_N carrying the even-indexed blocks and M_N the odd-indexed ones plus the
theta-twisted corner entries from the period-closing coefficient. The
matrix is five-diagonal up to its corners; conjugating by the right
permutation crushes the corners into the band, giving bandwidth <= 9.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError
from .sequences import CoefficientSequence


def _as_coefficients(alphas) -> CoefficientSequence:
    if isinstance(alphas, CoefficientSequence):
        return alphas
    return CoefficientSequence(np.asarray(alphas, dtype=complex))


def theta_block(alpha: complex) -> np.ndarray:
    """The 2x2 unitary block [[conj(alpha), rho], [rho, -alpha]]; det = -1."""
    alpha = complex(alpha)
    if abs(alpha) >= 1.0:
        raise DomainError(f"|alpha| must be < 1, got {abs(alpha)}")
    rho = np.sqrt(1.0 - abs(alpha) ** 2)
    return np.array([[np.conj(alpha), rho], [rho, -alpha]], dtype=complex)


@dataclass(frozen=True)
class FloquetMatrix:
    """Dense N x N unitary Floquet matrix with its boundary phase."""

    matrix: np.ndarray = field(repr=False)
    theta: float

    def __post_init__(self):
        self.matrix.setflags(write=False)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def unitarity_defect(self) -> float:
        """max |(F* F - I)_{jk}|."""
        n = self.dim
        return float(np.max(np.abs(self.matrix.conj().T @ self.matrix - np.eye(n))))


def lm_factors(alphas, theta: float) -> tuple:
    """The block-diagonal factors (L, M) of the Floquet matrix."""
    seq = _as_coefficients(alphas)
    n = len(seq)
    if n < 2 or n % 2 != 0:
        raise DomainError(f"Floquet dimension must be even and >= 2, got {n}")
    a = seq.alphas
    left = np.zeros((n, n), dtype=complex)
    right = np.zeros((n, n), dtype=complex)
    for j in range(0, n, 2):
        left[j:j + 2, j:j + 2] = theta_block(a[j])
    for j in range(1, n - 2, 2):
        right[j:j + 2, j:j + 2] = theta_block(a[j])
    rho_last = np.sqrt(1.0 - abs(a[n - 1]) ** 2)
    right[0, 0] = -a[n - 1]
    right[0, n - 1] = np.exp(-1j * theta) * rho_last
    right[n - 1, 0] = np.exp(1j * theta) * rho_last
    right[n - 1, n - 1] = np.conj(a[n - 1])
    return left, right


def floquet_matrix(alphas, theta: float) -> FloquetMatrix:
    """F_N(theta) = L_N * M_N for an even-length coefficient sequence."""
    left, right = lm_factors(alphas, theta)
    return FloquetMatrix(left @ right, float(theta))


def floquet_matrix_doubled(alphas) -> FloquetMatrix:
    """The 2N x 2N matrix at theta = pi for the period-doubled sequence.

    For odd N this is the matrix whose spectrum consists of the N
    discriminant zeros, each doubled; even N should use floquet_matrix.
    """
    seq = _as_coefficients(alphas)
    if len(seq) % 2 == 0:
        raise DomainError("sequence length is even; build floquet_matrix directly")
    doubled = np.concatenate([seq.alphas, seq.alphas])
    return floquet_matrix(doubled, np.pi)


@dataclass(frozen=True)
class BandPermutation:
    """Bijection on {0..N-1} whose conjugation confines the corners to the band."""

    size: int
    perm: np.ndarray = field(repr=False)

    def __post_init__(self):
        self.perm.setflags(write=False)

    def matrix(self) -> np.ndarray:
        p = np.zeros((self.size, self.size))
        p[self.perm, np.arange(self.size)] = 1.0
        return p


def band_permutation(n: int) -> BandPermutation:
    """The bandwidth-reducing permutation for even dimension n.

    Piecewise in 1-based terms: odd j < n/2 go to 2j-1, even j <= n/2 go to
    2j, and the upper half folds back via 2n+1-2j / 2n+2-2j. When n/2 is
    odd (n = 2 mod 4) the defining cases skip j = n/2; setting
    p(n/2) = n - 1 extends the odd-j rule and restores bijectivity.
    """
    if n < 2 or n % 2 != 0:
        raise DomainError(f"dimension must be even and >= 2, got {n}")
    half = n // 2
    perm = np.empty(n, dtype=np.int64)
    for j in range(1, n + 1):
        if j % 2 == 1 and j < half:
            target = 2 * j - 1
        elif j % 2 == 1 and half < j < n:
            target = 2 * n + 1 - 2 * j
        elif j % 2 == 0 and j <= half:
            target = 2 * j
        elif j % 2 == 0 and half < j:
            target = 2 * n + 2 - 2 * j
        else:                       # j == n/2 with n/2 odd
            target = 2 * j - 1
        perm[j - 1] = target - 1
    if len(np.unique(perm)) != n:
        raise DomainError(f"permutation construction failed for n = {n}")
    return BandPermutation(n, perm)


def reorder(matrix, permutation: BandPermutation) -> np.ndarray:
    """Conjugate P A P*; a unitary similarity, so the spectrum is unchanged."""
    if isinstance(matrix, FloquetMatrix):
        matrix = matrix.matrix
    n = matrix.shape[0]
    if n != permutation.size:
        raise DomainError(f"matrix dimension {n} does not match permutation size {permutation.size}")
    out = np.empty_like(matrix)
    p = permutation.perm
    out[np.ix_(p, p)] = matrix
    return out


def bandwidth_offsets(matrix: np.ndarray) -> int:
    """Largest |row - col| over structurally nonzero entries."""
    rows, cols = np.nonzero(matrix)
    if rows.size == 0:
        return 0
    return int(np.max(np.abs(rows - cols)))


def extended_cmv_section(alphas, window: tuple, periodic: bool = False,
                         offset: int = 0) -> np.ndarray:
    """Principal submatrix of the two-sided five-diagonal CMV matrix.

    `window` = (lo, hi) selects rows/columns lo..hi-1 with lo even (the
    boxed-entry convention puts -conj(alpha_0) * alpha_{-1} at (0, 0)).
    Coefficient k is read from the stored sequence at position k - offset,
    wrapped modulo the length when `periodic` is set; the window (plus one
    coefficient on each side) must otherwise lie inside the stored range.
    """
    seq = _as_coefficients(alphas)
    lo, hi = window
    if hi <= lo:
        raise DomainError(f"empty window {window}")
    if lo % 2 != 0:
        raise DomainError(f"window start must be even, got {lo}")
    stored = seq.alphas
    length = len(seq)

    def alpha(k: int) -> complex:
        pos = k - offset
        if periodic:
            return stored[pos % length]
        if not (0 <= pos < length):
            raise DomainError(
                f"coefficient index {k} outside stored range [{offset}, {offset + length})"
            )
        return stored[pos]

    def rho(k: int) -> float:
        return np.sqrt(1.0 - abs(alpha(k)) ** 2)

    size = hi - lo
    out = np.zeros((size, size), dtype=complex)
    for i in range(lo, hi):
        # entries are evaluated lazily so cropped columns never force
        # coefficient lookups outside the stored range
        if i % 2 == 0:
            entries = {
                i - 1: lambda i=i: np.conj(alpha(i)) * rho(i - 1),
                i: lambda i=i: -np.conj(alpha(i)) * alpha(i - 1),
                i + 1: lambda i=i: np.conj(alpha(i + 1)) * rho(i),
                i + 2: lambda i=i: rho(i + 1) * rho(i),
            }
        else:
            entries = {
                i - 2: lambda i=i: rho(i - 1) * rho(i - 2),
                i - 1: lambda i=i: -rho(i - 1) * alpha(i - 2),
                i: lambda i=i: -np.conj(alpha(i)) * alpha(i - 1),
                i + 1: lambda i=i: -rho(i) * alpha(i - 1),
            }
        for j, value_fn in entries.items():
            if lo <= j < hi:
                out[i - lo, j - lo] = value_fn()
    return out
