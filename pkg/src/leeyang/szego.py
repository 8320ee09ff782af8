"""Szego transfer matrices, discriminants, and the Ising bridge identities.

The transfer matrix for spectral parameter z and coefficient alpha is

    S(alpha, z) = (1 - |alpha|^2)^(-1/2) * [[z, -conj(alpha)], [-alpha z, 1]],

with det S(alpha, z) = z. Ordered products run highest index leftmost;
internally the product is accumulated right-to-left, i.e. stored index 0
is applied first. For even N the normalized discriminant

    Delta_N(z) = z^(-N/2) * trace(ordered product)

is real on the unit circle and its zeros are the Floquet eigenvalues at
boundary phase pi/2. Odd N uses the unnormalized trace (same zeros, no
fractional power of z).

The partition function of a ferromagnetic chain matches, up to a nowhere-
vanishing prefactor, the trace of the product over the zero-interleaved
coefficients exp(-2 p_k): see `ising_szego_conjugation` for the 2x2
similarity behind this, and `interleaved_discriminant` for the resulting
polynomial whose zeros are the partition-function zeros.
"""
from __future__ import annotations

import numpy as np

from .cmv import floquet_matrix
from .errors import DomainError
from .ising import couplings_to_verblunsky, interleave_with_zeros, ising_transfer
from .sequences import CoefficientSequence, CouplingSequence


def _as_coefficients(alphas) -> CoefficientSequence:
    if isinstance(alphas, CoefficientSequence):
        return alphas
    return CoefficientSequence(np.asarray(alphas, dtype=complex))


def szego_matrix(alpha: complex, z: complex) -> np.ndarray:
    alpha = complex(alpha)
    if abs(alpha) >= 1.0:
        raise DomainError(f"|alpha| must be < 1, got {abs(alpha)}")
    z = complex(z)
    scale = 1.0 / np.sqrt(1.0 - abs(alpha) ** 2)
    return scale * np.array([[z, -np.conj(alpha)], [-alpha * z, 1.0]], dtype=complex)


def transfer_product(alphas, z: complex) -> np.ndarray:
    """Ordered product of Szego matrices, stored index 0 rightmost; det = z^N."""
    seq = _as_coefficients(alphas)
    if z == 0:
        raise DomainError("z must be nonzero")
    prod = np.eye(2, dtype=complex)
    for alpha in seq.alphas:
        prod = szego_matrix(alpha, z) @ prod
    return prod


def trace_discriminant(alphas, z: complex) -> complex:
    """Unnormalized discriminant: trace of the transfer product (any length)."""
    return complex(np.trace(transfer_product(alphas, z)))


def discriminant(alphas, z: complex) -> complex:
    """Normalized discriminant z^(-N/2) * trace, defined for even length."""
    seq = _as_coefficients(alphas)
    n = len(seq)
    if n % 2 != 0:
        raise DomainError("normalized discriminant needs even length; use trace_discriminant")
    return complex(z) ** (-(n // 2)) * trace_discriminant(seq, z)


def interleaved_discriminant(ps, z: complex) -> complex:
    """Trace of the product over couplings with zero coefficients interleaved.

    Equals trace_discriminant(exp(-2p) sequence, z^2) via the exact identity
    S(alpha, z) S(0, z) = S(alpha, z^2); its zeros in z are exactly the
    partition-function zeros of the chain.
    """
    if not isinstance(ps, CouplingSequence):
        ps = CouplingSequence(np.asarray(ps, dtype=float))
    doubled = interleave_with_zeros(couplings_to_verblunsky(ps))
    return trace_discriminant(doubled, z)


def ising_szego_conjugation(beta: float, zeta: complex) -> tuple:
    """Both sides of the 2x2 similarity tying the Ising transfer matrix to S.

    lhs = diag(-1, zeta) * M(beta, zeta) * diag(-1, 1/zeta)
    rhs = (beta/zeta) * sqrt(1 - beta^-4) * S(beta^-2, zeta^2)

    They agree entrywise. (The sqrt(1 - beta^-4) factor is forced by the
    normalization of S at alpha = beta^-2.) Requires beta > 1 so the scalar
    prefactor is nonzero.
    """
    if not beta > 1.0:
        raise DomainError(f"beta must be > 1, got {beta}")
    if zeta == 0:
        raise DomainError("zeta must be nonzero")
    zeta = complex(zeta)
    left = np.diag([-1.0, zeta]).astype(complex)
    right = np.diag([-1.0, 1.0 / zeta]).astype(complex)
    lhs = left @ ising_transfer(beta, zeta) @ right
    rhs = (beta / zeta) * np.sqrt(1.0 - beta ** -4) * szego_matrix(beta ** -2, zeta ** 2)
    return lhs, rhs


def det_discriminant_residual(alphas, z: complex, theta: float = np.pi / 2) -> float:
    """Relative residual of det(z - F_N(theta)) against the discriminant form.

    The characteristic polynomial of the Floquet matrix factors as

        det(z - F_N(theta)) = z^(N/2) * prod(rho_k) * (Delta_N(z) - 2 cos(theta)),

    so at theta = pi/2 eigenvalues are discriminant zeros, and at theta = pi
    they are the zeros of Delta_N + 2.
    """
    seq = _as_coefficients(alphas)
    n = len(seq)
    if n % 2 != 0:
        raise DomainError("even length required")
    if z == 0:
        raise DomainError("z must be nonzero")
    z = complex(z)
    fl = floquet_matrix(seq, theta)
    lhs = complex(np.linalg.det(z * np.eye(n) - fl.matrix))
    rhs = z ** (n // 2) * np.prod(seq.rhos()) * (discriminant(seq, z) - 2.0 * np.cos(theta))
    scale = max(abs(lhs), abs(rhs), 1e-300)
    return abs(lhs - rhs) / scale
