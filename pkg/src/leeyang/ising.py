"""Ferromagnetic Ising chain: energy, partition function, and the bridge
from couplings to Verblunsky coefficients.

The partition function of the periodic chain with couplings p_1..p_N and
fugacity zeta = exp(field) is

    Z_N(zeta) = sum over spins sigma in {+-1}^N of
                prod_n beta_n^(sigma_n sigma_{n+1}) * zeta^(sigma_n),

with beta_n = exp(p_n) and sigma_{N+1} = sigma_1. Two independent routes
are provided: the exhaustive configuration sum (the oracle, capped) and
the trace of the ordered 2x2 transfer-matrix product (any N).

Storage is 0-based: ps[k] is the coupling the 1-based transfer formulas
call p_{k+1}. Traces are cyclic, so all spectra downstream are unaffected.
"""
from __future__ import annotations

import numpy as np

from .errors import DomainError, ResourceCapError
from .sequences import CoefficientSequence, CouplingSequence

BRUTE_FORCE_CAP = 20


def _as_couplings(ps) -> CouplingSequence:
    return ps if isinstance(ps, CouplingSequence) else CouplingSequence(np.asarray(ps, dtype=float))


def energy(sigma, ps, q: float) -> float:
    """Energy -sum_n (p_n sigma_n sigma_{n+1} + q sigma_n) with periodic closure."""
    ps = _as_couplings(ps)
    sigma = np.asarray(sigma, dtype=float)
    if sigma.shape != (len(ps),):
        raise DomainError(f"spin configuration of length {sigma.size} does not match {len(ps)} couplings")
    if not np.all(np.abs(sigma) == 1.0):
        raise DomainError("spins must be +1 or -1")
    bonds = float(np.sum(ps.ps * sigma * np.roll(sigma, -1)))
    return -(bonds + q * float(np.sum(sigma)))


def _spin_table(n: int) -> np.ndarray:
    """All 2^n spin configurations as rows of +-1, plain binary order."""
    codes = np.arange(1 << n, dtype=np.int64)[:, None]
    bits = (codes >> np.arange(n)) & 1
    return 1 - 2 * bits.astype(np.int64)


def partition_bruteforce(ps, zeta: complex, cap: int = BRUTE_FORCE_CAP) -> complex:
    """Exact sum of Boltzmann weights over all 2^N configurations (oracle)."""
    ps = _as_couplings(ps)
    if zeta == 0:
        raise DomainError("zeta must be nonzero")
    n = len(ps)
    if n > cap:
        raise ResourceCapError(f"brute force capped at N <= {cap}, got {n}")
    spins = _spin_table(n)
    bond = (spins * np.roll(spins, -1, axis=1)) @ ps.ps
    total_spin = spins.sum(axis=1)
    return complex(np.sum(np.exp(bond) * np.power(complex(zeta), total_spin)))


def partition_polynomial(ps, cap: int = BRUTE_FORCE_CAP) -> np.ndarray:
    """Coefficients (ascending) of the degree-2N polynomial zeta^N * Z_N(zeta).

    Exponent N + sum(sigma) is even-parity, so alternate entries are zero;
    the leading coefficient is prod(beta_n) from the all-plus configuration.
    """
    ps = _as_couplings(ps)
    n = len(ps)
    if n > cap:
        raise ResourceCapError(f"brute force capped at N <= {cap}, got {n}")
    spins = _spin_table(n)
    bond = (spins * np.roll(spins, -1, axis=1)) @ ps.ps
    total_spin = spins.sum(axis=1)
    coeffs = np.zeros(2 * n + 1)
    np.add.at(coeffs, n + total_spin, np.exp(bond))
    return coeffs


def ising_transfer(beta: float, zeta: complex) -> np.ndarray:
    """The symmetric 2x2 transfer matrix [[beta*zeta, 1/beta], [1/beta, beta/zeta]]."""
    if not beta > 0:
        raise DomainError(f"beta must be positive, got {beta}")
    if zeta == 0:
        raise DomainError("zeta must be nonzero")
    zeta = complex(zeta)
    return np.array([[beta * zeta, 1.0 / beta], [1.0 / beta, beta / zeta]], dtype=complex)


def partition_via_trace(ps, zeta: complex) -> complex:
    """Z_N(zeta) as the trace of the ordered transfer product (no 2^N cost)."""
    ps = _as_couplings(ps)
    if zeta == 0:
        raise DomainError("zeta must be nonzero")
    prod = np.eye(2, dtype=complex)
    for beta in ps.betas():          # index 0 applied first (rightmost factor)
        prod = ising_transfer(beta, zeta) @ prod
    return complex(np.trace(prod))


def couplings_to_verblunsky(ps) -> CoefficientSequence:
    """alpha_k = exp(-2 p_k) in (0, 1), same length and order."""
    ps = _as_couplings(ps)
    return CoefficientSequence(np.exp(-2.0 * ps.ps).astype(np.complex128))


def interleave_with_zeros(alphas) -> CoefficientSequence:
    """Zero-interleaved sequence (0, a_0, 0, a_1, ..., 0, a_{N-1}), length 2N.

    In transfer-product order the rightmost (first applied) factor carries
    coefficient 0; the even-dimension result is what the partition-function
    eigenvalue pipeline feeds to the Floquet builder.
    """
    if not isinstance(alphas, CoefficientSequence):
        alphas = CoefficientSequence(np.asarray(alphas, dtype=complex))
    doubled = np.zeros(2 * len(alphas), dtype=np.complex128)
    doubled[1::2] = alphas.alphas
    return CoefficientSequence(doubled)
