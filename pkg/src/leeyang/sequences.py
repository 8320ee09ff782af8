"""Coefficient and coupling sequences shared across the package.

Storage convention is 0-based throughout: entry k of a sequence is the
coefficient the constructors document as alpha_k (resp. p_{k+1} in 1-based
transfer-product notation). Spectra of the matrices built downstream are
invariant under cyclic shifts, so the offset choice is harmless; it is
nevertheless documented at each constructor.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError


def _frozen_array(values, dtype) -> np.ndarray:
    arr = np.array(values, dtype=dtype)
    if arr.ndim != 1:
        raise DomainError(f"expected a 1-D sequence, got shape {arr.shape}")
    if arr.size < 1:
        raise DomainError("sequence must have length >= 1")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class CoefficientSequence:
    """Finite sequence of Verblunsky coefficients, all strictly inside the unit disk."""

    alphas: np.ndarray = field(repr=False)

    def __post_init__(self):
        arr = _frozen_array(self.alphas, np.complex128)
        if not np.all(np.isfinite(arr.view(np.float64))):
            raise DomainError("coefficients must be finite")
        worst = float(np.max(np.abs(arr)))
        if worst >= 1.0:
            raise DomainError(f"|alpha| must be < 1 for every entry; max |alpha| = {worst}")
        object.__setattr__(self, "alphas", arr)

    def __len__(self) -> int:
        return int(self.alphas.size)

    def __getitem__(self, k):
        return self.alphas[k]

    def rhos(self) -> np.ndarray:
        """The complementary radii sqrt(1 - |alpha_k|^2), derived on demand."""
        return np.sqrt(1.0 - np.abs(self.alphas) ** 2)


@dataclass(frozen=True)
class CouplingSequence:
    """Positive normalized Ising couplings p_k = J_k / (k_B * temperature)."""

    ps: np.ndarray = field(repr=False)

    def __post_init__(self):
        arr = _frozen_array(self.ps, np.float64)
        if not np.all(np.isfinite(arr)):
            raise DomainError("couplings must be finite")
        if np.min(arr) <= 0.0:
            raise DomainError("couplings must be strictly positive")
        object.__setattr__(self, "ps", arr)

    def __len__(self) -> int:
        return int(self.ps.size)

    def __getitem__(self, k):
        return self.ps[k]

    def betas(self) -> np.ndarray:
        """Boltzmann weights beta_k = exp(p_k)."""
        return np.exp(self.ps)
