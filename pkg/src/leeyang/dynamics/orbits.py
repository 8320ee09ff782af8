"""Torus orbits in exact fixed-point arithmetic, and coefficient samplers.

Both maps admit closed-form iterates with integer coefficients, so every
orbit point is produced directly from the seed by exact integer multiplies
mod 1 -- no error accumulation across steps. The integer coefficients of
the hyperbolic map grow like the Fibonacci numbers, which is why the seed
precision must scale with the orbit length; plain double arithmetic loses
all significant digits of the angle variable around forty steps.

Index convention: orbit entry k is the k-th iterate, k = 0..n, with entry 0
the seed itself. Samplers read the second (angle) coordinate.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..errors import DomainError
from ..sequences import CoefficientSequence
from .highprec import FixedFraction, check_precision


def cat_map_precision_bits(n: int) -> int:
    """Default seed precision for an n-step hyperbolic orbit."""
    return math.ceil(1.39 * (2 * n + 1)) + 64


def skew_shift_precision_bits(n: int) -> int:
    """Default seed precision for an n-step skew-shift orbit."""
    return math.ceil(2 * math.log2(n + 1)) + 128 if n > 0 else 128


def cat_map_orbit(x0: FixedFraction, y0: FixedFraction, n: int,
                  cap: int | None = None) -> list:
    """Iterates (x_k, y_k) = T^k(x0, y0), k = 0..n, of T(x, y) = (2x+y, x+y) mod 1.

    Uses the closed form T^k = [[F_{2k+1}, F_{2k}], [F_{2k}, F_{2k-1}]] with
    exact integer Fibonacci numbers (F_0 = 0, F_1 = 1), so iterate k never
    depends on rounded intermediates. Seeds are auto-raised (exactly) when
    their precision is below bitlength(F_{2n+1}) + 64.
    """
    if n < 0:
        raise DomainError("iterate count must be >= 0")
    # F_{2n+1} via iteration; n is small enough that this is immediate
    f_even, f_odd = 0, 1            # F_0, F_1
    for _ in range(n):
        f_even, f_odd = f_even + f_odd, f_even + 2 * f_odd
    required = f_odd.bit_length() + 64
    bits = max(x0.bits, y0.bits, required)
    check_precision(bits, cap)
    x0, y0 = x0.resize(bits), y0.resize(bits)

    out = []
    modulus = 1 << bits
    prev, mid, nxt = 1, 0, 1        # F_{2k-1}, F_{2k}, F_{2k+1} at k = 0
    for _ in range(n + 1):
        xk = (nxt * x0.num + mid * y0.num) % modulus
        yk = (mid * x0.num + prev * y0.num) % modulus
        out.append((FixedFraction(xk, bits), FixedFraction(yk, bits)))
        prev, mid, nxt = nxt, mid + nxt, mid + 2 * nxt
    return out


def cat_map_orbit_float64(x0: float, y0: float, n: int) -> list:
    """Naive double-precision iteration of the same map.

    Kept as the reference failure mode: its angle coordinate is garbage
    after a few dozen steps, which is measurable against the exact orbit.
    """
    out = [(x0 % 1.0, y0 % 1.0)]
    x, y = out[0]
    for _ in range(n):
        x, y = (2.0 * x + y) % 1.0, (x + y) % 1.0
        out.append((x, y))
    return out


def skew_shift_orbit(gamma: FixedFraction, x0: FixedFraction, y0: FixedFraction,
                     n: int, cap: int | None = None) -> list:
    """Iterates of T(x, y) = (x + gamma, x + y) mod 1, k = 0..n, in closed form.

    T^k(x, y) = (x + k*gamma, y + k*x + k(k-1)/2 * gamma) mod 1; all three
    multipliers are exact integers.
    """
    if n < 0:
        raise DomainError("iterate count must be >= 0")
    growth = math.ceil(4 * math.log2(n + 1)) if n > 0 else 0
    bits = max(gamma.bits, x0.bits, y0.bits, skew_shift_precision_bits(n), growth + 128)
    check_precision(bits, cap)
    gamma, x0, y0 = gamma.resize(bits), x0.resize(bits), y0.resize(bits)

    out = []
    modulus = 1 << bits
    for k in range(n + 1):
        xk = (x0.num + k * gamma.num) % modulus
        yk = (y0.num + k * x0.num + (k * (k - 1) // 2) * gamma.num) % modulus
        out.append((FixedFraction(xk, bits), FixedFraction(yk, bits)))
    return out


@dataclass(frozen=True)
class CosineSampler:
    """alpha = offset + amplitude * cos(2*pi*y); requires |offset| + |amplitude| < 1."""

    offset: float
    amplitude: float

    def __post_init__(self):
        if not (abs(self.offset) + abs(self.amplitude) < 1.0):
            raise DomainError(
                f"|offset| + |amplitude| = {abs(self.offset) + abs(self.amplitude)} "
                "must be < 1 so that |alpha| < 1"
            )

    def __call__(self, point: tuple) -> float:
        _, y = point
        return y.cos_affine(self.offset, self.amplitude)


def shifted_cosine() -> CosineSampler:
    """The positive sampler 1/2 + cos(2*pi*y)/3, range [1/6, 5/6]."""
    return CosineSampler(0.5, 1.0 / 3.0)


def pure_cosine(lam: float) -> CosineSampler:
    """The sign-indefinite sampler lam * cos(2*pi*y), 0 < lam < 1."""
    if not (0.0 < lam < 1.0):
        raise DomainError(f"lam must be in (0, 1), got {lam}")
    return CosineSampler(0.0, lam)


def sample_orbit(orbit: list, sampler: CosineSampler) -> CoefficientSequence:
    """Evaluate the sampler along an orbit; each alpha is rounded once to double."""
    alphas = np.array([sampler(point) for point in orbit], dtype=float)
    if np.max(np.abs(alphas)) >= 1.0:
        raise DomainError("sampled coefficients left the open unit disk")
    return CoefficientSequence(alphas.astype(np.complex128))


def uamo_coefficients(lam1: float, lam2: float, gamma, x, n: int,
                      bits: int = 192) -> CoefficientSequence:
    """Alternating almost-Mathieu coefficients of length n.

    Stored entry j follows the source convention for index j: even j carry
    the constant sqrt(1 - lam2^2); odd j = 2m-1 carry
    lam1 * cos(2*pi*(m*gamma + x)) with m = (j+1)/2. The rotation argument
    m*gamma + x is reduced mod 1 exactly before the cosine.
    """
    if not (0.0 < lam1 < 1.0):
        raise DomainError(f"lam1 must be in (0, 1), got {lam1}")
    if not (0.0 < lam2 < 1.0):
        raise DomainError(f"lam2 must be in (0, 1), got {lam2}")
    if n < 1:
        raise DomainError("sequence length must be >= 1")
    from .highprec import constant

    gamma = constant(gamma, bits)
    x = constant(x, bits)
    even_value = math.sqrt(1.0 - lam2 * lam2)
    alphas = np.empty(n, dtype=np.complex128)
    for j in range(n):
        if j % 2 == 0:
            alphas[j] = even_value
        else:
            m = (j + 1) // 2
            alphas[j] = x.add(gamma.mul_int(m)).cos_affine(0.0, lam1)
    return CoefficientSequence(alphas)
