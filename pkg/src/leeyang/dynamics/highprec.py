"""Exact fixed-point arithmetic on the unit interval.

A FixedFraction stores x in [0,1) as an integer numerator at an explicit
binary precision: x = num / 2**bits. Addition, multiplication by integers,
and reduction mod 1 are exact at the stored precision, which is what makes
closed-form torus orbits trustworthy where plain doubles disintegrate
(integer coefficients of the iterates grow exponentially, so any rounding
before the final mod-1 reduction is fatal).

Irrational seeds are materialized by a precision-parameterized generator
(`constant`), so raising the working precision re-derives them rather than
zero-padding stale bits.
"""
from __future__ import annotations

import math
import os
import re
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from ..errors import DomainError, PrecisionCapError

MIN_BITS = 64
DEFAULT_PRECISION_CAP = 1 << 20
PRECISION_CAP_ENV = "LEEYANG_PRECISION_CAP"

# cos is evaluated from the top _COS_BITS bits of the exact fraction; the
# induced argument perturbation is < 2^-_COS_BITS, far below double rounding.
_COS_BITS = 160


def precision_cap() -> int:
    """Configured ceiling on fixed-point precision, in bits."""
    raw = os.environ.get(PRECISION_CAP_ENV)
    if raw is None:
        return DEFAULT_PRECISION_CAP
    try:
        cap = int(raw)
    except ValueError as exc:
        raise DomainError(f"{PRECISION_CAP_ENV} must be an integer, got {raw!r}") from exc
    if cap < MIN_BITS:
        raise DomainError(f"{PRECISION_CAP_ENV} must be >= {MIN_BITS}")
    return cap


def check_precision(bits: int, cap: int | None = None) -> int:
    cap = precision_cap() if cap is None else cap
    if bits > cap:
        raise PrecisionCapError(f"required precision {bits} bits exceeds cap {cap}")
    return bits


@dataclass(frozen=True)
class FixedFraction:
    """Fraction in [0,1) stored as num / 2**bits with bits >= 64."""

    num: int
    bits: int

    def __post_init__(self):
        if self.bits < MIN_BITS:
            raise DomainError(f"precision must be >= {MIN_BITS} bits, got {self.bits}")
        object.__setattr__(self, "num", self.num % (1 << self.bits))

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, bits: int = MIN_BITS) -> "FixedFraction":
        return cls(0, bits)

    @classmethod
    def from_fraction(cls, value: Fraction, bits: int) -> "FixedFraction":
        num = (value.numerator << bits) // value.denominator
        return cls(num, bits)

    @classmethod
    def from_float(cls, x: float, bits: int) -> "FixedFraction":
        if not math.isfinite(x):
            raise DomainError("seed value must be finite")
        return cls.from_fraction(Fraction(x) % 1, bits)

    # -- exact arithmetic mod 1 ---------------------------------------

    def resize(self, bits: int) -> "FixedFraction":
        """Raise precision exactly (zero-extend) or lower it (truncate)."""
        if bits == self.bits:
            return self
        if bits > self.bits:
            return FixedFraction(self.num << (bits - self.bits), bits)
        return FixedFraction(self.num >> (self.bits - bits), bits)

    def _aligned(self, other: "FixedFraction") -> tuple[int, int, int]:
        bits = max(self.bits, other.bits)
        return self.resize(bits).num, other.resize(bits).num, bits

    def add(self, other: "FixedFraction") -> "FixedFraction":
        a, b, bits = self._aligned(other)
        return FixedFraction(a + b, bits)

    def mul_int(self, k: int) -> "FixedFraction":
        return FixedFraction(self.num * k, self.bits)

    def half(self) -> "FixedFraction":
        """Exact division by 2 (gains one bit of precision)."""
        return FixedFraction(self.num, self.bits + 1)

    # -- readouts ------------------------------------------------------

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, 1 << self.bits)

    def to_float(self) -> float:
        """Correctly rounded double of the stored value."""
        return float(self.as_fraction())

    def cos2pi(self) -> float:
        """cos(2*pi*x) evaluated at >= 128-bit precision, rounded once to double."""
        return self.cos_affine(0.0, 1.0)

    def cos_affine(self, offset: float, amplitude: float) -> float:
        """offset + amplitude * cos(2*pi*x), one final rounding to double."""
        if self.bits > _COS_BITS:
            top = self.num >> (self.bits - _COS_BITS)
        else:
            top = self.num << (_COS_BITS - self.bits)
        with mpmath.workprec(_COS_BITS + 16):
            y = mpmath.mpf(top) / mpmath.mpf(1 << _COS_BITS)
            return float(offset + amplitude * mpmath.cospi(2 * y))


_NAMED_CONSTANTS = {
    # name -> (k, mode): mode "inv_sqrt" is 1/sqrt(k), "frac_sqrt" is sqrt(k) mod 1
    "1/sqrt2": (2, "inv_sqrt"),
    "1/sqrt3": (3, "inv_sqrt"),
    "1/sqrt5": (5, "inv_sqrt"),
    "sqrt2": (2, "frac_sqrt"),
    "sqrt3": (3, "frac_sqrt"),
    "sqrt5": (5, "frac_sqrt"),
}

_RATIONAL_RE = re.compile(r"^(-?\d+)\s*/\s*(\d+)$")
_DECIMAL_RE = re.compile(r"^-?\d+(\.\d*)?$")


def inv_sqrt(k: int, bits: int) -> FixedFraction:
    """1/sqrt(k) for integer k >= 2, accurate to the last stored bit."""
    if k < 2:
        raise DomainError("inv_sqrt needs k >= 2")
    num = math.isqrt(k << (2 * bits)) // k
    return FixedFraction(num, bits)


def frac_sqrt(k: int, bits: int) -> FixedFraction:
    """Fractional part of sqrt(k)."""
    if k < 1:
        raise DomainError("frac_sqrt needs k >= 1")
    return FixedFraction(math.isqrt(k << (2 * bits)), bits)


def golden_mean_inverse(bits: int) -> FixedFraction:
    """(sqrt(5) - 1) / 2, the inverse golden mean."""
    num = (math.isqrt(5 << (2 * bits)) - (1 << bits)) // 2
    return FixedFraction(num, bits)


def constant(spec: str | float | Fraction | FixedFraction, bits: int) -> FixedFraction:
    """Materialize a seed value at the requested precision.

    Accepts a FixedFraction (resized), a number, a rational string "p/q",
    a decimal string, or one of the named irrationals: "golden",
    "1/sqrt2", "1/sqrt3", "1/sqrt5", "sqrt2", "sqrt3", "sqrt5".
    """
    check_precision(bits)
    if isinstance(spec, FixedFraction):
        return spec.resize(bits)
    if isinstance(spec, Fraction):
        return FixedFraction.from_fraction(spec % 1, bits)
    if isinstance(spec, (int, float)):
        return FixedFraction.from_float(float(spec), bits)
    name = spec.strip().lower()
    if name == "golden":
        return golden_mean_inverse(bits)
    if name in _NAMED_CONSTANTS:
        k, mode = _NAMED_CONSTANTS[name]
        return inv_sqrt(k, bits) if mode == "inv_sqrt" else frac_sqrt(k, bits)
    m = _RATIONAL_RE.match(name)
    if m:
        return FixedFraction.from_fraction(Fraction(int(m.group(1)), int(m.group(2))) % 1, bits)
    if _DECIMAL_RE.match(name):
        return FixedFraction.from_fraction(Fraction(name) % 1, bits)
    raise DomainError(f"unknown constant spec {spec!r}")
