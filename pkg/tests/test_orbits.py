"""Exact torus orbits against independent mpmath oracles."""
import math

import mpmath
import numpy as np
import pytest

from leeyang.dynamics.highprec import FixedFraction, constant
from leeyang.dynamics.orbits import (CosineSampler, cat_map_orbit,
                                     cat_map_orbit_float64, pure_cosine,
                                     sample_orbit, shifted_cosine,
                                     skew_shift_orbit, uamo_coefficients)
from leeyang.errors import DomainError


def _mp_orbit_cat(x, y, n, dps=80):
    """Step-by-step cat map at high mpmath precision (independent oracle)."""
    with mpmath.workdps(dps):
        pts = [(x, y)]
        for _ in range(n):
            x, y = (2 * x + y) % 1, (x + y) % 1
            pts.append((x, y))
        return pts


def test_cat_map_single_step_oracle():
    with mpmath.workdps(80):
        want = _mp_orbit_cat(1 / mpmath.sqrt(2), 1 / mpmath.sqrt(3), 1)[1]
        got = cat_map_orbit(constant("1/sqrt2", 256), constant("1/sqrt3", 256), 1)[1]
        assert abs(got[0].to_float() - float(want[0])) < 1e-12
        assert abs(got[1].to_float() - float(want[1])) < 1e-12
    # ten digits from the oracle, frozen
    assert got[0].to_float() == pytest.approx(0.9915638316, abs=1e-10)
    assert got[1].to_float() == pytest.approx(0.2844570504, abs=1e-10)


def test_cat_map_fixed_point_and_identity():
    zero = FixedFraction(0, 128)
    orbit = cat_map_orbit(zero, zero, 5)
    assert all(p[0].num == 0 and p[1].num == 0 for p in orbit)

    x = constant("1/sqrt2", 256)
    y = constant("1/4", 256)
    orbit0 = cat_map_orbit(x, y, 0)
    assert len(orbit0) == 1
    assert orbit0[0][0].num == x.num and orbit0[0][1].num == y.num


def test_cat_map_closed_form_equals_iterated_map_exactly():
    x = constant("1/sqrt2", 512)
    y = constant("golden", 512)
    orbit = cat_map_orbit(x, y, 30)
    bits = orbit[0][0].bits
    cx, cy = x.resize(bits).num, y.resize(bits).num
    modulus = 1 << bits
    for k, (ox, oy) in enumerate(orbit):
        assert (ox.num, oy.num) == (cx, cy), f"mismatch at step {k}"
        cx, cy = (2 * cx + cy) % modulus, (cx + cy) % modulus


def test_cat_map_auto_raises_precision():
    x = constant("1/sqrt2", 64)
    y = constant("1/sqrt3", 64)
    orbit = cat_map_orbit(x, y, 50)
    fib = [0, 1]
    while len(fib) < 102:
        fib.append(fib[-1] + fib[-2])
    assert orbit[0][0].bits >= fib[101].bit_length() + 64


def test_cat_map_double_precision_failure_mode():
    steps = 60
    exact = sample_orbit(cat_map_orbit(constant("1/sqrt2", 1024),
                                       constant("1/sqrt3", 1024), steps),
                         shifted_cosine()).alphas.real
    naive_orbit = cat_map_orbit_float64(1 / math.sqrt(2), 1 / math.sqrt(3), steps)
    naive = np.array([0.5 + math.cos(2 * math.pi * y) / 3 for _, y in naive_orbit])
    err = np.abs(naive - exact)
    assert np.max(err[40:]) > 0.1          # O(1) breakdown
    assert np.max(err[:10]) < 1e-9         # early iterates still fine


def test_skew_shift_square_progression():
    # from (gamma/2, 0) the angle coordinate is n^2 * gamma / 2 mod 1, exactly
    gamma = constant("1/sqrt2", 256)
    x = gamma.half()
    y = FixedFraction(0, 257)
    orbit = skew_shift_orbit(gamma, x, y, 12)
    bits = orbit[0][0].bits
    half = gamma.half().resize(bits)
    for n, (_, yn) in enumerate(orbit):
        assert yn.num == half.mul_int(n * n).num, f"n={n}"


def test_skew_shift_two_steps_oracle():
    # with gamma = 1/sqrt2, start (gamma/2, 0): y_2 = 2*gamma = sqrt2 mod 1
    gamma = constant("1/sqrt2", 256)
    orbit = skew_shift_orbit(gamma, gamma.half(), FixedFraction(0, 257), 2)
    assert abs(orbit[2][1].to_float() - (math.sqrt(2) - 1)) < 1e-15
    with mpmath.workdps(60):    # independent step-by-step iteration of T(x,y) = (x+g, x+y)
        g = 1 / mpmath.sqrt(2)
        x, y = g / 2, mpmath.mpf(0)
        for _ in range(2):
            x, y = (x + g) % 1, (x + y) % 1
        assert abs(orbit[2][1].to_float() - float(y)) < 1e-15


def test_skew_shift_degenerate_rotation():
    gamma = FixedFraction(0, 128)
    x = constant("1/4", 128)
    y = constant("1/8", 128)
    orbit = skew_shift_orbit(gamma, x, y, 8)
    for n, (xn, yn) in enumerate(orbit):
        assert xn.as_fraction() == x.as_fraction()
        assert yn.as_fraction() == (y.as_fraction() + n * x.as_fraction()) % 1


def test_samplers_special_values():
    # amplitude is the double nearest 1/3, so the extremes sit one ulp
    # from the exact rationals 5/6 and 1/6
    s = shifted_cosine()
    zero = FixedFraction(0, 64)
    half = constant("1/2", 64)
    quarter = constant("1/4", 64)
    assert s((zero, zero)) == pytest.approx(5 / 6, abs=2e-16)
    assert s((zero, zero)) == 0.5 + s.amplitude
    assert s((zero, half)) == pytest.approx(1 / 6, abs=2e-16)
    assert s((zero, half)) == 0.5 - s.amplitude
    assert pure_cosine(0.9)((zero, quarter)) == 0.0


def test_sampler_range_validation():
    with pytest.raises(DomainError):
        CosineSampler(0.5, 0.5)           # |offset| + |amplitude| = 1
    with pytest.raises(DomainError):
        pure_cosine(1.0)
    rng = np.random.default_rng(3)
    offset, amplitude = 0.3, 0.65
    sampler = CosineSampler(offset, amplitude)
    pts = [(FixedFraction(0, 64), FixedFraction(int(rng.integers(0, 2**63)), 64))
           for _ in range(50)]
    alphas = sample_orbit(pts, sampler).alphas
    assert np.max(np.abs(alphas)) <= offset + amplitude < 1


def test_uamo_structure_and_values():
    lam2 = 1 / math.sqrt(2)
    seq = uamo_coefficients(0.9, lam2, "1/sqrt2", "0", 8)
    even = seq.alphas[0::2].real
    assert np.allclose(even, math.sqrt(1 - lam2 ** 2), atol=1e-15)
    assert seq.alphas[0].real == pytest.approx(1 / math.sqrt(2), abs=1e-15)
    # odd entry for rotation index 1: 0.9 * cos(2*pi / sqrt2), oracle via mpmath
    with mpmath.workdps(50):
        want = float(mpmath.mpf("0.9") * mpmath.cos(2 * mpmath.pi / mpmath.sqrt(2)))
    assert seq.alphas[1].real == pytest.approx(want, abs=1e-15)
    assert want == pytest.approx(-0.2396298078, abs=1e-9)


def test_uamo_parameter_validation():
    with pytest.raises(DomainError):
        uamo_coefficients(0.9, 1.0, "1/sqrt2", "0", 4)    # lam2 not in (0,1)
    with pytest.raises(DomainError):
        uamo_coefficients(1.0, 0.5, "1/sqrt2", "0", 4)
    with pytest.raises(DomainError):
        uamo_coefficients(0.9, 0.5, "1/sqrt2", "0", 0)


def test_precision_stability_gate_small():
    # doubling the working precision must not move any alpha by 1e-14
    def run(bits_scale):
        steps = 60
        from leeyang.dynamics.orbits import cat_map_precision_bits
        bits = cat_map_precision_bits(steps) * bits_scale
        orbit = cat_map_orbit(constant("1/sqrt2", bits), constant("1/sqrt3", bits), steps)
        return sample_orbit(orbit, shifted_cosine()).alphas.real

    assert np.max(np.abs(run(1) - run(2))) < 1e-14
