"""Szego matrices, discriminants, and the partition-function bridge."""
import math

import numpy as np
import pytest

from leeyang.errors import DomainError
from leeyang.ising import partition_polynomial, partition_via_trace
from leeyang.szego import (det_discriminant_residual, discriminant,
                           interleaved_discriminant, ising_szego_conjugation,
                           szego_matrix, trace_discriminant, transfer_product)


def test_szego_matrix_values():
    z = np.exp(0.3j)
    assert np.allclose(szego_matrix(0.0, z), [[z, 0], [0, 1]])
    want = (2 / np.sqrt(3)) * np.array([[1, -0.5], [-0.5, 1]])
    assert np.allclose(szego_matrix(0.5, 1.0), want)
    rng = np.random.default_rng(0)
    for _ in range(30):
        a = complex(*rng.uniform(-0.7, 0.7, 2))
        zz = np.exp(2j * np.pi * rng.uniform()) * rng.uniform(0.3, 2.0)
        assert np.linalg.det(szego_matrix(a, zz)) == pytest.approx(zz, rel=1e-13)
    with pytest.raises(DomainError):
        szego_matrix(1.2, 1.0)


def test_transfer_product_free_and_single():
    z = np.exp(0.4j)
    assert np.allclose(transfer_product(np.zeros(5), z), np.diag([z ** 5, 1.0]))
    a = 0.3 - 0.2j
    assert np.allclose(transfer_product([a], z), szego_matrix(a, z))
    with pytest.raises(DomainError):
        transfer_product([0.1], 0.0)


def test_transfer_product_determinant():
    rng = np.random.default_rng(1)
    for _ in range(30):
        n = int(rng.integers(1, 12))
        alphas = (rng.uniform(-1, 1, n) + 1j * rng.uniform(-1, 1, n)) * 0.6
        z = np.exp(2j * np.pi * rng.uniform())
        det = np.linalg.det(transfer_product(alphas, z))
        assert abs(det - z ** n) <= 1e-12 * abs(z) ** n


def test_discriminant_free_case():
    for z in (1j, np.exp(0.2j), 2.0 + 0.0j):
        assert discriminant([0.0, 0.0], z) == pytest.approx(z + 1 / z, rel=1e-14)
    # zeros of z + 1/z are +-i
    assert abs(discriminant([0.0, 0.0], 1j)) < 1e-15
    assert abs(discriminant([0.0, 0.0], -1j)) < 1e-15
    with pytest.raises(DomainError):
        discriminant([0.1], 1.0)           # odd length has no z^{-N/2} flavor


def test_discriminant_real_on_circle():
    rng = np.random.default_rng(2)
    for _ in range(40):
        n = int(rng.integers(1, 7)) * 2
        alphas = (rng.uniform(-1, 1, n) + 1j * rng.uniform(-1, 1, n)) * 0.55
        z = np.exp(2j * np.pi * rng.uniform())
        assert abs(discriminant(alphas, z).imag) < 1e-10


def test_discriminant_doubling_identity():
    rng = np.random.default_rng(3)
    for _ in range(30):
        n = int(rng.integers(1, 7)) * 2
        alphas = (rng.uniform(-1, 1, n) + 1j * rng.uniform(-1, 1, n)) * 0.5
        z = np.exp(2j * np.pi * rng.uniform())
        d = discriminant(alphas, z)
        dd = discriminant(np.concatenate([alphas, alphas]), z)
        assert abs(dd - (d * d - 2.0)) < 1e-10


def test_trace_cyclic_invariance():
    rng = np.random.default_rng(4)
    alphas = (rng.uniform(-1, 1, 9) + 1j * rng.uniform(-1, 1, 9)) * 0.6
    z = np.exp(0.9j)
    base = trace_discriminant(alphas, z)
    for shift in (1, 4):
        assert trace_discriminant(np.roll(alphas, shift), z) == pytest.approx(base, rel=1e-12)


def test_interleave_step_identity():
    # S(a, z) S(0, z) = S(a, z^2), exactly in exact arithmetic
    prod = szego_matrix(0.5, 1j) @ szego_matrix(0.0, 1j)
    assert np.max(np.abs(prod - szego_matrix(0.5, -1.0))) < 1e-15
    rng = np.random.default_rng(5)
    for _ in range(40):
        a = complex(*rng.uniform(-0.7, 0.7, 2))
        z = np.exp(2j * np.pi * rng.uniform()) * rng.uniform(0.5, 1.5)
        prod = szego_matrix(a, z) @ szego_matrix(0.0, z)
        assert np.max(np.abs(prod - szego_matrix(a, z * z))) < 1e-13


def test_interleaved_discriminant_single_coupling():
    # trace of S(1/4, z^2) = (z^2 + 1) / sqrt(1 - 1/16)
    p = math.log(2)
    for z in (1j, np.exp(0.21j), 0.7 + 0.1j):
        want = (z ** 2 + 1.0) / math.sqrt(1 - 1 / 16)
        assert interleaved_discriminant([p], z) == pytest.approx(want, rel=1e-13)


def test_interleaved_discriminant_equals_halved_variable():
    rng = np.random.default_rng(6)
    from leeyang.ising import couplings_to_verblunsky
    for _ in range(20):
        n = int(rng.integers(1, 7))
        ps = rng.uniform(0.05, 2.0, n)
        z = np.exp(2j * np.pi * rng.uniform())
        lhs = interleaved_discriminant(ps, z)
        rhs = trace_discriminant(couplings_to_verblunsky(ps), z * z)
        assert abs(lhs - rhs) < 1e-12 * max(1.0, abs(rhs))


def test_interleaved_zeros_are_partition_zeros():
    rng = np.random.default_rng(7)
    for n in range(1, 9):
        ps = rng.uniform(0.05, 2.0, n)
        coeffs = partition_polynomial(ps)
        roots = np.roots(coeffs[::-1])
        assert roots.size == 2 * n
        # local scale: polynomial derivative at the root would be fairer, but
        # the trace values at nearby non-roots give a simple magnitude scale
        scale = max(abs(interleaved_discriminant(ps, np.exp(2j * np.pi * t)))
                    for t in np.linspace(0.01, 0.99, 17))
        for root in roots:
            assert abs(interleaved_discriminant(ps, root)) <= 1e-8 * max(scale, 1.0)


def test_conjugation_witness():
    lhs, rhs = ising_szego_conjugation(2.0, 1j)
    assert np.max(np.abs(lhs - rhs)) < 1e-14
    # both sides equal (2/i) * sqrt(1 - 2^-4) * S(1/4, -1)
    want = (2.0 / 1j) * math.sqrt(1 - 2.0 ** -4) * szego_matrix(0.25, -1.0)
    assert np.max(np.abs(lhs - want)) < 1e-14

    rng = np.random.default_rng(8)
    for _ in range(40):
        beta = rng.uniform(1.01, 5.0)
        zeta = np.exp(2j * np.pi * rng.uniform()) * rng.uniform(0.5, 1.5)
        lhs, rhs = ising_szego_conjugation(beta, zeta)
        assert np.max(np.abs(lhs - rhs)) < 1e-13


def test_conjugation_witness_domain():
    with pytest.raises(DomainError):
        ising_szego_conjugation(1.0, 1j)
    with pytest.raises(DomainError):
        ising_szego_conjugation(0.5, 1j)
    with pytest.raises(DomainError):
        ising_szego_conjugation(2.0, 0.0)


def test_full_trace_relation_to_partition_function():
    # Z_N(zeta) = prod((beta/zeta) sqrt(1 - beta^-4)) * trace(S-product at zeta^2)
    rng = np.random.default_rng(9)
    from leeyang.ising import couplings_to_verblunsky
    for _ in range(20):
        n = int(rng.integers(1, 8))
        ps = rng.uniform(0.05, 2.0, n)
        betas = np.exp(ps)
        zeta = np.exp(2j * np.pi * rng.uniform())
        prefactor = np.prod([(b / zeta) * math.sqrt(1 - b ** -4) for b in betas])
        lhs = partition_via_trace(ps, zeta)
        rhs = prefactor * trace_discriminant(couplings_to_verblunsky(ps), zeta ** 2)
        assert lhs == pytest.approx(rhs, rel=1e-11)


def test_det_identity_residuals():
    rng = np.random.default_rng(10)
    # free case by hand: det(z - F_2(pi/2)) = z^2 + 1 = z * Delta_2(z)
    assert det_discriminant_residual([0.0, 0.0], 1.0) < 1e-15
    for n in (2, 4, 8, 16):
        alphas = (rng.uniform(-1, 1, n) + 1j * rng.uniform(-1, 1, n)) * 0.6
        for _ in range(25):
            z = np.exp(2j * np.pi * rng.uniform())
            assert det_discriminant_residual(alphas, z, np.pi / 2) < 1e-9
            assert det_discriminant_residual(alphas, z, np.pi) < 1e-9


def test_discriminant_zero_distinctness_expectation():
    # finite sections of ergodic families should have simple discriminant zeros
    rng = np.random.default_rng(11)
    from leeyang.spectral import zeros_of_discriminant
    alphas = rng.uniform(0.05, 0.9, 12)
    phases = zeros_of_discriminant(alphas)
    assert np.min(phases.spacings()) > 0.0
