import math

import mpmath
import numpy as np
import pytest

from knotsurgery.dihedral import (
    LENS_PARAMETER,
    ORIENTATION_SIGN,
    _floor_sign,
    _project,
    _tangent_frame,
    gauss_linking_integral,
    gauss_linking_oracle,
    hosokawa_at_one,
    linking_matrix,
    linking_numbers,
    measure_linking,
)
from knotsurgery.exact import det_exact
from knotsurgery.twobridge import enumerate_knots

from conftest import FACTORS_105_64, FACTORS_105_76, product


def fractions_up_to(pmax):
    for p in range(3, pmax + 1, 2):
        for q in range(1, p):
            if math.gcd(p, q) == 1:
                yield p, q


def test_frozen_convention():
    assert LENS_PARAMETER == "q"
    assert ORIENTATION_SIGN == -1
    assert linking_numbers(105, 64).epsilon[:12] == (1, -1, 1, -1, -1, 1, -1, 1, -1, -1, 1, -1)
    assert linking_numbers(105, 76).epsilon[:12] == (1, -1, -1, 1, 1, -1, -1, 1, 1, -1, 1, 1)


def test_linking_number_examples():
    eta = ORIENTATION_SIGN
    d = linking_numbers(3, 2)
    assert d.epsilon == (-eta, -eta) and d.sigma == 2 * eta
    d = linking_numbers(5, 2)
    assert d.epsilon == (eta, -eta, -eta, eta) and d.sigma == 0


def test_linking_matrix_examples():
    eta = ORIENTATION_SIGN
    assert linking_matrix(3, 2) == [[eta * x for x in row] for row in [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]]
    row0 = [eta * x for x in (0, 1, -1, -1, 1)]
    lam = linking_matrix(5, 2)
    assert lam[0] == row0
    assert all(lam[i] == row0[-i:] + row0[:-i] for i in range(5))


def test_matrix_shape_up_to_45():
    for p, q in fractions_up_to(45):
        lam = linking_matrix(p, q)
        assert all(sum(row) == 0 for row in lam)
        assert all(lam[i][j] == lam[j][i] for i in range(p) for j in range(p))


def test_epsilon_symmetry_up_to_99():
    for p, q in fractions_up_to(99):
        e = linking_numbers(p, q)
        assert all(e.eps(j) == e.eps(p - j) for j in range(1, p))
        assert e.sigma == -sum(e.epsilon)


def test_mirror_flips_epsilon():
    for p, q in fractions_up_to(99):
        assert linking_numbers(p, p - q).epsilon == tuple(-x for x in linking_numbers(p, q).epsilon)


def test_mirror_keeps_hosokawa_value():
    for p in (3, 5, 7, 9, 15, 21, 33):
        for q in enumerate_knots(p):
            assert hosokawa_at_one(p, q).value == hosokawa_at_one(p, p - q).value


def test_inverse_reindexing():
    for p, q in fractions_up_to(99):
        qi = pow(q, -1, p)
        e, ei = linking_numbers(p, q), linking_numbers(p, qi)
        assert all(ei.eps(q * j) == e.eps(j) for j in range(1, p))


def test_floor_formula_stable_mod_p():
    for p, q in fractions_up_to(45):
        for j in range(1, p):
            s = _floor_sign(p, q, j)
            assert s == _floor_sign(p, q + p, j) == _floor_sign(p, q - p, j)


def test_minor_choice_invariance():
    for p, q in [(3, 2), (7, 2), (15, 4), (21, 8), (105, 64), (105, 76)]:
        last = hosokawa_at_one(p, q).value
        for k in (0, p // 2):
            assert hosokawa_at_one(p, q, deleted=k).value == last


def test_hosokawa_small():
    h = hosokawa_at_one(3, 2)
    assert (h.value, h.value_over_p) == (3, 1)
    assert h.factorization.factors == ()


@pytest.mark.parametrize("q, factors", [(64, FACTORS_105_64), (76, FACTORS_105_76)])
def test_hosokawa_values_105(q, factors):
    h = hosokawa_at_one(105, q)
    assert h.value_over_p == product(factors)
    assert h.factorization.factors == factors
    # K(105/64) = K(105/-41), K(105/76) = K(105/-29)
    assert hosokawa_at_one(105, q - 105).value == h.value


def circulant_minor_oracle(p, q):
    """Matrix-tree count for a zero-row-sum symmetric circulant: prod of the
    nonzero eigenvalues divided by p, in high-precision floating point."""
    e = linking_numbers(p, q)
    row = (e.sigma,) + e.epsilon
    mpmath.mp.dps = 120
    prod = mpmath.mpf(1)
    for k in range(1, p):
        prod *= sum(row[j] * mpmath.cos(2 * mpmath.pi * j * k / p) for j in range(p))
    return int(mpmath.nint(abs(prod) / p))


@pytest.mark.parametrize("p, q", [(3, 2), (5, 2), (9, 4), (15, 4), (21, 8), (45, 14), (105, 64), (105, 76)])
def test_minor_matches_eigenvalue_product(p, q):
    assert hosokawa_at_one(p, q).value == circulant_minor_oracle(p, q)


def hopf_fiber(phase, samples=2048):
    th = np.arange(samples) * (2 * np.pi / samples)
    z1 = np.cos(phase) * np.exp(1j * th)
    z2 = np.sin(phase) * np.exp(1j * (th + 1.0))
    x = np.stack([z1.real, z1.imag, z2.real, z2.imag], axis=1)
    dx = np.stack([-z1.imag, z1.real, -z2.imag, z2.real], axis=1) * (2 * np.pi / samples)
    return x, dx


def test_projection_orientation_hopf_fibers_link_positively():
    rng = np.random.default_rng(7)
    for _ in range(3):
        pole = rng.normal(size=4)
        pole /= np.linalg.norm(pole)
        frame = _tangent_frame(pole, rng)
        a = _project(*hopf_fiber(0.3), pole, frame)
        b = _project(*hopf_fiber(1.1), pole, frame)
        assert gauss_linking_integral(*a, *b) == pytest.approx(1.0, abs=1e-6)


def test_oracle_examples():
    eta = ORIENTATION_SIGN
    assert gauss_linking_oracle(3, 2, 0, 1) == linking_numbers(3, 2).eps(1) == -eta
    assert gauss_linking_oracle(5, 2, 0, 2) == -eta
    with pytest.raises(ValueError):
        gauss_linking_oracle(5, 2, 1, 1)
    with pytest.raises(ValueError):
        gauss_linking_oracle(5, 2, 0, 1, samples=512)


def test_oracle_sample():
    for p, q in [(7, 2), (9, 4)]:
        e = linking_numbers(p, q)
        for i, j in [(0, 1), (1, 4), (2, 6)]:
            v = measure_linking(p, q, i, j)
            assert abs(v - round(v)) < 0.05
            assert round(v) == e.eps(j - i)


def test_oracle_is_reproducible():
    assert measure_linking(15, 4, 3, 11) == measure_linking(15, 4, 3, 11)
