"""Semicircle orthogonal polynomials: exact coefficients and identities.

The trig oracle is P_k(2 cos phi) sin phi = sin((k+1) phi); coefficient
identities are checked in integer arithmetic, quadrature ones to 1e-10.
"""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from dbmtri.chebyshev import (
    matrix_poly_apply,
    matrix_poly_iter,
    poly_p,
    poly_p_explicit,
    poly_product_check,
    poly_product_expand,
    semicircle_quadrature,
)


def test_first_few_polynomials():
    assert poly_p(0).coeffs == (1,)
    assert poly_p(1).coeffs == (0, 1)
    assert poly_p(2).coeffs == (-1, 0, 1)
    assert poly_p(3).coeffs == (0, -2, 0, 1)
    assert poly_p(4).coeffs == (1, 0, -3, 0, 1)


@pytest.mark.parametrize("k", range(21))
def test_recurrence_equals_closed_form(k):
    assert poly_p(k).coeffs == poly_p_explicit(k).coeffs


@pytest.mark.parametrize("k", [1, 2, 5, 12, 20])
def test_trig_identity(k):
    phi = np.linspace(0.05, np.pi - 0.05, 80)
    lhs = poly_p(k)(2.0 * np.cos(phi)) * np.sin(phi)
    assert np.allclose(lhs, np.sin((k + 1) * phi), atol=1e-9)


def test_product_expansion_degrees():
    assert poly_product_expand(3, 5) == [8, 6, 4, 2]
    assert poly_product_expand(4, 4) == [8, 6, 4, 2, 0]
    assert poly_product_expand(0, 7) == [7]


@pytest.mark.parametrize("j", range(9))
@pytest.mark.parametrize("k", range(9))
def test_product_linearization_exact(j, k):
    assert poly_product_check(j, k)


def test_quadrature_integrates_orthonormally():
    # degree j+k <= 24 needs m >= 13 nodes
    x, w = semicircle_quadrature(13)
    gram = np.empty((13, 13))
    for j in range(13):
        for k in range(13):
            gram[j, k] = np.sum(w * poly_p(j)(x) * poly_p(k)(x))
    assert np.allclose(gram, np.eye(13), atol=1e-10)


def test_quadrature_weights_sum_to_one():
    _, w = semicircle_quadrature(40)
    assert np.isclose(w.sum(), 1.0, atol=1e-12)


def test_matrix_apply_matches_eigendecomposition():
    rng = np.random.default_rng(4)
    a = rng.standard_normal((20, 20))
    a = a + a.T
    lam, q = np.linalg.eigh(a)
    v = rng.standard_normal(20)
    for k in (0, 1, 3, 10):
        dense = (q * poly_p(k)(lam)) @ (q.T @ v)
        assert np.allclose(matrix_poly_apply(k, a, v), dense, atol=1e-8)


def test_iter_agrees_with_apply():
    rng = np.random.default_rng(5)
    a = rng.standard_normal((12, 12))
    a = a + a.T
    v = rng.standard_normal(12)
    for m, w in matrix_poly_iter(a, v, k_max=7):
        assert np.allclose(w, matrix_poly_apply(m, a, v), atol=1e-10)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 8), st.integers(0, 2**16))
def test_matrix_apply_linear_in_v(k, seed):
    rng = np.random.default_rng(seed)
    a = rng.standard_normal((6, 6))
    a = a + a.T
    v1, v2 = rng.standard_normal(6), rng.standard_normal(6)
    combo = matrix_poly_apply(k, a, 2.0 * v1 - 3.0 * v2)
    assert np.allclose(combo, 2.0 * matrix_poly_apply(k, a, v1) - 3.0 * matrix_poly_apply(k, a, v2), atol=1e-9)


def test_degree_validation():
    with pytest.raises(ValueError):
        poly_p(-1)
    with pytest.raises(ValueError):
        matrix_poly_apply(-2, np.eye(3), np.ones(3))
