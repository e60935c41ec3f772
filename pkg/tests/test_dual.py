"""Dual functionals, pairings, and the rapid-decrease seminorm family."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rhs.dual import (
    STABILIZATION_EPS,
    DualFunctional,
    coordinate_functional,
    factorial_functional,
    ones_functional,
    pair,
    restrict_functional,
    riesz_functional,
    seminorm,
    seminorm_partial_sums,
)
from rhs.errors import LadderSpecError
from rhs.ladder import LadderSpec, basis_vector, include, inner_product, norm, phi_vector

IDENTITY = LadderSpec.identity()


# ---------------------------------------------------------------------------
# pairing


def test_pair_all_ones():
    x = phi_vector(IDENTITY, [2.0, -1.0, 0.5])
    assert pair(ones_functional(), x) == 1.5


def test_pair_coordinate_extraction():
    x = phi_vector(IDENTITY, [4.0, 5.0, 6.0])
    assert pair(coordinate_functional(3), x) == 6.0


def test_pair_factorial_growth_single_term():
    # no growth restriction: f_i = i! pairs finitely with basis vectors
    f = factorial_functional()
    assert pair(f, basis_vector(IDENTITY, 4)) == 24.0
    for j in range(1, 19):
        assert pair(f, basis_vector(IDENTITY, j)) == math.factorial(j)


def test_pair_is_independent_of_presentation_level():
    f = factorial_functional()
    x = phi_vector(IDENTITY, [0.3, -0.7, 0.9])
    base = pair(f, x)
    for j in (4, 7, 12):
        assert pair(f, include(x, j)) == base


@settings(max_examples=50, deadline=None)
@given(st.lists(st.floats(-1e3, 1e3), min_size=1, max_size=6),
       st.lists(st.floats(-1e3, 1e3), min_size=1, max_size=6),
       st.floats(-10, 10), st.floats(-10, 10))
def test_pair_linearity(xs, ys, a, b):
    f = DualFunctional(lambda i: complex(i * i), "squares")
    x = phi_vector(IDENTITY, xs)
    y = phi_vector(IDENTITY, ys)
    lhs = pair(f, a * x + b * y)
    rhs = a * pair(f, x) + b * pair(f, y)
    assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(lhs), abs(rhs))


def test_functional_index_validation():
    f = ones_functional()
    with pytest.raises(LadderSpecError):
        f(0)
    with pytest.raises(LadderSpecError):
        coordinate_functional(0)


# ---------------------------------------------------------------------------
# level restrictions


def test_restrict_all_ones_norm():
    _, opnorm = restrict_functional(ones_functional(), 4, IDENTITY)
    assert opnorm == 2.0


def test_restrict_coordinate_norm():
    for n in (3, 5, 9):
        _, opnorm = restrict_functional(coordinate_functional(3), n, IDENTITY)
        assert opnorm == 1.0


def test_restrict_factorial_norm():
    vec, opnorm = restrict_functional(factorial_functional(), 3, IDENTITY)
    assert np.array_equal(vec, [1.0, 2.0, 6.0])
    assert math.isclose(opnorm, math.sqrt(41.0), rel_tol=1e-15)


def test_restriction_bound_is_cauchy_schwarz():
    rng = np.random.Generator(np.random.PCG64(5))
    f = DualFunctional(lambda i: complex((-1) ** i * i), "alt")
    for _ in range(200):
        lvl = int(rng.integers(1, 8))
        x = phi_vector(IDENTITY,
                       rng.standard_normal(lvl) + 1j * rng.standard_normal(lvl),
                       level=lvl)
        _, opnorm = restrict_functional(f, lvl, IDENTITY)
        assert abs(pair(f, x)) <= opnorm * norm(x) * (1.0 + 1e-12)


# ---------------------------------------------------------------------------
# riesz functionals


def test_riesz_examples():
    y = basis_vector(IDENTITY, 2)
    assert pair(riesz_functional(y), phi_vector(IDENTITY, [5.0, 7.0])) == 7.0
    y = phi_vector(IDENTITY, [1.0, 2.0])
    x = phi_vector(IDENTITY, [3.0, 4.0])
    assert pair(riesz_functional(y), x) == 11.0
    zero = phi_vector(IDENTITY, [0.0, 0.0])
    assert pair(riesz_functional(zero), x) == 0.0
    assert riesz_functional(zero)(5) == 0.0


def test_riesz_matches_inner_product_complex():
    rng = np.random.Generator(np.random.PCG64(17))
    for _ in range(300):
        lx, ly = int(rng.integers(1, 7)), int(rng.integers(1, 7))
        x = phi_vector(IDENTITY,
                       rng.standard_normal(lx) + 1j * rng.standard_normal(lx),
                       level=lx)
        y = phi_vector(IDENTITY,
                       rng.standard_normal(ly) + 1j * rng.standard_normal(ly),
                       level=ly)
        lhs = pair(riesz_functional(y), x)
        rhs = inner_product(x, y)
        assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(rhs))


# ---------------------------------------------------------------------------
# seminorms


def test_seminorm_k0_is_l2_norm():
    assert seminorm([3.0, 4.0], 0) == 5.0


def test_seminorm_single_basis_term():
    # weight at n = 3, k = 1 is 3^4, so the value is 3^2
    assert seminorm([0.0, 0.0, 1.0], 1) == 9.0


def test_seminorm_two_entries():
    assert math.isclose(seminorm([1.0, 1.0], 1), math.sqrt(17.0), rel_tol=1e-15)


def test_seminorm_rejects_negative_index():
    with pytest.raises(LadderSpecError):
        seminorm([1.0], -1)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.floats(-1e3, 1e3), min_size=1, max_size=16),
       st.integers(0, 3))
def test_seminorm_monotone_in_k(xs, k):
    assert seminorm(xs, k) <= seminorm(xs, k + 1)


def test_finitely_supported_vectors_have_all_seminorms_finite():
    xs = [2.0, 0.0, -1.0, 3.0]
    for k in range(6):
        assert math.isfinite(seminorm(xs, k))


def test_partial_sums_single_coordinate_constant():
    trace = seminorm_partial_sums(lambda i: 1.0 if i == 1 else 0.0, 2, 30)
    assert np.all(trace.values == 1.0)
    assert trace.stabilized


def test_partial_sums_geometric_stabilizes():
    trace = seminorm_partial_sums(lambda i: 2.0 ** (-i), 1, 60)
    assert trace.stabilized
    inc = np.diff(trace.values)
    assert np.all(inc[-10:] < STABILIZATION_EPS)
    assert np.all(inc[49:] < STABILIZATION_EPS)  # stabilized past N ~ 50


def test_partial_sums_inverse_linear_diverges():
    # x_n = 1/n is square summable but the k = 1 weighted sums grow like N^3
    trace = seminorm_partial_sums(lambda i: 1.0 / i, 1, 200)
    assert not trace.stabilized
    assert trace.values[-1] > 2.0 * trace.values[99]


def test_partial_sums_nondecreasing_and_sequence_input():
    seq = np.array([1.0, -0.5, 0.25, 0.0, 0.125])
    trace = seminorm_partial_sums(seq, 2, 5)
    assert np.all(np.diff(trace.values) >= 0.0)
    with pytest.raises(LadderSpecError):
        seminorm_partial_sums(seq, 2, 6)
    with pytest.raises(LadderSpecError):
        seminorm_partial_sums(seq, 2, 0)


def test_partial_sums_match_seminorm_at_full_length():
    seq = [0.5, 0.25, -0.125, 0.0625]
    trace = seminorm_partial_sums(seq, 2, 4)
    assert math.isclose(trace.values[-1], seminorm(seq, 2), rel_tol=1e-14)
