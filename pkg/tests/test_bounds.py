"""Elementary bounds: profiles, extremal monomials, vertex sampling, sandwich."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pdrank import (
    MonomialOrderSpec,
    OrderSpec,
    dim_partials,
    extremal_monomial,
    lower_bound_extremal,
    monomial_dim_profile,
    parse_poly,
    upper_bound_linearity,
    vertex_sample,
)
from pdrank.bounds import default_order_family, extremal_candidates
from pdrank.corpus import random_polys
from pdrank.polyio import scale


def test_profile_small_example():
    # (1 + t + t^2)(1 + t)
    assert monomial_dim_profile((2, 1)) == [1, 2, 2, 1]


def test_profile_single_variable_chain():
    assert monomial_dim_profile((7,)) == [1] * 8


def test_profile_constant():
    assert monomial_dim_profile(()) == [1]
    assert monomial_dim_profile((0, 0)) == [1]


@given(st.lists(st.integers(0, 5), min_size=1, max_size=5))
@settings(max_examples=100)
def test_profile_sum_is_product(alpha):
    alpha = tuple(alpha)
    prod = 1
    for a in alpha:
        prod *= a + 1
    assert sum(monomial_dim_profile(alpha)) == prod


@given(st.lists(st.integers(0, 1), min_size=1, max_size=8))
@settings(max_examples=50)
def test_profile_symmetric_for_multilinear(alpha):
    profile = monomial_dim_profile(tuple(alpha))
    assert profile == profile[::-1]


def test_extremal_monomial_identity_lex_min():
    f = parse_poly("x1*x2 + x2^2")
    spec = MonomialOrderSpec((0, 1), "min")
    assert extremal_monomial(f, spec) == (0, 2)  # (0,2) < (1,1) lexicographically
    spec_max = MonomialOrderSpec((0, 1), "max")
    assert extremal_monomial(f, spec_max) == (1, 1)


def test_extremal_monomial_single_term_any_order():
    f = parse_poly("x1^2*x2")
    for spec in default_order_family(2):
        assert extremal_monomial(f, spec) == (2, 1)


def _power_sum_plus_product(n):
    return parse_poly(
        "+".join(
            [f"x{i}^{n}" for i in range(1, n + 1)]
            + ["*".join(f"x{i}" for i in range(1, n + 1))]
        )
    )


def test_extremal_monomial_never_interior_point():
    n = 4
    f = _power_sum_plus_product(n)
    ones = (1,) * n
    for spec in default_order_family(n):
        m = extremal_monomial(f, spec)
        assert m != ones
        assert sorted(m) == [0] * (n - 1) + [n]


def test_vertex_sample_excludes_barycenter():
    n = 4
    f = _power_sum_plus_product(n)
    verts = vertex_sample(f, trials=64, rng_seed=3)
    assert verts  # at least one vertex found
    for v in verts:
        assert v != (1,) * n
        assert sorted(v) == [0] * (n - 1) + [n]


def test_vertex_sample_certificates_are_unique_argmax():
    f = parse_poly("x1^3 + x2^3 + x1*x2 + 1")
    for exps, w in vertex_sample(f, trials=40, rng_seed=9).items():
        values = [
            sum(wi * e for wi, e in zip(w, t.exps)) for t in f.terms
        ]
        best = max(values)
        assert values.count(best) == 1
        assert sum(wi * e for wi, e in zip(w, exps)) == best


def test_vertex_sample_single_monomial_and_segment():
    f = parse_poly("5*x1^2*x2")
    assert set(vertex_sample(f, trials=4, rng_seed=0)) == {(2, 1)}
    seg = parse_poly("x1 + x2")
    found = vertex_sample(seg, trials=32, rng_seed=1)
    assert set(found) <= {(1, 0), (0, 1)}
    assert found


def test_lower_bound_multilinear_is_binomial():
    f = parse_poly("x1*x2*x3 + x1*x2*x4 + x2*x3*x4")
    for k in range(4):
        assert lower_bound_extremal(f, k) == math.comb(3, k)


def test_lower_bound_collapses_on_barycenter_example():
    n = 4
    f = _power_sum_plus_product(n)
    for k in range(1, n):
        assert lower_bound_extremal(f, k) == 1


def test_lower_bound_tight_for_single_monomial():
    f = parse_poly("x1^2*x2^2")
    profile = monomial_dim_profile((2, 2))
    for k in range(5):
        assert lower_bound_extremal(f, k) == profile[k]
        assert upper_bound_linearity(f, k) == profile[k]


def test_upper_bound_example():
    f = parse_poly("x1*x2 + x3")
    assert upper_bound_linearity(f, 1) == 3


def test_upper_bound_multilinear_homogeneous_term_sum():
    f = parse_poly("x1*x2*x3 + x1*x4*x5 + x2*x4*x5")
    # (a) = s * C(d, k) may or may not be the min; it is an upper bound anyway
    for k in range(4):
        assert upper_bound_linearity(f, k) <= 3 * math.comb(3, k)
        assert dim_partials(f, OrderSpec.exact(k)) <= upper_bound_linearity(f, k)


def test_bounds_invariant_under_scaling():
    f = parse_poly("x1^2*x2 + 3*x3^2 + x1*x3")
    g = scale(f, Fraction(9, 7))
    for spec in default_order_family(3):
        assert extremal_monomial(f, spec) == extremal_monomial(g, spec)
    for k in range(f.degree + 1):
        assert lower_bound_extremal(f, k) == lower_bound_extremal(g, k)
        assert upper_bound_linearity(f, k) == upper_bound_linearity(g, k)


def test_extremal_candidates_labels():
    f = parse_poly("x1^2 + x2^2")
    cands = extremal_candidates(f, vertex_trials=8, rng_seed=0)
    assert set(cands) == {(2, 0), (0, 2)}


def test_sandwich_on_random_corpus():
    for i, f in enumerate(random_polys(seed=23, count=15, max_vars=5, max_terms=6)):
        for k in range(f.degree + 1):
            exact = dim_partials(f, OrderSpec.exact(k))
            assert lower_bound_extremal(f, k, rng_seed=i) <= exact
            assert exact <= upper_bound_linearity(f, k)


def test_order_spec_validation():
    with pytest.raises(ValueError):
        MonomialOrderSpec((0, 0), "min")
    with pytest.raises(ValueError):
        MonomialOrderSpec((0, 1), "down")
