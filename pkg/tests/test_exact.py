"""Exact derivative matrices and rational rank, checked against naive oracles."""

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pdrank import (
    OrderSpec,
    ResourceLimitError,
    SparsePoly,
    build_matrix,
    derivative,
    dim_partials,
    parse_poly,
    rank_exact,
    sparse_int_rank,
    to_ordinary,
    to_scaled,
)
from pdrank.corpus import random_homogeneous_polys, random_polys
from pdrank.polyio import permute_vars, scale


def ordinary_derivative(f: SparsePoly, beta) -> SparsePoly:
    """Whiteboard oracle: repeated single-variable differentiation, ordinary basis."""
    items = []
    for t in f.terms:
        coef = t.coef
        exps = list(t.exps)
        dead = False
        for i, b in enumerate(beta):
            for _ in range(b):
                if exps[i] == 0:
                    dead = True
                    break
                coef *= exps[i]
                exps[i] -= 1
            if dead:
                break
        if not dead:
            items.append((tuple(exps), coef))
    return SparsePoly.from_terms(f.vars, items)


def test_derivative_simple_cases():
    f = to_scaled(parse_poly("x1*x2"))
    d = derivative(f, (1, 0))
    assert d.coef_map() == {(0, 1): Fraction(1)}
    assert derivative(f, (0, 0)) == f


def test_derivative_matches_symbolic_oracle_on_power_term():
    f = parse_poly("x1^2*x2")
    got = to_ordinary(derivative(to_scaled(f), (2, 0)))
    assert got == ordinary_derivative(f, (2, 0))
    assert got.coef_map() == {(0, 1): Fraction(2)}  # d^2/dx1^2 (x1^2 x2) = 2 x2


@given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
@settings(max_examples=50)
def test_derivative_matches_symbolic_oracle_random(b1, b2, b3):
    f = parse_poly("3/2*x1^3*x2 - x2^2*x3 + 5*x1*x3^2 + 7")
    beta = (b1, b2, b3)
    got = to_ordinary(derivative(to_scaled(f), beta))
    assert got == ordinary_derivative(f, beta)


def test_derivative_requires_scaled_basis():
    with pytest.raises(ValueError):
        derivative(parse_poly("x1"), (1,))


def test_build_matrix_identity_pattern():
    m = build_matrix(parse_poly("x1*x2"), OrderSpec.exact(1))
    assert m.rows == ((0, 1), (1, 0))
    assert m.cols == ((0, 1), (1, 0))
    assert m.dense() == [[0, 1], [1, 0]]


def test_build_matrix_monomial_all_orders_row_count():
    f = parse_poly("x1^2*x2^3")
    m = build_matrix(f, OrderSpec.all_orders())
    assert m.nrows == (2 + 1) * (3 + 1)


def test_build_matrix_three_rows_rank_three():
    f = parse_poly("x1*x2 + x3")
    m = build_matrix(f, OrderSpec.exact(1))
    assert m.nrows == 3 and m.ncols == 3
    assert rank_exact(m) == 3


def test_rank_identity_and_duplicate_rows():
    ident = [{i: 1} for i in range(6)]
    assert sparse_int_rank(ident) == 6
    assert sparse_int_rank(ident + [dict(ident[0])]) == 6


def test_rank_against_dense_known_matrices():
    rows = [{0: 1, 1: 2, 2: 3}, {0: 2, 1: 4, 2: 6}, {1: 1, 2: 1}]
    assert sparse_int_rank(rows) == 2
    rows = [{0: 2, 1: 1}, {0: 1, 1: 1}, {0: 3, 1: 1}]
    assert sparse_int_rank(rows) == 2
    assert sparse_int_rank([]) == 0
    assert sparse_int_rank([{}]) == 0


def fraction_gaussian_rank(dense) -> int:
    """Independent oracle: plain Gaussian elimination over Fraction."""
    rows = [[Fraction(v) for v in row] for row in dense]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        for i in range(r + 1, len(rows)):
            if rows[i][col] != 0:
                factor = rows[i][col] / prow[col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], prow)]
        rank += 1
        r += 1
        if r == len(rows):
            break
    return rank


@given(
    st.integers(1, 6),
    st.integers(1, 6),
    st.data(),
)
@settings(max_examples=150)
def test_rank_matches_fraction_gaussian_oracle(nrows, ncols, data):
    dense = [
        [data.draw(st.integers(-9, 9)) for _ in range(ncols)] for _ in range(nrows)
    ]
    sparse = [{j: v for j, v in enumerate(row) if v} for row in dense]
    assert sparse_int_rank(sparse) == fraction_gaussian_rank(dense)


@given(
    st.lists(
        st.lists(st.integers(-4, 4), min_size=4, max_size=4), min_size=1, max_size=5
    )
)
@settings(max_examples=100)
def test_rank_matches_gram_rank(dense):
    """rank(M) == rank(M^T M) over the rationals."""
    rows = [{j: v for j, v in enumerate(r) if v} for r in dense]
    ncols = 4
    gram = [[0] * ncols for _ in range(ncols)]
    for r in dense:
        for i in range(ncols):
            if r[i]:
                for j in range(ncols):
                    gram[i][j] += r[i] * r[j]
    gram_rows = [{j: v for j, v in enumerate(g) if v} for g in gram]
    assert sparse_int_rank(rows) == sparse_int_rank(gram_rows)


def test_dim_partials_power_sum_plus_product():
    n = 5
    text = "+".join(
        ["*".join(f"x{i}" for i in range(1, n + 1))]
        + [f"x{i}^{n}" for i in range(1, n + 1)]
    )
    f = parse_poly(text)
    dims = [dim_partials(f, OrderSpec.exact(k)) for k in range(n + 1)]
    assert dims == [1, 5, 15, 15, 5, 1]


def test_dim_partials_zero_poly_is_zero():
    f = parse_poly("x1 - x1")
    assert dim_partials(f, OrderSpec.exact(1)) == 0
    assert dim_partials(f, OrderSpec.all_orders()) == 0


def test_dim_star_of_monomial_is_product():
    f = parse_poly("x1^2*x2^3*x3")
    assert dim_partials(f, OrderSpec.all_orders()) == 3 * 4 * 2


def test_interior_orders_requires_degree_two():
    with pytest.raises(ValueError):
        dim_partials(parse_poly("x1 + x2"), OrderSpec.interior())


def test_product_polynomial_dimension_is_binomial():
    """prod_i sum_j x_ij keeps dimension C(d, k) no matter how wide the sums are."""
    import math

    for d in range(1, 5):
        for q in range(1, 4):
            variables = [f"x{i}_{j}" for i in range(1, d + 1) for j in range(1, q + 1)]
            items = []
            for choice in itertools.product(range(q), repeat=d):
                exps = [0] * (d * q)
                for i, j in enumerate(choice):
                    exps[i * q + j] = 1
                items.append((tuple(exps), 1))
            f = SparsePoly.from_terms(variables, items)
            for k in range(d + 1):
                assert dim_partials(f, OrderSpec.exact(k)) == math.comb(d, k)


def test_homogeneous_direct_sum_and_interior_identity():
    for f in random_homogeneous_polys(seed=11, count=8):
        deg = f.degree
        total = sum(
            dim_partials(f, OrderSpec.exact(k)) for k in range(deg + 1)
        )
        assert dim_partials(f, OrderSpec.all_orders()) == total
        if deg >= 2:
            star = dim_partials(f, OrderSpec.all_orders())
            assert dim_partials(f, OrderSpec.interior()) == star - 2


def test_dimension_invariant_under_scaling_and_permutation():
    for i, f in enumerate(random_polys(seed=5, count=6, max_vars=4, max_terms=5)):
        k = i % (f.degree + 1)
        base = dim_partials(f, OrderSpec.exact(k))
        assert dim_partials(scale(f, Fraction(-7, 3)), OrderSpec.exact(k)) == base
        n = len(f.vars)
        perm = tuple(reversed(range(n)))
        assert dim_partials(permute_vars(f, perm), OrderSpec.exact(k)) == base


def test_resource_caps_raise_structured_errors():
    f = parse_poly("x1^3*x2^3*x3^3")
    with pytest.raises(ResourceLimitError) as err:
        build_matrix(f, OrderSpec.all_orders(), max_rows=10)
    assert err.value.what == "rows"
    with pytest.raises(ResourceLimitError) as err:
        build_matrix(f, OrderSpec.all_orders(), max_cols=10)
    assert err.value.what == "cols"
    big = [{j: j + i + 1 for j in range(40)} for i in range(40)]
    with pytest.raises(ResourceLimitError) as err:
        sparse_int_rank(big, budget=100)
    assert err.value.what == "elimination-budget"


def test_matrix_entries_clear_denominators():
    f = parse_poly("1/2*x1 + 1/3*x2")
    m = build_matrix(f, OrderSpec.exact(1))
    assert m.clear_factor == 6
    vals = sorted(v for row in m.entries for v in row.values())
    assert vals == [2, 3]
