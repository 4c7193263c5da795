"""Elementary symmetric polynomials: where the trace bound collapses.

For Sym_{d,n} at order k the derivative matrix restricted to 0/1
multi-indices is the disjointness matrix (rows: k-subsets, columns:
(d-k)-subsets, entry 1 iff disjoint), which has full rank
min(C(n,k), C(n,d-k)).  The Gram matrix B has closed-form entries
B_{I,J} = C(n - |I u J|, d - k), giving closed forms for both traces:

    Tr(B)   = C(n-k, d-k) * C(n, k)
    Tr(B^2) = sum_{t=0}^{k} C(n,k) C(k,t) C(n-k, k-t) C(n-2k+t, d-k)^2

(the t-th summand groups index pairs with |I n J| = t, so |I u J| = 2k-t;
this grouping is validated against the generic triple-sum oracle in the
tests).  The proxy rank v = Tr(B)^2/Tr(B^2) stays bounded while the true
rank u grows, and the series helpers below tabulate that gap exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .combinat import binom
from .errors import ResourceLimitError
from .exact import DEFAULT_ELIMINATION_BUDGET, sparse_int_rank
from .polyio import SparsePoly

DEFAULT_TERM_CAP = 100_000
DEFAULT_CROSS_CHECK_CELLS = 250_000


@dataclass(frozen=True)
class SymGapPoint:
    """One point of the gap series: exact rank u vs. proxy v and its bound."""

    n: int
    d: int
    k: int
    u: int
    v: Fraction
    upper_v: Fraction
    ratio: Fraction


def sym_poly(n: int, d: int, *, term_cap: int = DEFAULT_TERM_CAP) -> SparsePoly:
    """Sym_{d,n}: the sum of all C(n,d) multilinear degree-d monomials."""
    if not 1 <= d <= n:
        raise ValueError("need 1 <= d <= n")
    if binom(n, d) > term_cap:
        raise ResourceLimitError("terms", term_cap, binom(n, d))
    variables = [f"x{i}" for i in range(1, n + 1)]
    items = []
    for subset in combinations(range(n), d):
        exps = [0] * n
        for i in subset:
            exps[i] = 1
        items.append((tuple(exps), 1))
    return SparsePoly.from_terms(variables, items)


def disjointness_matrix(n: int, d: int, k: int) -> list[dict[int, int]]:
    """Rows: k-subsets I; columns: (d-k)-subsets J; entry 1 iff disjoint."""
    col_subsets = list(combinations(range(n), d - k))
    rows = []
    for i_subset in combinations(range(n), k):
        i_set = set(i_subset)
        rows.append(
            {j: 1 for j, c in enumerate(col_subsets) if not i_set.intersection(c)}
        )
    return rows


def sym_exact_dim(
    n: int,
    d: int,
    k: int,
    *,
    cross_check: bool | None = None,
    cross_check_cells: int = DEFAULT_CROSS_CHECK_CELLS,
    budget: int = DEFAULT_ELIMINATION_BUDGET,
) -> int:
    """dim of the order-k derivative span of Sym_{d,n}: min(C(n,k), C(n,d-k)).

    The disjointness matrix has full rank, which the closed form relies on;
    with ``cross_check`` (on by default for small sizes) the matrix is
    materialized and its exact rank compared.
    """
    if not (0 <= k <= d <= n):
        raise ValueError("need 0 <= k <= d <= n")
    value = min(binom(n, k), binom(n, d - k))
    if cross_check is None:
        cross_check = binom(n, k) * binom(n, d - k) <= cross_check_cells
    if cross_check:
        rank = sparse_int_rank(disjointness_matrix(n, d, k), budget=budget)
        if rank != value:
            raise AssertionError(
                f"disjointness rank {rank} != closed form {value} for (n,d,k)=({n},{d},{k})"
            )
    return value


def sym_trace_B(n: int, d: int, k: int) -> int:
    """Tr(B) = C(n-k, d-k) * C(n, k) (every diagonal entry is C(n-k, d-k))."""
    if not (0 <= k <= d <= n):
        raise ValueError("need 0 <= k <= d <= n")
    return binom(n - k, d - k) * binom(n, k)


def sym_trace_B2(n: int, d: int, k: int) -> int:
    """Tr(B^2) by grouping index pairs (I, J) by their overlap size t."""
    if not (0 <= k <= d <= n):
        raise ValueError("need 0 <= k <= d <= n")
    total = 0
    for t in range(k + 1):
        pairs = binom(n, k) * binom(k, t) * binom(n - k, k - t)
        total += pairs * binom(n - 2 * k + t, d - k) ** 2
    return total


def sym_proxy(n: int, d: int, k: int) -> Fraction:
    """v = Tr(B)^2 / Tr(B^2) from the closed forms."""
    tb2 = sym_trace_B2(n, d, k)
    if tb2 == 0:
        return Fraction(0)
    tb = sym_trace_B(n, d, k)
    return Fraction(tb * tb, tb2)


def sym_upper_v(n: int, d: int, k: int) -> Fraction:
    """Closed-form upper bound on the proxy from the disjoint-pair subsum.

    Requires n >= d + k so the subsum (pairs I, J disjoint) is nonempty.
    """
    denom = binom(n - 2 * k, d - k) ** 2 * binom(n - k, k) * binom(n, k)
    if denom == 0:
        raise ValueError("upper bound undefined: need n >= d + k and n >= 2k")
    num = binom(n - k, d - k) ** 2 * binom(n, k) ** 2
    return Fraction(num, denom)


def _gap_point(n: int, d: int, k: int) -> SymGapPoint:
    u = min(binom(n, k), binom(n, d - k))
    v = sym_proxy(n, d, k)
    upper = sym_upper_v(n, d, k)
    return SymGapPoint(n=n, d=d, k=k, u=u, v=v, upper_v=upper, ratio=v / u)


def sym_gap_series_fixed(d: int, k: int, n_values: Sequence[int]) -> list[SymGapPoint]:
    """Gap series at fixed (d, k) over a range of n; needs k < d < n <= n+."""
    if not (1 <= k < d):
        raise ValueError("need 1 <= k < d")
    points = []
    for n in n_values:
        if not d < n:
            raise ValueError(f"need d < n (got d={d}, n={n})")
        if n < d + k:
            raise ValueError(f"need n >= d + k for the upper bound (got n={n})")
        points.append(_gap_point(n, d, k))
    return points


def sym_gap_series_scaled(
    kp: int, dp: int, np_: int, m_values: Sequence[int]
) -> list[SymGapPoint]:
    """Gap series along (n, d, k) = m * (n', d', k') with k' < d' < n'/2.

    Differentiation order and degree scale together; since the dimension at
    order k equals the dimension at order d-k, k' is normalized internally
    to min(k', d'-k') so that 2k' <= d'.
    """
    if not (1 <= kp < dp):
        raise ValueError("need 1 <= k' < d'")
    if not 2 * dp < np_:
        raise ValueError("need d' < n'/2")
    kp_eff = min(kp, dp - kp)
    points = []
    for m in m_values:
        if m < 1:
            raise ValueError("m must be >= 1")
        points.append(_gap_point(np_ * m, dp * m, kp_eff * m))
    return points
