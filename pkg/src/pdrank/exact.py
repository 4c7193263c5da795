"""Exact derivative-space dimensions via explicit matrices and rational rank.

This is the trusted oracle of the package: derivative matrices are
materialized with exact integer entries (a single common denominator is
cleared) and ranks are computed by fraction-free Bareiss elimination with
deterministic pivoting.  Everything here favors exactness and determinism
over speed; sizes are guarded by explicit caps.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from fractions import Fraction

from .combinat import all_sub_indices, lcm_all, sub_indices_of_order
from .errors import ResourceLimitError
from .polyio import (
    SCALED,
    ExponentVector,
    SparsePoly,
    Term,
    exps_sub,
    format_poly,
    subsumes,
    to_scaled,
)

DEFAULT_MAX_ROWS = 20_000
DEFAULT_MAX_COLS = 20_000
DEFAULT_ELIMINATION_BUDGET = 10**8

MODE_EXACT = "exact-order"
MODE_ALL = "all-orders"
MODE_INTERIOR = "interior-orders"


@dataclass(frozen=True)
class OrderSpec:
    """Which differentiation orders to span: a single k, all, or 1..deg-1."""

    mode: str
    k: int | None = None

    def __post_init__(self):
        if self.mode not in (MODE_EXACT, MODE_ALL, MODE_INTERIOR):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == MODE_EXACT:
            if self.k is None or self.k < 0:
                raise ValueError("exact-order mode needs k >= 0")
        elif self.k is not None:
            raise ValueError("k is only meaningful for exact-order mode")

    @classmethod
    def exact(cls, k: int) -> "OrderSpec":
        return cls(MODE_EXACT, k)

    @classmethod
    def all_orders(cls) -> "OrderSpec":
        return cls(MODE_ALL)

    @classmethod
    def interior(cls) -> "OrderSpec":
        return cls(MODE_INTERIOR)

    def orders(self, degree: int) -> range:
        if self.mode == MODE_EXACT:
            assert self.k is not None
            return range(self.k, self.k + 1)
        if self.mode == MODE_ALL:
            return range(0, degree + 1)
        if degree < 2:
            raise ValueError("interior-orders mode requires degree >= 2")
        return range(1, degree)

    def label(self) -> str:
        if self.mode == MODE_EXACT:
            return f"k={self.k}"
        return "*" if self.mode == MODE_ALL else "+"


@dataclass(frozen=True)
class DerivMatrix:
    """Integer matrix of derivative coefficients with exponent-vector labels.

    Row labels are differentiation multi-indices, column labels are result
    monomials, both sorted lexicographically.  Entries are the scaled-basis
    coefficients times ``clear_factor`` (the lcm of their denominators), so
    the stored matrix is integral.  Rows and columns are never identically
    zero.  ``entries`` holds one {column index: value} dict per row; treat
    it as read-only.
    """

    rows: tuple[ExponentVector, ...]
    cols: tuple[ExponentVector, ...]
    entries: tuple[dict[int, int], ...]
    clear_factor: int
    provenance: tuple[str, str]

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.cols)

    def dense(self) -> list[list[int]]:
        out = []
        for row in self.entries:
            dense_row = [0] * self.ncols
            for j, v in row.items():
                dense_row[j] = v
            out.append(dense_row)
        return out


def poly_digest(f: SparsePoly) -> str:
    """Short stable identifier for provenance records."""
    text = f.basis + "|" + format_poly(f)
    return hashlib.sha256(text.encode()).hexdigest()[:12]


def derivative(f: SparsePoly, beta: ExponentVector) -> SparsePoly:
    """Differentiate a scaled-basis polynomial: exponent subtraction.

    Terms not divisible by the multi-index vanish; the result may be zero.
    """
    if f.basis != SCALED:
        raise ValueError("derivative operates on scaled-basis polynomials")
    if len(beta) != len(f.vars):
        raise ValueError("multi-index length does not match variable count")
    if any(b < 0 for b in beta):
        raise ValueError("negative differentiation order")
    terms = tuple(
        Term(t.coef, exps_sub(t.exps, beta)) for t in f.terms if subsumes(beta, t.exps)
    )
    return SparsePoly(f.vars, terms, SCALED)


def _materialize(
    scaled: SparsePoly,
    row_indices: list[ExponentVector],
    spec_label: str,
    max_cols: int,
) -> DerivMatrix:
    """Assemble the integer matrix for a given sorted list of row multi-indices."""
    support = [(t.exps, t.coef) for t in scaled.terms]
    col_set: set[ExponentVector] = set()
    row_pairs: list[list[tuple[ExponentVector, Fraction]]] = []
    for beta in row_indices:
        pairs = [
            (exps_sub(alpha, beta), a) for alpha, a in support if subsumes(beta, alpha)
        ]
        col_set.update(g for g, _ in pairs)
        if len(col_set) > max_cols:
            raise ResourceLimitError("cols", max_cols, len(col_set))
        row_pairs.append(pairs)
    cols = tuple(sorted(col_set))
    col_index = {g: i for i, g in enumerate(cols)}
    clear = lcm_all([t.coef.denominator for t in scaled.terms])
    entries = tuple(
        {col_index[g]: a.numerator * (clear // a.denominator) for g, a in pairs}
        for pairs in row_pairs
    )
    return DerivMatrix(
        rows=tuple(row_indices),
        cols=cols,
        entries=entries,
        clear_factor=clear,
        provenance=(poly_digest(scaled), spec_label),
    )


def build_matrix(
    f: SparsePoly,
    spec: OrderSpec,
    *,
    max_rows: int = DEFAULT_MAX_ROWS,
    max_cols: int = DEFAULT_MAX_COLS,
) -> DerivMatrix:
    """Materialize the derivative matrix for the requested orders.

    Rows are exactly the multi-indices with a nonzero derivative (those
    dividing some term), so no zero row or column is ever stored.
    """
    if f.is_zero:
        raise ValueError("derivative matrix of the zero polynomial")
    scaled = f if f.basis == SCALED else to_scaled(f)
    degree = scaled.degree
    orders = spec.orders(degree)
    row_set: set[ExponentVector] = set()
    for t in scaled.terms:
        if len(orders) == 1:
            gen = sub_indices_of_order(t.exps, orders[0])
        else:
            gen = (b for b in all_sub_indices(t.exps) if sum(b) in orders)
        for beta in gen:
            row_set.add(beta)
        if len(row_set) > max_rows:
            raise ResourceLimitError("rows", max_rows, len(row_set))
    return _materialize(scaled, sorted(row_set), spec.label(), max_cols)


def sparse_int_rank(
    rows: list[dict[int, int]],
    *,
    budget: int = DEFAULT_ELIMINATION_BUDGET,
) -> int:
    """Rank over the rationals of an integer matrix given as sparse rows.

    Fraction-free Bareiss elimination.  Pivoting is deterministic: columns
    are scanned in ascending index order and the pivot is the first
    remaining row with a nonzero entry in the current column.  Every entry
    update counts against ``budget``.
    """
    work = [dict(r) for r in rows]
    nrows = len(work)
    rank = 0
    r = 0
    prev = 1
    ops = 0
    col_order = sorted({j for row in work for j in row})
    for col in col_order:
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if work[i].get(col):
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        prow = work[r]
        p = prow[col]
        for i in range(r + 1, nrows):
            row = work[i]
            m = row.pop(col, 0)
            if m:
                new: dict[int, int] = {}
                for j, v in row.items():
                    w = p * v - m * prow.get(j, 0)
                    if w:
                        new[j] = w // prev
                for j, pv in prow.items():
                    if j != col and j not in row:
                        new[j] = (-m * pv) // prev
                ops += len(row) + len(prow)
                work[i] = new
            elif prev != p:
                for j in list(row):
                    row[j] = (p * row[j]) // prev
                ops += len(row)
        if ops > budget:
            raise ResourceLimitError("elimination-budget", budget, ops)
        prev = p
        rank += 1
        r += 1
    return rank


def rank_exact(
    matrix: DerivMatrix, *, budget: int = DEFAULT_ELIMINATION_BUDGET
) -> int:
    """Exact rank of a derivative matrix over the rationals."""
    return sparse_int_rank(list(matrix.entries), budget=budget)


def dim_partials(
    f: SparsePoly,
    spec: OrderSpec,
    *,
    max_rows: int = DEFAULT_MAX_ROWS,
    max_cols: int = DEFAULT_MAX_COLS,
    budget: int = DEFAULT_ELIMINATION_BUDGET,
) -> int:
    """Dimension of the span of the requested partial derivatives of f.

    The zero polynomial spans nothing: the result is 0 (callers that need
    to distinguish this case should test ``f.is_zero``).  The all-orders
    span includes order 0 (f itself) and the top order (constants).
    """
    if f.is_zero:
        return 0
    matrix = build_matrix(f, spec, max_rows=max_rows, max_cols=max_cols)
    return rank_exact(matrix, budget=budget)
