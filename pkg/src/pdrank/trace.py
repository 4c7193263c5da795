"""Trace-based lower bounds on the order-k derivative dimension.

Let M be the matrix whose rows are the order-k derivatives taken at most
once per variable (rows indexed by k-subsets I of the variables, columns
by monomials, entry a_{I+J} in the scaled basis) and let B = M^T M.  Then

    dim of the order-k derivative span  >=  rank(B)  >=  Tr(B)^2 / Tr(B^2),

the latter by Cauchy-Schwarz on the eigenvalues of the symmetric
positive-semidefinite B.  Although B can be exponentially large, both
traces reduce to sums over the terms of f:

* Tr(B)   = sum over terms P of C(sup(P), k) * a_P^2,
* Tr(B^2) = sum over ordered term triples (P, Q, R) of
            N(P, Q, R) * a_P * a_Q * a_R * a_{Q+R-P},

where N(P, Q, R) counts the row indices I compatible with the triple and
is itself a single binomial coefficient (see :func:`count_N`).  This makes
the proxy rank Tr(B)^2/Tr(B^2) computable in time polynomial in the number
of terms.  A cheaper closed-form bound L(f) <= proxy is also provided.

All formulas use scaled-basis coefficients; for non-multilinear input this
matters, and reports expose the ordinary-coefficient variant as well.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .combinat import binom
from .errors import ResourceLimitError
from .exact import (
    DEFAULT_ELIMINATION_BUDGET,
    DEFAULT_MAX_COLS,
    DEFAULT_MAX_ROWS,
    DerivMatrix,
    _materialize,
    sparse_int_rank,
)
from .polyio import (
    SCALED,
    ExponentVector,
    SparsePoly,
    support_size,
    to_scaled,
)

DEFAULT_TRIPLE_BUDGET = 10**9
COEF_BOUND = 2**30


@dataclass(frozen=True)
class TraceStats:
    """Exact trace statistics of B = M^T M for a polynomial at order k.

    ``vacuous`` is set when B = 0 (k exceeds every support size): the
    rank bound then says nothing and ``proxy`` is reported as 0 instead of
    dividing by zero.  Tr(B) and Tr(B^2) vanish together, always.
    """

    k: int
    monomial_count: int
    tr_b: Fraction
    tr_b2: Fraction
    proxy: Fraction
    vacuous: bool


def _require_scaled(f: SparsePoly, who: str) -> None:
    if f.basis != SCALED:
        raise ValueError(f"{who} expects a scaled-basis polynomial")
    if f.is_zero:
        raise ValueError(f"{who} is undefined for the zero polynomial")


def trace_B(f: SparsePoly, k: int) -> Fraction:
    """Tr(B) = sum over terms of C(sup(P), k) * a_P^2 (scaled coefficients)."""
    _require_scaled(f, "trace_B")
    return sum(
        (binom(support_size(t.exps), k) * t.coef * t.coef for t in f.terms),
        Fraction(0),
    )


def count_N(
    p: ExponentVector,
    q: ExponentVector,
    r: ExponentVector,
    k: int,
    monomials: Iterable[ExponentVector] | dict | frozenset | set,
) -> int:
    """Number of 0/1 row indices I of weight k compatible with (P, Q, R).

    Compatible means: I fits under both P and Q componentwise, and there is
    a row index J with P - I = R - J.  The count is zero unless Q+R-P is a
    monomial, P-R has entries in {-1,0,1} with equally many +1 and -1, and
    every +1 position of P-R is positive in min(P,Q); otherwise it equals
    C(zeros, k - ones) where ones counts the +1 entries of P-R and zeros
    the positions where P-R is 0 and min(P,Q) is positive.
    """
    if not isinstance(monomials, (set, frozenset, dict)):
        monomials = frozenset(monomials)
    qrp = tuple(qi + ri - pi for pi, qi, ri in zip(p, q, r))
    if any(x < 0 for x in qrp) or qrp not in monomials:
        return 0
    ones = 0
    negs = 0
    zeros = 0
    for pi, qi, ri in zip(p, q, r):
        d = pi - ri
        if d == 0:
            if pi > 0 and qi > 0:
                zeros += 1
        elif d == 1:
            if qi == 0:
                return 0
            ones += 1
        elif d == -1:
            negs += 1
        else:
            return 0
    if ones != negs:
        return 0
    return binom(zeros, k - ones)


def trace_B2(
    f: SparsePoly,
    k: int,
    *,
    budget: int = DEFAULT_TRIPLE_BUDGET,
) -> Fraction:
    """Tr(B^2) by the exact triple sum over ordered term triples.

    Cost is cubic in the number of terms; ``budget`` caps the triple count.
    """
    _require_scaled(f, "trace_B2")
    terms = f.terms
    s = len(terms)
    if s**3 > budget:
        raise ResourceLimitError("triple-sum", budget, s**3)
    coef_of = {t.exps: t.coef for t in terms}
    exps_list = [t.exps for t in terms]
    total = Fraction(0)
    for p_exps, a_p in ((t.exps, t.coef) for t in terms):
        for r_exps, a_r in ((t.exps, t.coef) for t in terms):
            # The P-R filters do not involve Q; hoist them out of the inner loop.
            ones = 0
            negs = 0
            bad = False
            plus_pos: list[int] = []
            zero_pos: list[int] = []
            for i, (pi, ri) in enumerate(zip(p_exps, r_exps)):
                d = pi - ri
                if d == 0:
                    if pi > 0:
                        zero_pos.append(i)
                elif d == 1:
                    ones += 1
                    plus_pos.append(i)
                elif d == -1:
                    negs += 1
                else:
                    bad = True
                    break
            if bad or ones != negs:
                continue
            rp = tuple(ri - pi for pi, ri in zip(p_exps, r_exps))
            a_pr = a_p * a_r
            for q_exps in exps_list:
                if any(q_exps[i] == 0 for i in plus_pos):
                    continue
                qrp = tuple(qi + d for qi, d in zip(q_exps, rp))
                if any(x < 0 for x in qrp):
                    continue
                a_qrp = coef_of.get(qrp)
                if a_qrp is None:
                    continue
                zeros = sum(1 for i in zero_pos if q_exps[i] > 0)
                n_count = binom(zeros, k - ones)
                if n_count:
                    total += n_count * a_pr * coef_of[q_exps] * a_qrp
    return total


def proxy_rank(
    f: SparsePoly,
    k: int,
    *,
    budget: int = DEFAULT_TRIPLE_BUDGET,
) -> Fraction:
    """The rank lower bound Tr(B)^2 / Tr(B^2); 0 when B = 0 (vacuous case)."""
    return trace_stats(f, k, budget=budget).proxy


def trace_stats(
    f: SparsePoly,
    k: int,
    *,
    budget: int = DEFAULT_TRIPLE_BUDGET,
) -> TraceStats:
    """Compute Tr(B), Tr(B^2) and the proxy rank for f at order k."""
    scaled = f if f.basis == SCALED else to_scaled(f)
    tb = trace_B(scaled, k)
    tb2 = trace_B2(scaled, k, budget=budget)
    if tb2 == 0:
        return TraceStats(k, len(scaled.terms), tb, tb2, Fraction(0), True)
    return TraceStats(k, len(scaled.terms), tb, tb2, tb * tb / tb2, False)


def closed_form_L(f: SparsePoly, k: int) -> Fraction:
    """The closed-form lower bound L(f) on the order-k derivative dimension.

    L(f) = (sum_P C(sup(P), k) a_P^2) / (|terms| * sum_P a_P^2), using the
    coefficients of f as given.  The bound is the one dominated by the
    proxy rank when the coefficients are scaled-basis; with coefficients of
    equal absolute value it reduces to (sum_P C(sup(P), k)) / |terms|^2.
    """
    if f.is_zero:
        raise ValueError("closed_form_L is undefined for the zero polynomial")
    num = Fraction(0)
    sq = Fraction(0)
    for t in f.terms:
        c2 = t.coef * t.coef
        num += binom(support_size(t.exps), k) * c2
        sq += c2
    return num / (len(f.terms) * sq)


@dataclass(frozen=True)
class ExplicitOracle:
    """Explicit materialization of M (0/1 row indices) and B = M^T M.

    The cross-check oracle for the closed-form traces: everything here is
    computed directly from the matrices.  ``gram`` is B as exact rationals.
    """

    matrix: DerivMatrix
    gram: tuple[tuple[Fraction, ...], ...]
    stats: TraceStats
    rank_b: int


def explicit_B_oracle(
    f: SparsePoly,
    k: int,
    *,
    max_rows: int = DEFAULT_MAX_ROWS,
    max_cols: int = DEFAULT_MAX_COLS,
    budget: int = DEFAULT_ELIMINATION_BUDGET,
) -> ExplicitOracle:
    """Materialize M restricted to 0/1 multi-indices of weight k, and B.

    Row candidates are all C(n, k) k-subsets of the variables; rows whose
    derivative vanishes are dropped (they contribute nothing to the traces
    or the rank).  B, its traces, and rank(B) are computed directly.
    """
    if f.is_zero:
        raise ValueError("oracle is undefined for the zero polynomial")
    scaled = f if f.basis == SCALED else to_scaled(f)
    n = len(scaled.vars)
    if binom(n, k) > max_rows:
        raise ResourceLimitError("rows", max_rows, binom(n, k))
    support = [t.exps for t in scaled.terms]
    rows: list[ExponentVector] = []
    for subset in combinations(range(n), k):
        beta = tuple(1 if i in subset else 0 for i in range(n))
        if any(all(alpha[i] >= 1 for i in subset) for alpha in support):
            rows.append(beta)
    matrix = _materialize(scaled, rows, f"multilinear k={k}", max_cols)
    ncols = matrix.ncols
    denom = matrix.clear_factor
    gram_int = [[0] * ncols for _ in range(ncols)]
    for row in matrix.entries:
        items = sorted(row.items())  # accumulate strictly in the upper triangle
        for idx, (j1, v1) in enumerate(items):
            gram_row = gram_int[j1]
            for j2, v2 in items[idx:]:
                gram_row[j2] += v1 * v2
    for j1 in range(ncols):
        for j2 in range(j1 + 1, ncols):
            gram_int[j2][j1] = gram_int[j1][j2]
    tr_b = Fraction(sum(gram_int[j][j] for j in range(ncols)), denom**2)
    tr_b2 = Fraction(
        sum(v * v for grow in gram_int for v in grow), denom**4
    )
    sparse_gram = [
        {j: v for j, v in enumerate(grow) if v} for grow in gram_int
    ]
    rank_b = sparse_int_rank(sparse_gram, budget=budget)
    vacuous = tr_b2 == 0
    proxy = Fraction(0) if vacuous else tr_b * tr_b / tr_b2
    stats = TraceStats(k, len(scaled.terms), tr_b, tr_b2, proxy, vacuous)
    gram = tuple(
        tuple(Fraction(v, denom**2) for v in grow) for grow in gram_int
    )
    return ExplicitOracle(matrix, gram, stats, rank_b)


def semirandom_L(
    support: Sequence[ExponentVector],
    coefs: Sequence[Fraction | int],
    k: int,
) -> Fraction:
    """L(f) for a fixed support with explicitly given scaled coefficients."""
    num = Fraction(0)
    sq = Fraction(0)
    for exps, c in zip(support, coefs):
        c2 = Fraction(c) ** 2
        num += binom(support_size(exps), k) * c2
        sq += c2
    return num / (len(support) * sq)


def semirandom_estimate(
    support: Sequence[ExponentVector],
    k: int,
    samples: int,
    rng_seed: int = 0,
) -> Fraction:
    """Exact mean of L(f) over random coefficient draws on a fixed support.

    Coefficients are i.i.d. uniform nonzero integers; the expectation of
    L(f) is (sum_P C(sup(P), k)) / |support|^2 for any atomless-at-zero
    i.i.d. draw, which the sample mean approaches.
    """
    if not support:
        raise ValueError("support must be nonempty")
    if samples < 1:
        raise ValueError("samples must be >= 1")
    if len(set(support)) != len(support):
        raise ValueError("support monomials must be distinct")
    rng = random.Random(rng_seed)
    total = Fraction(0)
    for _ in range(samples):
        coefs = []
        for _ in support:
            c = 0
            while c == 0:
                c = rng.randint(-COEF_BOUND, COEF_BOUND)
            coefs.append(c)
        total += semirandom_L(support, coefs, k)
    return total / samples


def semirandom_expectation(support: Sequence[ExponentVector], k: int) -> Fraction:
    """The exact expectation of L(f): sum_P C(sup(P), k) / |support|^2."""
    s = len(support)
    return Fraction(sum(binom(support_size(e), k) for e in support), s * s)
