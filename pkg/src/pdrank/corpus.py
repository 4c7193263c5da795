"""Deterministic random instance generators for tests and experiments.

Every generator is driven by a single seed through ``random.Random``, so a
fixed seed reproduces the exact same corpus byte for byte.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .polyio import SimplicialComplex, SparsePoly


def _random_exps(rng: random.Random, nvars: int, max_degree: int) -> tuple[int, ...]:
    exps = [0] * nvars
    for _ in range(rng.randint(0, max_degree)):
        exps[rng.randrange(nvars)] += 1
    return tuple(exps)


def _random_coef(rng: random.Random) -> Fraction:
    num = 0
    while num == 0:
        num = rng.randint(-20, 20)
    return Fraction(num, rng.randint(1, 10))


def random_polys(
    seed: int,
    count: int = 100,
    *,
    max_vars: int = 8,
    max_terms: int = 10,
    max_degree: int = 4,
) -> list[SparsePoly]:
    """Random nonzero polynomials with exact rational coefficients."""
    rng = random.Random(seed)
    out: list[SparsePoly] = []
    while len(out) < count:
        nvars = rng.randint(2, max_vars)
        nterms = rng.randint(1, max_terms)
        variables = [f"x{i}" for i in range(1, nvars + 1)]
        items = [
            (_random_exps(rng, nvars, max_degree), _random_coef(rng))
            for _ in range(nterms)
        ]
        f = SparsePoly.from_terms(variables, items)
        if not f.is_zero:
            out.append(f)
    return out


def random_monomials(
    seed: int,
    count: int = 100,
    *,
    max_vars: int = 6,
    max_degree: int = 12,
) -> list[SparsePoly]:
    """Random single-monomial polynomials (coefficient 1)."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        nvars = rng.randint(1, max_vars)
        variables = [f"x{i}" for i in range(1, nvars + 1)]
        exps = _random_exps(rng, nvars, max_degree)
        out.append(SparsePoly.from_terms(variables, [(exps, 1)]))
    return out


def random_pure_complexes(
    seed: int,
    count: int = 50,
    *,
    max_ground: int = 8,
    max_facets: int = 8,
    max_facet_size: int = 4,
) -> list[SimplicialComplex]:
    """Random pure facet families (equal facet size, duplicates collapse)."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(2, max_ground)
        d = rng.randint(1, min(max_facet_size, n))
        m = rng.randint(1, max_facets)
        facets = {tuple(sorted(rng.sample(range(1, n + 1), d))) for _ in range(m)}
        out.append(SimplicialComplex.make(n, facets))
    return out


def random_homogeneous_polys(
    seed: int,
    count: int = 20,
    *,
    max_vars: int = 5,
    max_terms: int = 6,
    degree_range: tuple[int, int] = (2, 4),
) -> list[SparsePoly]:
    """Random homogeneous polynomials (every term the same total degree)."""
    rng = random.Random(seed)
    out: list[SparsePoly] = []
    while len(out) < count:
        nvars = rng.randint(2, max_vars)
        degree = rng.randint(*degree_range)
        variables = [f"x{i}" for i in range(1, nvars + 1)]
        items = []
        for _ in range(rng.randint(1, max_terms)):
            exps = [0] * nvars
            for _ in range(degree):
                exps[rng.randrange(nvars)] += 1
            items.append((tuple(exps), _random_coef(rng)))
        f = SparsePoly.from_terms(variables, items)
        if not f.is_zero:
            out.append(f)
    return out
