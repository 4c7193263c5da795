#!/usr/bin/env python3
"""Elementary symmetric polynomials: an arbitrarily large proxy/rank gap.

The derivative matrix of Sym_{d,n} is the disjointness matrix, which is
full rank: the true dimension grows like C(n,k).  Yet for fixed d and k
the proxy rank tends to 1 -- the trace method sees almost nothing.  With
d, k scaled proportionally to n the proxy does grow, but its ratio to the
true rank still vanishes.  Everything below is exact rational arithmetic.
"""

from pdrank import (
    sym_exact_dim,
    sym_gap_series_fixed,
    sym_gap_series_scaled,
    sym_poly,
    sym_trace_B,
    sym_trace_B2,
)

print("=" * 70)
print("1. Closed forms vs. the generic machinery (n = 6, d = 3)")
print("=" * 70)
from pdrank import to_scaled, trace_B, trace_B2

f = to_scaled(sym_poly(6, 3))
for k in (0, 1, 2):
    print(f"   k={k}: Tr(B) closed {sym_trace_B(6,3,k)} / generic {trace_B(f,k)}; "
          f"Tr(B^2) closed {sym_trace_B2(6,3,k)} / generic {trace_B2(f,k)}")
print(f"   exact dim (k=1): {sym_exact_dim(6, 3, 1)} = min(C(6,1), C(6,2))")

print()
print("=" * 70)
print("2. Fixed d=3, k=1: proxy v_n -> 1 while the rank u_n -> infinity")
print("=" * 70)
print(f"   {'n':>4} {'u_n':>6} {'v_n':>12} {'upper bound':>12}")
for p in sym_gap_series_fixed(3, 1, [4, 6, 8, 12, 20, 50, 100, 200]):
    print(f"   {p.n:>4} {p.u:>6} {float(p.v):>12.6f} {float(p.upper_v):>12.6f}")
print("   the upper bound (a pure binomial expression) squeezes v_n to 1.")

print()
print("=" * 70)
print("3. Scaled regime (k, d, n) = m * (1, 3, 8): ratio v/u still vanishes")
print("=" * 70)
print(f"   {'m':>3} {'n':>4} {'d':>3} {'k':>3} {'u':>8} {'v':>12} {'v/u':>14}")
for m, p in zip((1, 2, 3), sym_gap_series_scaled(1, 3, 8, [1, 2, 3])):
    print(f"   {m:>3} {p.n:>4} {p.d:>3} {p.k:>3} {p.u:>8} "
          f"{float(p.v):>12.6f} {float(p.ratio):>14.8f}")
print("   exact ratios:", ", ".join(str(p.ratio) for p in
                                     sym_gap_series_scaled(1, 3, 8, [1, 2, 3])))
