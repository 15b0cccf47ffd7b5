#!/usr/bin/env python3
"""Run the full reduce-or-count pipeline on a seeded random multigraph and
check every step against the brute-force oracle."""

from countkernel import (
    APPROX_RATIO,
    KernelBounds,
    TRIVIALLY_ZERO,
    brute_min_fvs,
    count_min_fvs_pair,
    count_or_reduce,
    kernelize_fvs,
)
from countkernel.generators import random_multigraph

g = random_multigraph(n=12, m=16, seed=2024, promote2=0.3)
k = 3
print(f"instance: {g.num_vertices} vertices, {g.total_multiplicity} edge multiplicity, k = {k}")
print(f"   oracle:  {brute_min_fvs(g, k)}")
print(f"   counter: {count_min_fvs_pair(g, k)}")

kern = kernelize_fvs(g, k)
if kern is TRIVIALLY_ZERO:
    print("   kernel: trivially zero")
else:
    g2, k2 = kern
    bounds = KernelBounds(APPROX_RATIO, k)
    print(f"   kernel: {g2.num_vertices} vertices, k' = {k2}")
    print(f"   degree!=2 vertices: {len(g2.v_neq2())} (bound {bounds.max_v_neq2})")
    print(f"   chains: {len(g2.chains())} (bound {bounds.max_chains})")
    print(f"   oracle on kernel: {brute_min_fvs(g2, k2)}")

outcome = count_or_reduce(g, k)
print(f"   driver outcome: {outcome}")
