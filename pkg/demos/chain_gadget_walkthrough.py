#!/usr/bin/env python3
"""A long cycle has as many minimum feedback vertex sets as vertices, yet it
shrinks to a few dozen vertices with the count intact.

Walk through the flagship example: the cycle on 1025 vertices with budget
k = 1. Counting directly gives 1025. Replacing its single chain yields a
22-vertex instance whose minimum feedback vertex sets at k' = 11 number
exactly 1025 again.
"""

from countkernel import count_min_fvs_pair, power_decompose, replace_all_chains, write_instance
from countkernel.generators import cycle_graph

n = 1025
g = cycle_graph(n)
print(f"cycle on {n} vertices, k = 1")
print(f"   direct count: {count_min_fvs_pair(g, 1)}")

# the whole cycle is one chain; one vertex is designated as its endpoint and
# the remaining 1024 = 2^10 vertices become one hub with ten pearl pairs
exps = power_decompose(n - 1)
print(f"   chain decomposition exponents: {exps}")

reduced, k2 = replace_all_chains(g, 1, threshold=n)
print(f"   replaced instance: {reduced.num_vertices} vertices, k' = {k2}")
print(f"   count on the replacement: {count_min_fvs_pair(reduced, k2)}")
print()
print("the reduced instance in canonical form:")
print(write_instance(reduced, k2), end="")
