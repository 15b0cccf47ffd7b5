#!/usr/bin/env python3
"""Replace a wide diamond and watch the number of minimum dominating sets
survive, along with planarity."""

from countkernel import (
    brute_min_ds,
    diamond_observation_check,
    enumerate_min_ds,
    find_wide_diamonds,
    has_k5_or_k33_minor,
    replace_wide_diamond,
)
from countkernel.generators import diamond_host

g = diamond_host(7)
(diamond,) = find_wide_diamonds(g)
print(f"host: endpoints {diamond.endpoints}, {len(diamond.members)} diamond members")
before = brute_min_ds(g, 3)
print(f"   minimum dominating sets: {before}")

for chosen in enumerate_min_ds(g, 3):
    violated = diamond_observation_check(g, diamond, chosen)
    assert not violated, (chosen, violated)
print("   every minimum dominating set hits an endpoint and picks at most one member")

g2, k2 = replace_wide_diamond(g, diamond, 3)
after = brute_min_ds(g2, k2)
print(f"   replaced: {g2.num_vertices} vertices, k' = {k2}")
print(f"   minimum dominating sets after: {after}")
print(f"   planar before and after: "
      f"{not has_k5_or_k33_minor(g)} / {not has_k5_or_k33_minor(g2, max_vertices=g2.num_vertices)}")
