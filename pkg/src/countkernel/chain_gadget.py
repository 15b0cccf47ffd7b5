"""Replacement of long chains by compact gadgets that preserve the number
of minimum feedback vertex sets.

A chain of L degree-2 vertices is split into subpaths whose sizes are the
distinct powers of two summing to L. A subpath of size 2^p becomes a hub
vertex w wired to the two flanking attachment points (a double edge when
they coincide) plus p pearl pairs (a_i, b_i), each pair tied to w and to
each other by double edges. Picking w breaks the flank cycle and leaves
2^p ways to clear the pairs; avoiding w forces all a_i; overall exactly as
many minimum solutions as the original chain offered, at a parameter
raised by p.
"""

from __future__ import annotations

from .multigraph import Chain, MultiGraph


class _TooLong:
    """Sentinel: some chain exceeds the replacement threshold."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "TOO_LONG"


TOO_LONG = _TooLong()


def power_decompose(n: int) -> list[int]:
    """Distinct exponents p with sum(2**p) == n, in descending order."""
    if n < 1:
        raise ValueError(f"cannot decompose {n} into powers of two")
    return [p for p in range(n.bit_length() - 1, -1, -1) if n >> p & 1]


def _flanked_path(g: MultiGraph, chain: Chain):
    """Return (left attachment, ordered vertices to replace, right
    attachment) for a chain, walking from the lower-id endpoint."""
    path = list(chain.path)
    if not chain.endpoints:
        # free-standing cycle: its smallest vertex becomes the shared
        # endpoint and the rest of the ring is replaced
        z = path[0]
        return z, path[1:], z
    if len(path) == 1:
        slots = sorted(
            n for n in g.neighbors(path[0]) for _ in range(g.edge_mult(path[0], n))
        )
        return slots[0], path, slots[1]
    left = next(n for n in g.neighbors(path[0]) if n not in chain.path)
    right = next(n for n in g.neighbors(path[-1]) if n not in chain.path)
    if right < left:
        path.reverse()
        left, right = right, left
    return left, path, right


def replace_chain(g: MultiGraph, chain: Chain, k: int) -> tuple[MultiGraph, int]:
    """Replace one chain of g by its gadget; returns the new graph and the
    raised parameter.

    The graph outside the chain and the chain's outside neighborhood are
    untouched, and the number of minimum FVSs of size at most k in g equals
    that of size at most k' in the result.
    """
    match = None
    for c in g.chains():
        if frozenset(c.path) == frozenset(chain.path):
            match = c
            break
    if match is None or frozenset(match.endpoints) != frozenset(chain.endpoints):
        raise ValueError("the given chain is not a chain of this graph")

    left, replaced, right = _flanked_path(g, match)
    exponents = power_decompose(len(replaced))

    base = g.delete_vertices(replaced)
    vertices = list(base.vertices)
    edges = list(base.edges())
    fresh = g.next_vertex_id

    prev = left
    for p in exponents:
        hub = fresh
        fresh += 1
        vertices.append(hub)
        edges.append((prev, hub, 1))
        for _ in range(p):
            a, b = fresh, fresh + 1
            fresh += 2
            vertices.extend((a, b))
            edges.append((hub, a, 2))
            edges.append((a, b, 2))
        prev = hub
    edges.append((prev, right, 1))

    return MultiGraph(vertices, edges), k + sum(exponents)


def replace_all_chains(g: MultiGraph, k: int, threshold: int):
    """Replace every chain of g, or return TOO_LONG if any chain has more
    than ``threshold`` vertices (the caller should then count directly)."""
    if threshold < 1:
        raise ValueError("threshold must be a positive integer")
    todo = g.chains()
    if any(len(c.path) > threshold for c in todo):
        return TOO_LONG
    cur, cur_k = g, k
    for chain in todo:
        cur, cur_k = replace_chain(cur, chain, cur_k)
    return cur, cur_k
