"""Reduction rules and the kernel pipeline for counting minimum feedback
vertex sets.

Two classic rules are safe for counting: capping edge multiplicities at two
and deleting degree-at-most-one vertices. The third reduction shrinks the
degree of a vertex v by keeping only a bounded number of v's edges into the
trees of G - (Y_v + v), for a feedback vertex set Y_v avoiding v. Driving
all three with a constant-factor FVS approximation bounds both the number
of vertices of degree other than two and the number of chains of the
output by polynomials in k.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .multigraph import MultiGraph, VertexId

#: Approximation ratio of :func:`approx_fvs` (local-ratio algorithm for
#: weighted FVS with unit weights). All pipeline thresholds are this
#: constant times k.
APPROX_RATIO = 2


class _TriviallyZero:
    """Sentinel: the instance provably has no solution of size at most k."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "TRIVIALLY_ZERO"


TRIVIALLY_ZERO = _TriviallyZero()


def apply_r1(g: MultiGraph) -> MultiGraph:
    """Cap every edge multiplicity at two.

    Two parallel edges already form a cycle through both endpoints; extra
    copies change neither the feedback vertex sets nor their count.
    """
    edges = [(u, v, min(m, 2)) for u, v, m in g.edges()]
    return MultiGraph(g.vertices, edges)


def apply_r2(g: MultiGraph) -> MultiGraph:
    """Exhaustively delete vertices of degree at most one."""
    cur = g
    while True:
        drop = [v for v in cur.vertices if cur.degree(v) <= 1]
        if not drop:
            return cur
        cur = cur.delete_vertices(drop)


def _semidisjoint_cycle(adj: dict) -> Optional[set]:
    """Find a cycle in which every vertex except at most one has degree
    exactly two, or None.

    Such a cycle is a degree-2 component (a free-standing cycle) or a
    degree-2 path whose two outside edge slots attach to one shared vertex.
    """
    deg = {v: sum(nb.values()) for v, nb in adj.items()}
    deg2 = {v for v, d in deg.items() if d == 2}
    seen: set = set()
    for start in sorted(deg2):
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        frontier = [start]
        while frontier:
            x = frontier.pop()
            for y in adj[x]:
                if y in deg2 and y not in seen:
                    seen.add(y)
                    comp.append(y)
                    frontier.append(y)
        comp_set = set(comp)
        outside = []
        for v in comp:
            for n, m in adj[v].items():
                if n not in comp_set:
                    outside.extend([n] * m)
        if not outside:
            return comp_set
        # each component vertex has degree two, so a path component has
        # exactly two outside slots
        if len(outside) == 2 and outside[0] == outside[1]:
            return comp_set | {outside[0]}
    return None


def approx_fvs(g: MultiGraph, forbidden: Optional[VertexId] = None) -> frozenset:
    """Feedback vertex set of size at most APPROX_RATIO times the optimum,
    optionally among the sets avoiding ``forbidden``.

    Local-ratio algorithm for weighted FVS: repeatedly subtract a uniform
    fraction of either a semidisjoint cycle's weights or degree-proportional
    weights, collect vertices whose weight reaches zero, then discard the
    redundant ones in reverse collection order. The forbidden vertex is
    priced above twice the weight of any candidate solution, so the ratio
    guarantee keeps it out.
    """
    if forbidden is not None and forbidden not in g:
        raise ValueError(f"unknown vertex {forbidden}")
    n = g.num_vertices
    if n == 0:
        return frozenset()

    weights = {v: Fraction(1) for v in g.vertices}
    if forbidden is not None:
        weights[forbidden] = Fraction(2 * n + 1)
    adj = {v: {u: g.edge_mult(v, u) for u in g.neighbors(v)} for v in g.vertices}

    def remove(v):
        for u in adj[v]:
            del adj[u][v]
        del adj[v]

    def cleanup():
        while True:
            low = [v for v, nb in adj.items() if sum(nb.values()) <= 1]
            if not low:
                return
            for v in low:
                remove(v)

    stack = []
    cleanup()
    while adj:
        cycle = _semidisjoint_cycle(adj)
        if cycle is not None:
            gamma = min(weights[v] for v in cycle)
            for v in cycle:
                weights[v] -= gamma
        else:
            gamma = min(weights[v] / sum(nb.values()) for v, nb in adj.items())
            for v, nb in adj.items():
                weights[v] -= gamma * sum(nb.values())
        for v in sorted(x for x in adj if weights[x] == 0):
            remove(v)
            stack.append(v)
        cleanup()

    chosen = set(stack)
    for v in reversed(stack):
        if g.delete_vertices(chosen - {v}).is_forest():
            chosen.discard(v)

    if forbidden in chosen:
        raise RuntimeError("approximation selected the forbidden vertex")
    return frozenset(chosen)


def degree_reduce(
    g: MultiGraph, k: int, v: VertexId, y_v: Iterable[VertexId]
) -> MultiGraph:
    """Delete edges at ``v`` so that its degree is at most |Y_v| * (k + 4)
    without changing the number of minimum FVSs of size at most k.

    For each u in Y_v, trees of G - (Y_v + v) with an edge to both v and u
    are marked, stopping once k + 2 of them are; v keeps only its edges
    into marked trees. Requires multiplicities already capped at two and
    Y_v a feedback vertex set avoiding v.
    """
    y_v = set(y_v)
    if v not in g:
        raise ValueError(f"unknown vertex {v}")
    if v in y_v:
        raise ValueError("the feedback vertex set must avoid the reduced vertex")
    for u in y_v:
        if u not in g:
            raise ValueError(f"unknown vertex {u} in feedback vertex set")
    if any(m > 2 for _, _, m in g.edges()):
        raise ValueError("graph is not reduced with respect to multiplicity capping")
    if not g.delete_vertices(y_v).is_forest():
        raise ValueError("the provided set is not a feedback vertex set")

    forest_comps = g.delete_vertices(y_v | {v}).connected_components()
    tree_of = {x: i for i, comp in enumerate(forest_comps) for x in comp}
    v_trees = {tree_of[n] for n in g.neighbors(v) if n in tree_of}

    marked: set[int] = set()
    for u in sorted(y_v):
        shared = sorted(
            t
            for t in {tree_of[n] for n in g.neighbors(u) if n in tree_of}
            if t in v_trees
        )
        have = sum(1 for t in shared if t in marked)
        for t in shared:
            if have >= k + 2:
                break
            if t not in marked:
                marked.add(t)
                have += 1

    cur = g
    for n in g.neighbors(v):
        if n in tree_of and tree_of[n] not in marked:
            cur = cur.delete_edge_one(n, v)
    return cur


@dataclass(frozen=True)
class KernelBounds:
    """Guaranteed structural bounds on a non-trivial kernel output."""

    rho: int
    k: int

    @property
    def max_v_neq2(self) -> int:
        return self.rho * self.k + self.rho**2 * self.k**2 * (self.k + 4)

    @property
    def max_chains(self) -> int:
        return self.rho * self.k + 2 * self.rho**2 * self.k**2 * (self.k + 4)


def kernelize_fvs(g: MultiGraph, k: int):
    """Reduce (g, k) to an instance with the same number of minimum FVSs of
    size at most k, with structure bounded by :class:`KernelBounds`.

    Returns TRIVIALLY_ZERO when the pipeline proves the count is zero,
    otherwise a (graph, parameter) pair with parameter at most k.
    """
    cur = apply_r1(g)
    approx = approx_fvs(cur)
    if len(approx) > APPROX_RATIO * k:
        return TRIVIALLY_ZERO

    k_out = k
    for v in sorted(approx):
        y_v = approx_fvs(cur, forbidden=v)
        if len(y_v) > APPROX_RATIO * k:
            # no solution of size at most k avoids v, so v is in all of
            # them; peel it off
            cur = cur.delete_vertices({v})
            k_out -= 1
        else:
            cur = degree_reduce(cur, k, v, y_v)
    if k_out < 0:
        # more forced vertices than budget
        return TRIVIALLY_ZERO
    return apply_r2(cur), k_out
