"""Brute-force ground truth: minimum-FVS and minimum-DS counting by subset
enumeration, and K5/K33 minor detection on small graphs.

These are test oracles, deliberately independent of the production
algorithms. Enumeration walks subset sizes upward and stops at the first
size that admits a solution, so the cost is governed by the optimum, not
by k. Size guards keep accidental blowups out; tests working on
purpose-built larger instances may raise them explicitly.
"""

from __future__ import annotations

from itertools import combinations

from .fvs_count import INFEASIBLE, CountPair
from .multigraph import MultiGraph

FVS_GUARD = 20
DS_GUARD = 20
MINOR_GUARD = 12


def _check_guard(g: MultiGraph, limit: int, what: str) -> None:
    if g.num_vertices > limit:
        raise ValueError(
            f"{what} oracle refuses graphs with more than {limit} vertices "
            f"(got {g.num_vertices})"
        )


def brute_min_fvs(g: MultiGraph, k: int, max_vertices: int = FVS_GUARD) -> CountPair:
    """(smallest FVS size, number of FVSs of that size), or the infeasible
    pair when the feedback vertex number exceeds k."""
    _check_guard(g, max_vertices, "feedback vertex set")
    vs = g.vertices
    edge_list = g.edges()

    def forest_without(removed) -> bool:
        gone = set(removed)
        parent = {v: v for v in vs if v not in gone}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v, mult in edge_list:
            if u in gone or v in gone:
                continue
            if mult >= 2:
                return False
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            parent[ru] = rv
        return True

    for size in range(0, min(k, len(vs)) + 1):
        hits = sum(1 for combo in combinations(vs, size) if forest_without(combo))
        if hits:
            return CountPair(size, hits)
    return INFEASIBLE


def brute_min_ds(g: MultiGraph, k: int, max_vertices: int = DS_GUARD) -> CountPair:
    """(domination number, number of minimum dominating sets), or the
    infeasible pair when the domination number exceeds k."""
    if not g.is_simple:
        raise ValueError("dominating set oracle requires a simple graph")
    _check_guard(g, max_vertices, "dominating set")
    vs = g.vertices
    index = {v: i for i, v in enumerate(vs)}
    closed = []
    for v in vs:
        mask = 1 << index[v]
        for n in g.neighbors(v):
            mask |= 1 << index[n]
        closed.append(mask)
    full = (1 << len(vs)) - 1

    for size in range(0, min(k, len(vs)) + 1):
        hits = 0
        for combo in combinations(range(len(vs)), size):
            covered = 0
            for i in combo:
                covered |= closed[i]
            if covered == full:
                hits += 1
        if hits:
            return CountPair(size, hits)
    return INFEASIBLE


def enumerate_min_ds(g: MultiGraph, k: int, max_vertices: int = DS_GUARD):
    """All minimum dominating sets of size at most k, as sorted tuples."""
    best = brute_min_ds(g, k, max_vertices=max_vertices)
    if best.count == 0:
        return []
    vs = g.vertices
    out = []
    for combo in combinations(vs, best.size):
        covered = set()
        for v in combo:
            covered.add(v)
            covered.update(g.neighbors(v))
        if len(covered) == len(vs):
            out.append(combo)
    return out


# -- minor detection ---------------------------------------------------------


def _reduced_simple_adjacency(g: MultiGraph) -> dict:
    """Simplify and exhaustively delete degree-<=1 vertices and smooth out
    degree-2 vertices; both preserve minors of minimum degree >= 3."""
    adj = {v: set(g.neighbors(v)) for v in g.vertices}
    changed = True
    while changed:
        changed = False
        for v in list(adj):
            if v not in adj:
                continue
            nbrs = adj[v]
            if len(nbrs) <= 1:
                for u in nbrs:
                    adj[u].discard(v)
                del adj[v]
                changed = True
            elif len(nbrs) == 2:
                a, b = sorted(nbrs)
                adj[a].discard(v)
                adj[b].discard(v)
                del adj[v]
                adj[a].add(b)
                adj[b].add(a)
                changed = True
    return adj


def _connected_subsets(masks: list[int]) -> list[int]:
    n = len(masks)
    out = []
    for subset in range(1, 1 << n):
        start = subset & -subset
        seen = start
        frontier = start
        while frontier:
            grown = 0
            rest = frontier
            while rest:
                bit = rest & -rest
                rest ^= bit
                grown |= masks[bit.bit_length() - 1] & subset
            grown &= ~seen
            if not grown:
                break
            seen |= grown
            frontier = grown
        if seen == subset:
            out.append(subset)
    return out


def _branch_set_tools(masks: list[int]):
    conn = _connected_subsets(masks)
    nbr = {}
    for m in conn:
        reach = 0
        rest = m
        while rest:
            bit = rest & -rest
            rest ^= bit
            reach |= masks[bit.bit_length() - 1]
        nbr[m] = reach & ~m
    by_low: dict[int, list[int]] = {}
    for m in conn:
        by_low.setdefault((m & -m).bit_length() - 1, []).append(m)
    return nbr, by_low


def _has_clique_minor(masks: list[int], size: int) -> bool:
    """Complete-graph minor via disjoint, pairwise adjacent connected branch
    sets, canonicalized by increasing smallest elements."""
    n = len(masks)
    if n < size:
        return False
    nbr, by_low = _branch_set_tools(masks)
    full = (1 << n) - 1

    def rec(chosen: list[int], used: int, floor: int) -> bool:
        if len(chosen) == size:
            return True
        if bin(full & ~used).count("1") < size - len(chosen):
            return False
        for low in range(floor, n):
            for m in by_low.get(low, ()):
                if m & used:
                    continue
                if any(not (nbr[m] & c) for c in chosen):
                    continue
                if rec(chosen + [m], used | m, low + 1):
                    return True
        return False

    return rec([], 0, 0)


def _has_k33_minor(masks: list[int]) -> bool:
    """K33 minor: two triples of disjoint connected branch sets with every
    cross pair adjacent. Within a side the smallest elements increase, and
    the first left set precedes the first right set."""
    n = len(masks)
    if n < 6:
        return False
    nbr, by_low = _branch_set_tools(masks)
    full = (1 << n) - 1

    def rec(left: list[int], right: list[int], used: int, lfloor: int, rfloor: int) -> bool:
        if len(left) == 3 and len(right) == 3:
            return True
        if bin(full & ~used).count("1") < 6 - len(left) - len(right):
            return False
        grow_left = len(left) <= len(right)
        floor = lfloor if grow_left else rfloor
        opposite = right if grow_left else left
        for low in range(floor, n):
            for m in by_low.get(low, ()):
                if m & used:
                    continue
                if any(not (nbr[m] & c) for c in opposite):
                    continue
                if grow_left:
                    if rec(left + [m], right, used | m, low + 1, rfloor):
                        return True
                else:
                    if rec(left, right + [m], used | m, lfloor, low + 1):
                        return True
        return False

    # the right side's floor starts above the left side's first minimum,
    # breaking the side-swap symmetry, which rec maintains because the
    # first left set is placed first
    def start() -> bool:
        for low in range(0, n):
            for m in by_low.get(low, ()):
                if rec([m], [], m, low + 1, low + 1):
                    return True
        return False

    return start()


def has_k5_or_k33_minor(g: MultiGraph, max_vertices: int = MINOR_GUARD) -> bool:
    """Exhaustive branch-set search for a K5 or K33 minor."""
    _check_guard(g, max_vertices, "minor")
    adj = _reduced_simple_adjacency(g)
    verts = sorted(adj)
    index = {v: i for i, v in enumerate(verts)}
    masks = [0] * len(verts)
    for v in verts:
        for u in adj[v]:
            masks[index[v]] |= 1 << index[u]
    edge_count = sum(len(adj[v]) for v in verts) // 2
    if len(verts) >= 5 and edge_count >= 10 and _has_clique_minor(masks, 5):
        return True
    return len(verts) >= 6 and edge_count >= 9 and _has_k33_minor(masks)
