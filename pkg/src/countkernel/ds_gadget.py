"""Wide diamonds and their replacement gadget for counting minimum
dominating sets in simple (typically planar) graphs.

A wide diamond is a set of degree-2 vertices that all see the same two
endpoints. Replacing all but three of them, power of two by power of two,
with pendant-guarded selector gadgets preserves the number of minimum
dominating sets while raising the parameter by the sum of the exponents.
Each gadget sits in a face containing both endpoints, so planarity is
preserved too.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .chain_gadget import power_decompose
from .multigraph import MultiGraph, VertexId


@dataclass(frozen=True)
class WideDiamond:
    """Degree-2 vertices sharing the two distinct ``endpoints``."""

    members: tuple[VertexId, ...]
    endpoints: tuple[VertexId, VertexId]


def find_wide_diamonds(g: MultiGraph) -> list[WideDiamond]:
    """Maximal wide diamonds of a simple graph: degree-2 vertices grouped
    by their neighbor pair, ordered by endpoint pair."""
    if not g.is_simple:
        raise ValueError("wide diamonds are defined on simple graphs only")
    groups: dict[tuple[VertexId, VertexId], list[VertexId]] = {}
    for v in g.vertices:
        if g.degree(v) == 2:
            pair = g.neighbors(v)
            groups.setdefault(pair, []).append(v)
    return [
        WideDiamond(tuple(sorted(members)), pair)
        for pair, members in sorted(groups.items())
    ]


def _validate_diamond(g: MultiGraph, diamond: WideDiamond) -> None:
    v, u = diamond.endpoints
    if len(diamond.members) < 1:
        raise ValueError("a wide diamond needs at least one member")
    if v == u:
        raise ValueError("the endpoints of a wide diamond must be distinct")
    if not g.is_simple:
        raise ValueError("wide diamonds are defined on simple graphs only")
    for c in diamond.members:
        if c not in g:
            raise ValueError(f"unknown vertex {c}")
        if set(g.neighbors(c)) != {v, u}:
            raise ValueError(f"vertex {c} does not have exactly the two endpoints as neighbors")


def replace_wide_diamond(
    g: MultiGraph, diamond: WideDiamond, k: int
) -> tuple[MultiGraph, int]:
    """Replace a wide diamond of at least five members by its gadget;
    smaller diamonds are returned unchanged.

    Three members stay put (four when the remainder would need a lone
    2^0 sub-diamond); the rest are traded, one gadget per power of two,
    for endpoint attachments x_v, x_u plus, per exponent step, an
    adjacent pair (a_i, b_i) seen by both attachments with a degree-one
    guard e_i on b_i. The parameter grows by the sum of the exponents.
    """
    _validate_diamond(g, diamond)
    members = sorted(diamond.members)
    if len(members) <= 4:
        return g, k
    v, u = diamond.endpoints
    # a residual 2^0 sub-diamond is a single vertex, already as small as its
    # would-be gadget; keeping it in place (a fourth untouched member) is
    # what preserves counts: a bare pendant pair has no dominator once a
    # solution selects inside a sibling gadget
    keep = 3 if (len(members) - 3) % 2 == 0 else 4
    replaced = members[keep:]
    exponents = power_decompose(len(replaced))

    base = g.delete_vertices(replaced)
    vertices = list(base.vertices)
    edges = list(base.edges())
    fresh = g.next_vertex_id

    for p in exponents:
        x_v, x_u = fresh, fresh + 1
        fresh += 2
        vertices.extend((x_v, x_u))
        edges.append((v, x_v, 1))
        edges.append((u, x_u, 1))
        for _ in range(p):
            a, b, guard = fresh, fresh + 1, fresh + 2
            fresh += 3
            vertices.extend((a, b, guard))
            edges.extend(
                [(a, b, 1), (x_v, a, 1), (x_u, a, 1), (x_v, b, 1), (x_u, b, 1), (b, guard, 1)]
            )

    return MultiGraph(vertices, edges), k + sum(exponents)


def diamond_observation_check(
    g: MultiGraph, diamond: WideDiamond, dominating: Iterable[VertexId]
) -> list[str]:
    """Properties every minimum dominating set must satisfy on a diamond of
    at least three members; returns the names of the violated ones.

    Intended as a test assertion: the caller supplies a set it already
    knows to be a minimum dominating set.
    """
    if len(diamond.members) < 3:
        raise ValueError("observation requires a diamond with at least three members")
    chosen = set(dominating)
    members = set(diamond.members)
    v, u = diamond.endpoints
    violated = []
    if not chosen & {v, u}:
        violated.append("hits-an-endpoint")
    if {v, u} <= chosen and chosen & members:
        violated.append("both-endpoints-exclude-members")
    if len(chosen & members) > 1:
        violated.append("at-most-one-member")
    return violated
