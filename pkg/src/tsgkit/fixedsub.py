"""The fixed subgraph of an automorphism and its topological predicates.

For an automorphism ``p`` of a graph, the fixed subgraph F consists of the
subgraph induced by the fixed vertices (part A) together with one isolated
point per edge whose endpoints are interchanged by ``p`` (part B, midpoints).
The predicates here decide whether F fits inside a circle or a plane, and
count its points — the data every realizability obstruction consumes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graphs import SimpleGraph, is_planar
from .perms import Perm, PermError


@dataclass(frozen=True)
class FixedSubgraph:
    fixed_vertices: frozenset[str]
    induced_edges: frozenset[tuple[str, str]]
    midpoints: frozenset[tuple[str, str]]

    def graph_part(self) -> SimpleGraph:
        return SimpleGraph(tuple(sorted(self.fixed_vertices)), self.induced_edges)

    def is_empty(self) -> bool:
        return not self.fixed_vertices and not self.midpoints


INFINITE = "infinite"


def fixed_subgraph(g: SimpleGraph, p: Perm) -> FixedSubgraph:
    """Fixed vertices, their induced edges, and flipped-edge midpoints."""
    if p.domain != g.vertices or not p.is_automorphism_of(g):
        raise PermError("permutation is not an automorphism of the graph")
    fixed = p.fixed_labels()
    edges = frozenset(e for e in g.edges if e[0] in fixed and e[1] in fixed)
    midpoints = frozenset(pair for pair in p.swapped_pairs() if g.has_edge(*pair))
    return FixedSubgraph(fixed_vertices=fixed, induced_edges=edges, midpoints=midpoints)


def _components(fs: FixedSubgraph) -> list[tuple[set[str], int]]:
    """Connected components of the graph part as (vertex set, edge count)."""
    nbrs: dict[str, set[str]] = {v: set() for v in fs.fixed_vertices}
    for u, v in fs.induced_edges:
        nbrs[u].add(v)
        nbrs[v].add(u)
    seen: set[str] = set()
    out = []
    for start in sorted(fs.fixed_vertices):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            for w in nbrs[stack.pop()]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        edge_count = sum(1 for u, v in fs.induced_edges if u in comp)
        out.append((comp, edge_count))
    return out


def _degrees(fs: FixedSubgraph) -> dict[str, int]:
    deg = {v: 0 for v in fs.fixed_vertices}
    for u, v in fs.induced_edges:
        deg[u] += 1
        deg[v] += 1
    return deg


def embeds_in_s1(fs: FixedSubgraph) -> bool:
    """Whether F fits inside a circle.

    A subset of a circle is the whole circle or a disjoint union of arcs and
    points.  So F embeds iff every component of the graph part is a simple
    path (single vertices included; midpoints ride along as extra isolated
    points), or the graph part is exactly one cycle with no midpoints and no
    other components.
    """
    deg = _degrees(fs)
    comps = _components(fs)
    if all(
        edge_count == len(comp) - 1 and all(deg[v] <= 2 for v in comp)
        for comp, edge_count in comps
    ):
        return True
    if (
        len(comps) == 1
        and not fs.midpoints
        and comps[0][1] == len(comps[0][0])
        and all(deg[v] == 2 for v in comps[0][0])
    ):
        return True
    return False


def f_is_planar(fs: FixedSubgraph) -> bool:
    """Planarity of the graph part; isolated midpoints never matter."""
    return is_planar(fs.graph_part())


def point_count(fs: FixedSubgraph) -> int | str:
    """Number of points of F: infinite as soon as A contains an edge."""
    if fs.induced_edges:
        return INFINITE
    return len(fs.fixed_vertices) + len(fs.midpoints)


def more_than_two_points(fs: FixedSubgraph) -> bool:
    count = point_count(fs)
    return count == INFINITE or count > 2


def summarize(fs: FixedSubgraph) -> str:
    """Compact text description of F, e.g. ``path(3)+point | 2 midpoints``."""
    parts = []
    deg = _degrees(fs)
    for comp, edge_count in _components(fs):
        size = len(comp)
        if size == 1:
            parts.append("point")
        elif edge_count == size - 1 and all(deg[v] <= 2 for v in comp):
            parts.append(f"path({size})")
        elif edge_count == size and all(deg[v] == 2 for v in comp):
            parts.append(f"cycle({size})")
        else:
            parts.append(f"graph({size}v,{edge_count}e)")
    body = "+".join(parts) if parts else "empty"
    if fs.midpoints:
        body += f" | {len(fs.midpoints)} midpoint" + ("s" if len(fs.midpoints) > 1 else "")
    return body


# -- separating-path witnesses ----------------------------------------------


def path_is_witness(g: SimpleGraph, p: Perm, path: Iterable[str]) -> bool:
    """Check a swap-path witness: endpoints interchanged by ``p``, no interior
    vertex fixed, and no edge along the path flipped (end edges included)."""
    nodes = list(path)
    if len(nodes) < 2 or len(set(nodes)) != len(nodes):
        return False
    a, b = nodes[0], nodes[-1]
    if p(a) != b or p(b) != a:
        return False
    fixed = p.fixed_labels()
    if any(v in fixed for v in nodes[1:-1]):
        return False
    for u, v in zip(nodes, nodes[1:]):
        if not g.has_edge(u, v):
            return False
        if {p(u), p(v)} == {u, v}:
            return False
    return True


def find_path_witness(g: SimpleGraph, p: Perm) -> list[str] | None:
    """Shortest swap-path witness over all interchanged pairs, or None.

    BFS through non-fixed vertices avoiding flipped edges; deterministic
    (pairs and neighbors scanned in sorted order).
    """
    fixed = p.fixed_labels()
    from .graphs import adjacency

    nbrs = adjacency(g)
    for a, b in p.swapped_pairs():
        parent: dict[str, str | None] = {a: None}
        queue = [a]
        while queue:
            nxt: list[str] = []
            for u in queue:
                for v in sorted(nbrs[u]):
                    if v in parent or v in fixed:
                        continue
                    if {p(u), p(v)} == {u, v}:
                        continue
                    parent[v] = u
                    if v == b:
                        path = [v]
                        while parent[path[-1]] is not None:
                            path.append(parent[path[-1]])  # type: ignore[arg-type]
                        path.reverse()
                        assert path_is_witness(g, p, path)
                        return path
                    nxt.append(v)
            queue = nxt
    return None
