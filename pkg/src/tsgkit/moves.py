"""Triangle-Y moves and exhaustive family closure.

A nabla-Y move replaces a triangle's three edges by a new degree-3 vertex
joined to the triangle's corners; Y-nabla is the inverse.  Both preserve the
edge count, which is what makes the closure of a seed graph finite.  The
closure enumerator walks breadth-first over all legal moves and deduplicates
by canonical form.
"""

from __future__ import annotations

import random
import string
from dataclasses import dataclass
from typing import Iterable, Literal

from .canon import fingerprint
from .graphs import GraphError, SimpleGraph, adjacency, degree_sequence, is_connected, triangles


class MoveError(GraphError):
    """The requested move is not legal at that site."""


@dataclass(frozen=True)
class MoveRecord:
    kind: Literal["nabla", "wye"]
    site: tuple[str, ...]
    new_label: str | None
    source_fingerprint: str
    target_fingerprint: str


@dataclass(frozen=True)
class FamilyCatalog:
    seed_name: str
    members: dict[str, SimpleGraph]
    provenance: dict[str, tuple[MoveRecord, ...]]
    adjacency: frozenset[tuple[str, str, str]]  # (source, target, kind)

    def names(self) -> list[str]:
        return sorted(self.members, key=lambda n: (self.members[n].n, n))

    def vertex_histogram(self) -> dict[int, int]:
        hist: dict[int, int] = {}
        for g in self.members.values():
            hist[g.n] = hist.get(g.n, 0) + 1
        return hist

    def fingerprints(self) -> frozenset[str]:
        return frozenset(fingerprint(g) for g in self.members.values())


def nabla_y(g: SimpleGraph, triangle: Iterable[str], new_label: str) -> SimpleGraph:
    """Replace the triangle's edges by a new vertex joined to its corners."""
    corners = tuple(sorted(triangle))
    if len(corners) != 3 or len(set(corners)) != 3:
        raise MoveError(f"triangle site needs 3 distinct labels, got {corners!r}")
    missing = [c for c in corners if c not in g.vertices]
    if missing:
        raise GraphError(f"unknown vertex labels {missing!r}")
    a, b, c = corners
    tri_edges = {(a, b), (a, c), (b, c)}
    if not tri_edges <= g.edges:
        raise MoveError(f"{corners!r} does not induce a triangle")
    if new_label in g.vertices:
        raise GraphError(f"new label {new_label!r} already used")
    vs = g.vertices + (new_label,)
    es = (g.edges - frozenset(tri_edges)) | {
        tuple(sorted((new_label, x))) for x in corners
    }
    result = SimpleGraph(vs, frozenset(es))
    assert result.m == g.m and result.n == g.n + 1
    return result


def y_nabla(g: SimpleGraph, v: str) -> SimpleGraph:
    """Delete a degree-3 vertex and join its three neighbors pairwise.

    Refused when two neighbors are already adjacent: joining them would
    create a multi-edge and break the edge-count invariant.
    """
    if v not in g.vertices:
        raise GraphError(f"unknown vertex label {v!r}")
    nbrs = sorted(adjacency(g)[v])
    if len(nbrs) != 3:
        raise MoveError(f"vertex {v!r} has degree {len(nbrs)}, need exactly 3")
    a, b, c = nbrs
    for x, y in ((a, b), (a, c), (b, c)):
        if g.has_edge(x, y):
            raise MoveError(f"neighbors {x!r},{y!r} of {v!r} are adjacent")
    vs = tuple(u for u in g.vertices if u != v)
    es = frozenset(e for e in g.edges if v not in e) | {(a, b), (a, c), (b, c)}
    result = SimpleGraph(vs, es)
    assert result.m == g.m and result.n == g.n - 1
    return result


def wye_sites(g: SimpleGraph) -> list[str]:
    """Degree-3 vertices whose neighbors are pairwise non-adjacent."""
    out = []
    nbrs = adjacency(g)
    for v, d in degree_sequence(g).items():
        if d != 3:
            continue
        a, b, c = sorted(nbrs[v])
        if not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c)):
            out.append(v)
    return sorted(out)


_LABEL_POOL = string.ascii_lowercase


def _fresh_label(used: Iterable[str]) -> str:
    taken = set(used)
    for ch in _LABEL_POOL:
        if ch not in taken:
            return ch
    i = 1
    while f"v{i}" in taken:
        i += 1
    return f"v{i}"


def closure(
    seed: SimpleGraph,
    reference: FamilyCatalog | None = None,
    moves: Literal["all", "nabla"] = "all",
    seed_name: str | None = None,
    rng: random.Random | None = None,
) -> FamilyCatalog:
    """Breadth-first closure of ``seed`` under the legal moves.

    Members are deduplicated by canonical form and named by isomorphism
    against ``reference`` when given, else by vertex count and discovery
    order.  ``rng`` only shuffles the exploration order (the result set is
    order independent, which the tests assert).
    """
    if not is_connected(seed):
        raise GraphError("closure seed must be connected")
    ref_names: dict[str, str] = {}
    if reference is not None:
        ref_names = {fingerprint(g): name for name, g in reference.members.items()}

    members: dict[str, SimpleGraph] = {}
    provenance: dict[str, tuple[MoveRecord, ...]] = {}
    adjacency_set: set[tuple[str, str, str]] = set()
    by_fp: dict[str, str] = {}

    def register(g: SimpleGraph, fp: str, history: tuple[MoveRecord, ...]) -> str:
        if fp in ref_names:
            name = ref_names[fp]
        elif seed_name is not None and not members:
            name = seed_name
        else:
            # unnamed members get a fingerprint-derived, order-independent name
            name = f"G{g.n}.{fp.split(':')[1][:6]}"
        members[name] = g.with_name(name)
        provenance[name] = history
        by_fp[fp] = name
        return name

    seed_fp = fingerprint(seed)
    first = register(seed, seed_fp, ())
    frontier: list[tuple[str, SimpleGraph]] = [(first, seed)]

    while frontier:
        if rng is not None:
            rng.shuffle(frontier)
        next_frontier: list[tuple[str, SimpleGraph]] = []
        for name, g in frontier:
            sites: list[tuple[str, tuple[str, ...]]] = [
                ("nabla", t) for t in triangles(g)
            ]
            if moves == "all":
                sites += [("wye", (v,)) for v in wye_sites(g)]
            if rng is not None:
                rng.shuffle(sites)
            for kind, site in sites:
                if kind == "nabla":
                    new_label = _fresh_label(g.vertices)
                    h = nabla_y(g, site, new_label)
                else:
                    new_label = None
                    h = y_nabla(g, site[0])
                assert h.m == g.m, "moves must preserve the edge count"
                fp = fingerprint(h)
                record = MoveRecord(
                    kind=kind,  # type: ignore[arg-type]
                    site=site,
                    new_label=new_label,
                    source_fingerprint=fingerprint(g),
                    target_fingerprint=fp,
                )
                if fp not in by_fp:
                    new_name = register(h, fp, provenance[name] + (record,))
                    next_frontier.append((new_name, h))
                adjacency_set.add((name, by_fp[fp], kind))
        frontier = next_frontier

    return FamilyCatalog(
        seed_name=first,
        members=members,
        provenance=provenance,
        adjacency=frozenset(adjacency_set),
    )
