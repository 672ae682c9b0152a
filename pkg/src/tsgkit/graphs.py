"""Simple labeled graphs and their basic decision procedures.

Everything here is a plain immutable value: a graph is an ordered tuple of
text labels plus a set of unordered label pairs.  All operations are pure and
safe to call concurrently on shared inputs.  The module is sized for graphs
of at most ~20 vertices; algorithms prefer exactness over asymptotics.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from pathlib import Path
from typing import Iterable, Mapping

import networkx as nx

MAX_VERTICES = 20


class GraphError(ValueError):
    """Invalid graph data (loops, duplicate edges, unknown labels)."""


def _normalize_edge(u: str, v: str) -> tuple[str, str]:
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class SimpleGraph:
    """Labeled, undirected, simple graph.

    ``vertices`` is an ordered sequence of unique text labels; ``edges`` is a
    set of unordered label pairs stored sorted.  Loops and multi-edges are
    rejected at construction.  ``name`` is cosmetic and excluded from
    equality/hash.
    """

    vertices: tuple[str, ...]
    edges: frozenset[tuple[str, str]]
    name: str | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        seen: set[str] = set()
        for v in self.vertices:
            if v in seen:
                raise GraphError(f"duplicate vertex label {v!r}")
            seen.add(v)
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphError(f"loop edge [{u!r}, {v!r}] not allowed")
            if (u, v) != _normalize_edge(u, v):
                raise GraphError(f"edge {e!r} not stored in sorted order")
            if u not in seen or v not in seen:
                raise GraphError(f"edge [{u!r}, {v!r}] uses unknown vertex label")

    @classmethod
    def make(
        cls,
        vertices: Iterable[str],
        edges: Iterable[tuple[str, str]],
        name: str | None = None,
    ) -> "SimpleGraph":
        """Build a graph, normalizing edge order and rejecting bad input."""
        vs = tuple(str(v) for v in vertices)
        known = set(vs)
        es: set[tuple[str, str]] = set()
        for u, v in edges:
            u, v = str(u), str(v)
            if u == v:
                raise GraphError(f"loop edge [{u!r}, {v!r}] not allowed")
            if u not in known or v not in known:
                raise GraphError(f"edge [{u!r}, {v!r}] uses unknown vertex label")
            e = _normalize_edge(u, v)
            if e in es:
                raise GraphError(f"duplicate edge [{u!r}, {v!r}]")
            es.add(e)
        return cls(vertices=vs, edges=frozenset(es), name=name)

    # -- tiny conveniences -------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: str, v: str) -> bool:
        return _normalize_edge(u, v) in self.edges

    def neighbors(self, v: str) -> frozenset[str]:
        return adjacency(self)[v]

    def with_name(self, name: str) -> "SimpleGraph":
        return SimpleGraph(self.vertices, self.edges, name=name)

    def sorted_edges(self) -> list[tuple[str, str]]:
        return sorted(self.edges)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        tag = self.name or f"{self.n}v"
        return f"SimpleGraph<{tag}: {self.n} vertices, {self.m} edges>"


def complete_graph(labels: Iterable[str], name: str | None = None) -> SimpleGraph:
    vs = tuple(labels)
    return SimpleGraph.make(vs, combinations(vs, 2), name=name)


@lru_cache(maxsize=None)
def adjacency(g: SimpleGraph) -> Mapping[str, frozenset[str]]:
    nbrs: dict[str, set[str]] = {v: set() for v in g.vertices}
    for u, v in g.edges:
        nbrs[u].add(v)
        nbrs[v].add(u)
    return {v: frozenset(ns) for v, ns in nbrs.items()}


@lru_cache(maxsize=None)
def adjacency_masks(g: SimpleGraph) -> tuple[int, ...]:
    """Neighbor bitmasks indexed by position in ``g.vertices``."""
    index = {v: i for i, v in enumerate(g.vertices)}
    masks = [0] * g.n
    for u, v in g.edges:
        masks[index[u]] |= 1 << index[v]
        masks[index[v]] |= 1 << index[u]
    return tuple(masks)


def degree_sequence(g: SimpleGraph) -> dict[str, int]:
    """Map every vertex to its incident-edge count."""
    return {v: len(adjacency(g)[v]) for v in g.vertices}


def induced_subgraph(g: SimpleGraph, labels: Iterable[str]) -> SimpleGraph:
    """Subgraph on ``labels`` with exactly the edges joining two of them."""
    keep = set(labels)
    unknown = keep - set(g.vertices)
    if unknown:
        raise GraphError(f"unknown vertex labels {sorted(unknown)!r}")
    vs = tuple(v for v in g.vertices if v in keep)
    es = frozenset(e for e in g.edges if e[0] in keep and e[1] in keep)
    return SimpleGraph(vs, es)


def is_connected(g: SimpleGraph) -> bool:
    if g.n == 0:
        return True
    nbrs = adjacency(g)
    seen = {g.vertices[0]}
    stack = [g.vertices[0]]
    while stack:
        for w in nbrs[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def is_k_connected(g: SimpleGraph, k: int) -> bool:
    """True iff no removal of k-1 vertices disconnects g.

    Complete graphs count as k-connected for every k < |V|.
    """
    if k <= 0:
        raise GraphError(f"connectivity order must be positive, got {k}")
    if g.n <= k:
        raise GraphError(f"is_k_connected needs more than {k} vertices, graph has {g.n}")
    return nx.node_connectivity(to_networkx(g)) >= k


def is_planar(g: SimpleGraph) -> bool:
    """Exact planarity decision (left-right algorithm via networkx)."""
    # any subdivision of a Kuratowski graph needs >= 9 edges and >= 5 vertices
    if g.n < 5 or g.m < 9:
        return True
    ok, _ = nx.check_planarity(to_networkx(g), counterexample=False)
    return bool(ok)


def to_networkx(g: SimpleGraph) -> "nx.Graph":
    gx = nx.Graph()
    gx.add_nodes_from(g.vertices)
    gx.add_edges_from(g.edges)
    return gx


@lru_cache(maxsize=None)
def triangles(g: SimpleGraph) -> tuple[tuple[str, str, str], ...]:
    """All 3-cliques, each sorted, in lexicographic order."""
    nbrs = adjacency(g)
    out = []
    for u, v in sorted(g.edges):
        for w in sorted(nbrs[u] & nbrs[v]):
            if w > v:
                out.append((u, v, w))
    return tuple(out)


# -- graph file format ----------------------------------------------------
#
# One object per file:
#   { "name": <text>, "vertices": [<label>...], "edges": [[<label>,<label>]...] }


def graph_to_record(g: SimpleGraph, name: str | None = None) -> dict:
    return {
        "name": name if name is not None else (g.name or ""),
        "vertices": list(g.vertices),
        "edges": [list(e) for e in g.sorted_edges()],
    }


def graph_from_record(record: Mapping) -> SimpleGraph:
    for key in ("name", "vertices", "edges"):
        if key not in record:
            raise GraphError(f"graph record is missing the {key!r} field")
    edges = []
    for entry in record["edges"]:
        if not isinstance(entry, (list, tuple)) or len(entry) != 2:
            raise GraphError(f"edge entry {entry!r} is not a pair")
        edges.append((entry[0], entry[1]))
    g = SimpleGraph.make(record["vertices"], edges, name=str(record["name"]) or None)
    return g


def emit_graph_file(g: SimpleGraph, name: str | None = None) -> str:
    return json.dumps(graph_to_record(g, name), indent=2, sort_keys=True) + "\n"


def parse_graph_file(path: str | Path) -> SimpleGraph:
    """Read and validate a graph file, with diagnostics naming the offense."""
    text = Path(path).read_text()
    try:
        record = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"{path}: malformed JSON at line {exc.lineno}: {exc.msg}") from exc
    try:
        return graph_from_record(record)
    except GraphError as exc:
        raise GraphError(f"{path}: {exc}") from exc
