"""Canonical forms and isomorphism for small graphs.

The canonical form is computed by color refinement (1-WL) with backtracking
individualization, minimizing the adjacency encoding over the invariant
search tree.  Exactness is the point: two graphs get equal fingerprints iff
they are isomorphic.  Intended range is <= 20 vertices.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from functools import lru_cache

from .graphs import MAX_VERTICES, GraphError, SimpleGraph, adjacency_masks


@dataclass(frozen=True)
class CanonicalForm:
    """Canonical vertex ordering, edge list under it, and a text fingerprint."""

    order: tuple[str, ...]
    edges: tuple[tuple[int, int], ...]
    fingerprint: str


def _refine(adj: tuple[int, ...], colors: list[int]) -> list[int]:
    """Stable 1-WL refinement; colors are dense ranks of signatures."""
    n = len(adj)
    neighbor_lists = _neighbor_lists(adj)
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[w] for w in neighbor_lists[v])))
            for v in range(n)
        ]
        ranking = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new_colors = [ranking[sig] for sig in sigs]
        if new_colors == colors:
            return colors
        colors = new_colors


@lru_cache(maxsize=4096)
def _neighbor_lists(adj: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    return tuple(
        tuple(w for w in range(len(adj)) if mask >> w & 1) for mask in adj
    )


def _cells(colors: list[int]) -> list[list[int]]:
    out: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        out.setdefault(c, []).append(v)
    return [out[c] for c in sorted(out)]


def _cells_homogeneous(adj: tuple[int, ...], cells: list[list[int]]) -> bool:
    """True when adjacency depends only on cell membership.

    In that case every ordering refining the cell order yields the same
    encoding, so no branching is needed (complete graphs, unions of points).
    """
    masks = [0] * len(cells)
    for i, cell in enumerate(cells):
        for v in cell:
            masks[i] |= 1 << v
    for i, cell in enumerate(cells):
        size = len(cell)
        inner = sum(bin(adj[v] & masks[i]).count("1") for v in cell)
        if inner not in (0, size * (size - 1)):
            return False
        for j in range(i + 1, len(cells)):
            cross = sum(bin(adj[v] & masks[j]).count("1") for v in cell)
            if cross not in (0, size * len(cells[j])):
                return False
    return True


def _encode(adj: tuple[int, ...], ordering: list[int]) -> tuple[int, ...]:
    """Row encoding: bits of adjacency toward earlier vertices."""
    pos = {v: i for i, v in enumerate(ordering)}
    rows = []
    for i, v in enumerate(ordering):
        row = 0
        mask = adj[v]
        while mask:
            w = (mask & -mask).bit_length() - 1
            mask &= mask - 1
            if pos[w] < i:
                row |= 1 << pos[w]
        rows.append(row)
    return tuple(rows)


def _canonical_search(adj: tuple[int, ...]) -> list[int]:
    n = len(adj)
    best: dict[str, object] = {"code": None, "ordering": None}

    def leaf(ordering: list[int]) -> None:
        code = _encode(adj, ordering)
        if best["code"] is None or code < best["code"]:  # type: ignore[operator]
            best["code"] = code
            best["ordering"] = ordering

    def descend(colors: list[int]) -> None:
        cells = _cells(colors)
        target = None
        for cell in cells:
            if len(cell) > 1:
                target = cell
                break
        if target is None:
            leaf([cell[0] for cell in cells])
            return
        if _cells_homogeneous(adj, cells):
            leaf([v for cell in cells for v in cell])
            return
        for v in target:
            branched = [2 * c for c in colors]
            branched[v] -= 1
            descend(_refine(adj, branched))

    descend(_refine(adj, [0] * n))
    assert best["ordering"] is not None
    return best["ordering"]  # type: ignore[return-value]


@lru_cache(maxsize=None)
def canonical_form(g: SimpleGraph) -> CanonicalForm:
    """Canonical form of ``g``; equal fingerprints iff isomorphic."""
    if g.n > MAX_VERTICES:
        raise GraphError(f"canonical form supported up to {MAX_VERTICES} vertices, got {g.n}")
    adj = adjacency_masks(g)
    ordering = _canonical_search(adj)
    order_labels = tuple(g.vertices[v] for v in ordering)
    pos = {v: i for i, v in enumerate(ordering)}
    canon_edges = tuple(
        sorted(
            tuple(sorted((pos[i], pos[j])))
            for i, j in _index_edges(g)
        )
    )
    payload = f"{g.n};{g.m};" + ",".join(f"{i}-{j}" for i, j in canon_edges)
    digest = hashlib.sha256(payload.encode()).hexdigest()[:16]
    fingerprint = f"{g.n}v{g.m}e:{digest}"
    return CanonicalForm(order=order_labels, edges=canon_edges, fingerprint=fingerprint)


def _index_edges(g: SimpleGraph) -> list[tuple[int, int]]:
    index = {v: i for i, v in enumerate(g.vertices)}
    return [(index[u], index[v]) for u, v in g.edges]


def fingerprint(g: SimpleGraph) -> str:
    return canonical_form(g).fingerprint


def are_isomorphic(g1: SimpleGraph, g2: SimpleGraph) -> bool:
    return fingerprint(g1) == fingerprint(g2)


def find_isomorphism(g1: SimpleGraph, g2: SimpleGraph) -> dict[str, str] | None:
    """Vertex bijection g1 -> g2 preserving edges, or None.

    Composes the two canonical orderings and verifies the witness before
    returning it.
    """
    c1, c2 = canonical_form(g1), canonical_form(g2)
    if c1.fingerprint != c2.fingerprint:
        return None
    mapping = dict(zip(c1.order, c2.order))
    for u, v in g1.edges:
        if not g2.has_edge(mapping[u], mapping[v]):
            raise AssertionError("canonical forms disagree with fingerprint equality")
    return mapping
