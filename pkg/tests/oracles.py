"""Independent oracles used to cross-check the library's algorithms.

Everything here is deliberately naive: factorial enumeration, subdivision
search, exhaustive subset removal.  None of it shares code paths with the
implementations under test.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations

from tsgkit.graphs import SimpleGraph
from tsgkit.perms import Images, closure_images


def brute_force_automorphism_count(g: SimpleGraph) -> int:
    """Count edge-preserving bijections by checking all |V|! permutations."""
    n = g.n
    index = {v: i for i, v in enumerate(g.vertices)}
    edges = frozenset((index[u], index[v]) for u, v in g.edges) | frozenset(
        (index[v], index[u]) for u, v in g.edges
    )
    half = [(u, v) for u, v in edges if u < v]
    count = 0
    for p in permutations(range(n)):
        ok = True
        for u, v in half:
            if (p[u], p[v]) not in edges:
                ok = False
                break
        count += ok
    return count


def _spare_paths(g: SimpleGraph, u: str, v: str, spares: frozenset[str]):
    """Simple u-v paths whose interior uses only the given spare vertices."""
    for r in range(len(spares) + 1):
        for interior_set in combinations(sorted(spares), r):
            for interior in permutations(interior_set):
                path = (u,) + interior + (v,)
                if all(g.has_edge(a, b) for a, b in zip(path, path[1:])):
                    yield path


def _connectable(g: SimpleGraph, pairs: list[tuple[str, str]], spares: frozenset[str]) -> bool:
    if not pairs:
        return True
    u, v = pairs[0]
    for path in _spare_paths(g, u, v, spares):
        used = frozenset(path[1:-1])
        if _connectable(g, pairs[1:], spares - used):
            return True
    return False


def subdivision_planarity(g: SimpleGraph) -> bool:
    """Exact planarity for small graphs by brute Kuratowski-subdivision search."""
    vs = list(g.vertices)
    for branch in combinations(vs, 5):
        spares = frozenset(vs) - frozenset(branch)
        pairs = list(combinations(branch, 2))
        if _connectable(g, pairs, spares):
            return False
    for six in combinations(vs, 6):
        for part_a in combinations(six, 3):
            if six[0] not in part_a:
                continue  # fix one side to kill the mirror duplicates
            part_b = tuple(x for x in six if x not in part_a)
            spares = frozenset(vs) - frozenset(six)
            pairs = [(a, b) for a in part_a for b in part_b]
            if _connectable(g, pairs, spares):
                return False
    return True


def exhaustive_k_connected(g: SimpleGraph, k: int) -> bool:
    """No removal of k-1 vertices may disconnect the graph."""
    from tsgkit.graphs import induced_subgraph, is_connected

    if not is_connected(g):
        return False
    for removed in combinations(g.vertices, k - 1):
        rest = [v for v in g.vertices if v not in removed]
        if len(rest) > 1 and not is_connected(induced_subgraph(g, rest)):
            return False
    return True


def brute_force_subgroup_sets(elements: frozenset[Images]) -> set[frozenset[Images]]:
    """All subgroups, as closures of every generator subset of size <= 4.

    Four generators suffice for every subgroup of the order <= 24 groups this
    oracle is used on (their elementary abelian subgroups have rank <= 3).
    """
    identity = tuple(range(len(next(iter(elements)))))
    subs: set[frozenset[Images]] = {frozenset({identity})}
    pool = sorted(elements)
    for r in (1, 2, 3, 4):
        for gens in combinations(pool, r):
            closed = frozenset(closure_images(set(gens)))
            if closed <= elements:
                subs.add(closed)
    return subs


def heawood_incidence_graph() -> SimpleGraph:
    """The point-line incidence graph of the Fano plane: bipartite, 3-regular."""
    lines = [(1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 5, 6)]
    vertices = [f"p{i}" for i in range(1, 8)] + [f"L{j}" for j in range(7)]
    edges = [(f"p{i}", f"L{j}") for j, line in enumerate(lines) for i in line]
    return SimpleGraph.make(vertices, edges, name="heawood-incidence")


def random_graph(rng: random.Random, n: int, p: float) -> SimpleGraph:
    labels = [f"v{i}" for i in range(n)]
    edges = [(a, b) for a, b in combinations(labels, 2) if rng.random() < p]
    return SimpleGraph.make(labels, edges)


def relabeled_copy(rng: random.Random, g: SimpleGraph) -> SimpleGraph:
    shuffled = list(g.vertices)
    rng.shuffle(shuffled)
    mapping = dict(zip(g.vertices, shuffled))
    return SimpleGraph.make(sorted(shuffled), [(mapping[u], mapping[v]) for u, v in g.edges])


def exhaustive_witness_search(g: SimpleGraph, p) -> list[str] | None:
    """DFS over all simple paths between swapped pairs; independent of the
    BFS the library uses."""
    from tsgkit.graphs import adjacency

    nbrs = adjacency(g)
    fixed = p.fixed_labels()

    def extend(path: list[str], target: str) -> list[str] | None:
        u = path[-1]
        for w in sorted(nbrs[u]):
            if {p(u), p(w)} == {u, w}:
                continue
            if w == target:
                return path + [w]
            if w in fixed or w in path:
                continue
            found = extend(path + [w], target)
            if found:
                return found
        return None

    for a, b in p.swapped_pairs():
        found = extend([a], b)
        if found:
            return found
    return None
