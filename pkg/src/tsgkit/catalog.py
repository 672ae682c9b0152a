"""The 20 named members of the Heawood family, built by explicit move scripts.

Vertex labels follow the family's conventional lettering (a..m), so that
automorphisms written in cycle notation over those letters apply directly to
the catalog graphs.  Primed names are spelled with a ``p`` (``Np10`` for
N'10) to stay shell- and filename-safe; ``normalize_name`` accepts the
primed spellings too.
"""

from __future__ import annotations

from functools import lru_cache

from .graphs import SimpleGraph, complete_graph, triangles
from .moves import FamilyCatalog, MoveRecord, nabla_y, y_nabla
from .canon import fingerprint

HEAWOOD_NAMES = (
    "K7",
    "H8",
    "H9",
    "H10",
    "H11",
    "H12",
    "F9",
    "F10",
    "E10",
    "E11",
    "C11",
    "C12",
    "C13",
    "C14",
    "N9",
    "N10",
    "N11",
    "Np10",
    "Np11",
    "Np12",
)

NABLA_ONLY_NAMES = frozenset(
    ("K7", "H8", "H9", "H10", "H11", "H12", "F9", "F10", "E10", "E11", "C11", "C12", "C13", "C14")
)


def normalize_name(name: str) -> str:
    """Canonical catalog key for a user-facing name (accepts N'10, n10' ...)."""
    text = name.strip().replace("′", "'")
    text = text[0].upper() + text[1:] if text else text
    if "'" in text:
        text = "Np" + text.replace("'", "").lstrip("NnPp")
    if text.lower().startswith("np"):
        text = "Np" + text[2:]
    return text


@lru_cache(maxsize=None)
def build_reference_catalog() -> FamilyCatalog:
    """Construct all 20 named graphs by their defining move scripts."""
    members: dict[str, SimpleGraph] = {}
    provenance: dict[str, tuple[MoveRecord, ...]] = {}
    adjacency: set[tuple[str, str, str]] = set()

    def record(name: str, g: SimpleGraph, source: str | None, rec: MoveRecord | None) -> None:
        members[name] = g.with_name(name)
        if source is None or rec is None:
            provenance[name] = ()
        else:
            provenance[name] = provenance[source] + (rec,)
            adjacency.add((source, name, rec.kind))

    def nabla(target: str, source: str, triangle: str, new_label: str) -> None:
        g = members[source]
        site = tuple(sorted(triangle))
        h = nabla_y(g, site, new_label)
        rec = MoveRecord("nabla", site, new_label, fingerprint(g), fingerprint(h))
        record(target, h, source, rec)

    def wye(target: str, source: str, vertex: str) -> None:
        g = members[source]
        h = y_nabla(g, vertex)
        rec = MoveRecord("wye", (vertex,), None, fingerprint(g), fingerprint(h))
        record(target, h, source, rec)

    record("K7", complete_graph("bcdefgh"), None, None)
    nabla("H8", "K7", "bcd", "a")
    nabla("H9", "H8", "efg", "i")
    nabla("H10", "H9", "beh", "j")
    nabla("H11", "H10", "cfh", "k")
    nabla("H12", "H11", "dgh", "l")
    nabla("F9", "H8", "dfg", "i")
    nabla("F10", "F9", "deh", "j")
    nabla("E10", "F9", "bef", "j")
    nabla("E11", "E10", "cfh", "k")
    nabla("C11", "E10", "ceg", "k")
    nabla("C12", "C11", "cfh", "l")
    nabla("C13", "C12", "deh", "m")
    # the 14-vertex member is unique up to isomorphism, so any triangle works
    nabla("C14", "C13", "".join(triangles(members["C13"])[0]), "n")
    wye("N11", "H12", "h")
    wye("N10", "N11", "i")
    wye("N9", "N10", "a")
    wye("Np12", "C13", "f")
    wye("Np11", "Np12", "m")
    wye("Np10", "Np11", "c")

    assert set(members) == set(HEAWOOD_NAMES)
    fps = {fingerprint(g) for g in members.values()}
    assert len(fps) == len(members), "catalog members must be pairwise non-isomorphic"
    return FamilyCatalog(
        seed_name="K7",
        members=members,
        provenance=provenance,
        adjacency=frozenset(adjacency),
    )


def catalog_graph(name: str) -> SimpleGraph:
    catalog = build_reference_catalog()
    key = normalize_name(name)
    if key not in catalog.members:
        raise KeyError(f"unknown catalog graph {name!r}")
    return catalog.members[key]
