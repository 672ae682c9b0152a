"""Embedded expected-results data: the summary table and per-class tables.

Two read-only data files ship with the package.  ``table1.json`` holds, for
each of the 20 family members, the automorphism group (name and order) and
the list of positively realizable group types.  ``class_tables.json`` holds
the per-conjugacy-class rows (representative, order, circle and plane
booleans, swap-path entry) for the 18 members with detailed tables.

A row's ``pl`` entry is either a dash-joined witness path or one of the
not-applicable tags: N/A1 (no swapped pair), N/A2 (at most two fixed
points), N/A3 (fixed subgraph nonplanar).  Rows carrying a ``divergence``
key record the one place where the transcribed source row is inconsistent
with its own conventions; the comparison logic treats those specially.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources


@dataclass(frozen=True)
class BaselineRow:
    rep: str
    order: int
    s1: bool
    s2: bool
    pl: str
    note: str | None = None
    divergence: str | None = None
    corrected_pl: str | None = None

    @property
    def expected_pl(self) -> str:
        """What the implementation should produce: the corrected entry on
        divergence rows (``path`` meaning any valid witness), else ``pl``."""
        return self.corrected_pl if self.corrected_pl is not None else self.pl

    @property
    def expects_path(self) -> bool:
        e = self.expected_pl
        return e == "path" or not e.startswith("N/A")


@dataclass(frozen=True)
class Table1Row:
    aut_name: str
    aut_order: int
    positive: tuple[str, ...]


def _load(name: str) -> dict:
    with resources.files("tsgkit.data").joinpath(name).open() as fh:
        return json.load(fh)


@lru_cache(maxsize=None)
def table1() -> dict[str, Table1Row]:
    return {
        name: Table1Row(
            aut_name=row["aut"],
            aut_order=row["aut_order"],
            positive=tuple(row["positive"]),
        )
        for name, row in _load("table1.json").items()
    }


@lru_cache(maxsize=None)
def class_tables() -> dict[str, tuple[BaselineRow, ...]]:
    return {
        name: tuple(
            BaselineRow(
                rep=row["rep"],
                order=row["order"],
                s1=row["s1"],
                s2=row["s2"],
                pl=row["pl"],
                note=row.get("note"),
                divergence=row.get("divergence"),
                corrected_pl=row.get("corrected_pl"),
            )
            for row in rows
        )
        for name, rows in _load("class_tables.json").items()
    }


DETAILED_NAMES = (
    "H8", "H9", "H10", "H11", "H12",
    "F9", "F10", "E10", "E11",
    "C11", "C12", "C13",
    "N9", "N10", "N11", "Np10", "Np11", "Np12",
)
