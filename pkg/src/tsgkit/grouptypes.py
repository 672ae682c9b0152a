"""Recognition of small group types from cheap isomorphism invariants.

A group is named only when (order, abelian flag, element-order multiset)
pins it down inside the candidate family {Z_n, D_n (n>=2), S_n, Z7:Z3};
everything else is reported honestly as unrecognized, with its invariants
and a generator list.  D6 and D3 x Z2 are the same abstract group, as are
D3 and S3; such aliases share one canonical key.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial, gcd

from .perms import PermGroup, _order_profile, _small_generating_set, Perm

Profile = tuple[tuple[int, int], ...]

MAX_IDENTIFY_ORDER = 5040

ALIASES: dict[str, tuple[str, ...]] = {
    "D2": ("Z2xZ2",),
    "D3": ("S3",),
    "D6": ("D3xZ2",),
    "Z2": ("S2",),
    "Z6": ("Z3xZ2",),
}


@dataclass(frozen=True)
class GroupType:
    order: int
    abelian: bool
    order_profile: Profile
    name: str | None
    generators: tuple[str, ...] = field(default=())

    @property
    def recognized(self) -> bool:
        return self.name is not None

    @property
    def key(self) -> str:
        """Comparison key: canonical name, or the invariants when unnamed."""
        if self.name is not None:
            return self.name
        profile = ",".join(f"{o}^{c}" for o, c in self.order_profile)
        return f"unrecognized[{self.order};{profile}]"

    @property
    def display(self) -> str:
        if self.name is None:
            gens = " gens " + " ".join(self.generators) if self.generators else ""
            return self.key + gens
        alias = ALIASES.get(self.name)
        return self.name if not alias else f"{self.name} (= {alias[0]})"

    def __str__(self) -> str:
        return self.key


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def cyclic_profile(n: int) -> Profile:
    counts = {d: _phi(d) for d in _divisors(n)}
    return tuple(sorted(counts.items()))


def dihedral_profile(n: int) -> Profile:
    counts = {d: _phi(d) for d in _divisors(n)}
    counts[2] = counts.get(2, 0) + n
    return tuple(sorted(counts.items()))


@lru_cache(maxsize=None)
def symmetric_profile(n: int) -> Profile:
    """Element orders of S_n counted via cycle types."""
    counts: dict[int, int] = {}
    for part in _partitions(n):
        size = factorial(n)
        for length in part:
            size //= length
        mult: dict[int, int] = {}
        for length in part:
            mult[length] = mult.get(length, 0) + 1
        for m in mult.values():
            size //= factorial(m)
        order = 1
        for length in part:
            order = order * length // gcd(order, length)
        counts[order] = counts.get(order, 0) + size
    return tuple(sorted(counts.items()))


def _partitions(n: int, cap: int | None = None):
    cap = n if cap is None else cap
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


FROBENIUS21_PROFILE: Profile = ((1, 1), (3, 14), (7, 6))


def _candidates(order: int) -> list[tuple[str, bool, Profile]]:
    """Profiles of candidate groups at the given order: (name, abelian, profile)."""
    out: list[tuple[str, bool, Profile]] = []
    out.append((f"Z{order}", True, cyclic_profile(order)))
    if order % 2 == 0 and order >= 4:
        n = order // 2
        out.append((f"D{n}", n <= 2, dihedral_profile(n)))
    fact, n = 1, 1
    while fact < order:
        n += 1
        fact *= n
    if fact == order and n >= 2:
        out.append((f"S{n}", n <= 2, symmetric_profile(n)))
    if order == 21:
        out.append(("Z7:Z3", False, FROBENIUS21_PROFILE))
    return out


_CANONICAL_OVERRIDE = {"S2": "Z2", "S3": "D3", "D3xZ2": "D6", "Z2xZ2": "D2", "Z3xZ2": "Z6"}


def normalize_type_name(text: str) -> str:
    """Canonical key for a type name string, e.g. ``D3 x Z2`` -> ``D6``."""
    cleaned = text.strip().replace(" ", "")
    cleaned = cleaned.replace("×", "x").replace("⋊", ":")
    cleaned = re.sub(r"(?<=[0-9)])X(?=[A-Z(])", "x", cleaned)
    return _CANONICAL_OVERRIDE.get(cleaned, cleaned)


def identify_group_type(group: PermGroup) -> GroupType:
    """Name the abstract type of ``group`` when the invariants pin it down."""
    order = group.order
    if order > MAX_IDENTIFY_ORDER:
        raise ValueError(f"group identification supported up to order {MAX_IDENTIFY_ORDER}")
    profile = _order_profile(group.elements)
    abelian = group.is_abelian()
    matches = [
        name
        for name, cand_abelian, cand_profile in _candidates(order)
        if cand_abelian == abelian and cand_profile == profile
    ]
    canonical = sorted({_CANONICAL_OVERRIDE.get(m, m) for m in matches})
    if len(canonical) == 1:
        return GroupType(order=order, abelian=abelian, order_profile=profile, name=canonical[0])
    gens = _small_generating_set(group.domain, group.elements)
    gen_strings = tuple(Perm(group.domain, g).cycle_string() for g in gens)
    return GroupType(
        order=order, abelian=abelian, order_profile=profile, name=None, generators=gen_strings
    )
