"""Vertex permutations, automorphism enumeration, and finite-group machinery.

Composition convention, fixed globally: ``(p * q)(x) == p(q(x))`` — the right
factor acts first.  Permutations live over the ordered vertex tuple of one
graph and are stored as image tuples by index.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .canon import _refine
from .graphs import MAX_VERTICES, GraphError, SimpleGraph, adjacency_masks

Images = tuple[int, ...]


class PermError(ValueError):
    """Invalid permutation data or cycle notation."""


@dataclass(frozen=True)
class Perm:
    """Bijection on a fixed ordered label domain."""

    domain: tuple[str, ...]
    images: Images

    def __post_init__(self) -> None:
        n = len(self.domain)
        if len(self.images) != n or sorted(self.images) != list(range(n)):
            raise PermError(f"images {self.images!r} are not a bijection on {n} points")

    @classmethod
    def identity(cls, domain: tuple[str, ...]) -> "Perm":
        return cls(domain, tuple(range(len(domain))))

    @classmethod
    def from_mapping(cls, domain: tuple[str, ...], mapping: dict[str, str]) -> "Perm":
        index = {v: i for i, v in enumerate(domain)}
        unknown = set(mapping) - set(domain) | set(mapping.values()) - set(domain)
        if unknown:
            raise PermError(f"labels {sorted(unknown)!r} not in domain")
        images = [index[mapping.get(v, v)] for v in domain]
        return cls(domain, tuple(images))

    @classmethod
    def from_cycles(cls, domain: tuple[str, ...], text: str) -> "Perm":
        """Parse cycle notation like ``(bcd)(fgh)`` or ``(a i)(b,e)``.

        Single-character labels may be juxtaposed; longer labels need comma
        or whitespace separators.  Labels not mentioned are fixed.
        """
        mapping: dict[str, str] = {}
        body = text.strip()
        if body in ("", "()", "id", "1"):
            return cls.identity(domain)
        for chunk in re.findall(r"\(([^()]*)\)", body):
            if "," in chunk or " " in chunk:
                labels = [t for t in re.split(r"[,\s]+", chunk.strip()) if t]
            else:
                labels = list(chunk.strip())
            if len(labels) < 2:
                raise PermError(f"cycle ({chunk}) is too short")
            for lab in labels:
                if lab not in domain:
                    raise PermError(f"label {lab!r} not in domain")
                if lab in mapping:
                    raise PermError(f"label {lab!r} appears in two cycles")
            for a, b in zip(labels, labels[1:] + labels[:1]):
                mapping[a] = b
        if not re.fullmatch(r"(\([^()]*\))+", body.replace(" ", "")):
            raise PermError(f"malformed cycle notation {text!r}")
        return cls.from_mapping(domain, mapping)

    def __call__(self, label: str) -> str:
        return self.domain[self.images[self.domain.index(label)]]

    def __mul__(self, other: "Perm") -> "Perm":
        if self.domain != other.domain:
            raise PermError("cannot compose permutations over different domains")
        return Perm(self.domain, tuple(self.images[j] for j in other.images))

    def inverse(self) -> "Perm":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm(self.domain, tuple(inv))

    def __pow__(self, k: int) -> "Perm":
        base = self if k >= 0 else self.inverse()
        result = Perm.identity(self.domain)
        for _ in range(abs(k)):
            result = base * result
        return result

    def power_images(self, k: int) -> Images:
        return (self**k).images

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[str, ...]]:
        """Nontrivial cycles, each rotated to its least label, sorted."""
        seen: set[int] = set()
        out: list[tuple[str, ...]] = []
        for start in range(len(self.images)):
            if start in seen or self.images[start] == start:
                continue
            cyc = [start]
            seen.add(start)
            cur = self.images[start]
            while cur != start:
                cyc.append(cur)
                seen.add(cur)
                cur = self.images[cur]
            labels = [self.domain[i] for i in cyc]
            least = labels.index(min(labels))
            out.append(tuple(labels[least:] + labels[:least]))
        return sorted(out)

    def cycle_string(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "id"
        sep = "," if any(len(lab) > 1 for cyc in cycs for lab in cyc) else ""
        return "".join("(" + sep.join(cyc) + ")" for cyc in cycs)

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def order(self) -> int:
        result = 1
        for c in self.cycles():
            result = result * len(c) // gcd(result, len(c))
        return result

    def fixed_labels(self) -> frozenset[str]:
        return frozenset(self.domain[i] for i, j in enumerate(self.images) if i == j)

    def swapped_pairs(self) -> list[tuple[str, str]]:
        """Vertex pairs interchanged by the permutation (its 2-cycles)."""
        return sorted(tuple(sorted(c)) for c in self.cycles() if len(c) == 2)

    def is_automorphism_of(self, g: SimpleGraph) -> bool:
        if self.domain != g.vertices:
            return False
        adj = adjacency_masks(g)
        for i, mask in enumerate(adj):
            image_mask = 0
            m = mask
            while m:
                w = (m & -m).bit_length() - 1
                m &= m - 1
                image_mask |= 1 << self.images[w]
            if image_mask != adj[self.images[i]]:
                return False
        return True

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Perm({self.cycle_string()})"


def order_of_images(images: Images) -> int:
    n = len(images)
    seen = [False] * n
    result = 1
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        cur = start
        while not seen[cur]:
            seen[cur] = True
            cur = images[cur]
            length += 1
        result = result * length // gcd(result, length)
    return result


def compose_images(p: Images, q: Images) -> Images:
    return tuple(p[j] for j in q)


def invert_images(p: Images) -> Images:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


class PermGroup:
    """A concrete set of permutations over one domain, closed under the group ops."""

    def __init__(self, domain: tuple[str, ...], elements: frozenset[Images]):
        self.domain = domain
        self.elements = elements
        self._sorted: tuple[Images, ...] | None = None
        self._classes: tuple[frozenset[Images], ...] | None = None
        self._generators: tuple[Images, ...] | None = None

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Perm:
        return Perm.identity(self.domain)

    def perm(self, images: Images) -> Perm:
        return Perm(self.domain, images)

    def perms(self) -> list[Perm]:
        return [Perm(self.domain, im) for im in self.sorted_elements()]

    def sorted_elements(self) -> tuple[Images, ...]:
        if self._sorted is None:
            self._sorted = tuple(sorted(self.elements))
        return self._sorted

    def __contains__(self, item: Perm | Images) -> bool:
        images = item.images if isinstance(item, Perm) else item
        return images in self.elements

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, PermGroup)
            and self.domain == other.domain
            and self.elements == other.elements
        )

    def __hash__(self) -> int:
        return hash((self.domain, self.elements))

    def generators(self) -> tuple[Images, ...]:
        """A small (greedy) generating set."""
        if self._generators is None:
            gens: list[Images] = []
            have: set[Images] = {Perm.identity(self.domain).images}
            for images in self.sorted_elements():
                if images not in have:
                    gens.append(images)
                    have = closure_images(set(gens))
                    if len(have) == self.order:
                        break
            self._generators = tuple(gens)
        return self._generators

    def is_abelian(self) -> bool:
        gens = self.generators()
        return all(
            compose_images(a, b) == compose_images(b, a)
            for i, a in enumerate(gens)
            for b in gens[i:]
        )

    def conjugacy_classes(self) -> tuple[frozenset[Images], ...]:
        """Orbits under conjugation; identity class first, then sorted."""
        if self._classes is not None:
            return self._classes
        gens = self.generators()
        gen_invs = [invert_images(gm) for gm in gens]
        unassigned = set(self.elements)
        classes: list[frozenset[Images]] = []
        for images in self.sorted_elements():
            if images not in unassigned:
                continue
            orbit = {images}
            frontier = [images]
            while frontier:
                x = frontier.pop()
                for gm, gi in zip(gens, gen_invs):
                    y = compose_images(gm, compose_images(x, gi))
                    if y not in orbit:
                        orbit.add(y)
                        frontier.append(y)
            classes.append(frozenset(orbit))
            unassigned -= orbit
        identity = Perm.identity(self.domain).images
        classes.sort(key=lambda cls: (identity not in cls, min(cls)))
        self._classes = tuple(classes)
        return self._classes

    def class_of(self, images: Images) -> frozenset[Images]:
        for cls in self.conjugacy_classes():
            if images in cls:
                return cls
        raise PermError("element not in group")


def closure_images(seed: set[Images]) -> set[Images]:
    """Subgroup generated by ``seed``: all products of the generators.

    In a finite group the generated submonoid is already a subgroup, so a
    breadth-first product walk from the identity suffices.
    """
    gens = [g for g in seed]
    if not gens:
        return set()
    identity = tuple(range(len(gens[0])))
    elements = {identity}
    frontier = [identity]
    while frontier:
        x = frontier.pop()
        for gm in gens:
            y = compose_images(x, gm)
            if y not in elements:
                elements.add(y)
                frontier.append(y)
    return elements


def generated_subgroup(domain: tuple[str, ...], gens: list[Perm] | list[Images]) -> PermGroup:
    """Subgroup generated by ``gens`` (the trivial group for no generators)."""
    images = {g.images if isinstance(g, Perm) else tuple(g) for g in gens}
    images.add(Perm.identity(domain).images)
    return PermGroup(domain, frozenset(closure_images(images)))


# -- automorphism enumeration ---------------------------------------------


@lru_cache(maxsize=None)
def automorphism_group(g: SimpleGraph) -> PermGroup:
    """All edge-preserving vertex bijections of ``g``.

    Backtracking over a refinement coloring with incremental adjacency
    consistency; exact and exhaustive for <= 20 vertices.
    """
    if g.n > MAX_VERTICES:
        raise GraphError(f"automorphism enumeration supported up to {MAX_VERTICES} vertices")
    n = g.n
    adj = adjacency_masks(g)
    colors = _refine(adj, [0] * n)

    # order vertices: BFS-like, preferring small color classes then adjacency
    # to already-placed vertices, so candidate sets stay tight early.
    class_size = {c: colors.count(c) for c in set(colors)}
    order: list[int] = []
    placed_mask = 0
    remaining = set(range(n))
    while remaining:
        def score(v: int) -> tuple:
            attached = bin(adj[v] & placed_mask).count("1")
            return (-attached, class_size[colors[v]], colors[v], v)

        v = min(remaining, key=score)
        order.append(v)
        remaining.discard(v)
        placed_mask |= 1 << v

    by_color: dict[int, list[int]] = {}
    for v in range(n):
        by_color.setdefault(colors[v], []).append(v)

    results: list[Images] = []
    image = [0] * n
    used = [False] * n
    placed_src_mask = 0
    placed_img_mask = 0

    def backtrack(t: int, placed_src: int, placed_img: int) -> None:
        if t == n:
            results.append(tuple(image))
            return
        v = order[t]
        required = 0
        m = adj[v] & placed_src
        while m:
            w = (m & -m).bit_length() - 1
            m &= m - 1
            required |= 1 << image[w]
        for cand in by_color[colors[v]]:
            if used[cand]:
                continue
            if (adj[cand] & placed_img) != required:
                continue
            used[cand] = True
            image[v] = cand
            backtrack(t + 1, placed_src | 1 << v, placed_img | 1 << cand)
            used[cand] = False

    backtrack(0, placed_src_mask, placed_img_mask)
    return PermGroup(g.vertices, frozenset(results))


# -- subgroup enumeration ---------------------------------------------------

UNRESTRICTED_LIMIT = 400


def _closure_within(
    base: frozenset[Images], extra: Images, allowed: frozenset[Images]
) -> frozenset[Images] | None:
    """Closure of base + extra, or None as soon as it escapes ``allowed``."""
    if extra not in allowed:
        return None
    elements = set(base)
    elements.add(extra)
    frontier = [extra]
    gens = [g for g in base if True] + [extra]
    while frontier:
        x = frontier.pop()
        for gm in gens:
            for y in (compose_images(gm, x), compose_images(x, gm)):
                if y not in elements:
                    if y not in allowed:
                        return None
                    elements.add(y)
                    frontier.append(y)
    return frozenset(elements)


def _small_generating_set(domain: tuple[str, ...], elements: frozenset[Images]) -> list[Images]:
    gens: list[Images] = []
    have: set[Images] = {Perm.identity(domain).images}
    for images in sorted(elements):
        if images not in have:
            gens.append(images)
            have = closure_images(set(gens))
            if len(have) == len(elements):
                break
    return gens


def _order_profile(elements: frozenset[Images]) -> tuple[tuple[int, int], ...]:
    counts: dict[int, int] = {}
    for images in elements:
        o = order_of_images(images)
        counts[o] = counts.get(o, 0) + 1
    return tuple(sorted(counts.items()))


def _subgroups_conjugate(
    group: PermGroup, h1: frozenset[Images], h2: frozenset[Images]
) -> bool:
    if len(h1) != len(h2) or _order_profile(h1) != _order_profile(h2):
        return False
    gens = _small_generating_set(group.domain, h1)
    for gm in group.elements:
        gi = invert_images(gm)
        if all(compose_images(gm, compose_images(x, gi)) in h2 for x in gens):
            return True
    return False


def _is_class_closed(group: PermGroup, allowed: frozenset[Images]) -> bool:
    return all(cls <= allowed or not (cls & allowed) for cls in group.conjugacy_classes())


def subgroups_within(group: PermGroup, allowed) -> list[PermGroup]:
    """All subgroups of ``group`` whose elements lie inside ``allowed``.

    Enumeration is by incremental generator extension: every target subgroup
    is reached by adding its own elements one at a time, and all intermediate
    subgroups stay inside ``allowed``, so the search is complete.  When
    ``allowed`` is a union of conjugacy classes the search runs once per
    subgroup conjugacy class and expands orbits at the end.
    """
    allowed_set = frozenset(
        x.images if isinstance(x, Perm) else tuple(x) for x in allowed
    )
    identity = Perm.identity(group.domain).images
    if identity not in allowed_set:
        raise PermError("allowed set must contain the identity")
    if not allowed_set <= group.elements:
        raise PermError("allowed set must lie inside the group")
    if allowed_set == group.elements and group.order > UNRESTRICTED_LIMIT:
        raise PermError(
            f"unrestricted subgroup enumeration refused above order {UNRESTRICTED_LIMIT}"
        )

    trivial = frozenset({identity})
    if _is_class_closed(group, allowed_set):
        subgroup_sets = _subgroups_within_by_class(group, allowed_set, trivial)
    else:
        subgroup_sets = _subgroups_within_direct(allowed_set, trivial)
    return [
        PermGroup(group.domain, s)
        for s in sorted(subgroup_sets, key=lambda s: (len(s), sorted(s)))
    ]


def _subgroups_within_direct(
    allowed_set: frozenset[Images], trivial: frozenset[Images]
) -> set[frozenset[Images]]:
    found: set[frozenset[Images]] = {trivial}
    worklist: list[frozenset[Images]] = [trivial]
    while worklist:
        h = worklist.pop()
        for a in allowed_set:
            if a in h:
                continue
            k = _closure_within(h, a, allowed_set)
            if k is not None and k not in found:
                found.add(k)
                worklist.append(k)
    return found


def _subgroups_within_by_class(
    group: PermGroup, allowed_set: frozenset[Images], trivial: frozenset[Images]
) -> set[frozenset[Images]]:
    reps: list[frozenset[Images]] = [trivial]
    worklist: list[frozenset[Images]] = [trivial]
    while worklist:
        h = worklist.pop()
        for a in sorted(allowed_set):
            if a in h:
                continue
            k = _closure_within(h, a, allowed_set)
            if k is None:
                continue
            if any(_subgroups_conjugate(group, k, r) for r in reps if len(r) == len(k)):
                continue
            reps.append(k)
            worklist.append(k)
    out: set[frozenset[Images]] = set()
    for rep in reps:
        for gm in group.elements:
            gi = invert_images(gm)
            out.add(frozenset(compose_images(gm, compose_images(x, gi)) for x in rep))
    return out
