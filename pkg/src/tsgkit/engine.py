"""Obstruction rules and the realizability fixpoint.

Each nontrivial automorphism starts with both sides Open (positively and
negatively unobstructed) and can only move to Excluded, with a replayable
trace naming the rule and its witness.  Direct rules (R1-R5, R9) look at one
element; R6 propagates exclusions through powers until nothing changes.  The
monotone Open->Excluded direction makes the fixpoint terminating and its
result independent of application order.

Soundness background, used by the rules and recorded in their law strings:
a finite-order orientation-preserving homeomorphism of the 3-sphere has
fixed-point set empty or a circle, an orientation-reversing one has two
points or a 2-sphere (Smith theory), and a realizable automorphism of a
3-connected nonplanar graph is realizable by a finite-order homeomorphism.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .fixedsub import (
    INFINITE,
    FixedSubgraph,
    embeds_in_s1,
    f_is_planar,
    find_path_witness,
    fixed_subgraph,
    more_than_two_points,
    path_is_witness,
    point_count,
)
from .graphs import SimpleGraph
from .grouptypes import GroupType, identify_group_type
from .perms import (
    Images,
    Perm,
    PermGroup,
    automorphism_group,
    compose_images,
    order_of_images,
    subgroups_within,
)

LAWS = {
    "R1": "an orientation-preserving realization fixes a circle, so the fixed "
    "subgraph of a positively realizable automorphism embeds in the circle",
    "R2": "the fixed subgraph of a realizable automorphism lies in a circle or "
    "a 2-sphere, so a nonplanar fixed subgraph rules out both orientations",
    "R3": "an orientation-reversing homeomorphism has even order, so an "
    "odd-order automorphism is not negatively realizable",
    "R4": "an orientation-reversing realization fixing more than two points is "
    "a reflection of order 2, so the automorphism must have order 2",
    "R5": "with more than two fixed points the reversing realization fixes a "
    "separating 2-sphere, which any path between swapped vertices must cross "
    "at a fixed vertex or a flipped edge; a path with neither rules it out",
    "R6": "a homeomorphism h realizing x with orientation sign s gives h^k "
    "realizing x^k with sign s^k, so exclusions propagate through powers",
    "R7": "conjugate automorphisms are realizable in exactly the same ways "
    "(relabel the embedding by the conjugator)",
    "R9": "a finite-order orientation-preserving realization with a nonempty "
    "fixed set fixes exactly a circle, and its powers fix the same circle, so "
    "anything fixed by a power is already fixed by the element",
}


@dataclass(frozen=True)
class RuleTrace:
    rule: str
    witness: dict
    law: str = ""

    def brief(self) -> str:
        if self.rule == "R5":
            return "R5 path " + "-".join(self.witness["path"])
        if self.rule == "R6":
            return f"R6{self.witness['variant']} k={self.witness['k']} -> {self.witness['power']}"
        if self.rule == "R9":
            culprit = self.witness.get("vertex") or "-".join(self.witness.get("edge", ()))
            return f"R9 k={self.witness['k']} {self.witness['kind']} {culprit}"
        return self.rule


class ElementStatus:
    """Mutable Open/Excluded pair for one automorphism; Open is None."""

    __slots__ = ("pos", "neg")

    def __init__(self) -> None:
        self.pos: RuleTrace | None = None
        self.neg: RuleTrace | None = None

    @property
    def pos_excluded(self) -> bool:
        return self.pos is not None

    @property
    def neg_excluded(self) -> bool:
        return self.neg is not None

    def verdict(self) -> tuple[bool, bool]:
        return (self.pos_excluded, self.neg_excluded)


@dataclass
class Analysis:
    """Fixpoint output for one graph."""

    graph: SimpleGraph
    group: PermGroup
    statuses: dict[Images, ElementStatus]
    fixed: dict[Images, FixedSubgraph]
    r7_applications: int = 0

    def status(self, p: Perm | Images) -> ElementStatus:
        images = p.images if isinstance(p, Perm) else p
        return self.statuses[images]

    def classes(self) -> tuple[frozenset[Images], ...]:
        return self.group.conjugacy_classes()

    def nontrivial_classes(self) -> list[frozenset[Images]]:
        identity = self.group.identity.images
        return [cls for cls in self.classes() if identity not in cls]

    def pos_open_images(self) -> set[Images]:
        return {im for im, st in self.statuses.items() if not st.pos_excluded}

    def class_rep(self, cls: frozenset[Images]) -> Perm:
        return self.group.perm(min(cls))


@dataclass(frozen=True)
class ChiralityCertificate:
    graph_name: str
    verdict: str  # "Proved" | "Unknown"
    surviving_class_reps: tuple[str, ...]
    neg_rules_by_class: tuple[tuple[str, str], ...]  # (class rep, rule trace brief)

    @property
    def proved(self) -> bool:
        return self.verdict == "Proved"


@dataclass(frozen=True)
class UpperBounds:
    """Types of every subgroup surviving positive exclusion, plus the maximal ones."""

    types: tuple[GroupType, ...]
    maximal_types: tuple[str, ...]
    subgroup_count: int
    allowed_size: int


def _trace(rule: str, **witness) -> RuleTrace:
    return RuleTrace(rule=rule, witness=witness, law=LAWS[rule])


# -- direct rules ------------------------------------------------------------


def rule_r1_circle(p: Perm, fs: FixedSubgraph) -> RuleTrace | None:
    if not embeds_in_s1(fs):
        return _trace("R1")
    return None


def rule_r2_planarity(p: Perm, fs: FixedSubgraph) -> RuleTrace | None:
    if not f_is_planar(fs):
        return _trace("R2")
    return None


def rule_r3_odd_order(p: Perm) -> RuleTrace | None:
    order = p.order()
    if order % 2 == 1:
        return _trace("R3", order=order)
    return None


def rule_r4_order_two(p: Perm, fs: FixedSubgraph) -> RuleTrace | None:
    if more_than_two_points(fs) and p.order() != 2:
        return _trace("R4", points=point_count(fs), order=p.order())
    return None


def rule_r5_swap_path(g: SimpleGraph, p: Perm, fs: FixedSubgraph) -> RuleTrace | None:
    if not more_than_two_points(fs) or not p.swapped_pairs():
        return None
    path = find_path_witness(g, p)
    if path is not None:
        return _trace("R5", pair=[path[0], path[-1]], path=path)
    return None


def rule_r9_axis(g: SimpleGraph, p: Perm, fs: FixedSubgraph) -> RuleTrace | None:
    """Pos-exclusion when a power fixes strictly more than the element itself."""
    if fs.is_empty():
        return None
    order = p.order()
    fixed = p.fixed_labels()
    for k in range(2, order):
        q = p**k
        for v in sorted(q.fixed_labels()):
            if v not in fixed:
                return _trace("R9", k=k, kind="vertex", vertex=v)
        for a, b in q.swapped_pairs():
            if not g.has_edge(a, b):
                continue
            if {p(a), p(b)} != {a, b}:
                return _trace("R9", k=k, kind="edge", edge=[a, b])
    return None


# -- fixpoint ----------------------------------------------------------------


def fixpoint(
    g: SimpleGraph, *, shuffle_seed: int | None = None
) -> Analysis:
    """Apply the direct rules, then iterate power propagation to stability.

    ``shuffle_seed`` randomizes element scan order only; the final verdicts
    are order independent (the schedule-independence tests rely on this).
    Refuses graphs outside the rules' soundness hypotheses (3-connected and
    nonplanar).
    """
    from .graphs import GraphError, is_k_connected, is_planar

    if g.n <= 3 or is_planar(g) or not is_k_connected(g, 3):
        raise GraphError("the obstruction rules assume a 3-connected nonplanar graph")
    group = automorphism_group(g)
    identity = group.identity.images
    elements = [im for im in group.sorted_elements()]
    scan = list(elements)
    if shuffle_seed is not None:
        random.Random(shuffle_seed).shuffle(scan)

    statuses: dict[Images, ElementStatus] = {im: ElementStatus() for im in elements}
    fixed: dict[Images, FixedSubgraph] = {}

    for images in scan:
        st = statuses[images]
        p = group.perm(images)
        fs = fixed_subgraph(g, p)
        fixed[images] = fs
        if images == identity:
            continue
        # positive side: R1, R2, R9, in that order
        if st.pos is None:
            st.pos = rule_r1_circle(p, fs)
        r2 = rule_r2_planarity(p, fs)
        if r2 is not None:
            if st.pos is None:
                st.pos = r2
            st.neg = r2
        if st.pos is None:
            st.pos = rule_r9_axis(g, p, fs)
        # negative side: R3, R4, R5
        if st.neg is None:
            st.neg = rule_r3_odd_order(p)
        if st.neg is None:
            st.neg = rule_r4_order_two(p, fs)
        if st.neg is None:
            st.neg = rule_r5_swap_path(g, p, fs)

    _propagate_powers(group, statuses, scan)
    r7 = _complete_classes(group, statuses)
    analysis = Analysis(graph=g, group=group, statuses=statuses, fixed=fixed, r7_applications=r7)
    return analysis


def _propagate_powers(
    group: PermGroup, statuses: dict[Images, ElementStatus], scan: list[Images]
) -> None:
    identity = group.identity.images
    changed = True
    while changed:
        changed = False
        for images in scan:
            if images == identity:
                continue
            st = statuses[images]
            if st.pos_excluded and st.neg_excluded:
                continue
            n = order_of_images(images)
            power = images
            # k and k+n differ in parity when n is odd, so scan up to 2n
            for k in range(2, 2 * n):
                power = compose_images(images, power)
                if k % n == 0:
                    continue
                target = statuses[power]
                if st.pos is None and target.pos_excluded:
                    st.pos = _trace(
                        "R6",
                        variant="a",
                        k=k,
                        power=group.perm(power).cycle_string(),
                        via="pos",
                    )
                    changed = True
                if st.neg is None and k % 2 == 1 and target.neg_excluded:
                    st.neg = _trace(
                        "R6",
                        variant="b",
                        k=k,
                        power=group.perm(power).cycle_string(),
                        via="neg",
                    )
                    changed = True
                if st.neg is None and k % 2 == 0 and target.pos_excluded:
                    st.neg = _trace(
                        "R6",
                        variant="c",
                        k=k,
                        power=group.perm(power).cycle_string(),
                        via="pos",
                    )
                    changed = True
                if st.pos_excluded and st.neg_excluded:
                    break


def _complete_classes(group: PermGroup, statuses: dict[Images, ElementStatus]) -> int:
    """R7: force class-constant statuses; returns how many fixes were needed.

    The direct rules and power propagation are already class equivariant, so
    this is a consistency completion that is expected to fire zero times.
    """
    fixes = 0
    for cls in group.conjugacy_classes():
        members = sorted(cls)
        for side in ("pos", "neg"):
            traces = [getattr(statuses[m], side) for m in members]
            donors = [t for t in traces if t is not None]
            if donors and any(t is None for t in traces):
                for m in members:
                    if getattr(statuses[m], side) is None:
                        setattr(
                            statuses[m],
                            side,
                            _trace("R7", via=side, source=donors[0].rule),
                        )
                        fixes += 1
    return fixes


# -- verdict assembly ---------------------------------------------------------


def positive_upper_bounds(analysis: Analysis) -> UpperBounds:
    """Group types provably containing every positively realizable group.

    Every subgroup realized by orientation-preserving homeomorphisms consists
    of surviving elements, so the bound is the set of types of all subgroups
    inside the surviving set (the trivial group is always realizable and
    never listed).
    """
    group = analysis.group
    allowed = analysis.pos_open_images() | {group.identity.images}
    subgroups = subgroups_within(group, allowed)
    nontrivial = [h for h in subgroups if h.order > 1]
    types: dict[str, GroupType] = {}
    for h in nontrivial:
        t = identify_group_type(h)
        types.setdefault(t.key, t)
    maximal: list[PermGroup] = []
    for h in nontrivial:
        if not any(other.order > h.order and h.elements <= other.elements for other in nontrivial):
            maximal.append(h)
    maximal_types = sorted({identify_group_type(h).key for h in maximal})
    ordered = sorted(types.values(), key=lambda t: (-t.order, t.key))
    return UpperBounds(
        types=tuple(ordered),
        maximal_types=tuple(maximal_types),
        subgroup_count=len(nontrivial),
        allowed_size=len(allowed),
    )


def intrinsically_chiral(analysis: Analysis, graph_name: str = "") -> ChiralityCertificate:
    """Proved iff every nontrivial automorphism is negatively excluded."""
    surviving: list[str] = []
    by_class: list[tuple[str, str]] = []
    for cls in analysis.nontrivial_classes():
        rep = analysis.class_rep(cls)
        st = analysis.status(rep)
        if st.neg_excluded:
            by_class.append((rep.cycle_string(), st.neg.brief()))
        else:
            surviving.append(rep.cycle_string())
    verdict = "Proved" if not surviving else "Unknown"
    return ChiralityCertificate(
        graph_name=graph_name or (analysis.graph.name or ""),
        verdict=verdict,
        surviving_class_reps=tuple(surviving),
        neg_rules_by_class=tuple(by_class),
    )


# -- trace audit ---------------------------------------------------------------


class AuditError(AssertionError):
    """A recorded trace failed to replay."""


def audit(analysis: Analysis) -> int:
    """Replay every recorded trace against its rule; returns the trace count."""
    g = analysis.graph
    group = analysis.group
    checked = 0
    for images, st in analysis.statuses.items():
        p = group.perm(images)
        fs = analysis.fixed[images]
        for side, trace in (("pos", st.pos), ("neg", st.neg)):
            if trace is None:
                continue
            _replay(g, group, analysis, p, fs, side, trace)
            checked += 1
    return checked


def _replay(
    g: SimpleGraph,
    group: PermGroup,
    analysis: Analysis,
    p: Perm,
    fs: FixedSubgraph,
    side: str,
    trace: RuleTrace,
) -> None:
    label = f"{trace.rule} on {p.cycle_string()} ({side})"
    if trace.rule == "R1":
        if side != "pos" or embeds_in_s1(fs):
            raise AuditError(f"{label}: fixed subgraph embeds in the circle")
    elif trace.rule == "R2":
        if f_is_planar(fs):
            raise AuditError(f"{label}: fixed subgraph is planar")
    elif trace.rule == "R3":
        if side != "neg" or p.order() % 2 == 0:
            raise AuditError(f"{label}: order is even")
    elif trace.rule == "R4":
        if side != "neg" or not more_than_two_points(fs) or p.order() == 2:
            raise AuditError(f"{label}: precondition fails on replay")
    elif trace.rule == "R5":
        if side != "neg" or not more_than_two_points(fs):
            raise AuditError(f"{label}: point-count precondition fails")
        if not path_is_witness(g, p, trace.witness["path"]):
            raise AuditError(f"{label}: recorded path is not a valid witness")
    elif trace.rule == "R6":
        k = trace.witness["k"]
        power = p**k
        if power.is_identity():
            raise AuditError(f"{label}: power k={k} is the identity")
        if power.cycle_string() != trace.witness["power"]:
            raise AuditError(f"{label}: recorded power disagrees")
        target = analysis.status(power)
        variant = trace.witness["variant"]
        if variant == "a":
            ok = side == "pos" and target.pos_excluded
        elif variant == "b":
            ok = side == "neg" and k % 2 == 1 and target.neg_excluded
        else:
            ok = side == "neg" and k % 2 == 0 and target.pos_excluded
        if not ok:
            raise AuditError(f"{label}: power status does not support variant {variant}")
    elif trace.rule == "R9":
        if side != "pos" or fs.is_empty():
            raise AuditError(f"{label}: empty fixed set")
        k = trace.witness["k"]
        q = p**k
        if q.is_identity():
            raise AuditError(f"{label}: power k={k} is the identity")
        if trace.witness["kind"] == "vertex":
            v = trace.witness["vertex"]
            if not (q(v) == v and p(v) != v):
                raise AuditError(f"{label}: vertex witness fails")
        else:
            a, b = trace.witness["edge"]
            if not (
                g.has_edge(a, b)
                and q(a) == b
                and q(b) == a
                and {p(a), p(b)} != {a, b}
            ):
                raise AuditError(f"{label}: edge witness fails")
    elif trace.rule == "R7":
        cls = group.class_of(p.images)
        others = [
            analysis.status(m)
            for m in cls
            if m != p.images
        ]
        attr = "pos_excluded" if side == "pos" else "neg_excluded"
        if not any(getattr(st, attr) for st in others):
            raise AuditError(f"{label}: no excluded class member to inherit from")
    else:
        raise AuditError(f"{label}: unknown rule id")
