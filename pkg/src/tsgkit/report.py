"""Analysis reports: per-class rows, expected-table comparison, DOT export.

A graph report carries one row per nontrivial conjugacy class (representative,
order, fixed-subgraph summary, circle/plane booleans, swap-path entry, and the
pos/neg verdicts with their rules), the positive upper bounds, the chirality
verdict, and the comparison against the embedded summary table.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import baseline
from .canon import fingerprint
from .engine import (
    Analysis,
    ChiralityCertificate,
    UpperBounds,
    fixpoint,
    intrinsically_chiral,
    positive_upper_bounds,
)
from .fixedsub import (
    INFINITE,
    embeds_in_s1,
    f_is_planar,
    find_path_witness,
    more_than_two_points,
    point_count,
    summarize,
)
from .graphs import SimpleGraph
from .grouptypes import identify_group_type, normalize_type_name
from .moves import FamilyCatalog
from .perms import Perm


@dataclass(frozen=True)
class ClassRow:
    rep: str
    order: int
    class_size: int
    fixed_summary: str
    s1: bool
    s2: bool
    pl: str
    pos_excluded: bool
    neg_excluded: bool
    pos_rule: str | None
    neg_rule: str | None


@dataclass(frozen=True)
class Table1Comparison:
    verdict: str  # MATCH | SUPERSET | MISMATCH
    expected: tuple[str, ...]
    computed: tuple[str, ...]
    excess: tuple[str, ...]
    missing: tuple[str, ...]
    aut_order_expected: int
    aut_order_match: bool
    aut_name_expected: str


@dataclass(frozen=True)
class GraphReport:
    name: str
    vertices: int
    edges: int
    fingerprint: str
    aut_order: int
    aut_type: str
    class_count: int
    rows: tuple[ClassRow, ...]
    bounds: tuple[str, ...]
    maximal_bounds: tuple[str, ...]
    chirality: str
    chirality_surviving: tuple[str, ...]
    comparison: Table1Comparison | None
    divergences: tuple[str, ...] = field(default=())


def pl_entry(g: SimpleGraph, p: Perm, fs) -> str:
    """Swap-path column: a witness path, or why none is needed.

    Tag precedence mirrors the expected tables: no swapped pair, then at
    most two fixed points, then a nonplanar fixed subgraph; otherwise the
    shortest witness (or ``none`` when no path qualifies).
    """
    if not p.swapped_pairs():
        return "N/A1"
    if not more_than_two_points(fs):
        return "N/A2"
    if not f_is_planar(fs):
        return "N/A3"
    path = find_path_witness(g, p)
    return "-".join(path) if path is not None else "none"


def _class_order_key(analysis: Analysis, baseline_rows) -> list[frozenset]:
    """Order classes to follow the expected table when one exists."""
    classes = analysis.nontrivial_classes()
    if baseline_rows is None:
        return sorted(
            classes, key=lambda cls: (analysis.group.perm(min(cls)).order(), min(cls))
        )
    remaining = list(classes)
    ordered: list[frozenset] = []
    for row in baseline_rows:
        rep = Perm.from_cycles(analysis.group.domain, row.rep)
        for cls in remaining:
            if rep.images in cls:
                ordered.append(cls)
                remaining.remove(cls)
                break
    ordered.extend(remaining)
    return ordered


def build_graph_report(name: str, g: SimpleGraph, analysis: Analysis | None = None) -> GraphReport:
    analysis = analysis if analysis is not None else fixpoint(g)
    group = analysis.group
    aut_type = identify_group_type(group)
    rows: list[ClassRow] = []
    baseline_rows = baseline.class_tables().get(name)
    divergences: list[str] = []
    if baseline_rows is not None:
        for row in baseline_rows:
            if row.divergence:
                divergences.append(f"{name} {row.rep}: {row.divergence}")

    by_rep: dict[str, object] = {}
    if baseline_rows is not None:
        for row in baseline_rows:
            rep = Perm.from_cycles(group.domain, row.rep)
            by_rep[min(group.class_of(rep.images))] = row.rep

    for cls in _class_order_key(analysis, baseline_rows):
        canonical_min = min(cls)
        rep_string = by_rep.get(canonical_min)
        rep = (
            Perm.from_cycles(group.domain, rep_string)
            if isinstance(rep_string, str)
            else group.perm(canonical_min)
        )
        st = analysis.status(rep.images)
        fs = analysis.fixed[rep.images]
        rows.append(
            ClassRow(
                rep=rep.cycle_string(),
                order=rep.order(),
                class_size=len(cls),
                fixed_summary=summarize(fs),
                s1=embeds_in_s1(fs),
                s2=f_is_planar(fs),
                pl=pl_entry(g, rep, fs),
                pos_excluded=st.pos_excluded,
                neg_excluded=st.neg_excluded,
                pos_rule=st.pos.brief() if st.pos else None,
                neg_rule=st.neg.brief() if st.neg else None,
            )
        )

    bounds = positive_upper_bounds(analysis)
    cert = intrinsically_chiral(analysis, name)
    comparison = _compare_table1(name, group.order, bounds)
    return GraphReport(
        name=name,
        vertices=g.n,
        edges=g.m,
        fingerprint=fingerprint(g),
        aut_order=group.order,
        aut_type=aut_type.display,
        class_count=len(analysis.nontrivial_classes()),
        rows=tuple(rows),
        bounds=tuple(t.key for t in bounds.types),
        maximal_bounds=bounds.maximal_types,
        chirality=cert.verdict,
        chirality_surviving=cert.surviving_class_reps,
        comparison=comparison,
        divergences=tuple(divergences),
    )


def _compare_table1(name: str, aut_order: int, bounds: UpperBounds) -> Table1Comparison | None:
    row = baseline.table1().get(name)
    if row is None:
        return None
    expected = tuple(sorted(normalize_type_name(t) for t in row.positive))
    computed = tuple(sorted(t.key for t in bounds.types))
    missing = tuple(sorted(set(expected) - set(computed)))
    excess = tuple(sorted(set(computed) - set(expected)))
    if missing:
        verdict = "MISMATCH"
    elif excess:
        verdict = "SUPERSET"
    else:
        verdict = "MATCH"
    return Table1Comparison(
        verdict=verdict,
        expected=expected,
        computed=computed,
        excess=excess,
        missing=missing,
        aut_order_expected=row.aut_order,
        aut_order_match=aut_order == row.aut_order,
        aut_name_expected=row.aut_name,
    )


# -- text rendering -----------------------------------------------------------


def _table(rows: list[list[str]], header: list[str]) -> str:
    widths = [max(len(str(r[i])) for r in [header] + rows) for i in range(len(header))]
    def fmt(r):
        return "  ".join(str(c).ljust(w) for c, w in zip(r, widths)).rstrip()
    lines = [fmt(header), fmt(["-" * w for w in widths])]
    lines.extend(fmt(r) for r in rows)
    return "\n".join(lines)


def render_graph_report(report: GraphReport) -> str:
    out = [
        f"== {report.name}: {report.vertices} vertices, {report.edges} edges "
        f"[{report.fingerprint}]",
        f"Aut order {report.aut_order}, type {report.aut_type}, "
        f"{report.class_count} nontrivial classes",
    ]
    body = [
        [
            r.rep,
            r.order,
            r.fixed_summary,
            "Yes" if r.s1 else "No",
            "Yes" if r.s2 else "No",
            r.pl,
            (r.pos_rule or "open"),
            (r.neg_rule or "open"),
        ]
        for r in report.rows
    ]
    out.append(
        _table(body, ["class rep", "ord", "fixed subgraph", "S1", "S2", "swap path", "pos", "neg"])
    )
    bound_text = ", ".join(report.bounds) if report.bounds else "(none beyond trivial)"
    out.append(f"positive upper bounds: {bound_text}")
    out.append(f"maximal: {', '.join(report.maximal_bounds) or '-'}")
    chir = report.chirality
    if report.chirality_surviving:
        chir += " (neg-open classes: " + ", ".join(report.chirality_surviving) + ")"
    out.append(f"intrinsic chirality: {chir}")
    if report.comparison:
        c = report.comparison
        out.append(
            f"expected-table comparison: {c.verdict}"
            + (f" excess={list(c.excess)}" if c.excess else "")
            + (f" missing={list(c.missing)}" if c.missing else "")
            + f"; aut order {'matches' if c.aut_order_match else 'DIFFERS from'} "
            + f"{c.aut_order_expected} ({c.aut_name_expected})"
        )
    for d in report.divergences:
        out.append(f"documented divergence: {d}")
    return "\n".join(out) + "\n"


def report_record(report: GraphReport) -> dict:
    rec = {
        "name": report.name,
        "vertices": report.vertices,
        "edges": report.edges,
        "fingerprint": report.fingerprint,
        "aut": {"order": report.aut_order, "type": report.aut_type},
        "class_count": report.class_count,
        "rows": [
            {
                "rep": r.rep,
                "order": r.order,
                "class_size": r.class_size,
                "fixed_subgraph": r.fixed_summary,
                "embeds_in_s1": r.s1,
                "planar": r.s2,
                "swap_path": r.pl,
                "pos": {"excluded": r.pos_excluded, "rule": r.pos_rule},
                "neg": {"excluded": r.neg_excluded, "rule": r.neg_rule},
            }
            for r in report.rows
        ],
        "positive_upper_bounds": list(report.bounds),
        "maximal_bounds": list(report.maximal_bounds),
        "chirality": {
            "verdict": report.chirality,
            "neg_open_classes": list(report.chirality_surviving),
        },
        "divergences": list(report.divergences),
    }
    if report.comparison:
        c = report.comparison
        rec["comparison"] = {
            "verdict": c.verdict,
            "expected": list(c.expected),
            "computed": list(c.computed),
            "excess": list(c.excess),
            "missing": list(c.missing),
            "aut_order_expected": c.aut_order_expected,
            "aut_order_match": c.aut_order_match,
            "aut_name_expected": c.aut_name_expected,
        }
    else:
        rec["comparison"] = None
    return rec


# -- DOT export ----------------------------------------------------------------


def family_dot(catalog: FamilyCatalog) -> str:
    """The family as a digraph: members as nodes, triangle-Y moves as arrows."""
    lines = ["digraph family {"]
    for name in catalog.names():
        g = catalog.members[name]
        lines.append(f'  "{name}" [label="{name}\\n{g.n}v"];')
    for src, dst, kind in sorted(catalog.adjacency):
        if kind == "nabla":
            lines.append(f'  "{src}" -> "{dst}";')
    for src, dst, kind in sorted(catalog.adjacency):
        if kind == "wye" and (dst, src, "nabla") not in catalog.adjacency:
            lines.append(f'  "{dst}" -> "{src}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_dot(g: SimpleGraph, name: str | None = None) -> str:
    title = name or g.name or "graph"
    lines = [f'graph "{title}" {{']
    for v in g.vertices:
        lines.append(f'  "{v}";')
    for u, v in g.sorted_edges():
        lines.append(f'  "{u}" -- "{v}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
