from __future__ import annotations

import json

from tsgkit.baseline import DETAILED_NAMES, class_tables, table1
from tsgkit.fixedsub import path_is_witness
from tsgkit.moves import closure
from tsgkit.graphs import complete_graph
from tsgkit.perms import Perm
from tsgkit.report import (
    build_graph_report,
    family_dot,
    graph_dot,
    pl_entry,
    render_graph_report,
    report_record,
)


def test_baseline_data_is_complete():
    assert set(table1()) == {
        "K7", "H8", "H9", "H10", "H11", "H12", "F9", "F10", "E10", "E11",
        "C11", "C12", "C13", "C14", "N9", "N10", "N11", "Np10", "Np11", "Np12",
    }
    assert set(class_tables()) == set(DETAILED_NAMES)
    assert sum(len(rows) for rows in class_tables().values()) == 98


def test_baseline_reps_are_automorphisms_covering_every_class(catalog, analyses):
    for name in DETAILED_NAMES:
        an = analyses[name]
        group = an.group
        seen = set()
        for row in class_tables()[name]:
            p = Perm.from_cycles(group.domain, row.rep)
            assert p.is_automorphism_of(an.graph), (name, row.rep)
            assert p.order() == row.order, (name, row.rep)
            seen.add(min(group.class_of(p.images)))
        assert len(seen) == len(an.nontrivial_classes()) == len(class_tables()[name])


def test_baseline_paths_are_valid_witnesses(catalog, analyses):
    for name in DETAILED_NAMES:
        an = analyses[name]
        for row in class_tables()[name]:
            if row.divergence is None and row.expects_path:
                p = Perm.from_cycles(an.group.domain, row.rep)
                assert path_is_witness(an.graph, p, row.pl.split("-")), (name, row.rep)


def test_reports_reproduce_expected_rows(catalog, analyses):
    for name in DETAILED_NAMES:
        report = build_graph_report(name, catalog.members[name], analyses[name])
        rows = {r.rep: r for r in report.rows}
        assert len(report.rows) == report.class_count
        for base in class_tables()[name]:
            row = rows[Perm.from_cycles(analyses[name].group.domain, base.rep).cycle_string()]
            assert row.order == base.order
            assert row.s1 == base.s1 and row.s2 == base.s2
            if base.expected_pl == "path" or base.expects_path:
                assert not row.pl.startswith("N/A") and row.pl != "none"
            else:
                assert row.pl == base.expected_pl


def test_row_count_equals_class_count(catalog, analyses):
    for name, an in analyses.items():
        report = build_graph_report(name, catalog.members[name], an)
        assert len(report.rows) == len(an.nontrivial_classes())


def test_divergences_surface_in_reports(catalog, analyses):
    report = build_graph_report("H8", catalog.members["H8"], analyses["H8"])
    assert any("midpoints" in d for d in report.divergences)
    report = build_graph_report("C13", catalog.members["C13"], analyses["C13"])
    assert any("(ik)" in d for d in report.divergences)


def test_comparison_verdicts(catalog, analyses):
    for name, expected in [("C12", "MATCH"), ("N11", "MATCH"), ("K7", "SUPERSET")]:
        report = build_graph_report(name, catalog.members[name], analyses[name])
        assert report.comparison is not None
        assert report.comparison.verdict == expected, name
        assert report.comparison.aut_order_match
    k7 = build_graph_report("K7", catalog.members["K7"], analyses["K7"])
    assert k7.comparison.excess == ("Z7:Z3",)


def test_report_text_and_record(catalog, analyses):
    report = build_graph_report("N11", catalog.members["N11"], analyses["N11"])
    text = render_graph_report(report)
    assert "positive upper bounds: D6" in text
    assert "MATCH" in text
    record = report_record(report)
    again = json.loads(json.dumps(record))
    assert again["comparison"]["verdict"] == "MATCH"
    assert len(again["rows"]) == 5


def test_pl_entry_tags(catalog, analyses):
    an = analyses["Np10"]
    g = catalog.members["Np10"]
    p = Perm.from_cycles(g.vertices, "(ajki)(begd)")
    assert pl_entry(g, p, an.fixed[p.images]) == "N/A1"
    p = Perm.from_cycles(g.vertices, "(hl)(abjekgid)")
    assert pl_entry(g, p, an.fixed[p.images]) == "N/A2"
    an = analyses["H8"]
    g = catalog.members["H8"]
    p = Perm.from_cycles(g.vertices, "(bc)")
    assert pl_entry(g, p, an.fixed[p.images]) == "N/A3"


def test_family_dot_exports(catalog):
    dot = family_dot(catalog)
    assert dot.count("label=") == 20
    assert '"K7" -> "H8"' in dot
    petersen = closure(complete_graph("abcdef"), seed_name="K6")
    pdot = family_dot(petersen)
    assert pdot.count("label=") == 7


def test_graph_dot(catalog):
    dot = graph_dot(catalog.members["K7"], "K7")
    assert dot.count(" -- ") == 21
    assert dot.count(";") == 7 + 21
