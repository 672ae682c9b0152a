"""HTTP service exposing the catalog, the analyses, and the exports.

Analyses are computed lazily and cached per process: the reference catalog
is cheap, a single graph analysis takes milliseconds to seconds, and the
complete-graph seed (order 5040 automorphism group) takes a few seconds on
first request.  All cached objects are immutable, so concurrent readers are
safe.
"""

from __future__ import annotations

from functools import lru_cache

from fastapi import FastAPI, HTTPException
from fastapi.responses import PlainTextResponse

from . import schemas
from .baseline import table1
from .canon import fingerprint
from .catalog import build_reference_catalog, normalize_name
from .engine import Analysis, audit, fixpoint
from .graphs import GraphError, SimpleGraph, complete_graph, graph_from_record, graph_to_record
from .grouptypes import identify_group_type
from .moves import FamilyCatalog, closure
from .perms import automorphism_group
from .report import (
    build_graph_report,
    family_dot,
    graph_dot,
    report_record,
)


@lru_cache(maxsize=None)
def _family(seed: str, moves: str) -> FamilyCatalog:
    reference = build_reference_catalog()
    if seed == "K7":
        seed_graph = complete_graph("bcdefgh")
        return closure(seed_graph, reference=reference, moves=moves)  # type: ignore[arg-type]
    if seed == "K6":
        seed_graph = complete_graph("abcdef")
        return closure(seed_graph, reference=None, moves=moves, seed_name="K6")  # type: ignore[arg-type]
    raise KeyError(seed)


@lru_cache(maxsize=None)
def _analysis(name: str) -> Analysis:
    return fixpoint(_graph(name))


def _graph(name: str) -> SimpleGraph:
    catalog = build_reference_catalog()
    key = normalize_name(name)
    if key not in catalog.members:
        raise HTTPException(status_code=404, detail=f"unknown catalog graph {name!r}")
    return catalog.members[key]


@lru_cache(maxsize=None)
def _report(name: str) -> dict:
    g = _graph(name)
    return report_record(build_graph_report(normalize_name(name), g, _analysis(name)))


def create_app() -> FastAPI:
    app = FastAPI(
        title="tsgkit",
        description="Automorphism obstructions and positive symmetry bounds "
        "for the Heawood family of spatial graphs",
    )

    @app.get("/graphs")
    def list_graphs() -> list[str]:
        catalog = build_reference_catalog()
        return catalog.names()

    @app.get("/graphs/{name}", response_model=schemas.GraphFile)
    def get_graph(name: str):
        g = _graph(name)
        return graph_to_record(g)

    @app.post("/graphs/validate", response_model=schemas.ValidatedGraph)
    def validate_graph(body: schemas.GraphFile):
        try:
            g = graph_from_record(body.model_dump())
        except GraphError as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        fp = fingerprint(g)
        catalog = build_reference_catalog()
        match = next(
            (n for n, h in catalog.members.items() if fingerprint(h) == fp), None
        )
        return schemas.ValidatedGraph(
            graph=graph_to_record(g), fingerprint=fp, catalog_match=match
        )

    @app.get("/family", response_model=schemas.FamilyResponse)
    def family(seed: str = "K7", moves: str = "all"):
        if seed not in ("K7", "K6"):
            raise HTTPException(status_code=404, detail=f"unknown seed {seed!r} (use K7 or K6)")
        if moves not in ("all", "nabla"):
            raise HTTPException(status_code=422, detail="moves must be 'all' or 'nabla'")
        fam = _family(seed, moves)
        return schemas.FamilyResponse(
            seed=fam.seed_name,
            moves=moves,
            member_count=len(fam.members),
            vertex_histogram=fam.vertex_histogram(),
            members=[
                schemas.GraphInfo(
                    name=n,
                    vertices=fam.members[n].n,
                    edges=fam.members[n].m,
                    fingerprint=fingerprint(fam.members[n]),
                    record=graph_to_record(fam.members[n], n),
                )
                for n in fam.names()
            ],
            provenance={
                n: [
                    schemas.MoveRecordModel(
                        kind=r.kind, site=list(r.site), new_label=r.new_label
                    )
                    for r in fam.provenance[n]
                ]
                for n in fam.names()
            },
            adjacency=sorted([s, t, k] for s, t, k in fam.adjacency),
        )

    @app.get("/graphs/{name}/aut", response_model=schemas.AutResponse)
    def aut(name: str):
        g = _graph(name)
        group = automorphism_group(g)
        identity = group.identity.images
        classes = [
            schemas.ClassSummary(
                rep=group.perm(min(cls)).cycle_string(),
                size=len(cls),
                order=group.perm(min(cls)).order(),
            )
            for cls in group.conjugacy_classes()
            if identity not in cls
        ]
        return schemas.AutResponse(
            graph=normalize_name(name),
            order=group.order,
            type=identify_group_type(group).display,
            class_count=len(classes),
            classes=classes,
        )

    @app.get("/graphs/{name}/analysis", response_model=schemas.AnalysisResponse)
    def analysis(name: str):
        rec = _report(name)
        rows = [
            schemas.AnalysisRow(
                rep=r["rep"],
                order=r["order"],
                class_size=r["class_size"],
                fixed_subgraph=r["fixed_subgraph"],
                embeds_in_s1=r["embeds_in_s1"],
                planar=r["planar"],
                swap_path=r["swap_path"],
            )
            for r in rec["rows"]
        ]
        return schemas.AnalysisResponse(graph=rec["name"], rows=rows)

    @app.get("/graphs/{name}/tsg", response_model=schemas.TsgResponse)
    def tsg(name: str, include_audit: bool = False):
        an = _analysis(name)
        rec = _report(name)
        group = an.group
        classes = []
        for cls in an.nontrivial_classes():
            rep = group.perm(min(cls))
            st = an.status(rep.images)
            classes.append(
                schemas.TsgClassRow(
                    rep=rep.cycle_string(),
                    order=rep.order(),
                    class_size=len(cls),
                    pos=schemas.SideStatus(
                        excluded=st.pos_excluded,
                        rule=st.pos.rule if st.pos else None,
                        witness=st.pos.witness if st.pos else None,
                        law=st.pos.law if st.pos else None,
                    ),
                    neg=schemas.SideStatus(
                        excluded=st.neg_excluded,
                        rule=st.neg.rule if st.neg else None,
                        witness=st.neg.witness if st.neg else None,
                        law=st.neg.law if st.neg else None,
                    ),
                )
            )
        audited = audit(an) if include_audit else None
        comparison = rec["comparison"]
        return schemas.TsgResponse(
            graph=rec["name"],
            aut_order=rec["aut"]["order"],
            aut_type=rec["aut"]["type"],
            classes=classes,
            positive_upper_bounds=rec["positive_upper_bounds"],
            maximal_bounds=rec["maximal_bounds"],
            chirality=rec["chirality"]["verdict"],
            chirality_neg_open=rec["chirality"]["neg_open_classes"],
            comparison=schemas.ComparisonModel(**comparison) if comparison else None,
            audited_traces=audited,
        )

    @app.get("/report", response_model=schemas.ReportResponse)
    def report(name: str | None = None):
        names = [normalize_name(name)] if name else list(table1())
        graphs = []
        mismatches = []
        divergences: list[str] = []
        for n in names:
            rec = _report(n)
            graphs.append(rec)
            divergences.extend(rec["divergences"])
            comp = rec["comparison"]
            if comp is None:
                continue
            if comp["verdict"] == "MISMATCH" or not comp["aut_order_match"]:
                mismatches.append(n)
        return schemas.ReportResponse(
            graphs=graphs,
            all_match=not mismatches,
            mismatches=mismatches,
            divergences=divergences,
        )

    @app.get("/export/family.dot", response_class=PlainTextResponse)
    def export_family(seed: str = "K7", moves: str = "all"):
        if seed not in ("K7", "K6"):
            raise HTTPException(status_code=404, detail=f"unknown seed {seed!r}")
        return family_dot(_family(seed, moves))

    @app.get("/export/graphs/{name}.dot", response_class=PlainTextResponse)
    def export_graph(name: str):
        g = _graph(name)
        return graph_dot(g, normalize_name(name))

    return app


app = create_app()
