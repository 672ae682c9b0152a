"""Pydantic request/response models for the service."""

from __future__ import annotations

from pydantic import BaseModel, Field


class GraphFile(BaseModel):
    name: str = ""
    vertices: list[str]
    edges: list[list[str]]


class GraphInfo(BaseModel):
    name: str
    vertices: int
    edges: int
    fingerprint: str
    record: GraphFile | None = None


class ValidatedGraph(BaseModel):
    graph: GraphFile
    fingerprint: str
    catalog_match: str | None = None


class MoveRecordModel(BaseModel):
    kind: str
    site: list[str]
    new_label: str | None = None


class FamilyResponse(BaseModel):
    seed: str
    moves: str
    member_count: int
    vertex_histogram: dict[int, int]
    members: list[GraphInfo]
    provenance: dict[str, list[MoveRecordModel]]
    adjacency: list[list[str]] = Field(description="(source, target, move kind) triples")


class ClassSummary(BaseModel):
    rep: str
    size: int
    order: int


class AutResponse(BaseModel):
    graph: str
    order: int
    type: str
    class_count: int
    classes: list[ClassSummary]


class AnalysisRow(BaseModel):
    rep: str
    order: int
    class_size: int
    fixed_subgraph: str
    embeds_in_s1: bool
    planar: bool
    swap_path: str


class AnalysisResponse(BaseModel):
    graph: str
    rows: list[AnalysisRow]


class SideStatus(BaseModel):
    excluded: bool
    rule: str | None = None
    witness: dict | None = None
    law: str | None = None


class TsgClassRow(BaseModel):
    rep: str
    order: int
    class_size: int
    pos: SideStatus
    neg: SideStatus


class ComparisonModel(BaseModel):
    verdict: str
    expected: list[str]
    computed: list[str]
    excess: list[str]
    missing: list[str]
    aut_order_expected: int
    aut_order_match: bool
    aut_name_expected: str


class TsgResponse(BaseModel):
    graph: str
    aut_order: int
    aut_type: str
    classes: list[TsgClassRow]
    positive_upper_bounds: list[str]
    maximal_bounds: list[str]
    chirality: str
    chirality_neg_open: list[str]
    comparison: ComparisonModel | None = None
    audited_traces: int | None = None


class ReportResponse(BaseModel):
    graphs: list[dict]
    all_match: bool
    mismatches: list[str]
    divergences: list[str]
