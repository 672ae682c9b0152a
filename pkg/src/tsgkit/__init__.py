"""tsgkit: automorphism obstructions and positive symmetry bounds for the
Heawood family of spatial graphs."""

from .canon import CanonicalForm, are_isomorphic, canonical_form, find_isomorphism, fingerprint
from .catalog import HEAWOOD_NAMES, build_reference_catalog, catalog_graph, normalize_name
from .engine import (
    Analysis,
    ChiralityCertificate,
    UpperBounds,
    audit,
    fixpoint,
    intrinsically_chiral,
    positive_upper_bounds,
)
from .fixedsub import FixedSubgraph, embeds_in_s1, f_is_planar, fixed_subgraph, point_count
from .graphs import GraphError, SimpleGraph, complete_graph, degree_sequence, induced_subgraph
from .grouptypes import GroupType, identify_group_type
from .moves import FamilyCatalog, MoveError, MoveRecord, closure, nabla_y, y_nabla
from .perms import Perm, PermGroup, automorphism_group, generated_subgroup, subgroups_within

__version__ = "0.1.0"

__all__ = [
    "Analysis",
    "CanonicalForm",
    "ChiralityCertificate",
    "FamilyCatalog",
    "FixedSubgraph",
    "GraphError",
    "GroupType",
    "HEAWOOD_NAMES",
    "MoveError",
    "MoveRecord",
    "Perm",
    "PermGroup",
    "SimpleGraph",
    "UpperBounds",
    "are_isomorphic",
    "audit",
    "automorphism_group",
    "build_reference_catalog",
    "canonical_form",
    "catalog_graph",
    "closure",
    "complete_graph",
    "degree_sequence",
    "embeds_in_s1",
    "f_is_planar",
    "find_isomorphism",
    "fingerprint",
    "fixed_subgraph",
    "fixpoint",
    "generated_subgroup",
    "identify_group_type",
    "induced_subgraph",
    "intrinsically_chiral",
    "nabla_y",
    "normalize_name",
    "point_count",
    "positive_upper_bounds",
    "subgroups_within",
    "y_nabla",
]
