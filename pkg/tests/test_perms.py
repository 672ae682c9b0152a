from __future__ import annotations

import pytest

from oracles import brute_force_automorphism_count, brute_force_subgroup_sets
from tsgkit.perms import (
    Perm,
    PermError,
    automorphism_group,
    generated_subgroup,
    subgroups_within,
)


def perm(catalog, name: str, cycles: str) -> Perm:
    return Perm.from_cycles(catalog.members[name].vertices, cycles)


def test_cycle_parse_and_format(catalog):
    h8 = catalog.members["H8"]
    p = Perm.from_cycles(h8.vertices, "(bcd)(fgh)")
    assert p("b") == "c" and p("d") == "b" and p("f") == "g" and p("a") == "a"
    assert p.cycle_string() == "(bcd)(fgh)"
    assert Perm.from_cycles(h8.vertices, "id").is_identity()
    with pytest.raises(PermError):
        Perm.from_cycles(h8.vertices, "(bz)")
    with pytest.raises(PermError):
        Perm.from_cycles(h8.vertices, "(bc)(cd)")


def test_composition_convention(catalog):
    # (p * q)(x) = p(q(x)): the right factor acts first
    h8 = catalog.members["H8"]
    alpha = Perm.from_cycles(h8.vertices, "(bcd)")
    beta = Perm.from_cycles(h8.vertices, "(bc)")
    assert (alpha * beta).cycle_string() == "(bd)"
    gamma = Perm.from_cycles(h8.vertices, "(ef)")
    delta = Perm.from_cycles(h8.vertices, "(fgh)")
    assert (gamma * delta).cycle_string() == "(efgh)"


def test_h8_generator_relations(catalog):
    # alpha, beta generate one factor with a^3 = b^2 = (ab)^2 = 1;
    # gamma, delta the other with g^2 = d^3 = (gd)^4 = 1
    h8 = catalog.members["H8"]
    a = Perm.from_cycles(h8.vertices, "(bcd)")
    b = Perm.from_cycles(h8.vertices, "(bc)")
    g = Perm.from_cycles(h8.vertices, "(ef)")
    d = Perm.from_cycles(h8.vertices, "(fgh)")
    assert (a**3).is_identity() and (b**2).is_identity() and ((a * b) ** 2).is_identity()
    assert (g**2).is_identity() and (d**3).is_identity() and ((g * d) ** 4).is_identity()


def test_order_and_power_examples(catalog):
    assert perm(catalog, "H8", "(bcd)(fgh)").order() == 3
    assert perm(catalog, "H9", "(ai)(becfdg)").order() == 6
    p = perm(catalog, "H9", "(ai)(becfdg)")
    assert (p**0).is_identity()
    assert (p**-1) * p == Perm.identity(p.domain)
    assert (p**7) == p


def test_automorphism_orders_match_brute_force(catalog):
    for name in ("K7", "H8", "H9", "F9", "N9"):
        g = catalog.members[name]
        assert automorphism_group(g).order == brute_force_automorphism_count(g), name


def test_every_enumerated_automorphism_preserves_edges(catalog):
    for name, g in catalog.members.items():
        group = automorphism_group(g)
        assert all(p.is_automorphism_of(g) for p in group.perms()), name


def test_conjugacy_class_examples(catalog):
    f10 = automorphism_group(catalog.members["F10"])
    classes = [c for c in f10.conjugacy_classes() if len(c) > 1 or f10.identity.images not in c]
    sizes = sorted(len(c) for c in classes)
    assert sizes == [1, 3, 3, 6, 6, 6, 6, 8, 8]
    assert sum(sizes) == 47
    h8 = automorphism_group(catalog.members["H8"])
    assert len(h8.conjugacy_classes()) == 15  # 14 nontrivial + identity
    trivial = generated_subgroup(catalog.members["H8"].vertices, [])
    assert len(trivial.conjugacy_classes()) == 1


def test_conjugation_preserves_cycle_type_and_order(catalog):
    group = automorphism_group(catalog.members["F10"])
    for cls in group.conjugacy_classes():
        types = {group.perm(m).cycle_type() for m in cls}
        orders = {group.perm(m).order() for m in cls}
        assert len(types) == 1 and len(orders) == 1


def test_generated_subgroup_examples(catalog):
    h8 = catalog.members["H8"]
    z3 = generated_subgroup(h8.vertices, [Perm.from_cycles(h8.vertices, "(bcd)(fgh)")])
    assert z3.order == 3
    np12 = catalog.members["Np12"]
    alpha = Perm.from_cycles(np12.vertices, "(ackemd)(blgjhi)")
    beta = Perm.from_cycles(np12.vertices, "(cd)(li)(hg)(mk)")
    full = generated_subgroup(np12.vertices, [alpha, beta])
    assert full.order == 12
    assert full == automorphism_group(np12)
    assert generated_subgroup(h8.vertices, []).order == 1


def test_subgroups_within_h10_example(catalog):
    # the two surviving reflections may not be combined: their product is the
    # excluded square of the 4-cycle
    h10 = catalog.members["H10"]
    group = automorphism_group(h10)
    ab = Perm.from_cycles(h10.vertices, "(ai)(be)(cg)(df)")
    a3b = Perm.from_cycles(h10.vertices, "(ai)(be)(cf)(dg)")
    allowed = [group.identity, ab, a3b]
    subs = subgroups_within(group, allowed)
    assert sorted(h.order for h in subs) == [1, 2, 2]


def test_subgroups_within_matches_brute_force(catalog):
    for name in ("C11", "H10", "E10", "Np11"):
        group = automorphism_group(catalog.members[name])
        subs = subgroups_within(group, group.perms())
        assert {h.elements for h in subs} == brute_force_subgroup_sets(group.elements), name


def test_subgroups_within_no_klein_group_from_side_swaps(catalog):
    # products of two side-swapping involutions preserve the sides, so no
    # Klein four-group lives inside that class
    h9 = catalog.members["H9"]
    group = automorphism_group(h9)
    phi = Perm.from_cycles(h9.vertices, "(ai)(be)(cf)(dg)")
    phi_class = group.class_of(phi.images)
    assert len(phi_class) == 6
    allowed = {group.identity.images} | set(phi_class)
    subs = subgroups_within(group, [group.perm(im) for im in allowed])
    assert max(h.order for h in subs) == 2


def test_subgroups_within_guards(catalog):
    group = automorphism_group(catalog.members["K7"])
    with pytest.raises(PermError, match="refused"):
        subgroups_within(group, group.perms())
    with pytest.raises(PermError, match="identity"):
        subgroups_within(group, [group.perm(group.sorted_elements()[1])])


def test_subgroup_closure_verified(catalog):
    group = automorphism_group(catalog.members["N9"])
    subs = subgroups_within(group, group.perms())
    for h in subs:
        for x in h.elements:
            for y in h.elements:
                from tsgkit.perms import compose_images

                assert compose_images(x, y) in h.elements
