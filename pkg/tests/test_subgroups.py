"""Subgroup lattices, Moebius function, table of marks, complements.

The enumeration is cross-checked against a brute-force oracle (closure of
every generating set of size <= 3, saturated), and the marks table against
the count |{g : g^-1 X g <= Y}| / |Y|.
"""

from fractions import Fraction

import pytest

from bgroups.groups import (
    Group,
    alternating_4,
    close_subset,
    dicyclic_3,
    dihedral_group,
    direct_product,
    full_subgroup,
    mask_of,
    make_cyclic,
    quaternion_group,
    subgroup_generated,
    symmetric_group,
    trivial_subgroup,
)
from bgroups.subgroups import (
    OrderBoundExceeded,
    count_complements,
    enumerate_subgroups,
    is_normal_in,
    m_constant,
    normal_subgroups,
)

ORACLE_GROUPS = [
    make_cyclic(12),
    direct_product(make_cyclic(2), make_cyclic(2)).group,
    direct_product(
        direct_product(make_cyclic(2), make_cyclic(2)).group, make_cyclic(2)
    ).group,
    symmetric_group(3),
    dihedral_group(4),
    quaternion_group(),
    alternating_4(),
    dicyclic_3(),
    symmetric_group(4),
    direct_product(make_cyclic(2), dicyclic_3()).group,
]


def brute_force_subgroups(G: Group) -> set[int]:
    """Close every subset of at most 3 generators, then saturate by joins."""
    found = {mask_of(close_subset(G, gens))
             for gens in [()]
             + [(a,) for a in range(G.order)]
             + [(a, b) for a in range(G.order) for b in range(a)]
             + [(a, b, c) for a in range(G.order)
                for b in range(a) for c in range(b)]}
    changed = True
    while changed:
        changed = False
        for m1 in list(found):
            for m2 in list(found):
                join = mask_of(close_subset(
                    G, [i for i in range(G.order) if ((m1 | m2) >> i) & 1]))
                if join not in found:
                    found.add(join)
                    changed = True
    return found


@pytest.mark.parametrize("G", ORACLE_GROUPS, ids=lambda g: g.label)
def test_enumeration_matches_brute_force(G):
    lat = enumerate_subgroups(G)
    assert {S.mask for S in lat.subgroups} == brute_force_subgroups(G)


def test_counts():
    assert len(enumerate_subgroups(make_cyclic(5))) == 2
    latv = enumerate_subgroups(direct_product(make_cyclic(2), make_cyclic(2)).group)
    assert len(latv) == 5 and latv.n_classes() == 5
    lat3 = enumerate_subgroups(symmetric_group(3))
    assert len(lat3) == 6 and lat3.n_classes() == 4


def test_contains_trivial_and_full_and_is_sorted():
    for G in ORACLE_GROUPS:
        lat = enumerate_subgroups(G)
        assert lat.subgroups[0].is_trivial()
        assert lat.subgroups[-1].is_full()
        keys = [(S.order, S.mask) for S in lat.subgroups]
        assert keys == sorted(keys)
        for S in lat.subgroups:
            assert G.order % S.order == 0


def test_closed_under_conjugation():
    for G in ORACLE_GROUPS:
        lat = enumerate_subgroups(G)
        masks = {S.mask for S in lat.subgroups}
        for S in lat.subgroups:
            for g in range(G.order):
                assert lat.conjugate_mask(S.mask, g) in masks


def test_order_bound():
    with pytest.raises(OrderBoundExceeded):
        enumerate_subgroups(make_cyclic(6), order_bound=4)


# ---------------------------------------------------------------------------
# Moebius function


def test_moebius_reflexive_and_chain():
    lat = enumerate_subgroups(make_cyclic(5))
    assert lat.moebius(1, 1) == 1
    assert lat.moebius(0, 1) == -1


def test_moebius_klein_four():
    latv = enumerate_subgroups(direct_product(make_cyclic(2), make_cyclic(2)).group)
    assert latv.moebius(0, len(latv) - 1) == 2


@pytest.mark.parametrize("G", ORACLE_GROUPS, ids=lambda g: g.label)
def test_moebius_recursion_identity(G):
    lat = enumerate_subgroups(G)
    n = len(lat)
    for j in range(n):
        for i in range(n):
            if not lat.leq(i, j):
                continue
            total = sum(lat.moebius(z, j) for z in lat.subgroups_between(i, j))
            assert total == (1 if i == j else 0)


# ---------------------------------------------------------------------------
# table of marks


def brute_mark(lat, cx, cy) -> int:
    """|{g in G : g^-1 X g <= Y}| / |Y| for class reps X, Y."""
    G = lat.parent
    X, Y = lat.class_rep(cx), lat.class_rep(cy)
    cnt = sum(
        1 for g in range(G.order)
        if lat.conjugate_mask(X.mask, G.inverse[g]) & Y.mask
        == lat.conjugate_mask(X.mask, G.inverse[g])
    )
    assert cnt % Y.order == 0
    return cnt // Y.order


def test_marks_trivial_group():
    assert enumerate_subgroups(make_cyclic(1)).marks() == [[1]]


def test_marks_c_p_free_column():
    lat = enumerate_subgroups(make_cyclic(5))
    M = lat.marks()
    assert M[0][0] == 5 and M[1][0] == 0 and M[1][1] == 1


def test_marks_s3_c2_entry():
    lat = enumerate_subgroups(symmetric_group(3))
    c2 = next(c for c in range(lat.n_classes()) if lat.class_rep(c).order == 2)
    assert lat.marks()[c2][c2] == 1


@pytest.mark.parametrize("G", ORACLE_GROUPS, ids=lambda g: g.label)
def test_marks_against_conjugation_oracle(G):
    lat = enumerate_subgroups(G)
    M = lat.marks()
    nc = lat.n_classes()
    for cx in range(nc):
        for cy in range(nc):
            assert M[cx][cy] == brute_mark(lat, cx, cy)


@pytest.mark.parametrize("G", ORACLE_GROUPS, ids=lambda g: g.label)
def test_marks_triangular_with_index_row(G):
    lat = enumerate_subgroups(G)
    M = lat.marks()
    nc = lat.n_classes()
    for cx in range(nc):
        assert M[cx][cx] > 0
        # mark of [G/Y] at the trivial subgroup is the index of Y
        assert M[0][cx] == G.order // lat.class_rep(cx).order
        for cy in range(nc):
            if M[cx][cy] != 0:
                assert lat.class_rep(cx).order <= lat.class_rep(cy).order


# ---------------------------------------------------------------------------
# normal subgroups and complements


def test_normal_subgroups_abelian():
    G = make_cyclic(12)
    assert len(normal_subgroups(G)) == len(enumerate_subgroups(G))


def test_normal_subgroups_s3():
    orders = sorted(N.order for N in normal_subgroups(symmetric_group(3)))
    assert orders == [1, 3, 6]


def test_central_subgroups_of_order24_example_are_normal():
    L = direct_product(make_cyclic(2), dicyclic_3()).group
    a, c = 12, 1
    c2 = L.mul(c, c)
    ac2 = L.mul(a, c2)
    norm_masks = {N.mask for N in normal_subgroups(L)}
    for z in (c2, ac2):
        S = subgroup_generated(L, [z])
        assert S.order == 2 and S.mask in norm_masks
        # central: commutes with everything
        assert all(L.mul(z, g) == L.mul(g, z) for g in range(L.order))


def test_is_normal_in_matches_class_size():
    lat = enumerate_subgroups(symmetric_group(4))
    for i, S in enumerate(lat.subgroups):
        singleton = sum(
            1 for j in range(len(lat)) if lat.conj_class[j] == lat.conj_class[i]
        ) == 1
        assert is_normal_in(lat, i) == singleton


def test_count_complements():
    V = direct_product(make_cyclic(2), make_cyclic(2)).group
    Z = subgroup_generated(V, [1])
    assert count_complements(V, Z) == 2
    C4 = make_cyclic(4)
    assert count_complements(C4, subgroup_generated(C4, [2])) == 0
    G = symmetric_group(3)
    assert count_complements(G, trivial_subgroup(G)) == 1


# ---------------------------------------------------------------------------
# m-constants at the lattice level


def test_m_constant_examples():
    C3 = make_cyclic(3)
    lat = enumerate_subgroups(C3)
    assert m_constant(lat, full_subgroup(C3), trivial_subgroup(C3)) == 1
    assert m_constant(lat, full_subgroup(C3), full_subgroup(C3)) == Fraction(2, 3)
    V = direct_product(make_cyclic(2), make_cyclic(2)).group
    latv = enumerate_subgroups(V)
    assert m_constant(latv, full_subgroup(V), subgroup_generated(V, [1])) == 0
    assert m_constant(latv, full_subgroup(V), full_subgroup(V)) == 0
