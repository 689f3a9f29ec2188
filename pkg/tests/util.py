"""Shared helpers for the test suite: group corpora and the heavier
verification routines used by both the unit and acceptance tests."""

from fractions import Fraction

from bgroups.burnside import (
    deflate,
    gluck_idempotent,
    m_const,
    shift_hom,
    shifted_deflate,
    shifted_induce,
    shifted_inflate,
    shifted_restrict,
    shifted_transport,
    to_idempotent_basis,
)
from bgroups.groups import (
    Subgroup,
    alternating_4,
    dicyclic_3,
    dihedral_group,
    direct_product,
    make_cyclic,
    mask_of,
    quaternion_group,
    quotient,
    subgroup_embedding,
    symmetric_group,
)
from bgroups.ideals import ideal_eval
from bgroups.subgroups import enumerate_subgroups, normal_subgroups


def klein_four():
    return direct_product(make_cyclic(2), make_cyclic(2)).group


def elementary_eight():
    return direct_product(klein_four(), make_cyclic(2)).group


def order24_example():
    """C2 x (C3 : C4); generators a=12 (order 2), b=4 (order 3), c=1 (order 4)."""
    return direct_product(make_cyclic(2), dicyclic_3()).group


def idempotent_corpus():
    """The named test corpus for the idempotent property suite."""
    return (
        [make_cyclic(n) for n in range(1, 13)]
        + [
            klein_four(),
            elementary_eight(),
            dihedral_group(4),
            quaternion_group(),
            alternating_4(),
            symmetric_group(3),
            symmetric_group(4),
            dicyclic_3(),
            order24_example(),
        ]
    )


def deflation_closed_form_holds(G, K) -> bool:
    """Idempotent deflation identity over G x K: for every subgroup class L
    and every normal N of G, deflating e_L along (G ->> G/N) x Id gives
    lambda * m_{L, L n (N x 1)} * e_{image of L}, with lambda the ratio of
    normalizer indices.  Both sides computed independently."""
    P = direct_product(G, K)
    GK = P.group
    lat = enumerate_subgroups(GK)
    nc = lat.n_classes()
    es = [gluck_idempotent(GK, lat.class_rep(c)) for c in range(nc)]
    for N in normal_subgroups(G):
        Q, pi = quotient(G, N)
        PQ = direct_product(Q, K)
        latq = enumerate_subgroups(PQ.group)
        pis = shift_hom(pi, K)
        nmask = mask_of(n * K.order for n in N.elements())
        for c in range(nc):
            L = lat.class_rep(c)
            # both sides live in the transitive basis; compare there
            got = deflate(es[c], pis)
            j = subgroup_embedding(L)
            back = {j.image[i]: i for i in range(L.order)}
            LN = Subgroup(
                j.source, mask_of(back[x] for x in L.elements() if (nmask >> x) & 1)
            )
            mval = m_const(j.source, LN)
            lbar_mask = mask_of(pis.image[x] for x in L.elements())
            Lbar = Subgroup(PQ.group, lbar_mask)
            nq = latq.normalizer_order(latq.index_of[lbar_mask]) // Lbar.order
            ng = lat.normalizer_order(lat.index_of[L.mask]) // L.order
            lam = Fraction(nq, ng)
            expected = (lam * mval) * gluck_idempotent(PQ.group, Lbar)
            if got.coeffs != expected.coeffs:
                return False
    return True


def evaluation_stable_under_ops(bk, G, K) -> bool:
    """The ideal evaluation at G maps into the corresponding evaluation at
    the target of each of the five elementary operations (shifted by K)."""
    from bgroups.overk import isomorphisms

    P = direct_product(G, K)
    GK = P.group
    lat = enumerate_subgroups(GK)
    ev = set(ideal_eval(bk, G).basis_classes)
    glat = enumerate_subgroups(G)

    def in_span(elem, target_group):
        tv = to_idempotent_basis(elem)
        allowed = set(ideal_eval(bk, target_group).basis_classes)
        return set(tv.support()) <= allowed

    for c in ev:
        e = gluck_idempotent(GK, lat.class_rep(c))
        for hc in range(glat.n_classes()):
            H = glat.class_rep(hc)
            if not in_span(shifted_restrict(e, H, K), subgroup_embedding(H).source):
                return False
        for N in normal_subgroups(G):
            Q, pi = quotient(G, N)
            if not in_span(shifted_deflate(e, pi, K), Q):
                return False
        f = next(isomorphisms(G, G))
        if not in_span(shifted_transport(e, f, K), G):
            return False
    for hc in range(glat.n_classes()):
        H = glat.class_rep(hc)
        Hgrp = subgroup_embedding(H).source
        HK = direct_product(Hgrp, K).group
        hlat = enumerate_subgroups(HK)
        for c in ideal_eval(bk, Hgrp).basis_classes:
            e = gluck_idempotent(HK, hlat.class_rep(c))
            if not in_span(shifted_induce(e, H, K), G):
                return False
    for N in normal_subgroups(G):
        Q, pi = quotient(G, N)
        QK = direct_product(Q, K).group
        qlat = enumerate_subgroups(QK)
        for c in ideal_eval(bk, Q).basis_classes:
            e = gluck_idempotent(QK, qlat.class_rep(c))
            if not in_span(shifted_inflate(e, pi, K), G):
                return False
    return True
