"""Groups over a fixed group K: morphisms up to inner automorphisms of K,
quotient and isomorphism testing, B_K-group detection, beta_K, and the
classification of p-persistent B_K-groups.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .groups import (
    Group,
    GroupError,
    Homomorphism,
    Subgroup,
    direct_product,
    inner_automorphisms,
    kernel,
    make_cyclic,
    mask_of,
    o_p_subgroup,
    quotient,
    trivial_group,
)
from .subgroups import enumerate_subgroups, m_constant, normal_subgroups


@dataclass(frozen=True)
class GroupOverK:
    L: Group
    phi: Homomorphism  # L -> K
    label: str = ""

    def __post_init__(self):
        if self.phi.source != self.L:
            raise GroupError("phi must start at L")

    @property
    def K(self) -> Group:
        return self.phi.target

    def __repr__(self):
        return f"GroupOverK({self.label or self.L.label}, |L|={self.L.order})"


def trivial_over(K: Group) -> GroupOverK:
    one = trivial_group()
    return GroupOverK(one, Homomorphism(one, K, (0,)), "1")


def embedding_over(K: Group, H: Subgroup) -> GroupOverK:
    """(H, j_H): a subgroup of K with its inclusion map."""
    from .groups import subgroup_embedding

    j = subgroup_embedding(H)
    return GroupOverK(j.source, j, f"({j.source.label},incl)")


# ---------------------------------------------------------------------------
# plain-group homomorphism / isomorphism machinery


def _word_plan(G: Group) -> tuple[tuple[int, ...], list[tuple[int, int]]]:
    """Greedy generators plus, per element, a recipe (prev_element, gen_index)
    so any generator-image assignment extends to a full candidate map."""
    gens = G.generating_sequence()
    plan: list[tuple[int, int]] = [(-1, -1)] * G.order  # identity needs none
    known = [0]
    seen = {0}
    t = G.table
    changed = True
    while changed:
        changed = False
        for x in list(known):
            for gi, g in enumerate(gens):
                y = t[x][g]
                if y not in seen:
                    seen.add(y)
                    plan[y] = (x, gi)
                    known.append(y)
                    changed = True
    return gens, plan


@lru_cache(maxsize=None)
def _word_plan_cached(G: Group):
    return _word_plan(G)


def _extend_map(G: Group, H: Group, gens, plan, images) -> tuple[int, ...] | None:
    """Complete a generator-image assignment to a map G -> H, or None if the
    result is not a homomorphism."""
    out = [-1] * G.order
    out[0] = 0
    order = sorted(range(G.order), key=lambda x: 0 if x == 0 else 1)
    # fill by repeatedly applying recipes (plan is acyclic from identity)
    pending = [x for x in range(1, G.order)]
    while pending:
        progressed = False
        rest = []
        for x in pending:
            px, gi = plan[x]
            if out[px] >= 0:
                out[x] = H.table[out[px]][images[gi]]
                progressed = True
            else:
                rest.append(x)
        pending = rest
        if not progressed and pending:
            raise GroupError("broken word plan")  # unreachable
    t, s = G.table, H.table
    for a in range(G.order):
        for b in range(G.order):
            if out[t[a][b]] != s[out[a]][out[b]]:
                return None
    return tuple(out)


def homomorphisms(G: Group, H: Group) -> list[Homomorphism]:
    """All homomorphisms G -> H (brute force over generator images)."""
    gens, plan = _word_plan_cached(G)
    horders = [H.element_order(h) for h in range(H.order)]
    out = []
    seen = set()
    candidates_per_gen = [
        [h for h in range(H.order) if G.element_order(g) % horders[h] == 0]
        for g in gens
    ]
    for images in itertools.product(*candidates_per_gen):
        m = _extend_map(G, H, gens, plan, images)
        if m is not None and m not in seen:
            seen.add(m)
            out.append(Homomorphism(G, H, m))
    return out


def isomorphisms(G: Group, H: Group):
    """Yield all isomorphisms G -> H."""
    if G.order != H.order:
        return
    if sorted(G.element_orders()) != sorted(H.element_orders()):
        return
    gens, plan = _word_plan_cached(G)
    horders = [H.element_order(h) for h in range(H.order)]
    candidates_per_gen = [
        [h for h in range(H.order) if horders[h] == G.element_order(g)] for g in gens
    ]
    for images in itertools.product(*candidates_per_gen):
        m = _extend_map(G, H, gens, plan, images)
        if m is not None and len(set(m)) == G.order:
            yield Homomorphism(G, H, m)


def is_isomorphic(G: Group, H: Group) -> bool:
    return next(iter(isomorphisms(G, H)), None) is not None


# ---------------------------------------------------------------------------
# the category over K


def is_morphism_over_k(f: Homomorphism, x: GroupOverK, y: GroupOverK) -> bool:
    """True iff some inner automorphism i of K satisfies i . phi_x = phi_y . f."""
    if f.source != x.L or f.target != y.L or x.K != y.K:
        raise GroupError("mismatched morphism data")
    lhs_targets = [y.phi.image[f.image[a]] for a in range(x.L.order)]
    for i in inner_automorphisms(x.K):
        if all(i.image[x.phi.image[a]] == lhs_targets[a] for a in range(x.L.order)):
            return True
    return False


def is_isomorphic_over_k(x: GroupOverK, y: GroupOverK) -> bool:
    if x.K != y.K:
        raise GroupError("different K")
    if x.L.order != y.L.order:
        return False
    if sorted(x.L.element_orders()) != sorted(y.L.element_orders()):
        return False
    inners = inner_automorphisms(x.K)
    for f in isomorphisms(x.L, y.L):
        for i in inners:
            if all(
                i.image[x.phi.image[a]] == y.phi.image[f.image[a]]
                for a in range(x.L.order)
            ):
                return True
    return False


def quotient_over_k(x: GroupOverK, N: Subgroup) -> GroupOverK:
    """(L/N, phi/N) for a normal N <= Ker phi."""
    if N.mask & kernel(x.phi).mask != N.mask:
        raise GroupError("N must be contained in Ker phi")
    Q, pi = quotient(x.L, N)
    # phi factors through pi: pick any preimage per coset
    pre = [-1] * Q.order
    for a in range(x.L.order):
        if pre[pi.image[a]] < 0:
            pre[pi.image[a]] = a
    phi_bar = Homomorphism(Q, x.K, tuple(x.phi.image[pre[q]] for q in range(Q.order)))
    return GroupOverK(Q, phi_bar, f"{x.label}/N{N.order}" if x.label else "")


def is_quotient_over_k(x: GroupOverK, y: GroupOverK) -> bool:
    """True iff y is a quotient of x in the category over K."""
    if x.K != y.K:
        raise GroupError("different K")
    if x.L.order % y.L.order != 0:
        return False
    ker = kernel(x.phi)
    target = x.L.order // y.L.order
    for N in normal_subgroups(x.L):
        if N.order != target or N.mask & ker.mask != N.mask:
            continue
        if is_isomorphic_over_k(quotient_over_k(x, N), y):
            return True
    return False


def graph_subgroup(x: GroupOverK) -> Subgroup:
    """L_phi = {(l, phi(l))} inside the canonical product L x K."""
    P = direct_product(x.L, x.K)
    m = x.K.order
    return Subgroup(P.group, mask_of(l * m + x.phi.image[l] for l in range(x.L.order)))


def p_graph_subgroup(x: GroupOverK, p: int) -> Subgroup:
    """Image of l -> (l O^p(L), phi(l)) inside L^[p] x K."""
    O = o_p_subgroup(x.L, p)
    Q, pi = quotient(x.L, O)
    P = direct_product(Q, x.K)
    m = x.K.order
    return Subgroup(
        P.group,
        mask_of(pi.image[l] * m + x.phi.image[l] for l in range(x.L.order)),
    )


def pair_from_subgroup(X: Subgroup, p2: Homomorphism) -> GroupOverK:
    """(X, p2|_X) as a group over K, for X <= G x K and the projection p2."""
    from .groups import subgroup_embedding

    j = subgroup_embedding(X)
    phi = p2.compose(j)
    return GroupOverK(j.source, phi)


# ---------------------------------------------------------------------------
# B_K-groups


def _normal_in_kernel(x: GroupOverK) -> list[Subgroup]:
    ker = kernel(x.phi)
    return [N for N in normal_subgroups(x.L) if N.mask & ker.mask == N.mask]


def is_bk_group(x: GroupOverK) -> bool:
    """m_{L,N} = 0 for every nontrivial normal N <= Ker phi."""
    lat = enumerate_subgroups(x.L)
    full = lat.subgroups[-1]
    for N in _normal_in_kernel(x):
        if N.mask != 1 and m_constant(lat, full, N) != 0:
            return False
    return True


def beta_k(x: GroupOverK) -> GroupOverK:
    """Largest B_K-group quotient: (L/Q, phi/Q) for Q <= Ker phi normal of
    maximal order with m_{L,Q} != 0 (deterministic tie-break)."""
    lat = enumerate_subgroups(x.L)
    full = lat.subgroups[-1]
    best: Subgroup | None = None
    for N in _normal_in_kernel(x):  # canonical order: (size, mask)
        if m_constant(lat, full, N) != 0 and (best is None or N.order > best.order):
            best = N
    assert best is not None  # N = 1 always has m = 1
    return quotient_over_k(x, best)


def is_p_persistent(x: GroupOverK, p: int) -> bool:
    """m_{L, O^p(L) n Ker phi} != 0."""
    O = o_p_subgroup(x.L, p)
    ker = kernel(x.phi)
    N = Subgroup(x.L, O.mask & ker.mask)
    lat = enumerate_subgroups(x.L)
    return m_constant(lat, lat.subgroups[-1], N) != 0


CASE_EMBEDDING = "embedding"
CASE_CP = "cp_extension"
CASE_CP2 = "cp2_extension"


def _p_part_quotient(H: Group, p: int) -> Group:
    Q, _ = quotient(H, o_p_subgroup(H, p))
    return Q


def classify_p_persistent_bk(K: Group, p: int) -> list[tuple[GroupOverK, str]]:
    """All p-persistent B_K-group classes, one per structural case:

    for each subgroup class H of K, emit (H, j_H); additionally
    (C_p x H, j_H . proj) when H^[p] is cyclic nontrivial, and
    (C_p x C_p x H, j_H . proj) when H^[p] is trivial.
    """
    lat = enumerate_subgroups(K)
    out: list[tuple[GroupOverK, str]] = []
    Cp = make_cyclic(p)
    for c in range(lat.n_classes()):
        H = lat.class_rep(c)
        x = embedding_over(K, H)
        out.append((x, CASE_EMBEDDING))
        Hp = _p_part_quotient(x.L, p)
        if Hp.order > 1 and Hp.is_cyclic():
            P = direct_product(Cp, x.L)
            out.append(
                (GroupOverK(P.group, x.phi.compose(P.proj2), f"Cpx{x.label}"), CASE_CP)
            )
        elif Hp.order == 1:
            P1 = direct_product(Cp, Cp)
            P = direct_product(P1.group, x.L)
            out.append(
                (GroupOverK(P.group, x.phi.compose(P.proj2), f"Cp2x{x.label}"), CASE_CP2)
            )
    return out


# ---------------------------------------------------------------------------
# exhaustive over-K class enumeration (bounded order)


def groups_over_k(L: Group, K: Group) -> list[GroupOverK]:
    """All (L, phi) for the given L, one per distinct phi."""
    return [GroupOverK(L, f) for f in homomorphisms(L, K)]


def dedupe_over_k(xs: list[GroupOverK]) -> list[GroupOverK]:
    """Representatives of over-K isomorphism classes, first-seen order."""
    reps: list[GroupOverK] = []
    for x in xs:
        if not any(is_isomorphic_over_k(x, r) for r in reps):
            reps.append(x)
    return reps
