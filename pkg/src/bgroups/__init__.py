"""Exact computations with Burnside rings and relative B-groups."""

from .groups import (
    Group,
    GroupError,
    Homomorphism,
    Subgroup,
    direct_product,
    make_cyclic,
    quotient,
    semidirect_product,
)
from .overk import GroupOverK, beta_k, is_bk_group
from .burnside import BurnsideElement, gluck_idempotent, m_const

__all__ = [
    "Group",
    "GroupError",
    "Homomorphism",
    "Subgroup",
    "direct_product",
    "make_cyclic",
    "quotient",
    "semidirect_product",
    "GroupOverK",
    "beta_k",
    "is_bk_group",
    "BurnsideElement",
    "gluck_idempotent",
    "m_const",
]
