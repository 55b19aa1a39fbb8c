"""Exact computations with restricted Lie algebras over finite fields and the
rank, equal-images and degree invariants of their modules."""

from __future__ import annotations

from .catalog import builtin, cartan_involution, cbc8, elementary, heisenberg, sl2, sl2s, witt
from .field import GF
from .liealg import AlgebraError, Automorphism, LieAlgebra
from .linalg import Subspace
from .modules import (
    baby_verma,
    dual,
    heart,
    heart_selfdual,
    iso_test,
    quotient,
    radical_module,
    simple_L,
    socle,
    tensor,
    twist,
)
from .rankdeg import (
    JordanType,
    NonConstantRank,
    degree,
    degree_function,
    eip_check,
    generic_kernel,
    jordan_type,
    mod_j_membership,
    rank_profile,
    twist_degree_identity,
)
from .rep import Module, ModuleError, verify_module
from .u0 import U0Algebra, U0Element, induced_module, regular_module
from .varieties import admissible, elementary_planes, exp_ad, nullcone_points, sandwich_lie_subset_check, stratum_points

__version__ = "0.1.0"

__all__ = [
    "AlgebraError",
    "Automorphism",
    "GF",
    "JordanType",
    "LieAlgebra",
    "Module",
    "ModuleError",
    "NonConstantRank",
    "Subspace",
    "U0Algebra",
    "U0Element",
    "admissible",
    "baby_verma",
    "builtin",
    "cartan_involution",
    "cbc8",
    "degree",
    "degree_function",
    "dual",
    "eip_check",
    "elementary",
    "elementary_planes",
    "exp_ad",
    "generic_kernel",
    "heart",
    "heart_selfdual",
    "heisenberg",
    "induced_module",
    "iso_test",
    "jordan_type",
    "mod_j_membership",
    "nullcone_points",
    "quotient",
    "radical_module",
    "rank_profile",
    "regular_module",
    "sandwich_lie_subset_check",
    "simple_L",
    "sl2",
    "sl2s",
    "socle",
    "stratum_points",
    "tensor",
    "twist",
    "twist_degree_identity",
    "verify_module",
    "witt",
]
