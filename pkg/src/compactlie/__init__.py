"""Exact root-system, Weyl-group, character and tensor-product computations for compact simple Lie groups,
plus numerical harmonic analysis on SU(2) and U(n)."""

from .charmult import (
    FormalCharacter,
    character_product,
    dual_weight,
    eval_character,
    formal_character,
    kostant_partition,
    mult_kostant,
    weyl_dim,
)
from .errors import DomainError, LieError, ParseError, ResourceError, SingularityError
from .rootsys import (
    DynkinType,
    LatticeClass,
    RootSystem,
    build_root_system,
    center_structure,
    enumerate_character_lattices,
    fundamental_group_order,
    root_system,
    root_to_weight_coords,
)
from .tensor import Decomposition, decompose_character, tensor_decompose
from .weyl import DominantProjection, OrbitResult, orbit, simple_reflection, to_dominant, weyl_order

__version__ = "0.1.0"

__all__ = [
    "Decomposition",
    "DominantProjection",
    "DomainError",
    "DynkinType",
    "FormalCharacter",
    "LatticeClass",
    "LieError",
    "OrbitResult",
    "ParseError",
    "ResourceError",
    "RootSystem",
    "SingularityError",
    "build_root_system",
    "center_structure",
    "character_product",
    "decompose_character",
    "dual_weight",
    "enumerate_character_lattices",
    "eval_character",
    "formal_character",
    "fundamental_group_order",
    "kostant_partition",
    "mult_kostant",
    "orbit",
    "root_system",
    "root_to_weight_coords",
    "simple_reflection",
    "tensor_decompose",
    "to_dominant",
    "weyl_dim",
    "weyl_order",
]
