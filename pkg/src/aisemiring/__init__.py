"""Finite ai-semirings: axioms, identities, congruences, Green's relations,
flat extensions and small-catalog enumeration."""
from .algebra import FiniteGroup, FiniteSemiring, are_isomorphic, generated_subalgebras, validate_axioms
from .congruences import all_congruences, is_congruence_simple, is_subdirectly_irreducible, monolith, principal_congruence
from .constructions import boolean_lattice, cyclic_group, direct_product, flat_extension, heisenberg_group, quaternion_group
from .enumerator import build_catalog, enumerate_algebras
from .errors import Falsification, PreconditionError, ResourceLimitError, StructureError
from .partition import Partition
from .terms import m_variety, member_of, parse_identity, satisfies, sr

__all__ = [
    "FiniteGroup",
    "FiniteSemiring",
    "are_isomorphic",
    "generated_subalgebras",
    "validate_axioms",
    "all_congruences",
    "is_congruence_simple",
    "is_subdirectly_irreducible",
    "monolith",
    "principal_congruence",
    "boolean_lattice",
    "cyclic_group",
    "direct_product",
    "flat_extension",
    "heisenberg_group",
    "quaternion_group",
    "build_catalog",
    "enumerate_algebras",
    "Falsification",
    "PreconditionError",
    "ResourceLimitError",
    "StructureError",
    "Partition",
    "m_variety",
    "member_of",
    "parse_identity",
    "satisfies",
    "sr",
]
