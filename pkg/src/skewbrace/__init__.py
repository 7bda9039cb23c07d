"""Finite skew braces, their infinitesimal post-Lie counterparts, and the bridge between them."""
from .braces import (FiniteSkewBrace, all_ideals, classify_triviality, criterion_checks, derived_series,
                     is_ideal, is_simple, quotient, verify_brace)
from .enumeration import enumerate_braces, enumeration_report
from .groups import FiniteGroup, automorphisms, check_group, holomorph
from .lie import LieAlgebraSC, all_ideals_lowdim, check_jacobi, killing_form, simple_summand_count
from .linalg import RationalMatrix, RationalSubspace
from .postlie import PostLieAlgebra, check_postlie, is_simple_brace_infinitesimal, rigidity_classify

__version__ = "0.1.0"

__all__ = [
    "FiniteGroup",
    "FiniteSkewBrace",
    "LieAlgebraSC",
    "PostLieAlgebra",
    "RationalMatrix",
    "RationalSubspace",
    "all_ideals",
    "all_ideals_lowdim",
    "automorphisms",
    "check_group",
    "check_jacobi",
    "check_postlie",
    "classify_triviality",
    "criterion_checks",
    "derived_series",
    "enumerate_braces",
    "enumeration_report",
    "holomorph",
    "is_ideal",
    "is_simple",
    "is_simple_brace_infinitesimal",
    "killing_form",
    "quotient",
    "rigidity_classify",
    "simple_summand_count",
    "verify_brace",
]
