"""Graded algebras over F_p: Beilinson algebras, trivial extensions and graded module categories."""

from ._grext import (
    Algebra,
    GrextError,
    beilinson,
    beilinson_trivial_extension,
    degree_zero_part,
    derive_sigma,
    equivalence_certificate,
    forget_grading,
    global_dimension,
    is_basic,
    is_graded_frobenius,
    is_left_well_graded,
    is_right_well_graded,
    is_top_component_faithful,
    nakayama,
    self_injectivity,
    trivial_extension,
)

__all__ = [
    "Algebra",
    "GrextError",
    "beilinson",
    "beilinson_trivial_extension",
    "degree_zero_part",
    "derive_sigma",
    "equivalence_certificate",
    "forget_grading",
    "global_dimension",
    "is_basic",
    "is_graded_frobenius",
    "is_left_well_graded",
    "is_right_well_graded",
    "is_top_component_faithful",
    "nakayama",
    "self_injectivity",
    "trivial_extension",
]
