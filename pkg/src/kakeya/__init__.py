"""Kakeya sets over small finite fields: constructions, exhaustive
verification, multiplicity interpolation, and exact lower bounds."""

from .bounds import (
    AsymptoticReport,
    BoundReport,
    best_m,
    c_alpha,
    count_Nq,
    eulerian,
    lemma_bound,
    region_volume,
)
from .gf import Field, field_make
from .polymethod import (
    BoundNotSatisfiedError,
    MultiPoly,
    find_vanishing_poly,
    leading_homogeneous,
    monomial_basis,
    multiplicity_at,
    restrict_to_line,
)
from .search import min_kakeya, size_sandwich
from .sets import (
    KakeyaSet,
    VARIANTS,
    construct_even,
    construct_odd,
    construct_variant,
    upper_bound_size,
    verify,
)
from .space import canonical_directions, canonicalize, line_points

__all__ = [
    "AsymptoticReport",
    "BoundNotSatisfiedError",
    "BoundReport",
    "Field",
    "KakeyaSet",
    "MultiPoly",
    "VARIANTS",
    "best_m",
    "c_alpha",
    "canonical_directions",
    "canonicalize",
    "construct_even",
    "construct_odd",
    "construct_variant",
    "count_Nq",
    "eulerian",
    "field_make",
    "find_vanishing_poly",
    "leading_homogeneous",
    "lemma_bound",
    "line_points",
    "min_kakeya",
    "monomial_basis",
    "multiplicity_at",
    "region_volume",
    "restrict_to_line",
    "size_sandwich",
    "upper_bound_size",
    "verify",
]

__version__ = "0.1.0"
