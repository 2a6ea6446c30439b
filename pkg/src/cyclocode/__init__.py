"""Finite fields, cyclotomic cosets and cyclic codes from monomial trace sequences."""

from .catalog import FunctionSpec, ddt, differential_uniformity, resolve
from .codes import CyclicCode, bch_bound, code_from_sequence, dual, macwilliams, sphere_packing_ceiling
from .cyclotomic import coset_of, minimal_poly, partition
from .distance import min_distance
from .field import Field, TowerView, build_field, build_tower, default_defining_poly, trace_rel
from .poly import Poly, parse_poly_text
from .sequence import (
    MonomialFunction,
    berlekamp_massey,
    expand_symbolic,
    generate,
    span_from_bm,
    span_from_expansion,
)

__version__ = "0.1.0"

__all__ = [
    "CyclicCode",
    "Field",
    "FunctionSpec",
    "MonomialFunction",
    "Poly",
    "TowerView",
    "bch_bound",
    "berlekamp_massey",
    "build_field",
    "build_tower",
    "code_from_sequence",
    "coset_of",
    "ddt",
    "default_defining_poly",
    "differential_uniformity",
    "dual",
    "expand_symbolic",
    "generate",
    "macwilliams",
    "min_distance",
    "minimal_poly",
    "parse_poly_text",
    "partition",
    "resolve",
    "span_from_bm",
    "span_from_expansion",
    "sphere_packing_ceiling",
    "trace_rel",
]
