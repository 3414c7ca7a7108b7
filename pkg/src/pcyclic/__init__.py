"""Optimal p-ary cyclic codes C_p(u, v) of length 2(p^m - 1)/(p - 1): construction and audit."""

from .code_algebra import CyclicCode, SameCosetError, build_code, decode_single_error, encode, minimal_polynomial
from .cyclotomic import CosetTable, build_cosets, coset_length
from .distance import optimality_verdict, sphere_packing_volume
from .ext_field import ExtensionField, make_field, root_of_unity
from .field_core import PrimeFieldPolynomial, factor_integer, is_irreducible, is_primitive

__all__ = [
    "CosetTable",
    "CyclicCode",
    "ExtensionField",
    "PrimeFieldPolynomial",
    "SameCosetError",
    "build_code",
    "build_cosets",
    "coset_length",
    "decode_single_error",
    "encode",
    "factor_integer",
    "is_irreducible",
    "is_primitive",
    "make_field",
    "minimal_polynomial",
    "optimality_verdict",
    "root_of_unity",
    "sphere_packing_volume",
]
