"""Exact arithmetic for the reciprocal Pascal matrix.

Generators for the symmetric Pascal, reciprocal Pascal, and super Catalan
arrays; two checked factorizations of the super Catalan array; an
all-integer inverse of the reciprocal Pascal matrix built from triangular
and diagonal factors and verified against an independent Gauss-Jordan
oracle; exact determinant comparisons; and b-file tooling for the related
catalogued integer sequences.
"""
from .combinatorics import (
    ExactnessError,
    binomial,
    central_binomial,
    exact_div,
    rational,
    super_catalan,
)
from .matrices import (
    Diagonal,
    d_matrix,
    equal,
    from_rows,
    g_matrix,
    hadamard_inverse,
    identity,
    l_matrix,
    matmul,
    pascal_matrix,
    reciprocal_pascal,
    super_catalan_matrix,
    to_integer,
    to_rational,
)
from .linalg import (
    BitGrowthMeter,
    det_bareiss,
    invert_rational,
    invert_unit_lower_triangular,
)
from .identities import (
    CheckReport,
    check_grg,
    check_integrality,
    check_l_inverse_column,
    check_ldl,
    check_von_szily,
    check_von_szily_upto,
    det_comparison,
    det_r_inverse_formula,
    r_inverse_00,
    r_inverse_via_factorization,
)
from .sequences import (
    GENERATED_IDS,
    SequenceRecord,
    antidiagonal_sequence,
    crosscheck,
    det_inverse_sequence,
    emit_bfile,
    generated_sequence,
    load_reference_bfile,
    parse_bfile,
    sign_pattern,
    super_catalan_candidates,
    triangle_rows_sequence,
)

__version__ = "0.1.0"

__all__ = [
    "BitGrowthMeter",
    "CheckReport",
    "Diagonal",
    "ExactnessError",
    "GENERATED_IDS",
    "SequenceRecord",
    "antidiagonal_sequence",
    "binomial",
    "central_binomial",
    "check_grg",
    "check_integrality",
    "check_l_inverse_column",
    "check_ldl",
    "check_von_szily",
    "check_von_szily_upto",
    "crosscheck",
    "d_matrix",
    "det_bareiss",
    "det_comparison",
    "det_inverse_sequence",
    "det_r_inverse_formula",
    "emit_bfile",
    "equal",
    "exact_div",
    "from_rows",
    "g_matrix",
    "generated_sequence",
    "hadamard_inverse",
    "identity",
    "invert_rational",
    "invert_unit_lower_triangular",
    "l_matrix",
    "load_reference_bfile",
    "matmul",
    "parse_bfile",
    "pascal_matrix",
    "r_inverse_00",
    "r_inverse_via_factorization",
    "rational",
    "reciprocal_pascal",
    "sign_pattern",
    "super_catalan",
    "super_catalan_candidates",
    "super_catalan_matrix",
    "to_integer",
    "to_rational",
    "triangle_rows_sequence",
]
