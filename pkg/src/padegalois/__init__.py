"""Exact-arithmetic toolkit: truncated power series, diagonal Pade
approximants, integer polynomial factorization, p-adic Newton polygons,
irreducibility certificates, and Galois group identification.

Everything runs over exact integers and rationals; no floating point is
used anywhere.  See the subpackage docstrings for representation
conventions.
"""

__version__ = "0.1.0"

from .polynomials import (
    BigRat,
    IntPoly,
    RatPoly,
    coeff_strings,
    discriminant,
    format_poly,
    int_poly_from_strings,
    parse_int_poly,
    parse_poly,
    rat_poly_from_strings,
    resultant,
)
from .series import SeriesId, scale_to_monic_integer, taylor
from .pade import PadeDefectError, PadePair, divisibility_scan, pade_diagonal
from .factor import Factorization, factor_over_integers
from .padic import NewtonPolygon, newton_polygon, qp_factor_shape
from .galois import (
    DEFAULT_PRIME_BOUND,
    Certainty,
    GaloisIdentification,
    classify,
    classify_all_factors,
    verify_identification,
)
from .schur import (
    DiscComparison,
    IrreducibilityCertificate,
    closed_form_disc,
    derivative_identity_check,
    eisenstein_certificate,
    full_factorization_certificate,
    generalized_eisenstein_scan,
    no_rational_root_certificate,
    theorem_expectation,
)
from .cache import CacheMismatchError, ResultCache, default_cache_dir
from .tables import TABLES, TableError, normalize_table_id, reproduce
from .reporting import emit

__all__ = [
    "BigRat",
    "IntPoly",
    "RatPoly",
    "coeff_strings",
    "discriminant",
    "format_poly",
    "int_poly_from_strings",
    "parse_int_poly",
    "parse_poly",
    "rat_poly_from_strings",
    "resultant",
    "SeriesId",
    "taylor",
    "scale_to_monic_integer",
    "PadeDefectError",
    "PadePair",
    "divisibility_scan",
    "pade_diagonal",
    "Factorization",
    "factor_over_integers",
    "NewtonPolygon",
    "newton_polygon",
    "qp_factor_shape",
    "DEFAULT_PRIME_BOUND",
    "Certainty",
    "GaloisIdentification",
    "classify",
    "classify_all_factors",
    "verify_identification",
    "DiscComparison",
    "IrreducibilityCertificate",
    "closed_form_disc",
    "derivative_identity_check",
    "eisenstein_certificate",
    "full_factorization_certificate",
    "generalized_eisenstein_scan",
    "no_rational_root_certificate",
    "theorem_expectation",
    "CacheMismatchError",
    "ResultCache",
    "default_cache_dir",
    "TABLES",
    "TableError",
    "normalize_table_id",
    "reproduce",
    "emit",
]
