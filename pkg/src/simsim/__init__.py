"""Exact counting of simultaneous similarity classes of commuting matrix
tuples over finite fields, n <= 4, with brute-force verification oracles."""

from .branching import branching_matrix, count, derived_matrix
from .gfield import make_field
from .oracle import (branch_census, commuting_tuple_count, orbit_count_direct,
                     orbit_count_burnside)
from .partcert import certify_nonneg, check_inequalities, d_coeff, p5
from .polyq import PolyQ, closed_form, parse_polyq, verify_closed_form
from .typeclass import (TypeDescriptor, catalog, classify_matrix,
                        classify_tuple, fingerprint, parse_type,
                        representative)

__all__ = [
    "branching_matrix", "count", "derived_matrix", "make_field",
    "branch_census", "commuting_tuple_count", "orbit_count_direct",
    "orbit_count_burnside", "certify_nonneg", "check_inequalities",
    "d_coeff", "p5", "PolyQ", "closed_form", "parse_polyq",
    "verify_closed_form", "TypeDescriptor", "catalog", "classify_matrix",
    "classify_tuple", "fingerprint", "parse_type", "representative",
]

__version__ = "0.1.0"
