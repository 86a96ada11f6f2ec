"""Finite hyperfields, quotients of finite fields, and their classification."""

from .analysis import (
    check_weil_bound,
    classify_quotients,
    count_diagonal_curve_points,
    nr_bound,
    stabilization_scan,
)
from .enumeration import census, enumerate_hyperfields, enumerate_structures
from .errors import (
    HyperfieldError,
    IndexDoesNotDivide,
    NotAPrimePower,
    OddIndex,
    OrderTooLarge,
    ZeroCoefficient,
    ZeroHasNoLog,
)
from .gf import GFTable, gf_add, gf_build, gf_dlog, gf_mul
from .groups import AbelianGroupSpec
from .hyperfield import (
    HyperfieldTable,
    canonical_form,
    canonical_id,
    check_axioms,
    embed_field,
    full_table,
    iso_map,
    krasner,
    signs,
    weak_signs,
)
from .quotient import (
    Obstruction,
    QuotientDescriptor,
    build_Hr,
    build_Hr_prime,
    build_quotient,
    build_valuation_quotient,
    infinite_quotient_obstruction,
    non_quotient_criterion,
)

__version__ = "0.1.0"
