"""Frobenius closures, Frobenius test exponents and filter regular sequences over F_p."""

from .algebra import (
    GREVLEX,
    LEX,
    ExponentOverflowError,
    FieldSpec,
    MonomialOrder,
    PolyRing,
    Polynomial,
    frobenius_substitute,
    monomial_compare,
    poly_arith,
)
from .frobenius import (
    ClosureResult,
    FrobeniusConfig,
    FteResult,
    Status,
    bracket_power,
    frobenius_closure,
    frobenius_preimage,
    fte,
    hsl0,
    relative_kernel_h0,
)
from .groebner import GroebnerBasis, buchberger, eliminate, ideal_equal, ideal_membership, normal_form
from .ideals import (
    Ideal,
    RingSpec,
    colon,
    ideal_combine,
    intersect,
    is_finite_colength,
    krull_dimension,
    saturate,
    standard_monomials,
)
from .parsing import ParseError, parse_ideal, parse_polynomial
from .sequences import (
    ElementSequence,
    SequenceVerdict,
    is_filter_regular,
    is_parameter_part,
    is_regular_sequence,
    sample_filter_regular,
)

__version__ = "0.1.0"
