"""Exact demi-valuations into finitely supported integer vectors.

Divisor valuations on Q and Q(sqrt(d)), the content valuation ``w`` on K(X)
with its Kronecker function ring, the factorization valuation ``t`` and the
pair ``u = (w, t)`` on Q(X).
"""
from .errors import (
    DegreeBoundError,
    DemivalError,
    FactorizationBoundError,
    InvalidCertificate,
    ParseError,
    ZeroIdealError,
)
from .factor import FactorizationResult, kronecker_factor, t_value
from .fields import QuadraticField, RationalField, base_field
from .function_field import (
    basis_witness,
    bezout_coefficients,
    coefficient_cofactors,
    content_value,
    contract_ideal,
    extend,
    extend_contract_roundtrip_check,
    kronecker_ring_member,
    rw_ideal_equal,
    rw_principal_generator,
    t_instance,
    u_instance,
    u_member,
    u_value,
    w_instance,
    w_value,
)
from .kernels import BACKEND
from .number_rings import (
    QuadContext,
    QuadElement,
    QuadIdeal,
    ideal_add,
    ideal_inverse,
    ideal_membership,
    ideal_mul,
    ideal_valuation,
    is_principal_search,
    prime_ideal_of_label,
    prime_ideal_valuation,
    quad_divisor_valuation,
    quad_splitting_type,
    rational_valuation,
)
from .parser import parse_element, parse_expression, parse_polynomial, parse_rational_function
from .polynomials import Polynomial, RationalFunction
from .valuation import (
    AxiomReport,
    BezoutCertificate,
    PrincipalGenerator,
    ValuationInstance,
    axiom_report,
    principal_generator_from_bezout,
    reconstruct_unit,
)
from .value_groups import (
    INFINITY,
    ZERO,
    IrreduciblePoly,
    Ordering,
    QuadPrime,
    RationalPrime,
    ValueVector,
    minimal_in_set,
    parse_label,
)

__version__ = "0.1.0"
