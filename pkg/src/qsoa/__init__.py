"""Exact computations in the rank-1 quantized symplectic oscillator algebra over Q(q)."""

from .blocks import (
    alpha_root_set,
    block_report,
    block_S,
    block_T,
    max_up_shift,
    semisimplicity_check,
)
from .center import CentralizerQuery, centralizer_basis
from .errors import *  # noqa: F401,F403
from .parsing import parse_center_coefficients, parse_scalar, parse_word
from .pbw import (
    P_EX,
    P_ONE,
    P_T,
    P_ZERO,
    CenterPolynomial,
    PbwElement,
    anti_involution,
    c0_element,
    casimir_element,
    commutator,
    generator,
    multiply,
    reduction_system,
    xi_projection,
)
from .repn import (
    build_simple,
    c0_zero_counterexample,
    c0_zero_verma_report,
    composition_series,
    finite_dim_test,
    verify_module_relations,
)
from .rewrite import normal_form, order_compare, paper_system, verify_confluence
from .scalar import (
    ONE,
    ZERO,
    LaurentPoly,
    Scalar,
    bracket,
    classify_signed_power,
    geometric_partial_sum,
    integer_power_roots,
    q,
    qpow,
)
from .verma import (
    VermaElement,
    Weight,
    act,
    act_element,
    alpha,
    c0_scalar,
    c_scalar,
    d_const,
    maximal_vectors,
    sl2_maximal_vectors,
    structure_vector,
)


def parse_center_poly(text):
    return CenterPolynomial.parse(text)


__version__ = "0.1.0"
