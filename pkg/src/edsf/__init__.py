"""Elliptic divisibility sequences and generalized elliptic Fermat numbers.

Exact arithmetic on integral Weierstrass models over Q, with verifiers for
coprimality, order universality, valuation identities, growth rates and
divisibility along isogenies.
"""

from .ec_core import (
    Curve,
    RationalPoint,
    add,
    is_on_curve,
    is_reduced_form,
    make_curve,
    negate,
    scalar_mul,
)
from .eds import EdsDecomposition, eds_decompose, eds_terms, verify_divisibility_law, verify_ss_valuation
from .factorint import Factorization, factorize, is_prime, ord_q
from .fermat import (
    FermatTerm,
    entry_point,
    fermat_term,
    gcd_matrix,
    growth_ratio,
    magnified_divisibility,
    verify_ord_proposition,
)
from .heights import canonical_height_doubling, canonical_height_eds, degree_ratio, naive_height
from .modred import (
    ModPoint,
    has_order_exactly,
    mod_add,
    mod_scalar_mul,
    point_order_bruteforce,
    reduce_point,
    verify_order_universality,
)
from .registry import load_registry

__version__ = "0.1.0"
