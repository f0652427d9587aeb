"""Exact arithmetic in a non-atomic ring R and strong-atom factorization in R[t].

R is F_p[x_i^q : q >= 0 rational] modulo all monomials of total degree > 1.
R itself has no irreducible elements, yet every nonzero nonunit of R[t]
factors into strong atoms; this package computes such factorizations and
checks them against exhaustive search in finite subrings.
"""

from .atomizer import Atomization, atomize, case1_unit_coeff, case2_pad, case3_mixed
from .core import Monomial, deglex_compare, monomial_mul, monomial_pow, monomial_proot, potential, potential_at
from .errors import *  # noqa: F401,F403
from .fp import FpPoly, fp_bezout, fp_factor, fp_gcd, fp_is_irreducible
from .hensel import hensel_split
from .oracle import (
    AtomCertificate,
    Associateness,
    Constraint,
    SearchBudget,
    Verdict,
    are_associate,
    certify_strong_atom,
    enumerate_elements,
    find_factorization,
    search_factorization,
)
from .parse import parse_element, parse_expression
from .ring import (
    NilCertificate,
    RingElem,
    divisor_chain,
    elem_add,
    elem_inverse,
    elem_mul,
    elem_proot,
    is_nilpotent,
    is_unit,
    min_potential_witness,
    nil_certificate,
)
from .rpoly import (
    RPoly,
    SurviveWitness,
    kill_variables,
    reduce_mod_M,
    rpoly_add,
    rpoly_is_unit,
    rpoly_mul,
    survive_witness,
    unit_coeff_degree,
)
from .subring import FiniteAlgebra, SubringSpec, algebra, ambient_subring

__version__ = "0.1.0"
