"""Intersection forms of Soergel bimodules computed in the nil Hecke ring."""
from .coxeter import (
    CoxeterSystem,
    Element,
    bruhat_leq,
    canonical_word,
    demazure_product,
    demazure_star,
    element_from_word,
    is_right_descent,
    length,
    new_system,
)
from .forms import GramReport, gram_matrix, smith_normal_form, torsion_primes
from .hecke import HeckeElement, bott_samelson_product, deodhar_check
from .laurent import LaurentPoly
from .nhring import NHElement, d_coefficient, f_element, nh_one, oracle_delta_d
from .polyring import Polynomial, act, demazure
from .subexpr import (
    DecoratedSubexpression,
    EnumerationFilter,
    Expression,
    decorate,
    defect_generating_function,
    enumerate_subexpressions,
    greedy_subexpression,
    has_D1,
)
from .sysfile import load_system

__version__ = "0.1.0"
