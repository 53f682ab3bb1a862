"""Finite n-ary groups: verification, Hosszu-Gluskin decomposition,
isomorphism testing, classification on small carriers, and term independence."""
from .errors import NaryError
from .groups import (
    Automorphism,
    BinaryGroup,
    automorphisms,
    catalog,
    cyclic_group,
    format_group,
    klein_group,
    parse_group,
)
from .hosszu import (
    HGAlgebra,
    KaryHGAlgebra,
    canonical_hg,
    canonical_ops,
    certify_hg,
    construct,
    construct_k,
    decompose,
    decompose_k,
    form19_check,
    format_hg,
    k_exponential_check,
    parse_hg,
)
from .iso import iso_bruteforce, iso_retract
from .classify import enumerate_classes, klein_classification, verify_against_table, cyclic_normal_form
from .polyadic import (
    NaryGroup,
    NaryOp,
    certify,
    check_characterizations,
    format_nop,
    hat_of,
    is_nary_group,
    iterate,
    iterated_skew,
    nary_power,
    parse_nop,
    retract,
    skew_of,
)
from .terms import MTerm, UnaryTerm, enumerate_unary_functions, eval_term, independent, terms_equal

__all__ = [name for name in dir() if not name.startswith("_")]
