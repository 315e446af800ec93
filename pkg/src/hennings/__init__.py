"""Exact evaluation of Hopf-algebra invariants of framed links and 3-manifolds."""

from .diagram import MorseWord, linking_matrix, parse_morse, signature, trace_components
from .evaluate import close_normal_form, compose_normal_forms, concentrate, decorate, eval_bruteforce, tangle_normal_form
from .files import load_algebra, save_algebra, shipped_algebra
from .hopf import HopfData, check_hopf_axioms, check_quasitriangular, check_ribbon, ribbon_element
from .integral import right_integral
from .invariant import compare_invariants, hennings_inv, lens_space_inv, run_corpus
from .scalar import RootScalar, Scalar, parse_scalar

__all__ = [
    "MorseWord",
    "parse_morse",
    "trace_components",
    "linking_matrix",
    "signature",
    "decorate",
    "concentrate",
    "eval_bruteforce",
    "tangle_normal_form",
    "compose_normal_forms",
    "close_normal_form",
    "load_algebra",
    "save_algebra",
    "shipped_algebra",
    "HopfData",
    "check_hopf_axioms",
    "check_quasitriangular",
    "check_ribbon",
    "ribbon_element",
    "right_integral",
    "hennings_inv",
    "lens_space_inv",
    "compare_invariants",
    "run_corpus",
    "Scalar",
    "RootScalar",
    "parse_scalar",
]
