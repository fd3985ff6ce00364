"""Exact dimension counts for Selmer-type bounds on unipotent radicals of relative completions."""

__version__ = "0.1.0"

from .exactmath import binom, divisors, mobius
from .freelie import graded_witt, lie_sigma_trace, lyndon_count, lyndon_profile, witt
from .graded import (
    Convention,
    FundamentalRep,
    GradedDim,
    SignedGradedDim,
    dual,
    sym_frob_grading,
    sym_ht_grading,
    sym_sigma_trace,
    tate_twist,
    tensor,
)
from .inequality import (
    InequalityReport,
    Modes,
    check_genus2,
    check_modular,
    reductive_dim,
    search_genus2,
    search_modular,
)
from .selmer import (
    CurveSetup,
    Place,
    PlaceKind,
    build_generator_space,
    make_setup,
    selmer_upper_bound,
)

__all__ = [
    "binom",
    "divisors",
    "mobius",
    "witt",
    "graded_witt",
    "lie_sigma_trace",
    "lyndon_count",
    "lyndon_profile",
    "Convention",
    "FundamentalRep",
    "GradedDim",
    "SignedGradedDim",
    "tensor",
    "dual",
    "tate_twist",
    "sym_ht_grading",
    "sym_frob_grading",
    "sym_sigma_trace",
    "CurveSetup",
    "Place",
    "PlaceKind",
    "make_setup",
    "build_generator_space",
    "selmer_upper_bound",
    "InequalityReport",
    "Modes",
    "reductive_dim",
    "check_genus2",
    "check_modular",
    "search_genus2",
    "search_modular",
]
