"""Minimal genus and minimal Frobenius number over numerical semigroups
with fixed multiplicity and embedding dimension.

Public surface: the value types and constructors in `core`, the
multiplicity tree in `multiplicity_tree`, packed families and class
search in `packed`, the minimization procedures in `search`, and the
brute-force cross-check in `oracle`.  The `semigroup-forge` command
wraps all of it.
"""
from ._backend import backend_name
from .core import (
    AperyTable,
    NumericalSemigroup,
    apery_set,
    contains,
    frobenius_of,
    genus_of,
    interval_apery,
    interval_frobenius,
    interval_genus,
    make_semigroup,
    monoid_contains,
    sylvester_frobenius,
)
from .errors import (
    BadDimension,
    Degenerate,
    EmptyInput,
    InvalidGenerator,
    NotCoprime,
    NotMember,
    NotNumerical,
    NotPacked,
    SemigroupError,
    Uncertified,
)

__version__ = "0.1.0"

__all__ = [
    "AperyTable",
    "NumericalSemigroup",
    "apery_set",
    "backend_name",
    "contains",
    "frobenius_of",
    "genus_of",
    "interval_apery",
    "interval_frobenius",
    "interval_genus",
    "make_semigroup",
    "monoid_contains",
    "sylvester_frobenius",
    "BadDimension",
    "Degenerate",
    "EmptyInput",
    "InvalidGenerator",
    "NotCoprime",
    "NotMember",
    "NotNumerical",
    "NotPacked",
    "SemigroupError",
    "Uncertified",
    "__version__",
]
