"""Minimal Betti tables of monomial ideals by Morse reduction of the
Taylor or Lyubeznik resolution."""
from .engine import (
    BettiTable,
    MultigradedBetti,
    compute_betti_table,
    compute_multigraded,
)
from .fields import QQ, PrimeField, parse_field
from .homology import NonfaceComplex, homology_dims
from .kernels import BACKEND
from .monomials import MonomialIdeal, parse_monomial, polarize

__all__ = [
    "BACKEND",
    "BettiTable",
    "MonomialIdeal",
    "MultigradedBetti",
    "NonfaceComplex",
    "PrimeField",
    "QQ",
    "compute_betti_table",
    "compute_multigraded",
    "homology_dims",
    "parse_field",
    "parse_monomial",
    "polarize",
]
