"""Certified tools for multiplicative dependence of k-generalized Lucas numbers."""

from .sequences import LucasTable, SequenceParams, lucas_term
from .mdep import mdep_test, search, SearchWindow
from .pipeline import ProofConfig, ProofCertificate, prove, eliminate_large_k

__all__ = [
    "LucasTable", "SequenceParams", "lucas_term", "mdep_test", "search", "SearchWindow",
    "ProofConfig", "ProofCertificate", "prove", "eliminate_large_k",
]
__version__ = "0.1.0"
