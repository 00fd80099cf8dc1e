"""Exact computations with p-DG nilHecke, Webster and deformed Webster algebras over F_p."""

from .algebra import D, MIXED, NH, W, Algebra, Element, FlavorMismatch
from .modp import ConfigurationError, Fp, PrimeConfig
from .rewrite import PROVEN, UNKNOWN, NormalFormReport, prove_zero, reduce
from .seqcore import RedSpec, StrandSequence, enumerate_seq

__all__ = [
    "Algebra",
    "Element",
    "FlavorMismatch",
    "MIXED",
    "NH",
    "D",
    "W",
    "ConfigurationError",
    "Fp",
    "PrimeConfig",
    "PROVEN",
    "UNKNOWN",
    "NormalFormReport",
    "prove_zero",
    "reduce",
    "RedSpec",
    "StrandSequence",
    "enumerate_seq",
]
