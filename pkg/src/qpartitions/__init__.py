"""Exact q-series and partition enumeration for Capparelli's identities and their companion."""

from .qpoly import A, B, ONE, Q, ZERO, DominanceResult, Monomial, NotDivisible, QPoly, dominates, exact_div
from .partitions import Partition, PartitionClass, UnboundedClass
from .verify import VerificationReport

__version__ = "0.1.0"

__all__ = [
    "A", "B", "Q", "ONE", "ZERO",
    "QPoly", "Monomial", "DominanceResult", "NotDivisible", "dominates", "exact_div",
    "Partition", "PartitionClass", "UnboundedClass",
    "VerificationReport",
]
