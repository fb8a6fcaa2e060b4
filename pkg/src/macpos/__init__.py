"""Exact Macdonald symmetric functions, Pieri rules and positive specializations."""
from .partitions import conjugate, dominates, enumerate_partitions, parse_partition
from .qt import QTParams, TruncatedSeries
from .macdonald import SymFunc, branching, g_poly, lr_coefficient, macdonald_poly
from .specializations import KerovParams, Specialization, eval_Q, kerov_spec

__version__ = "0.1.0"

__all__ = [
    "conjugate", "dominates", "enumerate_partitions", "parse_partition",
    "QTParams", "TruncatedSeries", "SymFunc", "branching", "g_poly",
    "lr_coefficient", "macdonald_poly", "KerovParams", "Specialization",
    "eval_Q", "kerov_spec",
]
