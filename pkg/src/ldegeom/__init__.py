"""Minimal solutions of a.x = b.y over the nonnegative integers and their geometry."""
from .core import (
    DEFAULT_MAX_NODES,
    Generator,
    Instance,
    Solution,
    generator,
    generators,
    is_solution,
    make_instance,
    make_solution,
)
from .decompose import (
    ConvexCertificate,
    binarize,
    caratheodory_reduce,
    decompose,
    membership,
    trace,
)
from .fundamental import (
    completely_fundamental_set,
    extreme_points_check,
    genfun_denominator,
    is_cf_bruteforce,
)
from .graver import f_sets, graver_basis, verify_containment
from .hilbert import as_partition_identity, check_bounds, hilbert_basis, is_minimal
from .kernels import BACKEND as KERNEL_BACKEND

__version__ = "0.1.0"

__all__ = [
    "ConvexCertificate",
    "DEFAULT_MAX_NODES",
    "Generator",
    "Instance",
    "KERNEL_BACKEND",
    "Solution",
    "as_partition_identity",
    "binarize",
    "caratheodory_reduce",
    "check_bounds",
    "completely_fundamental_set",
    "decompose",
    "extreme_points_check",
    "f_sets",
    "generator",
    "generators",
    "genfun_denominator",
    "graver_basis",
    "hilbert_basis",
    "is_cf_bruteforce",
    "is_minimal",
    "is_solution",
    "make_instance",
    "make_solution",
    "membership",
    "trace",
    "verify_containment",
]
