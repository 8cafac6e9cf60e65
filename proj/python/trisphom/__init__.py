"""Reduced partition/subset lattices, order complexes, free quotients and
exact simplicial homology."""

from trisphom._core import (
    Action,
    Complex,
    Group,
    Poset,
    cyclic_group,
    group_from_cycles,
    homology,
    is_free,
    order_complex,
    partition_lattice,
    predict_quotient_betti,
    quotient,
    subset_lattice,
    verify_paper,
)

__version__ = "1.0.0"

__all__ = [
    "Action",
    "Complex",
    "Group",
    "Poset",
    "cyclic_group",
    "group_from_cycles",
    "homology",
    "is_free",
    "order_complex",
    "partition_lattice",
    "predict_quotient_betti",
    "quotient",
    "subset_lattice",
    "verify_paper",
]
