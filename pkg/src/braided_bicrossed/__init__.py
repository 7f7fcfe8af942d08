"""Bicrossed products of matched pairs of groups and their diagonal braidings."""

from .bicrossed import BicrossedProduct, build_bicrossed, commutativity_flags, verify_bialgebra
from .braiding import check_theorem_conditions, compute_q
from .cocycles import BicrossedDatum
from .errors import AlgebraError
from .groups import FiniteGroup, cyclic, direct_product, make_group, symmetric_group
from .io import Dataset, load_dataset, save_dataset
from .matched_pair import MatchedPair, from_factorization, validate_matched_pair
from .realization import DiagonalRealization, build_biproduct, universal_realization
from .report import CheckResult, Report
from .scalars import CycInt

__all__ = [
    "AlgebraError",
    "BicrossedDatum",
    "BicrossedProduct",
    "CheckResult",
    "CycInt",
    "Dataset",
    "DiagonalRealization",
    "FiniteGroup",
    "MatchedPair",
    "Report",
    "build_bicrossed",
    "build_biproduct",
    "check_theorem_conditions",
    "commutativity_flags",
    "compute_q",
    "cyclic",
    "direct_product",
    "from_factorization",
    "load_dataset",
    "make_group",
    "save_dataset",
    "symmetric_group",
    "universal_realization",
    "validate_matched_pair",
    "verify_bialgebra",
]
