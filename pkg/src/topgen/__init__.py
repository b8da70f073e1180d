"""Exact dimension ledger for exceptional algebraic groups."""

from __future__ import annotations

from .classdata import kappa, lookup_alpha, lookup_class_dim
from .errors import (
    BudgetExceeded,
    InconsistentDimensions,
    InvalidGroupType,
    InvalidOrder,
    NotCurated,
    TopgenError,
)
from .gencrit import GenerationQuery, check_cor1, check_t_tuple, minimal_t, sharpness_fixed_space
from .kernels import BACKEND
from .rootsys import GroupType, build_root_system
from .subsys import bds_maximal_subsystems, catalog_maximal, coset_dim_parabolic
from .torsion import brute_force_torsion, dim_torsion_semisimple, gamma, torsion_summary

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BudgetExceeded",
    "GenerationQuery",
    "GroupType",
    "InconsistentDimensions",
    "InvalidGroupType",
    "InvalidOrder",
    "NotCurated",
    "TopgenError",
    "bds_maximal_subsystems",
    "brute_force_torsion",
    "build_root_system",
    "catalog_maximal",
    "check_cor1",
    "check_t_tuple",
    "coset_dim_parabolic",
    "dim_torsion_semisimple",
    "gamma",
    "kappa",
    "lookup_alpha",
    "lookup_class_dim",
    "minimal_t",
    "sharpness_fixed_space",
    "torsion_summary",
]
