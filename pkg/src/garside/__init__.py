"""Finite Garside systems: simples, normal forms, fractions and subgroup recognition."""

from .build import build_table
from .elements import (
    GroupElement, PositiveElement, fraction, fraction_equal, fraction_invert, fraction_multiply,
    gcd, is_balanced, lcm, left_gcd, left_lcm, normal_form, right_gcd, right_lcm, support,
    to_fraction,
)
from .hasse import emit_hasse, hasse_dot
from .lcmhom import CoxeterMatrix, HomVerdict, check_lcm_hom, spherical_lcm
from .subgroups import (
    MinimalSet, SubgroupReport, classify, enumerate_garside, enumerate_parabolics, intersect,
    is_garside_minimals, is_standard_parabolic, minimal_closure, sub_table,
)
from .systems import braid_classical, braid_dual, example_xyz, free_abelian, from_selector
from .table import GarsideError, GarsideTable
from .words import (
    CongruenceIndex, Presentation, PresentationError, equivalence_classes, parse_word, render,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
