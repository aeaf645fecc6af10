"""Rational Catalan combinatorics: simultaneous cores, abaci, affine permutations,
rational Dyck paths, root systems and the maps between them."""

from .abacus import Abacus, alpha, alpha_inv, beta, beta_inv, format_abacus, is_flush, parse_abacus
from .affine import (
    AffinePermutation,
    core_of,
    gamma,
    gamma_inv,
    inversion_table,
    is_dominant,
    is_p_stable,
    parse_window,
    shi_tableau,
    star,
)
from .dyck import (
    RationalDyckPath,
    anderson_map,
    anderson_map_inv,
    anderson_phi,
    anderson_phi_inv,
    codinv_tableau,
    enumerate_paths,
    eta,
    zeta,
)
from .errors import InvariantViolation
from .partition import Partition, conjugate, h_np, hook_length, is_core, parse_partition, skew_length
from .rootsystem import AffineWeylElement, RootSystem, enumerate_dominant_p_stable, parse_root_system
from .tableau import StaircaseTableau
from .verify import QTPolynomial, SuiteReport, c_phi_p, qt_catalan, verify_suite

__version__ = "0.1.0"
