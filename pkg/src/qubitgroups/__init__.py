"""Exact checks on accidental isomorphisms between qubit groups SU(2^n) and rotation groups SO(N)."""

from .cartan import CartanClass, CartanGroup, GroupNameError, NotSimpleError, dimension, exponents, parse_group
from .diophantine import (
    PellSolution,
    QubitMatch,
    RNSolution,
    pell_enumerate,
    qubit_rotation_matches,
    solve_rn_bruteforce,
)
from .homotopy import FGAbelianGroup, OutsideStableRange, StableFamily, pi, stable_pi, stable_range_bound
from .poincare import IntPolynomial, betti, poincare_polynomial, polynomials_equal
from .screener import ScreeningReport, Verdict, scan_class_pairs, scan_qubit_rotations, screen

__version__ = "0.1.0"
