"""Exact invariant theory, Weyl groupoid orbits and S-closures for classical Lie superalgebras."""

__version__ = "0.1.0"

from .poly import (
    GroupElement, NotDivisible, Polynomial, PolynomialSyntaxError, Ring, RingMismatch,
    Substitution, divide_exact, evaluate, format_polynomial, parse_polynomial, reynolds,
)
from .groebner import (
    GREVLEX, LEX, BudgetExceeded, GroebnerBudget, Ideal, MonomialOrder, contains,
    eliminate, groebner_basis, intersect, is_unit_ideal, radical_contains, same_zero_set,
)
from .rootdata import InvalidType, NotIsotropic, RootSystem, SuperType, build_root_system
from .invariants import (
    ADDITIVE, MULTIPLICATIVE, RankTooSmall, Setting, UnsupportedSetting, check_membership,
    ev_map, is_supersymmetric, is_w_invariant, supersymmetric_basis, t_element, t_polynomial,
)
from .groupoid import (
    GroupoidGenerator, NotDefinedAt, apply_generator, atyp, equivalent, orbit_contains,
    orbit_description,
)
from .sgeom import ClosedSet, is_superalgebraic, orbit_closure_ideal, s_closure, tau_stable
