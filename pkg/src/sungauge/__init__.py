"""Exact unstable K-theory computations for SU(n)-gauge groups over CP^2."""

from .exact_linalg import (
    INFINITE,
    IntegerMatrix,
    Lattice,
    NotASublattice,
    QuotientReport,
    RelationOutsideAmbient,
    SnfDecomposition,
    hnf_rows,
    lattice_contains,
    lattice_index,
    minimal_multiplier,
    quotient_invariants,
    snf,
    subgroup_order_in_quotient,
)
from .chern import (
    CohomVector,
    Generator,
    GradedElement,
    KClass,
    NonIntegralResult,
    ParityMismatch,
    RingContext,
    Space,
    UnknownGenerator,
    binomial_power_sums,
    ch_generator,
    exp_power_series,
    phi,
)
from .gauge_orders import (
    KnownOrderRecord,
    NotPrime,
    OrderResult,
    WnHomotopyEntry,
    alpha_lift_coords,
    boundary_image_order,
    im_a_lattice,
    im_phi_lattice,
    known_orders,
    necessary_equiv_condition,
    p_component,
    p_component_implication,
    reduced_phi_span,
    restricted_boundary_order,
    sufficient_equiv_condition,
    wn_homotopy,
)

__version__ = "0.1.0"
