import itertools
import math
import random

import pytest

from sungauge.chern import ParityMismatch, Space
from sungauge.exact_linalg import hnf_rows, lattice_contains, quotient_invariants
from sungauge.gauge_orders import (
    NotPrime,
    alpha_lift_coords,
    boundary_image_order,
    even_order_bound_over_s4,
    im_a_basis,
    im_a_lattice,
    im_phi_lattice,
    known_order,
    known_orders,
    necessary_equiv_condition,
    p_component,
    p_component_implication,
    phi_rows,
    reduced_phi_span,
    restricted_boundary_order,
    sufficient_equiv_condition,
    wn_homotopy,
)


def span(*rows):
    return hnf_rows(rows, 3)


def test_im_phi_examples():
    assert im_phi_lattice(3) == span((3, 3, 6), (6, 0, 0), (0, 6, 0))
    assert im_phi_lattice(4, "c") == span((12, 0, 0), (24, 0, 0), (0, 24, 60), (0, 0, 120))
    assert im_phi_lattice(3, Space.SMASH_C_ODD) == span((3, 3, 6), (0, 6, 12), (6, 0, 12), (0, 0, 24))


def test_im_phi_even_in_im_a_coordinates():
    # y is stored halved when written in the Im(a) basis for n even
    rows = [(x, y // 2, z) for x, y, z in phi_rows(4, "c")]
    assert rows == [(12, 0, 0), (24, 0, 0), (0, 12, 60), (0, 0, 120)]


def test_im_phi_parity_mismatch():
    with pytest.raises(ParityMismatch):
        im_phi_lattice(4, "c_odd")
    with pytest.raises(ValueError):
        im_phi_lattice(2)


def test_reduced_span_examples():
    assert reduced_phi_span(3) == span((3, 3, 6), (6, 0, 0), (0, 6, 0))
    assert reduced_phi_span(4) == span((6, 4, 10), (12, 0, 0), (0, 8, 0))
    assert reduced_phi_span(5) == span((10, 5, 15), (20, 0, 0), (0, 10, 0))


@pytest.mark.parametrize("n", range(3, 13))
def test_reduced_span_equals_full_image(n):
    assert im_phi_lattice(n) == reduced_phi_span(n)


@pytest.mark.parametrize("n,expected", [(3, 12), (4, 60), (5, 60)])
def test_restricted_order_examples(n, expected):
    r = restricted_boundary_order(n)
    assert r.computed == expected and r.agrees


def test_even_bound_over_s4():
    assert even_order_bound_over_s4(4) == 60
    assert even_order_bound_over_s4(5) is None


def test_im_a_examples():
    assert lattice_contains(im_a_lattice(3), (1, 0, 1))
    assert not lattice_contains(im_a_lattice(4), (0, 1, 0))


@pytest.mark.parametrize("n", [3, 4, 7, 10])
def test_im_a_congruence(n):
    lat = im_a_lattice(n)
    for v in itertools.product(range(-3, 4), repeat=3):
        x, y, z = v
        want = (x + y - z) % 2 == 0 if n % 2 else y % 2 == 0
        assert lattice_contains(lat, v) == want


@pytest.mark.parametrize("n", range(3, 21))
def test_im_phi_inside_im_a(n):
    ima = im_a_lattice(n)
    assert all(lattice_contains(ima, row) for row in im_phi_lattice(n, "c").rows())
    for k in (0, 1, 5, 12):
        for i in (1, 2):
            assert lattice_contains(ima, alpha_lift_coords(n, k, i).as_tuple())


def test_alpha_lift_examples():
    assert alpha_lift_coords(3, 1, 1).as_tuple() == (1, 0, 1)
    assert alpha_lift_coords(4, 1, 1).as_tuple() == (2, 0, 0)
    assert alpha_lift_coords(4, 2, 2).as_tuple() == (0, 0, 12)
    with pytest.raises(ValueError):
        alpha_lift_coords(4, 1, 3)


@pytest.mark.parametrize("n,k,expected", [(3, 1, 36), (4, 1, 120), (4, 6, 10), (5, 10, 6)])
def test_boundary_image_examples(n, k, expected):
    r = boundary_image_order(n, k)
    assert r.computed == expected and r.agrees


def test_boundary_image_trivial_bundle():
    r = boundary_image_order(3, 0)
    assert r.computed == 1 and r.agrees


@pytest.mark.parametrize("n", range(3, 10))
def test_boundary_image_agrees_small(n):
    for k in range(0, n * (n * n - 1) + 1):
        assert boundary_image_order(n, k).agrees


def test_boundary_image_periodic():
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(3, 12)
        k = rng.randint(0, 200)
        c = rng.randint(1, 5)
        period = n * (n * n - 1)
        assert boundary_image_order(n, k).computed == boundary_image_order(n, k + c * period).computed


@pytest.mark.parametrize("n", [3, 7, 11, 15])
def test_invariant_factors_4m_plus_3(n):
    rep = quotient_invariants(phi_rows(n, "c"), im_a_basis(n))
    f = math.factorial
    assert rep.free_rank == 0
    assert rep.invariant_factors == (f(n) // 2, f(n) // 2, f(n + 1) // 2)


def test_invariant_factors_n3_literal():
    assert quotient_invariants(phi_rows(3, "c"), im_a_basis(3)).invariant_factors == (3, 3, 12)


def test_necessary_condition_examples():
    assert necessary_equiv_condition(3, 1, 5)
    assert not necessary_equiv_condition(3, 1, 2)
    assert necessary_equiv_condition(4, 2, 58)
    with pytest.raises(ValueError):
        necessary_equiv_condition(1, 1, 1)


def test_sufficient_condition_examples():
    assert sufficient_equiv_condition(6, 1, 7)
    assert not sufficient_equiv_condition(6, 2, 3)
    assert sufficient_equiv_condition(12, 12, 24)
    with pytest.raises(ValueError):
        sufficient_equiv_condition(0, 1, 1)


def test_p_component_examples():
    assert p_component(2, 12) == 4
    assert p_component(5, 40) == 5
    assert p_component(3, 10) == 1
    with pytest.raises(NotPrime):
        p_component(4, 12)
    with pytest.raises(ValueError):
        p_component(2, 0)


def test_p_component_implication_examples():
    assert p_component_implication(4, 2, 6, 2)
    assert p_component_implication(4, 1, 2, 2)
    with pytest.raises(ValueError):
        p_component_implication(5, 1, 1, 2)


def test_p_component_implication_small_sweep():
    for n in range(4, 21, 2):
        for k in range(1, 41):
            for l in range(1, 41):
                for p in (2, 3, 5):
                    assert p_component_implication(n, k, l, p)


def test_known_orders():
    recs = known_orders()
    su2 = known_order("SU(2)")
    assert (su2.m, su2.m_prime) == (12, 6)
    assert known_order("SU(5)").m_prime is None
    assert known_order("G2") is None
    assert all(r.consistent() for r in recs)


def test_su3_bound_is_attained():
    assert restricted_boundary_order(3).computed == known_order("SU(3)").m_prime


def test_wn_table():
    assert wn_homotopy("even", 2).group == "Z/2"
    assert wn_homotopy("odd", 0).group == "0"
    assert wn_homotopy("odd", -5).group == "0"
    assert wn_homotopy("even", 3).group == "Z+Z/2"
    assert wn_homotopy("odd", 3).group == "Z"
    with pytest.raises(ValueError):
        wn_homotopy("odd", 4)
    with pytest.raises(ValueError):
        wn_homotopy("both", 1)
