import itertools
import math
import random

import pytest

from wittcap import cap as capmod
from wittcap import pg
from wittcap.veronese import classify_conic_plane, veronese_map

EXPECTED_MISSING_PRIME_LITERALS = [
    (0, 0, 0, 1, 0, 1),
    (0, 0, 0, 2, 2, 1),
    (0, 0, 0, 2, 1, 1),
]


def test_internal_partner_value(model, base):
    assert capmod.internal_partner(model, base, (0, 0, 0, 1, 0, 0)) == (1, 0, 0, 1, 0, 0)


def test_internal_partner_is_collinear(model, base):
    for y in model.points:
        if y == base:
            continue
        partner = capmod.internal_partner(model, base, y)
        assert partner in pg.line_through(base, y)


def test_internal_partner_rejects_bad_input(model, base):
    with pytest.raises(ValueError):
        capmod.internal_partner(model, base, base)
    with pytest.raises(ValueError):
        capmod.internal_partner(model, base, (1, 1, 0, 0, 0, 0))


def test_internal_partner_is_a_bijection_onto_the_cap(model, base, cap):
    images = {
        capmod.internal_partner(model, base, y) for y in model.points if y != base
    }
    assert images == cap.points
    assert len(images) == 12


def test_cap_map_values():
    assert capmod.cap_map((0, 1, 0)) == (1, 0, 0, 1, 0, 0)
    assert capmod.cap_map((0, 0, 1)) == (1, 0, 0, 0, 0, 1)
    assert capmod.cap_map((1, 1, 1)) == (1, 2, 2, 2, 2, 2)


def test_cap_map_rejects_the_removed_point():
    with pytest.raises(ValueError, match="domain"):
        capmod.cap_map((1, 0, 0))
    with pytest.raises(ValueError, match="domain"):
        capmod.cap_map((2, 0, 0))  # same projective point


def test_cap_map_agrees_with_internal_partner(model, base):
    for x in capmod.cap_domain():
        assert capmod.cap_map(x) == capmod.internal_partner(
            model, base, veronese_map(x)
        )


def test_both_constructions_agree(model, cap):
    formula = capmod.build_cap_from_formula(model)
    assert cap.points == formula.points
    assert cap.origin == "conics"
    assert formula.origin == "formula"


def test_cap_has_12_points_disjoint_from_surface(model, cap):
    assert len(cap.points) == 12
    assert not cap.points & set(model.points)


def test_cap_rejects_non_surface_base(model):
    with pytest.raises(ValueError):
        capmod.build_cap(model, (1, 1, 0, 0, 0, 0))


def test_no_three_cap_points_collinear(cap):
    assert capmod.is_cap(cap.points)


def test_cap_for_every_base_point(model):
    # the construction is projectively homogeneous
    for p in model.points:
        k = capmod.build_cap(model, p)
        assert len(k.points) == 12
        assert capmod.is_cap(k.points)
        assert capmod.verify_witt(capmod.blocks(k)).ok


def test_block_count_matches_design_counting(design):
    # b = C(12,5) / C(6,5) for a 5-(12,6,1) design
    assert len(design.blocks) == math.comb(12, 5) // math.comb(6, 5) == 132


def test_blocks_are_six_point_sections(cap, design):
    for b in design.blocks:
        assert len(b.points) == 6
        assert b.points == {p for p in cap.points if pg.incident(p, b.prime)}


def test_every_five_subset_in_exactly_one_block(design):
    block_sets = [b.points for b in design.blocks]
    for five in itertools.combinations(sorted(design.points), 5):
        covering = [b for b in block_sets if set(five) <= b]
        assert len(covering) == 1


def test_verify_witt_passes_and_reports_quad_cover(design):
    report = capmod.verify_witt(design)
    assert report.ok
    assert report.block_count == 132
    assert report.quad_cover_constant
    assert report.quad_cover_value == 4


def test_verify_witt_fails_with_witness_on_perturbed_set(model, cap):
    tampered = sorted(cap.points)[:11] + [model.points[0]]
    report = capmod.verify_witt(capmod.blocks(tampered))
    assert not report.ok
    assert report.first_violation is not None
    subset, count = report.first_violation
    assert len(subset) == 5 and count != 1


def test_dual_cap_size_and_literal_primes(dual_cap):
    assert len(dual_cap.primes) == 12
    for raw in EXPECTED_MISSING_PRIME_LITERALS:
        assert pg.canonical_point(raw) in dual_cap.primes


def test_dual_cap_contains_the_nine_osculating_primes(model, base, dual_cap):
    # conics whose preimage lines have nonzero first dual coordinate miss the
    # base, and their osculating primes are the non-exceptional dual points
    nine = {
        model.osculating_primes[c]
        for c in model.conics
        if c.preimage_line[0] != 0
    }
    assert len(nine) == 9
    assert nine <= dual_cap.primes
    for c in model.conics:
        assert (c.preimage_line[0] != 0) == (base not in c.points)


def test_dual_cap_equals_missed_primes(cap, dual_cap):
    assert set(capmod.missed_primes(cap)) == dual_cap.primes
    assert capmod.empty_prime_count(cap) == 12


def test_no_incidence_between_cap_and_dual_cap(cap, dual_cap):
    assert capmod.disjointness_check(cap, dual_cap)


def test_full_prime_scan_has_exactly_12_misses(cap):
    sizes = [
        sum(1 for p in cap.points if pg.incident(p, h))
        for h in pg.enumerate_hyperplanes(5)
    ]
    assert sizes.count(0) == 12
    assert sizes.count(6) == 132
    assert sorted(set(sizes)) == [0, 3, 6]


def test_osculating_primes_through_base_cut_three_cap_points(model, base, cap):
    # regression value: each carries precisely the internal triple of its own
    # conic, the other conics contributing nothing
    for c in model.conics_through(base):
        h = model.osculating_primes[c]
        cut = {p for p in cap.points if pg.incident(p, h)}
        assert cut == classify_conic_plane(c).internal
        assert len(cut) == 3


def test_dual_space_structure_is_again_a_witt_design(cap):
    # read the 12 missed primes as points of the dual space; sections by dual
    # hyperplanes (= points) again give a 5-(12,6,1) design
    dual_points = capmod.missed_primes(cap)
    report = capmod.verify_witt(capmod.blocks(dual_points))
    assert report.ok
    assert report.block_count == 132


def test_vector_identity_check():
    assert capmod.vector_identity_check()


def test_vector_identity_hand_value():
    # u = 0, direction (1,0): v_0 + v_inf must equal 2 v_1 + 2 v_2
    v0 = (0, 0, 0, 1, 0, 0)
    vinf = (1, 0, 0, 0, 0, 0)
    v1 = (1, 1, 0, 1, 0, 0)
    v2 = (1, 2, 0, 1, 0, 0)
    lhs = tuple((a + b) % 3 for a, b in zip(v0, vinf))
    rhs = tuple((2 * (a + b)) % 3 for a, b in zip(v1, v2))
    assert lhs == rhs == (1, 0, 0, 1, 0, 0)


def test_automorphism_order_is_95040(design):
    assert capmod.automorphism_order(design) == 95040


def test_automorphism_order_terminates_on_unstructured_sets():
    rng = random.Random(7)
    pts = rng.sample(pg.enumerate_points(5), 12)
    design = capmod.blocks(pts)
    order = capmod.automorphism_order(design)
    assert order >= 1


def test_automorphism_order_on_blockless_set():
    # no blocks means no constraints: the full symmetric group
    design = capmod.Design(points=tuple(pg.enumerate_points(5)[:4]), blocks=())
    assert capmod.automorphism_order(design) == math.factorial(4)
