from fractions import Fraction

import pytest

from hyperforge.symbolic import (
    KRASNER, NEG_INF, PHASE, SIGNED_TROPICAL, SIGNS, TROPICAL, ZERO, FIELDS,
    FieldMismatch, distributivity_gap, get_field, powerset_sides, spot_check_axioms,
)

F = Fraction


def test_tropical_distinct_sum_is_max():
    assert TROPICAL.hsum(3, 5) == TROPICAL.points([5])
    assert TROPICAL.hsum(5, 3) == TROPICAL.points([5])


def test_tropical_equal_sum_is_ray():
    v = TROPICAL.hsum(4, 4)
    assert v == TROPICAL.ray_value(4)
    assert TROPICAL.contains(v, NEG_INF)
    assert TROPICAL.contains(v, F(-100))
    assert TROPICAL.contains(v, 4)
    assert not TROPICAL.contains(v, F(9, 2))


def test_tropical_ray_plus_ray():
    out = TROPICAL.hsum_sets(TROPICAL.ray_value(2), TROPICAL.ray_value(5))
    assert out == TROPICAL.ray_value(5)


def test_tropical_zero_is_neutral():
    assert TROPICAL.hsum(NEG_INF, 7) == TROPICAL.points([7])


def test_signed_tropical_balance():
    v = SIGNED_TROPICAL.hsum((1, 3), (-1, 3))
    for x in [(1, 3), (-1, 3), (1, F(1, 2)), (-1, -8), NEG_INF]:
        assert SIGNED_TROPICAL.contains(v, x)
    assert not SIGNED_TROPICAL.contains(v, (1, 4))


def test_signed_tropical_dominant_term():
    assert SIGNED_TROPICAL.hsum((1, 2), (-1, 5)) == SIGNED_TROPICAL.points([(-1, 5)])


def test_phase_antipodal_sum():
    v = PHASE.hsum(F(0), F(1, 2))
    assert v == PHASE.points([F(0), F(1, 2), ZERO])


def test_phase_quarter_turn_is_closed_arc():
    v = PHASE.hsum_sets(PHASE.points([F(0)]), PHASE.points([F(1, 4)]))
    assert v == PHASE.arc(F(0), F(1, 4))
    assert PHASE.contains(v, F(1, 8))
    assert not PHASE.contains(v, F(3, 8))
    assert not PHASE.contains(v, ZERO)


def test_phase_open_arc_endpoints():
    arc = PHASE.arc(F(0), F(1, 4), open_lo=True, open_hi=False)
    assert not PHASE.contains(arc, F(0))
    assert PHASE.contains(arc, F(1, 4))


@pytest.mark.parametrize("x", [F(k, 8) for k in range(8)])
@pytest.mark.parametrize("y", [F(k, 8) for k in range(8)])
def test_phase_set_sum_agrees_with_element_rule(x, y):
    assert PHASE.hsum_sets(PHASE.points([x]), PHASE.points([y])) == PHASE.hsum(x, y)


def test_phase_rotation_scales():
    v = PHASE.scale(F(1, 4), PHASE.arc(F(0), F(1, 4)))
    assert v == PHASE.arc(F(1, 4), F(1, 2))


def test_finite_rule_fields():
    assert KRASNER.hsum(1, 1) == KRASNER.points([0, 1])
    assert SIGNS.hsum(1, -1) == SIGNS.points([-1, 0, 1])
    assert SIGNS.hsum(1, 1) == SIGNS.points([1])


@pytest.mark.parametrize("name", sorted(FIELDS))
def test_spot_check_passes(name):
    rep = spot_check_axioms(FIELDS[name])
    assert rep.passed, rep


def test_phase_distributivity_gap_example():
    lhs, rhs = powerset_sides(PHASE, [F(0), F(1, 4)], [F(0)], [F(1, 2)])
    assert PHASE.is_subset(lhs, rhs)
    assert PHASE.contains(rhs, F(7, 8))
    assert not PHASE.contains(lhs, F(7, 8))


def test_phase_gap_search_finds_reverified_point():
    w = distributivity_gap(PHASE, budget=5000)
    assert w.found
    assert PHASE.contains(w.rhs, w.point)
    assert not PHASE.contains(w.lhs, w.point)
    assert not w.inclusion_violations
    doc = w.to_json(PHASE)
    assert doc["found"] and "point" in doc


def test_krasner_has_no_gap():
    w = distributivity_gap(KRASNER)
    assert not w.found
    assert not w.inclusion_violations


def test_signs_gap_from_both_signs():
    w = distributivity_gap(SIGNS)
    assert w.found and w.point == 0
    assert set(w.S) == {-1, 1}


def test_singleton_scalar_distributes_tropical():
    lhs, rhs = powerset_sides(TROPICAL, [F(1)], [F(0), F(2)], [F(2)])
    assert lhs == rhs


def test_gap_budget_exhaustion():
    w = distributivity_gap(PHASE, budget=1)
    assert not w.found and w.checked == 1


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        TROPICAL.union(TROPICAL.points([1]), PHASE.points([F(0)]))
    with pytest.raises(FieldMismatch):
        PHASE.hsum(F(0), "north")


def test_get_field_accepts_hyphens():
    assert get_field("signed-tropical") is SIGNED_TROPICAL
    with pytest.raises(KeyError):
        get_field("complex")
