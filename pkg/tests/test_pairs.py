import pytest

from hyperforge.carrier import zmod_units
from hyperforge.hyperstruct import field_table, krasner, signs
from hyperforge.carrier import finite_field
from hyperforge.pairs import (
    Pair, check_pair_axioms, check_preceq_distributive, check_property_N, check_surpassing,
    equality_relation, infinity_pair, is_uniquely_negated, negation_map, powerset_circ_matches,
    powerset_pair, relation_from_pairs, subset_relation, supertropical_pair, zero_relation,
)


@pytest.fixture(params=["krasner", "signs", "gf3"])
def ppair(request):
    H = {"krasner": krasner, "signs": signs, "gf3": lambda: field_table(finite_field(3))}[request.param]()
    return powerset_pair(H)


def test_powerset_pair_shape():
    P = powerset_pair(signs())
    assert P.n == 7
    assert [P.labels[e] for e in P.embed] == ["{1}", "{-1}"]
    assert P.null == frozenset(i for i, lab in enumerate(P.labels) if "0" in lab[1:-1].split(","))


def test_powerset_pair_axioms(ppair):
    assert check_pair_axioms(ppair, require_admissible=True).passed


@pytest.mark.parametrize("relation", [subset_relation, zero_relation])
def test_surpassing_relations(ppair, relation):
    rep = check_surpassing(relation(ppair))
    assert rep.passed, rep
    assert rep.info["A_null_equals_A0"]


def test_subset_relation_needs_masks():
    with pytest.raises(ValueError):
        subset_relation(supertropical_pair())


def test_equality_fails_surpasses_null_sum():
    rep = check_surpassing(equality_relation(powerset_pair(krasner())))
    assert not rep.passed
    assert not rep["surpasses_null_sum"].passed


def test_relation_breaking_antichain():
    P = powerset_pair(signs())
    a, b = P.embed
    rep = check_surpassing(relation_from_pairs(P, [(a, b)]))
    assert not rep.passed
    with pytest.raises(ValueError):
        relation_from_pairs(P, [(0, 99)])


def test_powerset_preceq_distributive(ppair):
    rep = check_preceq_distributive(ppair, subset_relation(ppair))
    assert rep.passed


def test_powerset_property_N_and_circ(ppair):
    prop = check_property_N(ppair)
    assert prop.holds
    assert powerset_circ_matches(ppair)


def test_signs_unique_negation():
    v = is_uniquely_negated(powerset_pair(signs()))
    assert v
    assert v.details["negation"] == {"{1}": "{-1}", "{-1}": "{1}"}


def test_infinity_pair_not_uniquely_negated():
    P = infinity_pair(zmod_units(5))
    assert check_property_N(P).holds
    v = is_uniquely_negated(P)
    assert not v
    assert v.witness == ("1", "2")


def test_idempotent_infinity_pair_negation():
    P = infinity_pair(zmod_units(5), idempotent=True)
    nu = negation_map(P)
    assert nu is not None
    assert {P.labels[a]: P.labels[b] for a, b in nu.items()} == {"1": "4", "2": "3", "3": "2", "4": "1"}
    assert not is_uniquely_negated(P)


def test_supertropical_fixture():
    P = supertropical_pair()
    assert check_pair_axioms(P).passed
    R = zero_relation(P)
    assert check_surpassing(R).passed
    assert check_preceq_distributive(P, R).passed
    prop = check_property_N(P)
    assert prop.circ == {"t0": "g0"}
    assert is_uniquely_negated(P)


def test_pair_json_roundtrip(ppair):
    back = Pair.from_json(ppair.to_json())
    assert back.op == ppair.op and back.null == ppair.null and back.embed == ppair.embed


def test_pair_json_rejects_bad_shapes():
    doc = powerset_pair(krasner()).to_json()
    doc["op"] = doc["op"][:-1]
    with pytest.raises(ValueError):
        Pair.from_json(doc)
    doc = powerset_pair(krasner()).to_json()
    doc["op"][0][0] = 42
    with pytest.raises(ValueError):
        Pair.from_json(doc)
    with pytest.raises(ValueError):
        Pair.from_json({"carrier": []})


def test_property_N_needs_T_inside():
    doc = powerset_pair(krasner()).to_json()
    doc["T"] = ["a"]
    P = Pair.from_json(doc)
    with pytest.raises(ValueError):
        check_property_N(P)
