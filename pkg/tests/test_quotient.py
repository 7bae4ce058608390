import random
from fractions import Fraction

import pytest

from hyperforge import elemset as es
from hyperforge.carrier import AxiomError, finite_field, matrix_ring, symmetric_group, unit_subgroups, zmod
from hyperforge.catalog import left_ideal
from hyperforge.hyperstruct import check_hyperfield, field_table, krasner, signs
from hyperforge.quotient import (check_ee_identity, check_mhyper_distributivity, coset_hypermonoid,
                                 e_element, krasner_quotient, m_hyper_from_additive_subgroup, m_hyperring,
                                 module_over_units, multiplicative_cosets, quotient_hypermodule,
                                 rational_sampler, sampled_quotient)


def units(R, *names):
    return frozenset(R.index(x) for x in names)


def sums(H):
    return {(H.elements[a], H.elements[b]): {H.elements[x] for x in es.members(H.hsum[a][b])}
            for a in range(H.n) for b in range(H.n)}


def test_gf3_full_units_is_krasner():
    R = finite_field(3)
    Q = krasner_quotient(R, units(R, "1", "2"))
    assert Q.same_table(krasner())
    assert Q.fmt(Q.hsum[1][1]) == "{0,1}"


def test_gf5_quadratic_residues():
    R = finite_field(5)
    Q = krasner_quotient(R, units(R, "1", "4"))
    s = sums(Q)
    # 1 stands for the residues {1,4}, 2 for the non-residues {2,3}
    assert s[("1", "1")] == {"0", "2"}
    assert s[("1", "2")] == {"1", "2"}
    assert s[("2", "2")] == {"0", "1"}
    assert Q.elements[Q.mul[2][2]] == "1"


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_trivial_subgroup_recovers_the_field(q):
    R = finite_field(q)
    assert krasner_quotient(R, {R.one}).same_table(field_table(R))


def test_quotient_rejects_non_subgroup():
    R = finite_field(7)
    with pytest.raises(AxiomError):
        krasner_quotient(R, units(R, "1", "3"))


def test_cosets_order():
    R = finite_field(7)
    sp = multiplicative_cosets(R, units(R, "1", "2", "4"))
    assert [R.elements[min(c)] for c in sp.cosets] == ["0", "1", "3"]


def test_hypermodule_matches_quotient_table():
    R = finite_field(5)
    M = module_over_units(R)
    U = M.scalars
    G = {U.index("1"), U.index("4")}
    table, action, TG = quotient_hypermodule(M, G)
    assert table.hsum == krasner_quotient(R, units(R, "1", "4")).hsum
    assert TG.n == 2


def test_hypermodule_over_trivial_group_is_module():
    R = finite_field(5)
    M = module_over_units(R)
    table, _, _ = quotient_hypermodule(M, {M.scalars.neutral})
    assert all(es.size(m) == 1 for row in table.hsum for m in row)


def test_hypermodule_gf7_cubes():
    R = finite_field(7)
    M = module_over_units(R)
    U = M.scalars
    table, _, _ = quotient_hypermodule(M, {U.index(x) for x in ("1", "2", "4")})
    assert table.n == 3
    one = table.index("1")
    assert table.fmt(table.hsum[one][one]) == "{1,3}"


def test_coset_hypermonoid_normal_collapses():
    S3 = symmetric_group(3)
    a3 = {S3.index(x) for x in ("()", "(1 2 3)", "(1 3 2)")}
    H, _ = coset_hypermonoid(S3, a3)
    assert H.n == 2 and all(es.size(m) == 1 for row in H.hsum for m in row)


def test_coset_hypermonoid_s3_right_and_double():
    S3 = symmetric_group(3)
    G = {S3.neutral, S3.index("(1 2)")}
    H, sp = coset_hypermonoid(S3, G, "right")
    assert H.n == 3
    g = H.index("G")
    assert H.hsum[g][g] == es.single(g)
    b = sp.index_of[S3.index("(1 2 3)")]
    assert es.size(H.hsum[b][b]) >= 2
    D, _ = coset_hypermonoid(S3, G, "double")
    assert D.n == 2


def test_mhyperring_two_sided_ideal_collapses():
    M = m_hyperring(zmod(4), {0, 2})
    assert M.is_singleton_valued()
    one = M.coset(1)
    assert M.hmul[one][one] == es.single(one)


def test_mhyperring_left_ideal_is_multivalued():
    R = matrix_ring(finite_field(2), 2)
    M = m_hyperring(R, left_ideal(R, "col0"))
    assert M.n == 4
    assert any(es.size(m) >= 2 for row in M.hmul for m in row)
    rep = check_mhyper_distributivity(M)
    assert rep.passed


def test_mhyperring_zero_ideal_is_the_ring():
    R = zmod(6)
    M = m_hyperring(R, {0})
    assert all(M.hmul[M.coset(a)][M.coset(b)] == es.single(M.coset(R.mul[a][b]))
               for a in range(R.n) for b in range(R.n))


def test_non_left_ideal_rejected():
    R = matrix_ring(finite_field(2), 2)
    with pytest.raises(AxiomError):
        m_hyperring(R, {R.zero, R.index("01/00")})


def test_additive_subgroup_products():
    S = m_hyper_from_additive_subgroup(zmod(4), {0, 2})
    one = S.coset(1)
    assert S.hmul[one][one] == es.single(one)
    S8 = m_hyper_from_additive_subgroup(zmod(8), {0, 4})
    assert S8.hmul[S8.coset(1)][S8.coset(3)] == es.mask([S8.coset(3), S8.coset(7)])
    assert S8.coset(3) == S8.coset(7)
    Z = m_hyper_from_additive_subgroup(zmod(5), {0})
    assert Z.is_singleton_valued()


def test_ee_identity_examples():
    R5 = finite_field(5)
    v = check_ee_identity(R5, units(R5, "1", "4"))
    assert v.passed
    assert v.details["ee"] == v.details["e+e"] == "{0,1,2}"
    R3 = finite_field(3)
    v = check_ee_identity(R3, units(R3, "1", "2"))
    assert v.passed and v.details["e+e"] == "{0,1}" and v.details["e*e_elementwise"] == "{0,1}"


def test_ee_identity_skipped_without_minus_one():
    R = finite_field(7)
    v = check_ee_identity(R, units(R, "1", "2", "4"))
    assert v.details["skipped"]


@pytest.mark.parametrize("q", [3, 5, 7, 9, 11, 13])
def test_zero_in_a_plus_a_when_minus_one_in_g(q):
    R = finite_field(q)
    G = units(R, "1", R.elements[R.neg(R.one)])
    Q = krasner_quotient(R, G)
    assert all(es.contains(Q.hsum[a][a], Q.zero) for a in range(Q.n))
    assert es.contains(e_element(Q), Q.zero)


@pytest.mark.parametrize("q", [4, 8, 9, 16, 25, 27])
def test_prime_power_quotients_are_hyperfields(q):
    R = finite_field(q)
    for G in unit_subgroups(R):
        assert check_hyperfield(krasner_quotient(R, G.members)).passed


def _sign(x):
    return (x > 0) - (x < 0)


def test_sampled_rationals_mod_positives_give_signs():
    draw = rational_sampler(5)
    expected = {(a, b): ({a} if a == b or b == 0 else {b} if a == 0 else {-1, 0, 1})
                for a in (-1, 0, 1) for b in (-1, 0, 1)}
    table, rep = sampled_quotient([0, 1, -1], _sign, lambda x, y: x + y, lambda g, b: g * b, draw,
                                  budget=200, expected=expected, labels=["0", "1", "-1"])
    assert rep.sound and rep.summary() == "all expected cosets witnessed"
    assert table.hsum == signs().hsum
    one, neg = table.index("1"), table.index("-1")
    assert table.hsum[one][neg] == es.full(3)


def test_sampled_full_units_give_krasner():
    draw = rational_sampler(4, signs=(1, -1))
    table, rep = sampled_quotient([0, 1], lambda x: int(x != 0), lambda x, y: x + y,
                                  lambda g, b: g * b, draw, budget=200)
    assert table.hsum == krasner().hsum


def test_sampled_zero_budget():
    table, rep = sampled_quotient([0, 1], lambda x: int(x != 0), lambda x, y: x + y,
                                  lambda g, b: g * b, rational_sampler(), budget=0)
    assert table is None and rep.summary() == "no witnesses"


def test_sampled_values_are_exact_fractions():
    draw = rational_sampler(3)
    assert isinstance(draw(random.Random(0)), Fraction)
