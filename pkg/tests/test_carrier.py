import itertools

import pytest

from hyperforge.carrier import (NEG_INF, AxiomError, Kernel, congruence_from_kernel, field_semifield,
                                finite_field, is_kernel, is_normal_submonoid, kernel_from_congruence,
                                kernel_of, make_finite_field, matrix_ring, max_plus_integers, prime_powers,
                                residue_monoid, subgroup_of_order, symmetric_group, unit_subgroups, zmod,
                                zmod_units)


def names(R, members):
    return sorted(R.elements[i] for i in members)


def test_gf2_one_plus_one_is_zero():
    F = make_finite_field(2, 1)
    assert F.add[F.one][F.one] == F.zero


def test_gf4_generator_satisfies_least_irreducible():
    F = make_finite_field(2, 2)
    w = F.index("w")
    assert F.mul[w][w] == F.add[w][F.one]


def test_gf5_inverse_pair():
    F = make_finite_field(5, 1)
    assert F.mul[F.index("2")][F.index("3")] == F.one


@pytest.mark.parametrize("q", prime_powers(32))
def test_field_axioms_exhaustive(q):
    F = finite_field(q)
    n = F.n
    assert F.is_field and F.commutative
    for a, b, c in itertools.product(range(n), repeat=3):
        assert F.mul[a][F.add[b][c]] == F.add[F.mul[a][b]][F.mul[a][c]]
    assert all(any(F.mul[a][b] == F.one for b in range(n)) for a in range(n) if a != F.zero)


def test_unit_subgroups_of_gf5_and_gf7():
    F5 = finite_field(5)
    assert [G.order for G in unit_subgroups(F5)] == [1, 2, 4]
    assert names(F5, subgroup_of_order(F5, 2).members) == ["1", "4"]
    F7 = finite_field(7)
    assert [G.order for G in unit_subgroups(F7)] == [1, 2, 3, 6]
    assert names(F7, subgroup_of_order(F7, 3).members) == ["1", "2", "4"]
    assert [G.order for G in unit_subgroups(finite_field(2))] == [1]


@pytest.mark.parametrize("q", prime_powers(32))
def test_subgroup_count_is_divisor_count(q):
    d = sum(1 for k in range(1, q) if (q - 1) % k == 0)
    assert len(unit_subgroups(finite_field(q))) == d


def test_normality_in_s3():
    S3 = symmetric_group(3)
    e, t = S3.neutral, S3.index("(1 2)")
    assert not is_normal_submonoid(S3, {e, t})
    a3 = {S3.index(x) for x in ("()", "(1 2 3)", "(1 3 2)")}
    assert is_normal_submonoid(S3, a3)


def test_abelian_subgroups_are_normal():
    U = zmod_units(7)
    for members in ({0}, {U.index("1"), U.index("6")}, set(range(U.n))):
        assert is_normal_submonoid(U, members)


def test_residue_monoid_mod_seven():
    U = zmod_units(7)
    Q, cmap, is_group = residue_monoid(U, {U.index("1"), U.index("6")})
    assert Q.n == 3 and is_group
    assert Q.elements == ("G", "2G", "3G")
    assert Q.is_group()


def test_residue_by_trivial_and_full_subgroup():
    U = zmod_units(5)
    Q, _, _ = residue_monoid(U, {U.neutral})
    assert Q.op == U.op
    Q, _, _ = residue_monoid(U, set(range(U.n)))
    assert Q.n == 1


def test_residue_rejects_non_normal():
    S3 = symmetric_group(3)
    with pytest.raises(AxiomError):
        residue_monoid(S3, {S3.neutral, S3.index("(1 2)")})


def test_max_plus_kernels():
    S = max_plus_integers(8)
    assert is_kernel(S, Kernel("Z", lambda x: x != NEG_INF)).passed
    assert is_kernel(S, kernel_of(S, [0])).passed
    v = is_kernel(S, Kernel("2Z", lambda x: x != NEG_INF and x % 2 == 0))
    assert not v.passed and v.witness == (0, 2, 0, -1)


def test_trivial_kernel_gives_equality():
    S = max_plus_integers(4)
    C = congruence_from_kernel(S, kernel_of(S, [0]))
    assert all(len(c) == 1 for c in C.classes)
    K = kernel_from_congruence(S, C)
    assert [x for x in S.elements if x in K] == [0]


def test_full_kernel_gives_single_nonzero_class():
    S = max_plus_integers(4)
    C = congruence_from_kernel(S, Kernel("Z", lambda x: x != NEG_INF))
    assert sorted(len(c) for c in C.classes) == [1, len(S.elements) - 1]


def test_field_units_are_not_convex():
    F = field_semifield(finite_field(5))
    v = is_kernel(F, kernel_of(F, F.nonzero()))
    assert not v.passed and v.note.startswith("0 not in")


def test_field_semifield_kernel_roundtrip():
    F = field_semifield(finite_field(5))
    K = kernel_of(F, [F.one])
    assert is_kernel(F, K)
    K2 = kernel_from_congruence(F, congruence_from_kernel(F, K))
    assert all((x in K) == (x in K2) for x in F.elements)


def test_matrix_ring_is_noncommutative_with_unit():
    M = matrix_ring(finite_field(2), 2)
    assert M.n == 16 and not M.commutative
    assert M.elements[M.one] == "10/01"


def test_zmod_eight_units():
    R = zmod(8)
    assert sorted(R.elements[u] for u in R.units()) == ["1", "3", "5", "7"]
