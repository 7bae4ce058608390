"""Acceptance suite: twelve criteria, each printed as one PASS/FAIL line.

Run under pytest (lines appear in the terminal summary) or directly:

    python3 tests/test_acceptance.py
"""

from __future__ import annotations

import itertools
import random
import sys
from dataclasses import dataclass

import pytest

from hyperforge import elemset as es
from hyperforge.carrier import (NEG_INF, Kernel, boolean_semifield, congruence_from_kernel, cyclic_group,
                                field_semifield, finite_field, is_congruence, is_kernel, kernel_from_congruence,
                                kernel_of, matrix_ring, max_plus_integers, prime_powers, symmetric_group,
                                unit_subgroups, zmod, zmod_units)
from hyperforge.catalog import left_ideal, tensor_fixture
from hyperforge.constructs import tensor_product, tensor_relations
from hyperforge.hyperstruct import check_hyperfield, krasner, signs
from hyperforge.morphisms import (MapArrow, frobenius, functor_laws, induced_residue_morphism,
                                  is_preceq_morphism, is_t_subset_morphism, is_weak_morphism, iso_search,
                                  powerset_extension, residue_map, third_isomorphism)
from hyperforge.pairs import (check_pair_axioms, check_property_N, check_surpassing, infinity_pair,
                              is_uniquely_negated, powerset_circ_matches, powerset_pair, subset_relation)
from hyperforge.quotient import check_ee_identity, check_mhyper_distributivity, krasner_quotient, m_hyperring
from hyperforge.skewpoly import (PumpluenAlgebra, SkewRing, crosscheck_mhyperring, nonassociativity_witness)
from hyperforge.symbolic import KRASNER, PHASE, distributivity_gap, powerset_sides

LINES: list[str] = []


@dataclass
class Outcome:
    passed: bool
    detail: str


def _line(num: int, title: str, out: Outcome) -> str:
    return f"[{'PASS' if out.passed else 'FAIL'}] criterion {num:2d} {title}: {out.detail}"


# ---------------------------------------------------------------- 1


def criterion_1() -> Outcome:
    K = krasner()
    bad = []
    for q in prime_powers(32):
        R = finite_field(q)
        if not krasner_quotient(R, R.units()).same_table(K):
            bad.append(q)
    if bad:
        R = finite_field(2)
        Q = krasner_quotient(R, R.units())
        return Outcome(False, f"mismatch at q={bad}; GF(2)/GF(2)x has 1+1 = {Q.fmt(Q.hsum[1][1])}, "
                              f"Krasner has {{0,1}}; all other q match")
    return Outcome(True, f"{len(prime_powers(32))} fields match exactly")


# ---------------------------------------------------------------- 2


def criterion_2() -> Outcome:
    count, bad = 0, None
    for q in prime_powers(32):
        R = finite_field(q)
        for G in unit_subgroups(R):
            count += 1
            rep = check_hyperfield(krasner_quotient(R, G.members))
            if not rep.passed and bad is None:
                bad = (q, G.names(), [r.name for r in rep.failures()])
    if bad:
        return Outcome(False, f"{bad}")
    return Outcome(True, f"{count} quotients, zero failures")


# ---------------------------------------------------------------- 3


def _brute_q5():
    """Coset sums of {1,4} in Z/5 computed from scratch: 0, Q={1,4}, N={2,3}."""
    cls = {0: "0", 1: "Q", 4: "Q", 2: "N", 3: "N"}
    reps = {"Q": [1, 4], "N": [2, 3], "0": [0]}
    hs = {(a, b): frozenset(cls[(x + y) % 5] for x in reps[a] for y in reps[b]) for a in reps for b in reps}
    mul = {(a, b): frozenset(cls[(x * y) % 5] for x in reps[a] for y in reps[b]) for a in reps for b in reps}
    return hs, mul


def criterion_3() -> Outcome:
    R = finite_field(5)
    Q = krasner_quotient(R, {R.index("1"), R.index("4")})
    name = {"0": "0", "1": "Q", "2": "N"}
    hs, mul = _brute_q5()
    for a, b in itertools.product(range(3), repeat=2):
        got = frozenset(name[Q.elements[x]] for x in es.members(Q.hsum[a][b]))
        if got != hs[(name[Q.elements[a]], name[Q.elements[b]])]:
            return Outcome(False, f"hypersum mismatch at {Q.elements[a]},{Q.elements[b]}")
        if mul[(name[Q.elements[a]], name[Q.elements[b]])] != {name[Q.elements[Q.mul[a][b]]]}:
            return Outcome(False, f"product mismatch at {Q.elements[a]},{Q.elements[b]}")
    spelled = hs[("Q", "Q")] == {"0", "N"} and hs[("Q", "N")] == {"Q", "N"} and \
        hs[("N", "N")] == {"0", "Q"} and mul[("N", "N")] == {"Q"}
    iso = iso_search(Q, signs())
    ok = spelled and not iso.found
    return Outcome(ok, f"table exact; iso to signs: {iso.mapping} after {iso.nodes_explored} nodes")


# ---------------------------------------------------------------- 4


def criterion_4() -> Outcome:
    checked, bad, differs = 0, None, 0
    for q in prime_powers(32):
        R = finite_field(q)
        for G in unit_subgroups(R):
            v = check_ee_identity(R, G.members)
            if v.details.get("skipped"):
                continue
            checked += 1
            if not v.details["elementwise_equal"]:
                differs += 1
            if not v.passed and bad is None:
                bad = (q, G.names(), v.witness)
    if bad:
        return Outcome(False, f"ee ≠ e+e at {bad}")
    return Outcome(checked > 0, f"{checked} quotients with -1 in G; ring-level ee = e+e on all "
                                f"(elementwise set product differs on {differs})")


# ---------------------------------------------------------------- 5


def _third_iso_fixtures():
    out = []
    for q in (5, 7, 9, 13, 16, 17, 19, 25):
        R = finite_field(q)
        subs = unit_subgroups(R)
        for G, G1 in itertools.combinations(subs, 2):
            if G.members < G1.members:
                out.append((R, G.members, G1.members))
    return out


def _sign_hom():
    S3 = symmetric_group(3)
    C2 = cyclic_group(2)

    def parity(name):
        if name == "()":
            return 0
        return sum(len(c.split()) - 1 for c in name.strip("()").split(")(")) % 2

    return MapArrow(S3, C2, tuple(parity(x) for x in S3.elements), "sign")


def _power_hom(n, k):
    U = zmod_units(n)
    table = tuple(U.index(str(pow(int(x), k, n))) for x in U.elements)
    return MapArrow(U, U, table, f"x^{k} mod {n}")


def _reduction(n, m):
    C, D = cyclic_group(n), cyclic_group(m)
    return MapArrow(C, D, tuple(k % m for k in range(n)), f"C{n}->C{m}")


def induced_fixtures():
    sign = _sign_hom()
    S3 = sign.domain
    transp = frozenset({S3.neutral, S3.index("(1 2)")})
    a3 = frozenset(i for i in range(S3.n) if sign(i) == 0)
    p7, p13 = _power_hom(7, 5), _power_hom(13, 5)
    U7, U13 = p7.domain, p13.domain

    def sub(U, names):
        return frozenset(U.index(x) for x in names)

    return [
        (sign, transp), (sign, a3), (sign, frozenset({S3.neutral})),
        (p7, sub(U7, ["1", "6"])), (p7, sub(U7, ["1", "2", "4"])),
        (p13, sub(U13, ["1", "12"])), (p13, sub(U13, ["1", "5", "8", "12"])),
        (_reduction(6, 3), frozenset({0, 3})), (_reduction(6, 3), frozenset({0, 2, 4})),
        (_reduction(6, 2), frozenset({0, 3})), (_reduction(4, 2), frozenset({0, 2})),
    ]


def criterion_5() -> Outcome:
    fixtures = _third_iso_fixtures()
    names = []
    for R, G, G1 in fixtures:
        res = third_isomorphism(R, G, G1)
        if not res.verdict:
            return Outcome(False, f"third isomorphism fails on {R.name} {sorted(G)} ⊆ {sorted(G1)}")
        names.append(R.name)
    R13 = finite_field(13)
    g13 = frozenset(R13.index(x) for x in ("1", "12"))
    g13b = frozenset(R13.index(x) for x in ("1", "5", "8", "12"))
    has13 = any(R is R13 or (R.name == R13.name and G == g13 and G1 == g13b) for R, G, G1 in fixtures)
    named = third_isomorphism(R13, g13, g13b).verdict.passed
    induced = induced_fixtures()
    bad = [f.name for f, G in induced if not induced_residue_morphism(f, G).verdict]
    ok = len(fixtures) >= 10 and has13 and named and not bad
    return Outcome(ok, f"{len(fixtures)} third-iso fixtures pass (GF(13) {{1,12}} ⊆ {{1,5,8,12}}: {named}); "
                       f"induced ⊆-inclusion on {len(induced)} arrows, failures {bad}")


# ---------------------------------------------------------------- 6


def criterion_6() -> Outcome:
    M2 = matrix_ring(finite_field(2), 2)
    M = m_hyperring(M2, left_ideal(M2, "col0"))
    rep = check_mhyper_distributivity(M)
    checked = rep["left_distributive_inclusion"].checked
    two_sided = [(M2, left_ideal(M2, "zero")), (M2, left_ideal(M2, "all")),
                 (zmod(4), frozenset({0, 2})), (zmod(8), frozenset({0, 4})), (zmod(6), frozenset({0, 3}))]
    collapsed = all(m_hyperring(R, L).is_singleton_valued() for R, L in two_sided)
    ok = rep.passed and collapsed and not M.is_singleton_valued()
    return Outcome(ok, f"{M.n} cosets, multivalued, {checked} triples pass; "
                       f"{len(two_sided)} two-sided fixtures singleton-valued: {collapsed}")


# ---------------------------------------------------------------- 7


def criterion_7() -> Outcome:
    R5 = finite_field(5)
    tables = [krasner(), signs(), krasner_quotient(R5, {R5.index("1"), R5.index("4")})]
    parts = []
    for H in tables:
        P = powerset_pair(H)
        ok = (check_pair_axioms(P).passed and check_surpassing(subset_relation(P)).passed
              and check_property_N(P).holds and powerset_circ_matches(P).passed
              and is_uniquely_negated(P).passed)
        parts.append(ok)
    inf = infinity_pair(zmod_units(3))
    prop = check_property_N(inf)
    un = is_uniquely_negated(inf)
    ok = all(parts) and prop.holds and not un.passed and un.witness is not None
    return Outcome(ok, f"power-set pairs {parts}; infinity pair Property N {prop.holds}, "
                       f"unique negation fails at {un.witness}")


# ---------------------------------------------------------------- 8


def criterion_8() -> Outcome:
    gap = distributivity_gap(PHASE, budget=10_000)
    verified = False
    if gap.found:
        lhs, rhs = powerset_sides(PHASE, gap.S, gap.S1, gap.S2)
        verified = (PHASE.is_subset(lhs, rhs) and lhs != rhs
                    and PHASE.contains(rhs, gap.point) and not PHASE.contains(lhs, gap.point))
    kpool = list(KRASNER.default_sample())
    kgap = distributivity_gap(KRASNER, budget=10_000, pool=kpool)
    exhaustive = kgap.checked == (2 ** len(kpool) - 1) ** 3
    ok = gap.found and verified and gap.checked <= 10_000 and not kgap.found and exhaustive
    enc = PHASE.encode
    return Outcome(ok, f"phase witness S={[enc(x) for x in gap.S]} S1={[enc(x) for x in gap.S1]} "
                       f"S2={[enc(x) for x in gap.S2]} point {enc(gap.point)} after {gap.checked} "
                       f"triples (re-verified {verified}); Krasner {kgap.checked} triples, no gap")


# ---------------------------------------------------------------- 9


def morphism_objects():
    R5 = finite_field(5)
    return [krasner(), signs(), krasner_quotient(R5, {R5.index("1"), R5.index("4")})]


def table_arrows(objects):
    """Every zero-preserving map between the fixture tables."""
    out = []
    for A in objects:
        for B in objects:
            for table in itertools.product(range(B.n), repeat=A.n):
                if table[A.zero] == B.zero:
                    out.append(MapArrow(A, B, table, f"{A.name}->{B.name}:{table}"))
    return out


def pair_arrows(objects):
    """Extensions of all fixture maps plus maps that are not extensions."""
    arrows = []
    for f in table_arrows(objects):
        PA, PB = powerset_pair(f.domain), powerset_pair(f.codomain)
        pos = {m: i for i, m in enumerate(PB.masks)}
        arrows.append(MapArrow(PA, PB, tuple(pos[f.image(m)] for m in PA.masks), f"P{f.name}"))
    for H in objects:
        P = powerset_pair(H)
        arrows.append(MapArrow(P, P, tuple(P.iota for _ in range(P.n)), f"const-ι {H.name}"))
        full = P.index(H.fmt(es.full(H.n)))
        arrows.append(MapArrow(P, P, tuple(full for _ in range(P.n)), f"const-top {H.name}"))
    return arrows


def criterion_9() -> Outcome:
    objects = morphism_objects()
    exceptions, preceq_count = [], 0
    parrows = pair_arrows(objects)
    for F in parrows:
        if is_preceq_morphism(F):
            preceq_count += 1
            if not is_weak_morphism(F):
                exceptions.append(F.name)
    subset_arrows = [f for f in table_arrows(objects) if is_t_subset_morphism(f)]
    ext_bad = []
    for f in subset_arrows:
        ext = powerset_extension(f)
        if not (ext.preceq and ext.null_contained):
            ext_bad.append(f.name)
    comps = [(g, f) for f in subset_arrows for g in subset_arrows
             if g.domain is f.codomain]
    laws = functor_laws("powerset", subset_arrows, comps, objects)
    R9 = finite_field(9)
    G = unit_subgroups(R9)[1].members
    fr = residue_map(R9, G, R9, G, frobenius(R9, 1), "frob")
    fr2 = residue_map(R9, G, R9, G, frobenius(R9, 2), "frob^2")
    R27 = finite_field(27)
    H = unit_subgroups(R27)[1].members
    f1, f2, f3 = (residue_map(R27, H, R27, H, frobenius(R27, k), f"frob^{k}") for k in (1, 2, 3))
    res_laws = functor_laws("residue", [fr, fr2, f1, f2, f3], [(fr, fr, fr2), (f1, f1, f2), (f2, f1, f3)],
                            [fr.domain, f1.domain])
    ok = not exceptions and not ext_bad and laws.passed and res_laws.passed
    return Outcome(ok, f"{preceq_count}/{len(parrows)} pair arrows are ⪯-morphisms, weak exceptions "
                       f"{len(exceptions)}; {len(subset_arrows)} ⊆-morphisms extend (failures {len(ext_bad)}); "
                       f"functor laws on {len(comps)} compositions: {laws.passed}, residue: {res_laws.passed}")


# --------------------------------------------------------------- 10


def criterion_10(shuffles: int = 10, seed: int = 0) -> Outcome:
    M1, M2 = tensor_fixture()
    Tp = tensor_product(M1, M2, depth=2)
    bal = all(Tp.balanced(x1, a, x2) for a in range(M1.t_n) for x1 in range(M1.n) for x2 in range(M2.n))
    bil = [Tp.bilinear_left(m, n, x2) for m in range(M1.n) for n in range(M1.n) for x2 in range(M2.n)]
    bil += [Tp.bilinear_right(x1, m, n) for x1 in range(M1.n) for m in range(M2.n) for n in range(M2.n)]
    bilinear = all(b is True for b in bil)
    base = Tp.closure.partition()
    rng = random.Random(seed)
    n_rel = len(tensor_relations(M1, M2, Tp.universe, Tp.generators))
    same = 0
    for _ in range(shuffles):
        order = list(range(n_rel))
        rng.shuffle(order)
        if tensor_product(M1, M2, depth=2, order=order).closure.partition() == base:
            same += 1
    ok = bal and bilinear and same == shuffles and Tp.closure.is_congruence()
    return Outcome(ok, f"{len(Tp.universe)} terms, {len(Tp.classes())} classes; balanced {bal}, "
                       f"bilinear on {len(bil)} instances {bilinear}; {same}/{shuffles} shuffles agree")


# --------------------------------------------------------------- 11


def criterion_11() -> Outcome:
    S = SkewRing(finite_field(4), 1)
    A = PumpluenAlgebra(S, S.parse("x^2+w"))
    x = S.parse("x")
    xx = A.mul(x, x)
    v = crosscheck_mhyperring(A, samples=50, seed=0)
    wit = nonassociativity_witness(A)
    reverified = False
    if wit is not None:
        a, b, c = (A.elements[i] for i in wit)
        reverified = A.mul(A.mul(a, b), c) != A.mul(a, A.mul(b, c))
    ok = xx == S.parse("w") and v.passed and v.checked == 50 and reverified
    trip = None if wit is None else tuple(S.fmt(A.elements[i]) for i in wit)
    return Outcome(ok, f"[x][x] = {S.fmt(xx)}; crosscheck {v.checked} pairs {v.passed}; "
                       f"nonassociative at {trip} (re-verified {reverified})")


# --------------------------------------------------------------- 12


def criterion_12() -> Outcome:
    S = max_plus_integers(8)
    even = Kernel("2Z", lambda x: x != NEG_INF and x % 2 == 0)
    v_even = is_kernel(S, even)
    trivial = is_kernel(S, kernel_of(S, [0]))
    whole = is_kernel(S, Kernel("Z", lambda x: x != NEG_INF))
    roundtrips = 0
    for F in [boolean_semifield()] + [field_semifield(finite_field(q)) for q in (2, 3, 4, 5, 7)]:
        nz = F.nonzero()
        subs = [frozenset(c) for r in range(1, len(nz) + 1) for c in itertools.combinations(nz, r)]
        for members in subs:
            if F.one not in members:
                continue
            K = kernel_of(F, members)
            try:
                if not is_kernel(F, K):
                    continue
            except ValueError:
                continue
            C = congruence_from_kernel(F, K)
            if not is_congruence(F, C):
                return Outcome(False, f"{F.name}: kernel {K.name} gives a non-congruence")
            K2 = kernel_from_congruence(F, C)
            if any((x in K) != (x in K2) for x in F.elements):
                return Outcome(False, f"{F.name}: kernel {K.name} does not round-trip")
            if congruence_from_kernel(F, K2).classes != C.classes:
                return Outcome(False, f"{F.name}: congruence does not round-trip")
            roundtrips += 1
    ok = (not v_even.passed and v_even.witness == (0, 2, 0, -1) and trivial.passed and whole.passed
          and roundtrips > 0)
    return Outcome(ok, f"2Z rejected with {v_even.witness}; {{0}} {trivial.passed}, Z {whole.passed}; "
                       f"{roundtrips} finite round trips")


CRITERIA = [
    (1, "Krasner identification", criterion_1),
    (2, "quotient axiom soundness", criterion_2),
    (3, "quadratic-residue hyperfield", criterion_3),
    (4, "ee identity", criterion_4),
    (5, "Noether suite", criterion_5),
    (6, "m-hyperring distributivity", criterion_6),
    (7, "power-set pair suite", criterion_7),
    (8, "distributivity gap", criterion_8),
    (9, "morphism hierarchy", criterion_9),
    (10, "tensor suite", criterion_10),
    (11, "Pumpluen algebra", criterion_11),
    (12, "kernel correspondence", criterion_12),
]


def _run(num: int) -> Outcome:
    _, title, fn = CRITERIA[num - 1]
    out = fn()
    line = _line(num, title, out)
    LINES.append(line)
    print(line)
    return out


@pytest.mark.xfail(strict=True, reason="GF(2)/GF(2)x is GF(2), not the Krasner hyperfield; see decisions")
def test_criterion_01_krasner_identification():
    assert _run(1).passed


def test_criterion_01_holds_for_every_field_with_three_or_more_elements():
    K = krasner()
    assert all(krasner_quotient(R, R.units()).same_table(K)
               for R in (finite_field(q) for q in prime_powers(32) if q > 2))


def test_criterion_02_quotient_soundness():
    assert _run(2).passed


def test_criterion_03_quadratic_residue_table():
    assert _run(3).passed


def test_criterion_04_ee_identity():
    assert _run(4).passed


def test_criterion_05_noether_suite():
    assert _run(5).passed


def test_criterion_06_mhyperring_distributivity():
    assert _run(6).passed


def test_criterion_07_powerset_pairs():
    assert _run(7).passed


def test_criterion_08_distributivity_gap():
    assert _run(8).passed


def test_criterion_09_morphism_hierarchy():
    assert _run(9).passed


def test_criterion_10_tensor_suite():
    assert _run(10).passed


def test_criterion_11_pumpluen():
    assert _run(11).passed


def test_criterion_12_kernel_correspondence():
    assert _run(12).passed


def main() -> int:
    failed = 0
    for num, _, _ in CRITERIA:
        if not _run(num).passed:
            failed += 1
    print(f"{len(CRITERIA) - failed}/{len(CRITERIA)} criteria pass")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
