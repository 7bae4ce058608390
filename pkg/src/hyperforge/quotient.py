"""Krasner-style residue constructions.

Multiplicative quotients R/G (hyperaddition on cosets), quotient
hypermodules, coset and double-coset hypermonoids, m-hyperrings R/L with
multivalued multiplication, and the e = 1 ⊞ (-1) identities.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from . import elemset as es
from .carrier import AxiomError, FinMonoid, FinRing, Subgroup, is_normal_submonoid
from .hyperstruct import HyperTable, hsum_sets, mul_sets, hypernegatives
from .report import AxiomReport, Verdict


@dataclass(frozen=True)
class CosetSpace:
    """Cosets of G in a finite base, ordered zero-class, one-class, then by rep."""

    base: object
    G: frozenset[int]
    cosets: tuple[frozenset[int], ...]
    index_of: tuple[int, ...]

    def rep(self, c: int) -> int:
        return min(self.cosets[c])

    def __len__(self) -> int:
        return len(self.cosets)

    def names(self, labels: Sequence[str]) -> tuple[str, ...]:
        return tuple(labels[self.rep(c)] for c in range(len(self.cosets)))


def _members(G) -> frozenset[int]:
    return G.members if isinstance(G, Subgroup) else frozenset(G)


def _coset_space(n: int, coset_of: Callable[[int], Iterable[int]], first: Sequence[int]) -> CosetSpace:
    cosets, index = [], [None] * n
    order = list(dict.fromkeys(list(first) + list(range(n))))
    for a in order:
        if index[a] is None:
            c = frozenset(coset_of(a))
            for b in c:
                if index[b] is not None and index[b] != len(cosets):
                    raise AxiomError("cosets overlap; G does not partition the base")
                index[b] = len(cosets)
            cosets.append(c)
    return CosetSpace(None, frozenset(), tuple(cosets), tuple(index))


def _check_unit_subgroup(R: FinRing, G: frozenset[int]):
    units = set(R.units())
    if not G <= units:
        raise AxiomError("G is not contained in the unit group")
    Subgroup(R, G)  # closure and neutral
    if not all(any(R.mul[g][h] == R.one for h in G) for g in G):
        raise AxiomError("G is not closed under inverses")


def multiplicative_cosets(R: FinRing, G) -> CosetSpace:
    G = _members(G)
    _check_unit_subgroup(R, G)
    space = _coset_space(R.n, lambda b: {R.mul[b][g] for g in G}, [R.zero, R.one])
    return CosetSpace(R, G, space.cosets, space.index_of)


def krasner_quotient(R: FinRing, G) -> HyperTable:
    """R/G: cosets bG, (b1G)(b2G) = (b1 b2)G, b1G ⊞ b2G = {cG : c ∈ b1G + b2G}.

    The zero class is {0}. For noncommutative R, G must satisfy bG = Gb for
    every b.
    """
    G = _members(G)
    _check_unit_subgroup(R, G)
    if not R.commutative:
        for b in range(R.n):
            if {R.mul[b][g] for g in G} != {R.mul[g][b] for g in G}:
                raise AxiomError(f"G is not normalized by {R.elements[b]}")
    sp = multiplicative_cosets(R, G)
    k = len(sp)
    reps = [sp.rep(c) for c in range(k)]
    hsum = []
    for i in range(k):
        row = []
        for j in range(k):
            m = 0
            for x in sp.cosets[i]:
                for y in sp.cosets[j]:
                    m |= 1 << sp.index_of[R.add[x][y]]
            row.append(m)
        hsum.append(row)
    mul = [[sp.index_of[R.mul[reps[i]][reps[j]]] for j in range(k)] for i in range(k)]
    for i, j in itertools.product(range(k), repeat=2):
        for x in sp.cosets[i]:
            for y in sp.cosets[j]:
                if sp.index_of[R.mul[x][y]] != mul[i][j]:
                    raise AxiomError("coset multiplication is not well defined")
    name = f"{R.name}/{{{','.join(R.elements[g] for g in sorted(G))}}}"
    return HyperTable(sp.names(R.elements), hsum, mul, 0, sp.index_of[R.one], name)


def coset_space_of(Q: HyperTable, R: FinRing, G) -> CosetSpace:
    """The coset space underlying a quotient produced by krasner_quotient."""
    return multiplicative_cosets(R, G)


# ------------------------------------------------------------ hypermodules


@dataclass(frozen=True)
class FinModule:
    """An abelian group (M, +, 0) with a left action of a FinMonoid T."""

    elements: tuple[str, ...]
    add: tuple[tuple[int, ...], ...]
    zero: int
    scalars: FinMonoid
    action: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n, T = len(self.elements), self.scalars
        for t in range(T.n):
            for b in range(n):
                if self.action[T.neutral][b] != b:
                    raise AxiomError("neutral scalar does not act trivially")
                for c in range(n):
                    if self.action[t][self.add[b][c]] != self.add[self.action[t][b]][self.action[t][c]]:
                        raise AxiomError("action is not additive")
                for s in range(T.n):
                    if self.action[T.op[t][s]][b] != self.action[t][self.action[s][b]]:
                        raise AxiomError("action is not associative")

    @property
    def n(self) -> int:
        return len(self.elements)


def module_over_units(R: FinRing) -> FinModule:
    U, emb = R.unit_group()
    action = [[R.mul[emb[t]][b] for b in range(R.n)] for t in range(U.n)]
    return FinModule(R.elements, R.add, R.zero, U, action)


def quotient_hypermodule(M: FinModule, G) -> tuple[HyperTable, tuple[tuple[int, ...], ...], FinMonoid]:
    """M/G with b1G ⊞ b2G = {cG : c ∈ b1G + b2G} and the T/G action.

    G is a subgroup of the scalar monoid T (indices into T). Returns the
    hypertable (no multiplication), the action table (T/G-class, coset) ->
    coset, and the residue monoid T/G.
    """
    from .carrier import residue_monoid

    T = M.scalars
    G = _members(G)
    if not is_normal_submonoid(T, G):
        raise AxiomError("G is not normal in T")
    sp = _coset_space(M.n, lambda b: {M.action[g][b] for g in G}, [M.zero])
    k = len(sp.cosets)
    hsum = []
    for i in range(k):
        row = []
        for j in range(k):
            m = 0
            for x in sp.cosets[i]:
                for y in sp.cosets[j]:
                    m |= 1 << sp.index_of[M.add[x][y]]
            row.append(m)
        hsum.append(row)
    TG, tmap, _ = residue_monoid(T, G)
    action = [[None] * k for _ in range(TG.n)]
    for t in range(T.n):
        for c in range(k):
            for b in sp.cosets[c]:
                d = sp.index_of[M.action[t][b]]
                cur = action[tmap[t]][c]
                if cur is None:
                    action[tmap[t]][c] = d
                elif cur != d:
                    raise AxiomError("T/G action on cosets is not well defined")
    names = tuple(M.elements[min(c)] for c in sp.cosets)
    table = HyperTable(names, hsum, None, sp.index_of[M.zero], None, "M/G")
    return table, tuple(tuple(r) for r in action), TG


# -------------------------------------------------------- coset hypermonoids


def coset_hypermonoid(M: FinMonoid, G, mode: str = "right") -> tuple[HyperTable, CosetSpace]:
    """Right coset (bG) or double coset (GbG) hypermonoid under ⊡.

    The hyperoperation lives in the table's ``hsum`` slot; ``zero`` is the
    class of the neutral element when it is hyperneutral, otherwise None.
    """
    G = _members(G)
    if M.neutral not in G or M.setmul(G, G) - G:
        raise AxiomError("G is not a closed submonoid")
    if mode == "right":
        def cls(b):
            return M.setmul([b], G)
    elif mode == "double":
        def cls(b):
            return M.setmul(M.setmul(G, [b]), G)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    sp = _coset_space(M.n, cls, [M.neutral])
    k = len(sp.cosets)
    hsum = []
    for i in range(k):
        row = []
        for j in range(k):
            prod = M.setmul(sp.cosets[i], sp.cosets[j])
            row.append(es.mask(sp.index_of[c] for c in prod))
        hsum.append(row)
    e = sp.index_of[M.neutral]
    neutral_ok = all(hsum[e][c] == es.single(c) == hsum[c][e] for c in range(k))
    label = "G" if mode == "right" else "GG"

    def name(c):
        r = min(sp.cosets[c])
        if r == M.neutral:
            return "G"
        return f"{M.elements[r]}G" if mode == "right" else f"G{M.elements[r]}G"

    table = HyperTable(tuple(name(c) for c in range(k)), hsum, None,
                       e if neutral_ok else None, None, f"{M.name}/{label}")
    return table, CosetSpace(M, G, sp.cosets, sp.index_of)


# -------------------------------------------------------------- m-hyperrings


@dataclass(frozen=True)
class MHyperRing:
    """Additive cosets r + L with ordinary addition and multivalued ⊡."""

    ring: FinRing
    ideal: frozenset[int]
    cosets: tuple[frozenset[int], ...]
    index_of: tuple[int, ...]
    add: tuple[tuple[int, ...], ...]
    hmul: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.cosets)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(self.ring.elements[min(c)] + "+L" for c in self.cosets)

    @property
    def zero(self) -> int:
        return self.index_of[self.ring.zero]

    def coset(self, r: int) -> int:
        return self.index_of[r]

    def add_sets(self, S1: int, S2: int) -> int:
        out = 0
        for a in es.iter_members(S1):
            for b in es.iter_members(S2):
                out |= 1 << self.add[a][b]
        return out

    def hmul_sets(self, S1: int, S2: int) -> int:
        out = 0
        for a in es.iter_members(S1):
            for b in es.iter_members(S2):
                out |= self.hmul[a][b]
        return out

    def is_singleton_valued(self) -> bool:
        return all(es.size(m) == 1 for row in self.hmul for m in row)

    def to_json(self) -> dict:
        return {"schema": "hyperforge/1", "ring": self.ring.name, "elements": list(self.names),
                "add": [list(r) for r in self.add],
                "hmul": [[es.members(m) for m in row] for row in self.hmul],
                "zero": self.zero}


def _additive_cosets(R: FinRing, L: frozenset[int]):
    sp = _coset_space(R.n, lambda r: {R.add[r][a] for a in L}, [R.zero, R.one])
    k = len(sp.cosets)
    reps = [min(c) for c in sp.cosets]
    add = [[sp.index_of[R.add[reps[i]][reps[j]]] for j in range(k)] for i in range(k)]
    return sp, add


def is_left_ideal(R: FinRing, L) -> bool:
    L = _members(L)
    Subgroup(R, L, "additive")
    return all(R.mul[r][a] in L for r in range(R.n) for a in L)


def m_hyperring(R: FinRing, L) -> MHyperRing:
    """R/L with (r1+L) ⊡ (r2+L) = {(r1+a) r2 + L : a ∈ L}."""
    L = _members(L)
    try:
        ok = is_left_ideal(R, L)
    except AxiomError as exc:
        raise AxiomError(f"L is not an additive subgroup: {exc}") from exc
    if not ok:
        raise AxiomError("L is not a left ideal (RL ⊄ L)")
    sp, add = _additive_cosets(R, L)
    k = len(sp.cosets)
    hmul = []
    for i in range(k):
        row = []
        for j in range(k):
            m = 0
            for r1 in sp.cosets[i]:
                for r2 in sp.cosets[j]:
                    for a in L:
                        m |= 1 << sp.index_of[R.mul[R.add[r1][a]][r2]]
            row.append(m)
        hmul.append(row)
    # the formula is stated for representatives; the union over the whole
    # cosets above equals it because (r1 + a) ranges over r1 + L anyway and
    # r2 + l gives (r1+a)l ∈ L when L is a left ideal
    return MHyperRing(R, L, sp.cosets, sp.index_of, tuple(map(tuple, add)), tuple(map(tuple, hmul)))


def check_mhyper_distributivity(M: MHyperRing) -> AxiomReport:
    """⪯⊆-distributivity: (r1+L)⊡((r2+L)+(r3+L)) ⊆ (r1+L)⊡(r2+L) + (r1+L)⊡(r3+L)."""
    rep = AxiomReport("m-hyperring distributivity")
    k = M.n
    bad = right_bad = None
    count = 0
    for i, j, l in itertools.product(range(k), repeat=3):
        count += 1
        lhs = M.hmul[i][M.add[j][l]]
        rhs = M.add_sets(M.hmul[i][j], M.hmul[i][l])
        if not es.is_subset(lhs, rhs) and bad is None:
            bad = (i, j, l)
        lhs2 = M.hmul[M.add[j][l]][i]
        rhs2 = M.add_sets(M.hmul[j][i], M.hmul[l][i])
        if not es.is_subset(lhs2, rhs2) and right_bad is None:
            right_bad = (i, j, l)
    rep.record("left_distributive_inclusion", bad is None, bad, count)
    rep.info["right_distributive_inclusion"] = right_bad is None
    rep.info["singleton_valued"] = M.is_singleton_valued()
    return rep


def m_hyper_from_additive_subgroup(S: FinRing, G) -> MHyperRing:
    """(r1+G) ⊡ (r2+G) = {r1 r2 + r1 g1 + g2 r2 + G : g1, g2 ∈ G}.

    No associativity or distributivity is claimed for the result.
    """
    G = _members(G)
    Subgroup(S, G, "additive")
    sp, add = _additive_cosets(S, G)
    k = len(sp.cosets)
    reps = [min(c) for c in sp.cosets]
    hmul = []
    for i in range(k):
        row = []
        for j in range(k):
            r1, r2 = reps[i], reps[j]
            m = 0
            for g1 in G:
                for g2 in G:
                    v = S.add[S.add[S.mul[r1][r2]][S.mul[r1][g1]]][S.mul[g2][r2]]
                    m |= 1 << sp.index_of[v]
            row.append(m)
        hmul.append(row)
    return MHyperRing(S, G, sp.cosets, sp.index_of, tuple(map(tuple, add)), tuple(map(tuple, hmul)))


# ------------------------------------------------------- the element e


def minus_one(Q: HyperTable) -> int:
    negs = hypernegatives(Q, Q.one)
    if len(negs) != 1:
        raise AxiomError("the hypernegative of 1 does not exist (or is not unique)")
    return negs[0]


def e_element(Q: HyperTable) -> int:
    """e = 1 ⊞ (-1), an ElemSet containing 0."""
    return Q.hsum[Q.one][minus_one(Q)]


def check_ee_identity(R: FinRing, G) -> Verdict:
    """ee = e ⊞ e in R/G when -1 ∈ G.

    ``ee`` is evaluated from the base ring as the cosets of
    (g1 - g2) g3 + (g4 - g5) g6, gi ∈ G; ``e ⊞ e`` is the set hypersum in the
    quotient table. The elementwise power-set product e·e is reported in
    ``details`` but is a different set in general.
    """
    G = _members(G)
    Q = krasner_quotient(R, G)
    minus = R.neg(R.one)
    if minus not in G:
        return Verdict(True, None, 0, "skipped: -1 not in G", {"skipped": True})
    sp = multiplicative_cosets(R, G)
    e = e_element(Q)
    diffs = {R.sub(g1, g2) for g1 in G for g2 in G}
    scaled = {R.mul[d][g] for d in diffs for g in G}
    ee_ring = es.mask(sp.index_of[R.add[x][y]] for x in scaled for y in scaled)
    e_plus_e = hsum_sets(Q, e, e)
    elementwise = mul_sets(Q, e, e)
    e_ring = es.mask(sp.index_of[d] for d in diffs)
    details = {
        "e": Q.fmt(e),
        "e_from_ring": Q.fmt(e_ring),
        "ee": Q.fmt(ee_ring),
        "e+e": Q.fmt(e_plus_e),
        "e*e_elementwise": Q.fmt(elementwise),
        "elementwise_equal": elementwise == e_plus_e,
        "skipped": False,
    }
    ok = ee_ring == e_plus_e and e_ring == e
    return Verdict(ok, None if ok else (Q.fmt(ee_ring), Q.fmt(e_plus_e)), len(scaled) ** 2,
                   "" if ok else "ee differs from e+e", details)


# --------------------------------------------- quotient of a hyperstructure


def hyper_quotient(H: HyperTable, K: Iterable[int]) -> tuple[HyperTable, tuple[int, ...]]:
    """H/K for a subgroup K of the units of a hyperring table.

    xK ⊞ yK = {zK : z ∈ xK ⊞ yK}; returns the table and the class map.
    """
    K = frozenset(K)
    if H.mul is None or H.one not in K or H.zero in K:
        raise AxiomError("K must be a subgroup of the nonzero elements")
    for a in K:
        for b in K:
            if H.mul[a][b] not in K:
                raise AxiomError("K is not closed")
    sp = _coset_space(H.n, lambda b: {H.mul[b][k] for k in K}, [H.zero, H.one])
    k = len(sp.cosets)
    hsum = []
    for i in range(k):
        row = []
        for j in range(k):
            s = hsum_sets(H, es.mask(sp.cosets[i]), es.mask(sp.cosets[j]))
            row.append(es.image(s, sp.index_of))
        hsum.append(row)
    reps = [min(c) for c in sp.cosets]
    mul = [[sp.index_of[H.mul[reps[i]][reps[j]]] for j in range(k)] for i in range(k)]
    names = tuple(H.elements[r] for r in reps)
    return HyperTable(names, hsum, mul, sp.index_of[H.zero], sp.index_of[H.one],
                      f"({H.name})/K"), sp.index_of


# ------------------------------------------------- sampled (infinite) bases


@dataclass
class SampledQuotientReport:
    witnessed: dict
    verdicts: dict
    samples: int
    mismatches: list

    @property
    def sound(self) -> bool:
        return not self.mismatches

    def summary(self) -> str:
        if self.samples == 0:
            return "no witnesses"
        if self.mismatches:
            return f"{len(self.mismatches)} unexpected cosets"
        missing = [k for k, v in self.verdicts.items() if v == "unwitnessed-expected"]
        return "all expected cosets witnessed" if not missing else f"{len(missing)} expected cosets unwitnessed"


def rational_sampler(pool_size: int = 4, signs=(1,)):
    """Uniform draws from {s·p/q : 1 <= p, q <= pool_size, s in signs}."""
    pool = sorted({Fraction(s * p, q) for p in range(1, pool_size + 1)
                   for q in range(1, pool_size + 1) for s in signs})

    def draw(rng: random.Random):
        return rng.choice(pool)

    return draw


def sampled_quotient(transversal: Sequence, coset_of: Callable, add: Callable, mul: Callable,
                     sample_g: Callable, budget: int = 500, seed: int = 0,
                     expected: dict | None = None, labels: Sequence[str] | None = None):
    """Hypersums of a quotient with infinite G, witnessed by sampling.

    For each pair of transversal elements b1, b2 the sums g1 b1 + g2 b2 are
    drawn ``budget`` times and mapped to their coset representative. The
    result is sound (a subset of the true hypersum) but never claimed
    complete. ``expected`` maps (b1, b2) to the expected set of
    representatives; each coset is labelled witnessed, unwitnessed-expected,
    or unexpected. Returns (HyperTable or None, report); the table is None
    when some entry has no witness.
    """
    rng = random.Random(seed)
    transversal = list(transversal)
    pos = {b: i for i, b in enumerate(transversal)}
    labels = list(labels or [str(b) for b in transversal])
    witnessed, verdicts, mismatches = {}, {}, []
    for b1 in transversal:
        for b2 in transversal:
            hit = set()
            for _ in range(budget):
                g1, g2 = sample_g(rng), sample_g(rng)
                hit.add(coset_of(add(mul(g1, b1), mul(g2, b2))))
            witnessed[(b1, b2)] = hit
            exp = None if expected is None else set(expected[(b1, b2)])
            for c in sorted(hit | (exp or set()), key=pos.get):
                if exp is None:
                    verdicts[(b1, b2, c)] = "witnessed"
                elif c in hit and c in exp:
                    verdicts[(b1, b2, c)] = "witnessed"
                elif c in exp:
                    verdicts[(b1, b2, c)] = "unwitnessed-expected"
                else:
                    verdicts[(b1, b2, c)] = "unexpected"
                    mismatches.append((b1, b2, c))
    report = SampledQuotientReport(witnessed, verdicts, budget, mismatches)
    if any(not v for v in witnessed.values()):
        return None, report
    n = len(transversal)
    hsum = [[es.mask(pos[c] for c in witnessed[(transversal[i], transversal[j])]) for j in range(n)]
            for i in range(n)]
    zero = next((i for i, b in enumerate(transversal) if coset_of(add(b, b)) == b
                 and all(coset_of(add(b, c)) == c for c in transversal)), None)
    try:
        table = HyperTable(tuple(labels), hsum, None, zero, None, "sampled")
    except ValueError:
        table = HyperTable(tuple(labels), hsum, None, None, None, "sampled")
    return table, report
