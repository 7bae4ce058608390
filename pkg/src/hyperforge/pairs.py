"""T-pairs, surpassing relations, Property N and negation maps.

A :class:`Pair` is extensional: a finite carrier with a binary operation
``op`` (written *), a neutral ``iota``, the null subset ``null`` (A0), and a
monoid T acting on both sides. Power-set pairs carry the underlying masks
so subset relations can be read off directly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from . import elemset as es
from .carrier import FinMonoid
from .hyperstruct import HyperTable, hsum_sets, mul_sets
from .report import AxiomReport, Verdict


@dataclass(frozen=True)
class Pair:
    labels: tuple[str, ...]
    op: tuple[tuple[int, ...], ...]
    iota: int
    null: frozenset[int]
    t_labels: tuple[str, ...]
    t_mul: tuple[tuple[int, ...], ...]
    t_one: int
    left: tuple[tuple[int, ...], ...]
    right: tuple[tuple[int, ...], ...]
    embed: tuple = ()
    mul: tuple | None = None
    name: str = ""
    masks: tuple | None = None
    base: object = field(default=None, compare=False, repr=False)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def t_n(self) -> int:
        return len(self.t_labels)

    @property
    def weakly_admissible(self) -> bool:
        return len(self.embed) == self.t_n and all(e is not None for e in self.embed)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def t_index(self, label: str) -> int:
        return self.t_labels.index(label)

    def t_elements(self) -> list[int]:
        """Carrier indices of T (weakly admissible pairs only)."""
        return [e for e in self.embed if e is not None]

    def to_json(self) -> dict:
        return {
            "schema": "hyperforge/1",
            "name": self.name,
            "carrier": list(self.labels),
            "T": list(self.embed) if self.weakly_admissible else list(self.t_labels),
            "A0": sorted(self.null),
            "iota": self.iota,
            "op": [list(r) for r in self.op],
            "mul": None if self.mul is None else [list(r) for r in self.mul],
            "left_action": [list(r) for r in self.left],
            "right_action": [list(r) for r in self.right],
            "t_labels": list(self.t_labels),
            "t_mul": [list(r) for r in self.t_mul],
            "t_one": self.t_one,
        }

    @classmethod
    def from_json(cls, doc: dict) -> "Pair":
        """Inverse of :meth:`to_json`; validates shapes, not axioms."""
        try:
            labels = tuple(doc["carrier"])
            n = len(labels)
            op = tuple(tuple(int(x) for x in r) for r in doc["op"])
            t_mul = tuple(tuple(int(x) for x in r) for r in doc["t_mul"])
            tn = len(doc["t_labels"])
            left = tuple(tuple(int(x) for x in r) for r in doc["left_action"])
            right = tuple(tuple(int(x) for x in r) for r in doc["right_action"])
            T = doc.get("T", [])
            embed = tuple(int(x) for x in T) if T and all(isinstance(x, int) for x in T) else (None,) * tn
            mul = doc.get("mul")
            mul = None if mul is None else tuple(tuple(int(x) for x in r) for r in mul)
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed pair document: {exc}") from exc
        if len(op) != n or any(len(r) != n for r in op):
            raise ValueError("pair operation table has the wrong shape")
        if len(left) != tn or len(right) != tn or any(len(r) != n for r in left + right):
            raise ValueError("action tables have the wrong shape")
        if any(not 0 <= x < n for r in op + left + right for x in r):
            raise ValueError("table entry outside the carrier")
        return cls(labels, op, int(doc["iota"]), frozenset(doc["A0"]), tuple(doc["t_labels"]),
                   t_mul, int(doc.get("t_one", 0)), left, right, embed, mul, doc.get("name", ""))


def pair_from_semiring(labels: Sequence[str], op, mul, iota: int, null, t_elems: Sequence[int],
                       one: int, name: str = "") -> Pair:
    """Pair on a finite (pre-)semiring whose T is a submonoid of the carrier.

    ``t_elems`` lists carrier indices; ``one`` must be among them. The action
    is the carrier multiplication.
    """
    t_elems = list(dict.fromkeys([one] + list(t_elems)))
    pos = {a: i for i, a in enumerate(t_elems)}
    t_mul = []
    for a in t_elems:
        row = []
        for b in t_elems:
            c = mul[a][b]
            if c not in pos:
                raise ValueError(f"T is not closed: {labels[a]}*{labels[b]} = {labels[c]}")
            row.append(pos[c])
        t_mul.append(tuple(row))
    left = tuple(tuple(mul[a][b] for b in range(len(labels))) for a in t_elems)
    right = tuple(tuple(mul[b][a] for b in range(len(labels))) for a in t_elems)
    return Pair(tuple(labels), tuple(map(tuple, op)), iota, frozenset(null),
                tuple(labels[a] for a in t_elems), tuple(t_mul), 0, left, right,
                tuple(t_elems), tuple(map(tuple, mul)), name)


def powerset_pair(H: HyperTable) -> Pair:
    """(P*(H), {S : 0 ∈ S}) with T = nonzero singletons and * = set hypersum."""
    if H.zero is None:
        raise ValueError("power-set pair needs a zero element")
    masks = tuple(es.nonempty_subsets(H.n))
    pos = {m: i for i, m in enumerate(masks)}
    op = [[pos[hsum_sets(H, a, b)] for b in masks] for a in masks]
    labels = tuple(H.fmt(m) for m in masks)
    null = frozenset(i for i, m in enumerate(masks) if es.contains(m, H.zero))
    iota = pos[es.single(H.zero)]
    if H.mul is not None:
        mul = [[pos[mul_sets(H, a, b)] for b in masks] for a in masks]
        nonzero = [pos[es.single(a)] for a in range(H.n) if a != H.zero]
        one = pos[es.single(H.one)] if H.one is not None else nonzero[0]
        P = pair_from_semiring(labels, op, mul, iota, null, nonzero, one, f"P*({H.name})")
    else:
        ident = tuple(range(len(masks)))
        P = Pair(labels, tuple(map(tuple, op)), iota, null, ("1",), ((0,),), 0, (ident,), (ident,),
                 (None,), None, f"P*({H.name})")
    return Pair(**{**P.__dict__, "masks": masks, "base": H})


def set_pair(elements: Sequence[str], op_sets, mul_sets_fn, zero: int, n: int, name: str) -> Pair:
    """Power-set pair over an arbitrary finite carrier with set operations.

    Used for m-hyperrings, whose multiplication is multivalued so T is the
    trivial monoid.
    """
    masks = tuple(es.nonempty_subsets(n))
    pos = {m: i for i, m in enumerate(masks)}
    op = tuple(tuple(pos[op_sets(a, b)] for b in masks) for a in masks)
    mul = tuple(tuple(pos[mul_sets_fn(a, b)] for b in masks) for a in masks)
    labels = tuple(es.fmt(m, elements) for m in masks)
    null = frozenset(i for i, m in enumerate(masks) if es.contains(m, zero))
    ident = tuple(range(len(masks)))
    return Pair(labels, op, pos[es.single(zero)], null, ("1",), ((0,),), 0, (ident,), (ident,),
                (None,), mul, name, masks)


def mhyper_pair(M) -> Pair:
    """Power-set pair of an m-hyperring: * is coset addition, mul is ⊡."""
    return set_pair(M.names, M.add_sets, M.hmul_sets, M.zero, M.n, f"P*({M.ring.name}/L)")


def infinity_pair(T: FinMonoid, idempotent: bool = False) -> Pair:
    """A = T ∪ {0, ∞}; a + a' = ∞ on T (or a + a = a when ``idempotent``)."""
    n = T.n
    zero, inf = n, n + 1
    labels = tuple(T.elements) + ("0", "∞")

    def add(a, b):
        if a == zero:
            return b
        if b == zero:
            return a
        if inf in (a, b):
            return inf
        return a if idempotent and a == b else inf

    def mul(a, b):
        if zero in (a, b):
            return zero
        if inf in (a, b):
            return inf
        return T.op[a][b]

    N = n + 2
    op = [[add(a, b) for b in range(N)] for a in range(N)]
    mt = [[mul(a, b) for b in range(N)] for a in range(N)]
    tag = "idempotent " if idempotent else ""
    return pair_from_semiring(labels, op, mt, zero, {zero, inf}, list(range(n)), T.neutral,
                              f"{tag}infinity pair over {T.name or 'T'}")


def supertropical_pair(levels: int = 3) -> Pair:
    """Minimal supertropical fixture: tangibles t_v, ghosts g_v, and ι.

    Sums keep the larger value and turn into a ghost on ties; A0 is the
    ghosts plus ι. T is the trivial monoid {t0}.
    """
    labels = ["ι"] + [f"t{v}" for v in range(levels)] + [f"g{v}" for v in range(levels)]
    N = len(labels)

    def val(i):
        return (i - 1) % levels

    def ghost(i):
        return i > levels

    def add(a, b):
        if a == 0:
            return b
        if b == 0:
            return a
        va, vb = val(a), val(b)
        if va != vb:
            return a if va > vb else b
        return 1 + levels + va

    def mul(a, b):
        if 0 in (a, b):
            return 0
        v = min(val(a) + val(b), levels - 1)
        return (1 + levels if ghost(a) or ghost(b) else 1) + v

    op = [[add(a, b) for b in range(N)] for a in range(N)]
    mt = [[mul(a, b) for b in range(N)] for a in range(N)]
    null = {0} | set(range(1 + levels, N))
    return pair_from_semiring(labels, op, mt, 0, null, [1], 1, "supertropical")


# ---------------------------------------------------------- pair axioms


def check_pair_axioms(P: Pair, require_admissible: bool = False) -> AxiomReport:
    rep = AxiomReport(f"{P.name} pair axioms")
    N, TN = range(P.n), range(P.t_n)
    rep.record("iota_in_null", P.iota in P.null, None if P.iota in P.null else (P.labels[P.iota],), 1)

    bad, n = None, 0
    for t in TN:
        for b in sorted(P.null):
            n += 1
            if (P.left[t][b] not in P.null or P.right[t][b] not in P.null) and bad is None:
                bad = (P.t_labels[t], P.labels[b])
    rep.record("null_absorbs_T", bad is None, bad, n)

    if require_admissible:
        rep.record("weakly_admissible", P.weakly_admissible,
                   None if P.weakly_admissible else ("T ⊄ A",), P.t_n)

    bad, n = None, 0
    for t in TN:
        n += 1
        if (P.left[t][P.iota] != P.iota or P.right[t][P.iota] != P.iota) and bad is None:
            bad = (P.t_labels[t],)
    rep.record("action_fixes_iota", bad is None, bad, n)

    bad, n = None, 0
    for b in N:
        n += 1
        if (P.left[P.t_one][b] != b or P.right[P.t_one][b] != b) and bad is None:
            bad = (P.labels[b],)
    rep.record("unit_acts_trivially", bad is None, bad, n)

    bad, n = None, 0
    for t1, t2 in itertools.product(TN, repeat=2):
        t12 = P.t_mul[t1][t2]
        for b in N:
            n += 1
            ok = (P.left[t12][b] == P.left[t1][P.left[t2][b]]
                  and P.right[t12][b] == P.right[t2][P.right[t1][b]]
                  and P.right[t2][P.left[t1][b]] == P.left[t1][P.right[t2][b]])
            if not ok and bad is None:
                bad = (P.t_labels[t1], P.t_labels[t2], P.labels[b])
    rep.record("biset_laws", bad is None, bad, n)

    bad, n = None, 0
    for t in TN:
        for b1, b2 in itertools.product(N, repeat=2):
            n += 1
            L, R = P.left[t], P.right[t]
            ok = L[P.op[b1][b2]] == P.op[L[b1]][L[b2]] and R[P.op[b1][b2]] == P.op[R[b1]][R[b2]]
            if not ok and bad is None:
                bad = (P.t_labels[t], P.labels[b1], P.labels[b2])
    rep.record("action_distributive", bad is None, bad, n)

    bad, n = None, 0
    for b in N:
        n += 1
        if (P.op[P.iota][b] != b or P.op[b][P.iota] != b) and bad is None:
            bad = (P.labels[b],)
    rep.record("iota_neutral", bad is None, bad, n)
    rep.info["weakly_admissible"] = P.weakly_admissible
    return rep


# -------------------------------------------------------- surpassing


@dataclass(frozen=True)
class SurpassRel:
    pair: Pair
    rel: tuple[tuple[bool, ...], ...]
    kind: str = "custom"

    def holds(self, a: int, b: int) -> bool:
        return self.rel[a][b]

    def null_set(self) -> frozenset[int]:
        """A_Null = {c : ι ⪯ c}."""
        return frozenset(c for c in range(self.pair.n) if self.rel[self.pair.iota][c])

    def to_json(self) -> dict:
        return {"kind": self.kind,
                "pairs": [[a, b] for a in range(self.pair.n) for b in range(self.pair.n) if self.rel[a][b]]}


def subset_relation(P: Pair) -> SurpassRel:
    """⪯⊆: set inclusion on a power-set pair."""
    if P.masks is None:
        raise ValueError("⪯⊆ needs a power-set pair")
    m = P.masks
    return SurpassRel(P, tuple(tuple(es.is_subset(a, b) for b in m) for a in m), "subset")


def zero_relation(P: Pair) -> SurpassRel:
    """⪯₀: b1 ⪯₀ b2 iff b2 = b1 * c for some c in A0."""
    rel = [[False] * P.n for _ in range(P.n)]
    for b in range(P.n):
        for c in P.null:
            rel[b][P.op[b][c]] = True
    return SurpassRel(P, tuple(map(tuple, rel)), "zero")


def equality_relation(P: Pair) -> SurpassRel:
    return SurpassRel(P, tuple(tuple(a == b for b in range(P.n)) for a in range(P.n)), "equality")


def relation_from_pairs(P: Pair, pairs) -> SurpassRel:
    rel = [[a == b for b in range(P.n)] for a in range(P.n)]
    for a, b in pairs:
        if not (0 <= a < P.n and 0 <= b < P.n):
            raise ValueError(f"relation pair {(a, b)} outside the carrier")
        rel[a][b] = True
    return SurpassRel(P, tuple(map(tuple, rel)), "custom")


def check_surpassing(R: SurpassRel) -> AxiomReport:
    P = R.pair
    rep = AxiomReport(f"{R.kind} surpassing on {P.name}")
    N = range(P.n)
    lab = P.labels

    bad = next(((lab[a],) for a in N if not R.rel[a][a]), None)
    rep.record("reflexive", bad is None, bad, P.n)
    bad, n = None, 0
    for a, b, c in itertools.product(N, repeat=3):
        n += 1
        if R.rel[a][b] and R.rel[b][c] and not R.rel[a][c]:
            bad = (lab[a], lab[b], lab[c])
            break
    rep.record("transitive", bad is None, bad, n)

    special = sorted(set(P.t_elements()) | {P.iota})
    bad = next(((lab[a], lab[b]) for a in special for b in special if a != b and R.rel[a][b]), None)
    rep.record("tangible_antichain", bad is None, bad, len(special) ** 2)

    bad, n = None, 0
    for b in N:
        for c in sorted(P.null):
            n += 1
            if not R.rel[b][P.op[b][c]] and bad is None:
                bad = (lab[b], lab[c])
    rep.record("surpasses_null_sum", bad is None, bad, n)

    bad = next(((lab[b],) for b in N if R.rel[b][P.iota] and b != P.iota), None)
    rep.record("below_iota_is_iota", bad is None, bad, P.n)

    anull = R.null_set()
    bad = next(((lab[c],) for c in sorted(P.null) if c not in anull), None)
    rep.record("null_in_A_null", bad is None, bad, len(P.null))
    rep.info["A_null"] = [lab[c] for c in sorted(anull)]
    rep.info["A_null_equals_A0"] = anull == P.null
    return rep


def check_preceq_distributive(P: Pair, R: SurpassRel) -> AxiomReport:
    """b(b1*b2) ⪯ bb1 * bb2 and (b1*b2)b ⪯ b1b * b2b for every triple."""
    if P.mul is None:
        raise ValueError("⪯-distributivity needs a multiplication on the pair")
    rep = AxiomReport(f"{P.name} ⪯-distributivity")
    M, op = P.mul, P.op
    lbad = rbad = None
    equal = True
    n = 0
    for b, b1, b2 in itertools.product(range(P.n), repeat=3):
        n += 1
        l1, r1 = M[b][op[b1][b2]], op[M[b][b1]][M[b][b2]]
        l2, r2 = M[op[b1][b2]][b], op[M[b1][b]][M[b2][b]]
        equal = equal and l1 == r1 and l2 == r2
        if not R.rel[l1][r1] and lbad is None:
            lbad = tuple(P.labels[i] for i in (b, b1, b2))
        if not R.rel[l2][r2] and rbad is None:
            rbad = tuple(P.labels[i] for i in (b, b1, b2))
    rep.record("left", lbad is None, lbad, n)
    rep.record("right", rbad is None, rbad, n)
    rep.info["distributive"] = equal
    return rep


# ------------------------------------------------ Property N, negation


@dataclass
class PropertyN:
    holds: bool
    quasi_negatives: dict
    circ: dict
    witness: tuple | None = None
    note: str = ""

    def to_json(self) -> dict:
        return {"holds": self.holds, "quasi_negatives": self.quasi_negatives,
                "circ": self.circ, "witness": self.witness, "note": self.note}


def _t_carrier(P: Pair) -> list[int]:
    if not P.weakly_admissible:
        raise ValueError("Property N is checked on pairs with T inside the carrier")
    return P.t_elements()


def check_property_N(P: Pair) -> PropertyN:
    """For each a in T: some a† in T with a*a† in A0, and a° = a*a† unique."""
    T = _t_carrier(P)
    quasi, circ = {}, {}
    for a in T:
        daggers = [b for b in T if P.op[a][b] in P.null]
        if not daggers:
            return PropertyN(False, quasi, circ, (P.labels[a],), "no quasi-negative")
        values = sorted({P.op[a][b] for b in daggers})
        quasi[P.labels[a]] = [P.labels[b] for b in daggers]
        if len(values) > 1:
            return PropertyN(False, quasi, circ, (P.labels[a],), "a° not unique")
        circ[P.labels[a]] = P.labels[values[0]]
    return PropertyN(True, quasi, circ)


def negation_map(P: Pair) -> dict | None:
    """a ↦ a·c for the least quasi-negative c of 1 with c·c = 1, if any.

    The map must send each a in T to a quasi-negative of a.
    """
    T = _t_carrier(P)
    one_t = P.t_one
    one = P.embed[one_t]
    pos = {a: i for i, a in enumerate(P.embed)}
    for c in T:
        if P.op[one][c] not in P.null:
            continue
        ct = pos[c]
        if P.t_mul[ct][ct] != one_t:
            continue
        nu = {a: P.right[ct][a] for a in T}
        if all(P.op[a][nu[a]] in P.null for a in T):
            return nu
    return None


def is_uniquely_negated(P: Pair) -> Verdict:
    """a*b in A0 with a, b in T forces b = (−)a."""
    T = _t_carrier(P)
    nu = negation_map(P)
    if nu is None:
        return Verdict(False, None, 0, "no negation map")
    n = 0
    for a in T:
        for b in T:
            n += 1
            if P.op[a][b] in P.null and b != nu[a]:
                return Verdict(False, (P.labels[a], P.labels[b]), n,
                               f"{P.labels[a]}*{P.labels[b]} is null but (−){P.labels[a]} = {P.labels[nu[a]]}")
    return Verdict(True, None, n, "", {"negation": {P.labels[a]: P.labels[nu[a]] for a in T}})


def powerset_circ_matches(P: Pair) -> Verdict:
    """On a power-set pair, a° equals a ⊞ (−a) in the base table."""
    from .hyperstruct import negation

    H = P.base
    prop = check_property_N(P)
    if not prop.holds:
        return Verdict(False, prop.witness, 0, prop.note)
    neg = negation(H)
    n = 0
    for a in range(H.n):
        if a == H.zero:
            continue
        n += 1
        expected = H.fmt(H.hsum[a][neg[a]])
        got = prop.circ[H.fmt(es.single(a))]
        if expected != got:
            return Verdict(False, (H.elements[a],), n, f"a° = {got}, a ⊞ (−a) = {expected}")
    return Verdict(True, None, n)
