"""Finite hyperoperation tables and exhaustive axiom checkers.

A :class:`HyperTable` stores the hyperaddition as a table of bitmask
ElemSets (see :mod:`hyperforge.elemset`). Checkers return an
:class:`~hyperforge.report.AxiomReport`; each failed axiom carries the least
counterexample tuple, which :func:`replay` re-checks in isolation.
"""

from __future__ import annotations

import csv
import io
import itertools
import random
from dataclasses import dataclass
from typing import Sequence

from . import elemset as es
from .report import AxiomReport

SCHEMA = "hyperforge/1"
EXHAUSTIVE_SUBSET_LIMIT = 6


class TableError(ValueError):
    """Malformed hyperoperation table."""


@dataclass(frozen=True)
class HyperTable:
    elements: tuple[str, ...]
    hsum: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...] | None = None
    zero: int | None = 0
    one: int | None = None
    name: str = ""

    def __post_init__(self):
        n = len(self.elements)
        object.__setattr__(self, "elements", tuple(self.elements))
        object.__setattr__(self, "hsum", tuple(tuple(int(m) for m in row) for row in self.hsum))
        if self.mul is not None:
            object.__setattr__(self, "mul", tuple(tuple(int(x) for x in row) for row in self.mul))
        if len(self.hsum) != n or any(len(r) != n for r in self.hsum):
            raise TableError(f"hyperaddition table is not {n}x{n}")
        limit = es.full(n)
        for a, row in enumerate(self.hsum):
            for b, m in enumerate(row):
                if m == 0:
                    raise TableError(f"empty hypersum {self.elements[a]} + {self.elements[b]}")
                if m & ~limit:
                    raise TableError("hypersum mentions elements outside the carrier")
        if self.mul is not None:
            if len(self.mul) != n or any(len(r) != n for r in self.mul):
                raise TableError(f"multiplication table is not {n}x{n}")
            if any(not 0 <= x < n for r in self.mul for x in r):
                raise TableError("multiplication has out-of-range entries")
        z = self.zero
        if z is not None:
            for a in range(n):
                if self.hsum[z][a] != es.single(a) or self.hsum[a][z] != es.single(a):
                    raise TableError(f"zero is not hyperneutral for {self.elements[a]}")

    @property
    def n(self) -> int:
        return len(self.elements)

    def index(self, name: str) -> int:
        try:
            return self.elements.index(name)
        except ValueError:
            raise KeyError(f"{name!r} is not an element of {self.name or 'the table'}") from None

    def s(self, *names: str) -> int:
        """ElemSet from element names."""
        return es.mask(self.index(x) for x in names)

    def add(self, a: int, b: int) -> int:
        return self.hsum[a][b]

    def fmt(self, m: int) -> str:
        return es.fmt(m, self.elements)

    def nonzero(self) -> list[int]:
        return [a for a in range(self.n) if a != self.zero]

    def same_table(self, other: "HyperTable") -> bool:
        """Exact equality of the operation tables (names ignored)."""
        return (self.n == other.n and self.hsum == other.hsum and self.mul == other.mul
                and self.zero == other.zero and self.one == other.one)

    def relabel(self, names: Sequence[str]) -> "HyperTable":
        return HyperTable(tuple(names), self.hsum, self.mul, self.zero, self.one, self.name)

    # -- serialization

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "name": self.name,
            "elements": list(self.elements),
            "mul": None if self.mul is None else [list(r) for r in self.mul],
            "hsum": [[es.members(m) for m in row] for row in self.hsum],
            "zero": self.zero,
            "one": self.one,
        }

    @classmethod
    def from_json(cls, doc: dict) -> "HyperTable":
        if doc.get("schema", SCHEMA) != SCHEMA:
            raise TableError(f"unsupported schema {doc.get('schema')!r}")
        try:
            hsum = [[es.mask(cell) for cell in row] for row in doc["hsum"]]
            return cls(tuple(doc["elements"]), hsum, doc.get("mul"), doc.get("zero"),
                       doc.get("one"), doc.get("name", ""))
        except (KeyError, TypeError) as exc:
            raise TableError(f"malformed table document: {exc}") from exc

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["+"] + list(self.elements))
        for a, row in enumerate(self.hsum):
            w.writerow([self.elements[a]] + [self.fmt(m) for m in row])
        return buf.getvalue()


def table_from_rules(elements, hsum_rule, mul_rule=None, zero=0, one=None, name=""):
    """Build a HyperTable from python callables on indices.

    ``hsum_rule(a, b)`` returns an iterable of indices.
    """
    n = len(elements)
    hsum = [[es.mask(hsum_rule(a, b)) for b in range(n)] for a in range(n)]
    mul = None if mul_rule is None else [[mul_rule(a, b) for b in range(n)] for a in range(n)]
    return HyperTable(tuple(elements), hsum, mul, zero, one, name)


# ------------------------------------------------------------- catalog


def krasner() -> HyperTable:
    """K = {0, 1}: 1 + 1 = {0, 1}."""
    return HyperTable(("0", "1"), [[0b01, 0b10], [0b10, 0b11]], [[0, 0], [0, 1]], 0, 1, "krasner")


def signs() -> HyperTable:
    """S = {0, 1, -1}: 1 + 1 = 1, -1 + -1 = -1, 1 + -1 = S."""
    els = ("0", "1", "-1")
    val = (0, 1, -1)

    def hs(a, b):
        x, y = val[a], val[b]
        if x == 0:
            return [b]
        if y == 0 or x == y:
            return [a]
        return [0, 1, 2]

    return table_from_rules(els, hs, lambda a, b: val.index(val[a] * val[b]), 0, 1, "signs")


def field_table(R) -> HyperTable:
    """A ring viewed as a hyperring with singleton sums."""
    return HyperTable(R.elements, [[es.single(R.add[a][b]) for b in range(R.n)] for a in range(R.n)],
                      R.mul, R.zero, R.one, R.name)


# ----------------------------------------------------------- set lifting


def hsum_sets(H: HyperTable, S1: int, S2: int) -> int:
    """S1 ⊞ S2 = union of a ⊞ b over a ∈ S1, b ∈ S2."""
    if not S1 or not S2:
        raise ValueError("hypersum of an empty set")
    out = 0
    for a in es.iter_members(S1):
        row = H.hsum[a]
        for b in es.iter_members(S2):
            out |= row[b]
    return out


def mul_sets(H: HyperTable, S1: int, S2: int) -> int:
    """Elementwise product {a·b : a ∈ S1, b ∈ S2}."""
    if H.mul is None:
        raise ValueError("table has no multiplication")
    out = 0
    for a in es.iter_members(S1):
        row = H.mul[a]
        for b in es.iter_members(S2):
            out |= 1 << row[b]
    return out


def hsum_elem_set(H: HyperTable, a: int, S: int) -> int:
    return hsum_sets(H, es.single(a), S)


def hypernegatives(H: HyperTable, a: int) -> list[int]:
    z = H.zero
    return [x for x in range(H.n) if es.contains(H.hsum[a][x], z) and es.contains(H.hsum[x][a], z)]


def negation(H: HyperTable) -> list[int | None]:
    """-a for each a (None when missing or not unique)."""
    out = []
    for a in range(H.n):
        negs = hypernegatives(H, a)
        out.append(negs[0] if len(negs) == 1 else None)
    return out


# --------------------------------------------------------------- checkers


def check_hypergroup(H: HyperTable) -> AxiomReport:
    rep = AxiomReport(f"{H.name or 'table'} as hypergroup")
    n, z = H.n, H.zero
    if z is None:
        rep.record("has_zero", False, (), 0, "table has no zero")
        return rep

    count, bad = 0, None
    for a1, a2, a3 in itertools.product(range(n), repeat=3):
        count += 1
        if hsum_sets(H, H.hsum[a1][a2], es.single(a3)) != hsum_sets(H, es.single(a1), H.hsum[a2][a3]):
            bad = (a1, a2, a3)
            break
    rep.record("associativity", bad is None, bad, count)

    bad = None
    for a in range(n):
        if H.hsum[z][a] != es.single(a) or H.hsum[a][z] != es.single(a):
            bad = (a,)
            break
    rep.record("hyperneutral_zero", bad is None, bad, n)

    negs = [hypernegatives(H, a) for a in range(n)]
    missing = next(((a,) for a in range(n) if not negs[a]), None)
    rep.record("hypernegative_exists", missing is None, missing, n)
    multi = next(((a, negs[a][0], negs[a][1]) for a in range(n) if len(negs[a]) > 1), None)
    rep.record("hypernegative_unique", multi is None, multi, n)

    if missing is None:
        neg = [ns[0] for ns in negs]
        count, bad = 0, None
        for a1, a2, a3 in itertools.product(range(n), repeat=3):
            count += 1
            lhs = es.contains(H.hsum[a1][a2], a3)
            rhs = es.contains(H.hsum[a3][neg[a1]], a2)
            if lhs != rhs:
                bad = (a1, a2, a3)
                break
        rep.record("reversibility", bad is None, bad, count)
    else:
        rep.record("reversibility", False, missing, 0, "undefined without hypernegatives")

    comm = next(((a, b) for a in range(n) for b in range(a) if H.hsum[a][b] != H.hsum[b][a]), None)
    rep.info["commutative"] = comm is None
    if comm is not None:
        rep.info["noncommuting_pair"] = comm
    return rep


def check_hyperring(H: HyperTable) -> AxiomReport:
    rep = AxiomReport(f"{H.name or 'table'} as hyperring")
    rep.merge(check_hypergroup(H))
    if H.mul is None or H.one is None:
        rep.record("has_multiplication", False, (), 0, "mul table or one missing")
        return rep
    n, M, o, z = H.n, H.mul, H.one, H.zero
    bad = next(((a, b, c) for a, b, c in itertools.product(range(n), repeat=3)
                if M[M[a][b]][c] != M[a][M[b][c]]), None)
    rep.record("mul_associativity", bad is None, bad, n**3)
    bad = next(((b,) for b in range(n) if M[o][b] != b or M[b][o] != b), None)
    rep.record("mul_unit", bad is None, bad, n)
    bad = next(((a,) for a in range(n) if M[a][z] != z or M[z][a] != z), None)
    rep.record("zero_absorbing", bad is None, bad, n)

    count, bad = 0, None
    for a, b, c in itertools.product(range(n), repeat=3):
        count += 1
        bc = H.hsum[b][c]
        if mul_sets(H, es.single(a), bc) != H.hsum[M[a][b]][M[a][c]] or \
                mul_sets(H, bc, es.single(a)) != H.hsum[M[b][a]][M[c][a]]:
            bad = (a, b, c)
            break
    rep.record("distributivity", bad is None, bad, count)
    return rep


def check_hyperfield(H: HyperTable) -> AxiomReport:
    rep = check_hyperring(H)
    rep.subject = f"{H.name or 'table'} as hyperfield"
    if H.mul is None or H.one is None:
        return rep
    n, M, o, z = H.n, H.mul, H.one, H.zero
    nz = [a for a in range(n) if a != z]
    if n == 1:
        rep.record("units_group", True, None, 0, "degenerate one-element table")
        return rep
    bad = None
    if o == z:
        bad = (o,)
    for a in nz:
        if bad:
            break
        for b in nz:
            if M[a][b] == z:
                bad = (a, b)
                break
        else:
            if not any(M[a][b] == o and M[b][a] == o for b in nz):
                bad = (a,)
    rep.record("units_group", bad is None, bad, len(nz) ** 2)
    return rep


def replay(H: HyperTable, axiom: str, witness: tuple) -> bool:
    """True when ``witness`` still demonstrates a failure of ``axiom`` on H."""
    z, M = H.zero, H.mul
    if axiom == "associativity":
        a1, a2, a3 = witness
        return hsum_sets(H, H.hsum[a1][a2], es.single(a3)) != hsum_sets(H, es.single(a1), H.hsum[a2][a3])
    if axiom == "hyperneutral_zero":
        (a,) = witness
        return H.hsum[z][a] != es.single(a) or H.hsum[a][z] != es.single(a)
    if axiom == "hypernegative_exists":
        (a,) = witness
        return not hypernegatives(H, a)
    if axiom == "hypernegative_unique":
        a, x, y = witness
        return x != y and {x, y} <= set(hypernegatives(H, a))
    if axiom == "reversibility":
        a1, a2, a3 = witness
        negs = hypernegatives(H, a1)
        if len(negs) != 1:
            return True
        return es.contains(H.hsum[a1][a2], a3) != es.contains(H.hsum[a3][negs[0]], a2)
    if axiom == "mul_associativity":
        a, b, c = witness
        return M[M[a][b]][c] != M[a][M[b][c]]
    if axiom == "mul_unit":
        (b,) = witness
        return M[H.one][b] != b or M[b][H.one] != b
    if axiom == "zero_absorbing":
        (a,) = witness
        return M[a][z] != z or M[z][a] != z
    if axiom == "distributivity":
        a, b, c = witness
        bc = H.hsum[b][c]
        return (mul_sets(H, es.single(a), bc) != H.hsum[M[a][b]][M[a][c]]
                or mul_sets(H, bc, es.single(a)) != H.hsum[M[b][a]][M[c][a]])
    if axiom == "units_group":
        if len(witness) == 2:
            return M[witness[0]][witness[1]] == z
        (a,) = witness
        return a == z or not any(M[a][b] == H.one == M[b][a] for b in H.nonzero())
    raise KeyError(f"no replay rule for {axiom!r}")


# ---------------------------------------------- power-set distributivity


class PowersetTables:
    """Lifted hypersum / product tables on all nonempty subsets (small carriers)."""

    def __init__(self, H: HyperTable):
        if H.n > 10:
            raise ValueError("power-set tables limited to 10 elements")
        self.H = H
        count = 1 << H.n
        self.subsets = list(range(1, count))
        self.add = [[0] * count for _ in range(count)]
        self.mul = [[0] * count for _ in range(count)] if H.mul is not None else None
        for s1 in self.subsets:
            for s2 in self.subsets:
                self.add[s1][s2] = hsum_sets(H, s1, s2)
                if self.mul is not None:
                    self.mul[s1][s2] = mul_sets(H, s1, s2)


def _subset_triples(n, budget, seed):
    if n <= EXHAUSTIVE_SUBSET_LIMIT:
        subs = range(1, 1 << n)
        yield from itertools.product(subs, repeat=3)
        return
    rng = random.Random(seed)
    top = (1 << n) - 1
    for _ in range(budget):
        yield tuple(rng.randint(1, top) for _ in range(3))


def check_powerset_weak_distributivity(H: HyperTable, budget: int = 20000, seed: int = 0) -> AxiomReport:
    """S(S1 ⊞ S2) ⊆ SS1 ⊞ SS2 and (S1 ⊞ S2)S ⊆ S1S ⊞ S2S over subsets.

    Exhaustive when the carrier has at most six elements, seeded samples
    otherwise. ``info['strict']`` records the first strict inclusion.
    """
    rep = AxiomReport(f"{H.name or 'table'} power-set distributivity")
    if H.mul is None:
        rep.record("has_multiplication", False, (), 0)
        return rep
    exhaustive = H.n <= EXHAUSTIVE_SUBSET_LIMIT
    tabs = PowersetTables(H) if exhaustive else None

    def padd(x, y):
        return tabs.add[x][y] if tabs else hsum_sets(H, x, y)

    def pmul(x, y):
        return tabs.mul[x][y] if tabs else mul_sets(H, x, y)

    left_bad = right_bad = strict = None
    count = 0
    for S, S1, S2 in _subset_triples(H.n, budget, seed):
        count += 1
        s12 = padd(S1, S2)
        lhs, rhs = pmul(S, s12), padd(pmul(S, S1), pmul(S, S2))
        if not es.is_subset(lhs, rhs):
            left_bad = left_bad or (S, S1, S2)
        elif lhs != rhs and strict is None:
            strict = (S, S1, S2)
        lhs2, rhs2 = pmul(s12, S), padd(pmul(S1, S), pmul(S2, S))
        if not es.is_subset(lhs2, rhs2):
            right_bad = right_bad or (S, S1, S2)
        elif lhs2 != rhs2 and strict is None:
            strict = (S, S1, S2)
        if left_bad and right_bad:
            break
    rep.record("left_inclusion", left_bad is None, left_bad, count)
    rep.record("right_inclusion", right_bad is None, right_bad, count)
    rep.info["exhaustive"] = exhaustive
    rep.info["strict"] = strict
    rep.info["equality_everywhere"] = strict is None and left_bad is None and right_bad is None
    return rep


def weak_neutral_elements(H: HyperTable) -> int:
    """All b with a ∈ (a ⊞ b) ∩ (b ⊞ a) for every a."""
    out = 0
    for b in range(H.n):
        if all(es.contains(H.hsum[a][b], a) and es.contains(H.hsum[b][a], a) for a in range(H.n)):
            out |= 1 << b
    return out
