"""Small hyperfields up to isomorphism, with quotient realizability.

A hyperfield of order n has a cyclic unit group of order n-1 for n ≤ 4, so
the multiplication is fixed and the hypersum is determined by the sets
1⊞g^k: distributivity forces a⊞b = a·(1⊞a⁻¹b). Only commutative
hypersums are kept.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import elemset as es
from .carrier import finite_field, prime_powers, unit_subgroups
from .hyperstruct import HyperTable, TableError, check_hyperfield
from .morphisms import iso_search
from .quotient import krasner_quotient

MAX_ORDER = 4
REALIZE_LIMIT = 32


class CensusError(ValueError):
    pass


@dataclass
class CensusEntry:
    table: HyperTable
    realized_by: list[tuple[int, list[str]]] = field(default_factory=list)

    @property
    def realizable(self) -> bool:
        return bool(self.realized_by)

    def to_json(self) -> dict:
        doc = self.table.to_json()
        doc["realizable"] = self.realizable
        doc["realized_by"] = [{"q": q, "subgroup": g} for q, g in self.realized_by]
        return doc


def _names(n: int) -> tuple[str, ...]:
    return ("0", "1") + tuple("g" if k == 1 else f"g{k}" for k in range(1, n - 1))


def _cyclic_mul(n: int) -> list[list[int]]:
    """0 ↦ index 0, g^k ↦ index k+1, with g of order n-1."""
    m = n - 1

    def mul(a, b):
        if a == 0 or b == 0:
            return 0
        return (a - 1 + b - 1) % m + 1

    return [[mul(a, b) for b in range(n)] for a in range(n)]


def _table_from_ones(n: int, ones: tuple[int, ...], M) -> HyperTable | None:
    """ones[k] is the mask of 1⊞g^k for k = 0..n-2."""
    m = n - 1
    inv = [0] + [(-(a - 1)) % m + 1 for a in range(1, n)]
    hsum = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            if a == 0:
                hsum[a][b] = es.single(b)
            elif b == 0:
                hsum[a][b] = es.single(a)
            else:
                k = M[inv[a]][b] - 1
                hsum[a][b] = es.image(ones[k], M[a])
    try:
        return HyperTable(_names(n), hsum, M, 0, 1, f"H{n}")
    except TableError:
        return None


def degenerate() -> HyperTable:
    return HyperTable(("0",), [[1]], [[0]], 0, 0, "H1")


def _quotients_of_order(n: int, limit: int):
    for q in prime_powers(limit):
        if (q - 1) % (n - 1):
            continue
        R = finite_field(q)
        for G in unit_subgroups(R):
            if (q - 1) // len(G.members) == n - 1:
                yield q, R, G.members


def census_order(n: int, limit: int = REALIZE_LIMIT) -> list[CensusEntry]:
    if n < 1:
        raise CensusError("order must be positive")
    if n > MAX_ORDER:
        raise CensusError(f"order {n} exceeds the search guard {MAX_ORDER}")
    if n == 1:
        return [CensusEntry(degenerate())]
    M = _cyclic_mul(n)
    found: list[CensusEntry] = []
    subsets = list(es.nonempty_subsets(n))
    for ones in itertools.product(subsets, repeat=n - 1):
        H = _table_from_ones(n, ones, M)
        if H is None:
            continue
        rep = check_hyperfield(H)
        if not rep.passed or not rep.info.get("commutative"):
            continue
        if any(iso_search(H, e.table).found for e in found):
            continue
        found.append(CensusEntry(H.relabel(H.elements)))
    for q, R, G in _quotients_of_order(n, limit):
        Q = krasner_quotient(R, G)
        for e in found:
            if iso_search(Q, e.table).found:
                e.realized_by.append((q, sorted(R.elements[g] for g in G)))
                break
    for k, e in enumerate(found):
        e.table = HyperTable(e.table.elements, e.table.hsum, e.table.mul, 0, 1, f"H{n}.{k}")
    return found


def census(max_order: int, limit: int = REALIZE_LIMIT) -> list[CensusEntry]:
    """Every hyperfield of order at most ``max_order``, one per isomorphism class."""
    if max_order > MAX_ORDER:
        raise CensusError(f"max_order {max_order} exceeds the search guard {MAX_ORDER}")
    out = []
    for n in range(1, max_order + 1):
        out.extend(census_order(n, limit))
    return out
