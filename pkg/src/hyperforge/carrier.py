"""Finite base algebras: monoids, rings, finite fields, semifields.

Everything here is index based. A carrier is a tuple of element names and
every operation is a row-major table of indices. Constructors put the
relevant neutral elements first (zero, then one) and validate their axioms
exhaustively, so a constructed object is known to be well formed.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .report import Verdict

DEFAULT_FIELD_BOUND = 64


class AxiomError(ValueError):
    """A table handed to a constructor violates one of its axioms."""


def _as_table(rows) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(x) for x in row) for row in rows)


def _check_table(table, n, what):
    if len(table) != n or any(len(row) != n for row in table):
        raise AxiomError(f"{what} table is not {n}x{n}")
    for row in table:
        for x in row:
            if not 0 <= x < n:
                raise AxiomError(f"{what} table has out-of-range entry {x}")


def _first_nonassociative(table, n):
    for a, b, c in itertools.product(range(n), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            return (a, b, c)
    return None


# ---------------------------------------------------------------- monoids


@dataclass(frozen=True)
class FinMonoid:
    elements: tuple[str, ...]
    op: tuple[tuple[int, ...], ...]
    neutral: int = 0
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        object.__setattr__(self, "op", _as_table(self.op))
        n = len(self.elements)
        _check_table(self.op, n, "monoid")
        e = self.neutral
        for b in range(n):
            if self.op[e][b] != b or self.op[b][e] != b:
                raise AxiomError(f"{self.elements[e]} is not neutral for {self.elements[b]}")
        bad = _first_nonassociative(self.op, n)
        if bad is not None:
            raise AxiomError(f"operation is not associative at {bad}")

    @property
    def n(self) -> int:
        return len(self.elements)

    def index(self, name: str) -> int:
        return self.elements.index(name)

    def mul(self, a: int, b: int) -> int:
        return self.op[a][b]

    def setmul(self, A: Iterable[int], B: Iterable[int]) -> frozenset[int]:
        B = tuple(B)
        return frozenset(self.op[a][b] for a in A for b in B)

    def inverse(self, a: int) -> int | None:
        for b in range(self.n):
            if self.op[a][b] == self.neutral and self.op[b][a] == self.neutral:
                return b
        return None

    def is_group(self) -> bool:
        return all(self.inverse(a) is not None for a in range(self.n))

    def is_commutative(self) -> bool:
        return all(self.op[a][b] == self.op[b][a] for a in range(self.n) for b in range(a))

    def order_of(self, a: int) -> int:
        k, x = 1, a
        while x != self.neutral:
            x = self.op[x][a]
            k += 1
            if k > self.n:
                raise ValueError(f"{self.elements[a]} has no finite order (not a unit)")
        return k

    def generated(self, gens: Iterable[int]) -> frozenset[int]:
        """Submonoid generated by ``gens``."""
        out = {self.neutral}
        frontier = list(out)
        gens = tuple(gens)
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = self.op[x][g]
                if y not in out:
                    out.add(y)
                    frontier.append(y)
        return frozenset(out)

    def to_json(self) -> dict:
        return {"elements": list(self.elements), "op": [list(r) for r in self.op],
                "neutral": self.neutral}

    @classmethod
    def from_json(cls, doc: dict) -> "FinMonoid":
        return cls(tuple(doc["elements"]), doc["op"], doc["neutral"], doc.get("name", ""))


def monoid_from_function(elements: Sequence, op: Callable, neutral, names=None, name="") -> FinMonoid:
    """Tabulate ``op`` on a finite list of hashable values (neutral moved first)."""
    elements = list(elements)
    elements.remove(neutral)
    elements.insert(0, neutral)
    index = {x: i for i, x in enumerate(elements)}
    table = [[index[op(a, b)] for b in elements] for a in elements]
    labels = tuple(names(x) if names else str(x) for x in elements)
    return FinMonoid(labels, table, 0, name)


def zmod_units(n: int) -> FinMonoid:
    units = [a for a in range(1, n) if math.gcd(a, n) == 1] if n > 1 else [0]
    return monoid_from_function(units, lambda a, b: (a * b) % n, 1 % n, name=f"(Z/{n})x")


def cyclic_group(n: int, gen: str = "g") -> FinMonoid:
    def label(k):
        return "1" if k == 0 else (gen if k == 1 else f"{gen}^{k}")

    return monoid_from_function(range(n), lambda a, b: (a + b) % n, 0, names=label, name=f"C{n}")


def _perm_name(p: tuple[int, ...]) -> str:
    seen, cycles = set(), []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(x + 1)
            x = p[x]
        cycles.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(cycles) or "()"


def symmetric_group(n: int) -> FinMonoid:
    """S_n with composition (p*q)(i) = p(q(i)); names in 1-based cycle notation."""
    perms = sorted(itertools.permutations(range(n)))
    ident = tuple(range(n))
    return monoid_from_function(
        perms, lambda p, q: tuple(p[q[i]] for i in range(n)), ident, names=_perm_name, name=f"S{n}"
    )


def is_normal_submonoid(M: FinMonoid, N: "Subgroup | Iterable[int]") -> bool:
    """Setwise normality: N·a == a·N for every a in M."""
    members = N.members if isinstance(N, Subgroup) else frozenset(N)
    if M.neutral not in members or M.setmul(members, members) - members:
        raise AxiomError("N is not a closed submonoid")
    return all(M.setmul(members, [a]) == M.setmul([a], members) for a in range(M.n))


# ------------------------------------------------------------------ rings


@dataclass(frozen=True)
class FinRing:
    elements: tuple[str, ...]
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    zero: int = 0
    one: int = 1
    name: str = ""
    commutative: bool = field(init=False)
    is_field: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        object.__setattr__(self, "add", _as_table(self.add))
        object.__setattr__(self, "mul", _as_table(self.mul))
        n = len(self.elements)
        _check_table(self.add, n, "addition")
        _check_table(self.mul, n, "multiplication")
        A, M, z, o = self.add, self.mul, self.zero, self.one
        for b in range(n):
            if A[z][b] != b or A[b][z] != b:
                raise AxiomError("zero is not additively neutral")
            if M[o][b] != b or M[b][o] != b:
                raise AxiomError("one is not multiplicatively neutral")
            if z not in A[b]:
                raise AxiomError(f"{self.elements[b]} has no additive inverse")
            for c in range(b):
                if A[b][c] != A[c][b]:
                    raise AxiomError("addition is not commutative")
        for what, T in (("addition", A), ("multiplication", M)):
            bad = _first_nonassociative(T, n)
            if bad is not None:
                raise AxiomError(f"{what} is not associative at {bad}")
        for a, b, c in itertools.product(range(n), repeat=3):
            if M[a][A[b][c]] != A[M[a][b]][M[a][c]] or M[A[b][c]][a] != A[M[b][a]][M[c][a]]:
                raise AxiomError(f"distributivity fails at {(a, b, c)}")
        comm = all(M[a][b] == M[b][a] for a in range(n) for b in range(a))
        units = [a for a in range(n) if a != z and any(M[a][b] == o == M[b][a] for b in range(n))]
        object.__setattr__(self, "commutative", comm)
        object.__setattr__(self, "is_field", n > 1 and len(units) == n - 1)

    @property
    def n(self) -> int:
        return len(self.elements)

    def index(self, name: str) -> int:
        try:
            return self.elements.index(name)
        except ValueError:
            raise KeyError(f"{name!r} is not an element of {self.name or 'the ring'}") from None

    def neg(self, a: int) -> int:
        return self.add[a].index(self.zero)

    def sub(self, a: int, b: int) -> int:
        return self.add[a][self.neg(b)]

    def units(self) -> list[int]:
        M, o = self.mul, self.one
        return [a for a in range(self.n)
                if any(M[a][b] == o and M[b][a] == o for b in range(self.n))]

    def unit_group(self) -> tuple[FinMonoid, tuple[int, ...]]:
        """Units as a FinMonoid, plus the embedding unit-index -> ring index."""
        units = self.units()
        units.remove(self.one)
        units.insert(0, self.one)
        pos = {u: i for i, u in enumerate(units)}
        table = [[pos[self.mul[a][b]] for b in units] for a in units]
        return FinMonoid(tuple(self.elements[u] for u in units), table, 0,
                         f"{self.name}x"), tuple(units)

    def mult_monoid(self) -> FinMonoid:
        return FinMonoid(self.elements, self.mul, self.one, f"({self.name},*)")

    def power(self, a: int, k: int) -> int:
        x = self.one
        for _ in range(k):
            x = self.mul[x][a]
        return x

    def to_json(self) -> dict:
        return {"elements": list(self.elements), "add": [list(r) for r in self.add],
                "mul": [list(r) for r in self.mul], "zero": self.zero, "one": self.one,
                "name": self.name}

    @classmethod
    def from_json(cls, doc: dict) -> "FinRing":
        return cls(tuple(doc["elements"]), doc["add"], doc["mul"], doc["zero"], doc["one"],
                   doc.get("name", ""))


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(math.isqrt(p)) + 1))


def prime_power(q: int) -> tuple[int, int] | None:
    """(p, k) with q == p**k, or None."""
    for p in range(2, q + 1):
        if q % p == 0:
            if not is_prime(p):
                return None
            k = 0
            while q % p == 0:
                q //= p
                k += 1
            return (p, k) if q == 1 else None
    return None


def zmod(n: int) -> FinRing:
    return FinRing(tuple(str(a) for a in range(n)),
                   [[(a + b) % n for b in range(n)] for a in range(n)],
                   [[(a * b) % n for b in range(n)] for a in range(n)], 0, 1 % n, f"Z/{n}")


def _digits(x: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        out.append(x % p)
        x //= p
    return out


def _undigits(ds: Sequence[int], p: int) -> int:
    return sum(d * p**i for i, d in enumerate(ds))


def _polymod(a: list[int], m: list[int], p: int) -> list[int]:
    """Remainder of a modulo monic m, coefficient lists low-to-high."""
    a = a[:]
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return [x % p for x in a[:dm]] + [0] * max(0, dm - len(a))


def _is_irreducible(poly: list[int], p: int) -> bool:
    k = len(poly) - 1
    for d in range(1, k // 2 + 1):
        for tail in range(p**d):
            factor = _digits(tail, p, d) + [1]
            if not any(_polymod(poly, factor, p)):
                return False
    return True


def least_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Monic irreducible of degree k over GF(p) with least base-p encoding."""
    if k == 1:
        return (0, 1)
    for tail in range(p**k):
        poly = _digits(tail, p, k) + [1]
        if _is_irreducible(poly, p):
            return tuple(poly)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


def _field_name(coeffs: Sequence[int], var: str = "w") -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            mono = var if i == 1 else f"{var}^{i}"
            terms.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(terms) or "0"


def make_finite_field(p: int, k: int = 1, bound: int = DEFAULT_FIELD_BOUND) -> FinRing:
    """GF(p**k) with element id = sum c_i p**i over the least irreducible modulus."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 1:
        raise ValueError("exponent must be at least 1")
    q = p**k
    if q > bound:
        raise ValueError(f"field order {q} exceeds bound {bound}")
    modulus = list(least_irreducible(p, k))
    vecs = [_digits(x, p, k) for x in range(q)]
    add = [[_undigits([(a + b) % p for a, b in zip(vecs[x], vecs[y])], p) for y in range(q)]
           for x in range(q)]
    mul = []
    for x in range(q):
        row = []
        for y in range(q):
            prod = [0] * (2 * k - 1)
            for i, a in enumerate(vecs[x]):
                if a:
                    for j, b in enumerate(vecs[y]):
                        prod[i + j] += a * b
            row.append(_undigits(_polymod(prod, modulus, p) if k > 1 else [prod[0] % p], p))
        mul.append(row)
    names = tuple(_field_name(v) for v in vecs)
    ring = FinRing(names, add, mul, 0, 1, f"GF({q})")
    object.__setattr__(ring, "modulus", tuple(modulus))
    object.__setattr__(ring, "characteristic", p)
    return ring


def finite_field(q: int, bound: int = DEFAULT_FIELD_BOUND) -> FinRing:
    pk = prime_power(q)
    if pk is None:
        raise ValueError(f"{q} is not a prime power")
    return make_finite_field(pk[0], pk[1], bound)


def prime_powers(limit: int) -> list[int]:
    return [q for q in range(2, limit + 1) if prime_power(q)]


def matrix_ring(R: FinRing, n: int = 2) -> FinRing:
    """M_n(R) with entries listed row-major; names like '10/01'."""
    mats = list(itertools.product(range(R.n), repeat=n * n))
    zero = tuple([R.zero] * (n * n))
    ident = tuple(R.one if i == j else R.zero for i in range(n) for j in range(n))
    mats.remove(zero)
    mats.remove(ident)
    mats = [zero, ident] + mats
    pos = {m: i for i, m in enumerate(mats)}

    def madd(a, b):
        return tuple(R.add[x][y] for x, y in zip(a, b))

    def mmul(a, b):
        out = []
        for i in range(n):
            for j in range(n):
                acc = R.zero
                for t in range(n):
                    acc = R.add[acc][R.mul[a[i * n + t]][b[t * n + j]]]
                out.append(acc)
        return tuple(out)

    def label(m):
        return "/".join("".join(R.elements[m[i * n + j]] for j in range(n)) for i in range(n))

    add = [[pos[madd(a, b)] for b in mats] for a in mats]
    mul = [[pos[mmul(a, b)] for b in mats] for a in mats]
    ring = FinRing(tuple(label(m) for m in mats), add, mul, 0, 1, f"M{n}({R.name})")
    object.__setattr__(ring, "entries", tuple(mats))
    return ring


# -------------------------------------------------------------- subgroups


@dataclass(frozen=True)
class Subgroup:
    """A submonoid/subgroup of a ring's multiplicative or additive structure,
    or of a FinMonoid (kind 'multiplicative')."""

    parent: object
    members: frozenset[int]
    kind: str = "multiplicative"

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))
        if self.kind not in ("multiplicative", "additive"):
            raise ValueError(f"unknown subgroup kind {self.kind!r}")
        table, neutral = self._op()
        if neutral not in self.members:
            raise AxiomError("subgroup does not contain the neutral element")
        for a in self.members:
            for b in self.members:
                if table[a][b] not in self.members:
                    raise AxiomError(f"not closed: {a}*{b}")

    def _op(self):
        P = self.parent
        if isinstance(P, FinMonoid):
            return P.op, P.neutral
        if self.kind == "additive":
            return P.add, P.zero
        return P.mul, P.one

    @property
    def order(self) -> int:
        return len(self.members)

    def is_group(self) -> bool:
        table, e = self._op()
        return all(any(table[a][b] == e == table[b][a] for b in self.members) for a in self.members)

    def sorted(self) -> list[int]:
        return sorted(self.members)

    def names(self) -> list[str]:
        return [self.parent.elements[i] for i in self.sorted()]

    def __contains__(self, i: int) -> bool:
        return i in self.members

    def __len__(self) -> int:
        return len(self.members)


def subgroup_from_names(parent, names: Iterable[str], kind="multiplicative") -> Subgroup:
    return Subgroup(parent, frozenset(parent.elements.index(x) for x in names), kind)


def unit_subgroups(R: FinRing) -> list[Subgroup]:
    """All subgroups of the (cyclic) unit group, one per divisor, by size."""
    units = R.units()
    order = len(units)
    gen = None
    for u in units:
        x, k = u, 1
        while x != R.one:
            x = R.mul[x][u]
            k += 1
        if k == order:
            gen = u
            break
    if gen is None:
        raise ValueError(f"unit group of {R.name} is not cyclic")
    out = []
    for d in range(1, order + 1):
        if order % d == 0:
            h = R.power(gen, order // d)
            mem, x = {R.one}, h
            while x != R.one:
                mem.add(x)
                x = R.mul[x][h]
            out.append(Subgroup(R, frozenset(mem)))
    return out


def subgroup_of_order(R: FinRing, k: int) -> Subgroup:
    for G in unit_subgroups(R):
        if G.order == k:
            return G
    raise ValueError(f"{R.name} has no unit subgroup of order {k}")


def residue_monoid(T: FinMonoid, G: Subgroup | Iterable[int]):
    """T/G for normal G: returns (monoid of cosets, coset map, is_group).

    Cosets are ordered by least member; coset of a is named '<a>G'
    (just 'G' for the neutral coset).
    """
    members = G.members if isinstance(G, Subgroup) else frozenset(G)
    if not is_normal_submonoid(T, members):
        raise AxiomError("G is not normal in T")
    cosets: list[frozenset[int]] = []
    cmap = [None] * T.n
    for a in range(T.n):
        if cmap[a] is None:
            c = T.setmul([a], members)
            for b in c:
                cmap[b] = len(cosets)
            cosets.append(c)
    reps = [min(c) for c in cosets]
    table = [[cmap[T.op[reps[i]][reps[j]]] for j in range(len(cosets))] for i in range(len(cosets))]
    labels = tuple("G" if r == T.neutral else f"{T.elements[r]}G" for r in reps)
    Q = FinMonoid(labels, table, cmap[T.neutral], f"{T.name}/G")
    # T/G is a group iff every a has a' with a a' in G
    is_group = all(any(T.op[a][b] in members for b in range(T.n)) for a in range(T.n))
    return Q, tuple(cmap), is_group


# ------------------------------------------------------------- semifields


NEG_INF = float("-inf")


def _zigzag(window: int):
    yield 0
    for k in range(1, window + 1):
        yield k
        yield -k


@dataclass(frozen=True)
class Semifield:
    """A semifield given by operations plus a finite canonical sample.

    ``elements`` is the whole carrier when ``finite`` is set, otherwise a
    bounded window in canonical order (zero, one, then by id).
    """

    name: str
    add: Callable
    mul: Callable
    zero: object
    one: object
    elements: tuple
    finite: bool
    inv: Callable
    budget: str = ""

    def nonzero(self):
        return [x for x in self.elements if x != self.zero]

    def position(self, x) -> int:
        return self.elements.index(x)


def max_plus_integers(window: int = 8) -> Semifield:
    """Z ∪ {-inf} with max as addition and + as multiplication.

    Sample order: -inf, 0, 1, -1, 2, -2, ... (zigzag ids).
    """
    els = (NEG_INF,) + tuple(_zigzag(window))
    return Semifield("max-plus(Z)", max, lambda a, b: a + b, NEG_INF, 0, els, False,
                     lambda a: -a, f"window [-{window}, {window}]")


def boolean_semifield() -> Semifield:
    return Semifield("B", lambda a, b: a | b, lambda a, b: a & b, 0, 1, (0, 1), True, lambda a: a)


def field_semifield(R: FinRing) -> Semifield:
    def inv(a):
        return next(b for b in range(R.n) if R.mul[a][b] == R.one)

    els = tuple(range(R.n))
    return Semifield(R.name, lambda a, b: R.add[a][b], lambda a, b: R.mul[a][b], R.zero, R.one,
                     els, True, inv)


@dataclass(frozen=True)
class Kernel:
    """A multiplicative subgroup of a semifield, given by a membership test."""

    name: str
    contains: Callable

    def __contains__(self, x) -> bool:
        return self.contains(x)


def kernel_of(S: Semifield, members: Iterable) -> Kernel:
    ms = frozenset(members)
    return Kernel("{" + ",".join(map(str, sorted(ms, key=S.position))) + "}", ms.__contains__)


def _check_subgroup(S: Semifield, K: Kernel):
    sample = [x for x in S.nonzero() if x in K]
    if S.one not in K:
        raise AxiomError(f"{K.name} does not contain one")
    if S.zero in K:
        raise AxiomError(f"{K.name} contains zero")
    pool = set(S.elements)
    for a in sample:
        if S.inv(a) in pool and S.inv(a) not in K:
            raise AxiomError(f"{K.name} is not closed under inverses at {a}")
        for b in sample:
            c = S.mul(a, b)
            if c in pool and c not in K:
                raise AxiomError(f"{K.name} is not closed at {a}*{b}")
    return sample


def is_kernel(S: Semifield, K: Kernel) -> Verdict:
    """Convexity: a1,a2 in K and r1+r2 = 1 imply r1 a1 + r2 a2 in K.

    Exhaustive for finite S; relative to the sample window otherwise. The
    witness (a1, a2, r1, r2) is least in canonical sample order.
    """
    ks = _check_subgroup(S, K)
    checked = 0
    for a1 in ks:
        for a2 in ks:
            for r1 in S.elements:
                for r2 in S.elements:
                    if S.add(r1, r2) != S.one:
                        continue
                    checked += 1
                    v = S.add(S.mul(r1, a1), S.mul(r2, a2))
                    if v not in K:
                        return Verdict(False, (a1, a2, r1, r2), checked,
                                       f"{v} not in {K.name}", {"budget": S.budget or "exhaustive"})
    return Verdict(True, None, checked, "exhaustive" if S.finite else "sample-relative",
                   {"budget": S.budget or "exhaustive"})


def is_semiring_kernel(S: Semifield, K: Kernel) -> Verdict:
    """Semiring variant of convexity: r1 a1 + r2 a2 ∈ K·(a1 + a2).

    Only sampled verification is claimed.
    """
    ks = [x for x in S.elements if x in K]
    checked = 0
    for a1, a2, r1, r2 in itertools.product(ks, ks, S.elements, S.elements):
        if S.add(r1, r2) != S.one:
            continue
        checked += 1
        v = S.add(S.mul(r1, a1), S.mul(r2, a2))
        s = S.add(a1, a2)
        if not any(S.mul(k, s) == v for k in S.elements if k in K):
            return Verdict(False, (a1, a2, r1, r2), checked)
    return Verdict(True, None, checked, "sample-relative" if not S.finite else "exhaustive")


@dataclass(frozen=True)
class Congruence:
    parent: Semifield
    classes: tuple[frozenset, ...]

    def class_of(self, x) -> frozenset:
        for c in self.classes:
            if x in c:
                return c
        raise KeyError(x)

    def related(self, a, b) -> bool:
        return b in self.class_of(a)


def is_congruence(S: Semifield, C: Congruence) -> Verdict:
    """Equivalence plus compatibility with + and * on all sampled pairs whose
    results stay inside the sample."""
    seen = set()
    for c in C.classes:
        if seen & c:
            return Verdict(False, tuple(seen & c), note="classes overlap")
        seen |= c
    if seen != set(S.elements):
        return Verdict(False, None, note="classes do not cover the sample")
    pool = set(S.elements)
    checked = 0
    for a1, a2 in itertools.product(S.elements, repeat=2):
        if not C.related(a1, a2):
            continue
        for b1, b2 in itertools.product(S.elements, repeat=2):
            if not C.related(b1, b2):
                continue
            for op in (S.add, S.mul):
                x, y = op(a1, b1), op(a2, b2)
                if x in pool and y in pool:
                    checked += 1
                    if not C.related(x, y):
                        return Verdict(False, (a1, a2, b1, b2), checked, f"{x} !~ {y}")
    return Verdict(True, None, checked)


def congruence_from_kernel(S: Semifield, K: Kernel) -> Congruence:
    """a1 ≡ a2 iff K a1 = K a2, restricted to the sample."""
    verdict = is_kernel(S, K)
    if not verdict:
        raise AxiomError(f"{K.name} is not a kernel: witness {verdict.witness}")
    classes, placed = [], set()
    for a in S.elements:
        if a in placed:
            continue
        if a == S.zero:
            cls = frozenset([a])
        else:
            cls = frozenset(b for b in S.nonzero() if S.mul(b, S.inv(a)) in K)
        placed |= cls
        classes.append(cls)
    return Congruence(S, tuple(classes))


def kernel_from_congruence(S: Semifield, C: Congruence) -> Kernel:
    """K_C = {a : a ≡ 1}."""
    verdict = is_congruence(S, C)
    if not verdict:
        raise AxiomError(f"not a congruence: witness {verdict.witness}")
    one_class = C.class_of(S.one)
    if S.finite:
        return kernel_of(S, one_class)
    # infinite carrier: extend the sampled class by the group law x ≡ 1 iff x·y^-1 ≡ 1
    return Kernel("K_C", lambda x, _c=one_class: x in _c)
