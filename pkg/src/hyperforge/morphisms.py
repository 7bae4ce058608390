"""Maps between hypertables and pairs, and the isomorphism theorems.

A :class:`MapArrow` is a total single-valued table. Kind claims are never
trusted: each checker recomputes them from the tables.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from . import elemset as es
from .carrier import AxiomError, FinRing
from .hyperstruct import HyperTable
from .pairs import Pair, SurpassRel, powerset_pair, subset_relation
from .quotient import coset_hypermonoid, hyper_quotient, krasner_quotient, multiplicative_cosets
from .report import Verdict


@dataclass(frozen=True)
class MapArrow:
    domain: object
    codomain: object
    table: tuple[int, ...]
    name: str = ""

    def __post_init__(self):
        if len(self.table) != _size(self.domain):
            raise ValueError("map is not total on its domain")
        m = _size(self.codomain)
        if any(not 0 <= v < m for v in self.table):
            raise ValueError("map leaves its codomain")

    def __call__(self, a: int) -> int:
        return self.table[a]

    def image(self, m: int) -> int:
        return es.image(m, self.table)

    def to_json(self) -> dict:
        return {"name": self.name, "table": list(self.table)}


def _size(obj) -> int:
    return obj.n


def identity(obj, name: str = "id") -> MapArrow:
    return MapArrow(obj, obj, tuple(range(_size(obj))), name)


def compose(g: MapArrow, f: MapArrow) -> MapArrow:
    """g ∘ f."""
    if _size(f.codomain) != _size(g.domain):
        raise ValueError("arrows do not compose")
    return MapArrow(f.domain, g.codomain, tuple(g.table[v] for v in f.table), f"{g.name}∘{f.name}")


def arrow_from_names(A: HyperTable, B: HyperTable, mapping: dict, name: str = "") -> MapArrow:
    return MapArrow(A, B, tuple(B.index(mapping[x]) for x in A.elements), name)


# -------------------------------------------------------- hypertable maps


def is_subset_morphism(f: MapArrow, check_mul: bool = False) -> Verdict:
    """f(a1 ⊞ a2) ⊆ f(a1) ⊞ f(a2) for every pair; optionally f(a1a2) = f(a1)f(a2)."""
    A, B = f.domain, f.codomain
    n = 0
    for a1 in range(A.n):
        for a2 in range(A.n):
            n += 1
            img = f.image(A.hsum[a1][a2])
            if not es.is_subset(img, B.hsum[f(a1)][f(a2)]):
                return Verdict(False, (A.elements[a1], A.elements[a2]), n,
                               f"f({A.fmt(A.hsum[a1][a2])}) = {B.fmt(img)} ⊄ {B.fmt(B.hsum[f(a1)][f(a2)])}")
            if check_mul and A.mul is not None and B.mul is not None:
                if f(A.mul[a1][a2]) != B.mul[f(a1)][f(a2)]:
                    return Verdict(False, (A.elements[a1], A.elements[a2]), n, "not multiplicative")
    return Verdict(True, None, n)


def is_multiplicative(f: MapArrow) -> bool:
    A, B = f.domain, f.codomain
    if A.mul is None or B.mul is None:
        return False
    return all(f(A.mul[a][b]) == B.mul[f(a)][f(b)] for a in range(A.n) for b in range(A.n))


def is_t_subset_morphism(f: MapArrow) -> Verdict:
    """⊆-morphism of hyperrings viewed as T-bimagmas with T the nonzero elements.

    Adds f(T) ⊆ T' and f(ta) = f(t)f(a), which the bare inclusion does not
    force (the constant-zero map is a ⊆-morphism).
    """
    A, B = f.domain, f.codomain
    v = is_subset_morphism(f, check_mul=True)
    if not v:
        return v
    for a in A.nonzero():
        if f(a) == B.zero:
            return Verdict(False, (A.elements[a],), v.checked, "f(T) ⊄ T'")
    return v


def is_weak_morphism(f: MapArrow) -> Verdict:
    """Hypertables: 0 ∈ a1⊞a2 ⇒ 0 ∈ f(a1)⊞f(a2). Pairs: a1*a2 ∈ A0 ⇒ f(a1)*f(a2) ∈ A0'."""
    A, B = f.domain, f.codomain
    n = 0
    if isinstance(A, Pair):
        for a1 in range(A.n):
            for a2 in range(A.n):
                n += 1
                if A.op[a1][a2] in A.null and B.op[f(a1)][f(a2)] not in B.null:
                    return Verdict(False, (A.labels[a1], A.labels[a2]), n)
        return Verdict(True, None, n)
    for a1 in range(A.n):
        for a2 in range(A.n):
            n += 1
            if es.contains(A.hsum[a1][a2], A.zero) and not es.contains(B.hsum[f(a1)][f(a2)], B.zero):
                return Verdict(False, (A.elements[a1], A.elements[a2]), n)
    return Verdict(True, None, n)


# --------------------------------------------------------------- pair maps


def _t_map_candidates(f: MapArrow):
    """Monoid maps T -> T' to act through: f restricted to T, then identity."""
    P, Q = f.domain, f.codomain
    qpos = {a: i for i, a in enumerate(Q.embed) if a is not None}
    out = []
    if all(a is not None and f(a) in qpos for a in P.embed):
        induced = tuple(qpos[f(a)] for a in P.embed)
        hom = induced[P.t_one] == Q.t_one and all(
            induced[P.t_mul[s][t]] == Q.t_mul[induced[s]][induced[t]]
            for s in range(P.t_n) for t in range(P.t_n))
        if hom:
            out.append(("restriction", induced))
    if P.t_labels == Q.t_labels and P.t_mul == Q.t_mul:
        out.append(("identity", tuple(range(P.t_n))))
    return out


def is_preceq_morphism(f: MapArrow, R: SurpassRel | None = None, R_dom: SurpassRel | None = None,
                       t_map: Sequence[int] | None = None) -> Verdict:
    """Monotone, T-equivariant, f(b1*b2) ⪯ f(b1)*f(b2), f(ι) = ι', f(T) ⊆ T'.

    Equivariance reads f(tb) = φ(t)f(b) for a monoid map φ: T -> T'. When
    ``t_map`` is not given, φ is f restricted to T if that is a
    homomorphism, else the identity when both pairs share T. Relations
    default to set inclusion on power-set pairs.
    """
    P, Q = f.domain, f.codomain
    R = R or subset_relation(Q)
    R_dom = R_dom or subset_relation(P)
    lab = P.labels
    n = 0
    if f(P.iota) != Q.iota:
        return Verdict(False, ("iota", lab[P.iota]), 1, "f(ι) ≠ ι'")
    qpos = {a: i for i, a in enumerate(Q.embed) if a is not None}
    for t, a in enumerate(P.embed):
        n += 1
        if a is None or f(a) not in qpos:
            return Verdict(False, ("T", P.t_labels[t]), n, "f(T) ⊄ T'")
    cands = [("given", tuple(t_map))] if t_map is not None else _t_map_candidates(f)
    if not cands:
        return Verdict(False, ("equivariant",), n, "no monoid map T -> T' to act through")
    bad = None
    for how, phi in cands:
        bad = None
        for t in range(P.t_n):
            for b in range(P.n):
                n += 1
                if f(P.left[t][b]) != Q.left[phi[t]][f(b)] or f(P.right[t][b]) != Q.right[phi[t]][f(b)]:
                    bad = ("equivariant", P.t_labels[t], lab[b])
                    break
            if bad:
                break
        if bad is None:
            break
    if bad is not None:
        return Verdict(False, bad, n, "not T-equivariant")
    for b1 in range(P.n):
        for b2 in range(P.n):
            n += 1
            if R_dom.rel[b1][b2] and not R.rel[f(b1)][f(b2)]:
                return Verdict(False, ("monotone", lab[b1], lab[b2]), n)
            if not R.rel[f(P.op[b1][b2])][Q.op[f(b1)][f(b2)]]:
                return Verdict(False, ("op", lab[b1], lab[b2]), n)
    return Verdict(True, None, n, "", {"action": how})


@dataclass
class Extension:
    arrow: MapArrow
    preceq: Verdict
    null_contained: bool
    monotone_inclusion: bool


def powerset_extension(f: MapArrow) -> Extension:
    """f̂(S) = {f(a) : a ∈ S} between the power-set pairs."""
    if not is_subset_morphism(f):
        raise AxiomError("f is not a ⊆-morphism")
    PA, PB = powerset_pair(f.domain), powerset_pair(f.codomain)
    pos = {m: i for i, m in enumerate(PB.masks)}
    table = tuple(pos[f.image(m)] for m in PA.masks)
    F = MapArrow(PA, PB, table, f"P({f.name})")
    null_ok = all(table[i] in PB.null for i in PA.null)
    mono = all(es.is_subset(PB.masks[table[i]], PB.masks[table[j]])
               for i, a in enumerate(PA.masks) for j, b in enumerate(PA.masks) if es.is_subset(a, b))
    return Extension(F, is_preceq_morphism(F), null_ok, mono)


# ----------------------------------------------------- residue morphisms


@dataclass
class InducedMorphism:
    domain: HyperTable
    values: tuple[int, ...]
    image_cosets: tuple[str, ...]
    normalized: bool
    verdict: Verdict

    def to_json(self) -> dict:
        return {"values": [self.domain.fmt(v) for v in self.values],
                "image_in_N": list(self.image_cosets), "normalized": self.normalized,
                "verdict": self.verdict.to_dict()}


def is_monoid_hom(f: MapArrow) -> bool:
    M, N = f.domain, f.codomain
    return f(M.neutral) == N.neutral and all(
        f(M.op[a][b]) == N.op[f(a)][f(b)] for a in range(M.n) for b in range(M.n))


def induced_residue_morphism(f: MapArrow, G: Iterable[int]) -> InducedMorphism:
    """f̄(bG) = {b'G : f(b)f(G) = f(b')f(G)} as a set-valued map on M/G.

    M/G carries the right coset hyperproduct. The check is
    f̄(b1G ⊡ b2G) ⊆ f̄(b1G) ⊡ f̄(b2G) over all coset pairs, where f̄ of a set
    is the union of the values.
    """
    M, N = f.domain, f.codomain
    G = frozenset(G)
    if not is_monoid_hom(f):
        raise AxiomError("f is not a homomorphism")
    if set(f.table) != set(range(N.n)):
        raise AxiomError("f is not surjective")
    table, sp = coset_hypermonoid(M, G, "right")
    fG = frozenset(f(g) for g in G)
    key = [N.setmul([f(min(c))], fG) for c in sp.cosets]
    # key must not depend on the representative
    for ci, c in enumerate(sp.cosets):
        for b in c:
            if N.setmul([f(b)], fG) != key[ci]:
                raise AxiomError("f(b)f(G) depends on the coset representative")
    values = tuple(es.mask(cj for cj in range(len(sp)) if key[cj] == key[ci]) for ci in range(len(sp)))

    def fbar(m):
        out = 0
        for c in es.iter_members(m):
            out |= values[c]
        return out

    def prod(m1, m2):
        out = 0
        for c1 in es.iter_members(m1):
            for c2 in es.iter_members(m2):
                out |= table.hsum[c1][c2]
        return out

    bad, n = None, 0
    for c1 in range(len(sp)):
        for c2 in range(len(sp)):
            n += 1
            lhs = fbar(table.hsum[c1][c2])
            rhs = prod(values[c1], values[c2])
            if not es.is_subset(lhs, rhs) and bad is None:
                bad = (table.elements[c1], table.elements[c2])
    names = tuple("{" + ",".join(sorted(N.elements[x] for x in k)) + "}" for k in key)
    normalized = all(M.setmul([b], G) == M.setmul(G, [b]) for b in range(M.n))
    return InducedMorphism(table, values, names, normalized, Verdict(bad is None, bad, n))


def residue_map(R: FinRing, G, R2: FinRing, G2, phi: Callable[[int], int] | Sequence[int],
                name: str = "") -> MapArrow:
    """bG ↦ φ(b)G2 between Krasner quotients, checked to be well defined."""
    phi = phi if callable(phi) else (lambda b, t=tuple(phi): t[b])
    A, B = krasner_quotient(R, G), krasner_quotient(R2, G2)
    spA, spB = multiplicative_cosets(R, G), multiplicative_cosets(R2, G2)
    table = []
    for c in spA.cosets:
        imgs = {spB.index_of[phi(b)] for b in c}
        if len(imgs) != 1:
            raise AxiomError("φ does not respect the cosets")
        table.append(imgs.pop())
    return MapArrow(A, B, tuple(table), name)


def frobenius(R: FinRing, k: int = 1) -> tuple[int, ...]:
    p = R.characteristic
    return tuple(R.power(b, p ** k) for b in range(R.n))


@dataclass
class ThirdIsoResult:
    bijection: dict
    verdict: Verdict


def third_isomorphism(R: FinRing, G, G1) -> ThirdIsoResult:
    """R/G1 against (R/G)/(G1/G) under aG1 ↦ class of aG."""
    G, G1 = frozenset(G), frozenset(G1)
    if not G <= G1:
        raise AxiomError("G is not contained in G1")
    direct = krasner_quotient(R, G1)
    inner = krasner_quotient(R, G)
    sp, sp1 = multiplicative_cosets(R, G), multiplicative_cosets(R, G1)
    K = {sp.index_of[g] for g in G1}
    iterated, cls = hyper_quotient(inner, K)
    bij = []
    for c in sp1.cosets:
        imgs = {cls[sp.index_of[b]] for b in c}
        if len(imgs) != 1:
            return ThirdIsoResult({}, Verdict(False, (R.elements[min(c)],), 0, "cosets do not match up"))
        bij.append(imgs.pop())
    if sorted(bij) != list(range(iterated.n)):
        return ThirdIsoResult({}, Verdict(False, None, 0, "matching is not a bijection"))
    f = MapArrow(direct, iterated, tuple(bij))
    n = 0
    for a in range(direct.n):
        for b in range(direct.n):
            n += 1
            if f.image(direct.hsum[a][b]) != iterated.hsum[f(a)][f(b)] or \
                    f(direct.mul[a][b]) != iterated.mul[f(a)][f(b)]:
                return ThirdIsoResult({}, Verdict(False, (direct.elements[a], direct.elements[b]), n))
    ok = f(direct.zero) == iterated.zero and f(direct.one) == iterated.one
    mapping = {direct.elements[a]: iterated.elements[f(a)] for a in range(direct.n)}
    return ThirdIsoResult(mapping, Verdict(ok, None, n, "" if ok else "zero/one not preserved",
                                           {"direct": direct.name, "iterated": iterated.name}))


# ------------------------------------------------------------ iso search


@dataclass
class IsoResult:
    mapping: tuple[int, ...] | None
    nodes_explored: int

    @property
    def found(self) -> bool:
        return self.mapping is not None


def _signature(H: HyperTable, a: int):
    sizes = tuple(sorted(es.size(H.hsum[a][x]) for x in range(H.n)))
    return sizes, es.size(H.hsum[a][a])


def iso_search(A: HyperTable, B: HyperTable) -> IsoResult:
    """Least bijection f (in carrier order) with f(a⊞b) = f(a)⊞f(b) and f(ab) = f(a)f(b)."""
    if A.n != B.n or (A.mul is None) != (B.mul is None):
        return IsoResult(None, 0)
    n = A.n
    sigB = {}
    for b in range(n):
        sigB.setdefault(_signature(B, b), []).append(b)
    cands = [sigB.get(_signature(A, a), []) for a in range(n)]
    fixed = {}
    if A.zero is not None and B.zero is not None:
        fixed[A.zero] = B.zero
    elif (A.zero is None) != (B.zero is None):
        return IsoResult(None, 0)
    if A.one is not None and B.one is not None:
        fixed[A.one] = B.one
    for a, b in fixed.items():
        if b not in cands[a]:
            return IsoResult(None, 0)
        cands[a] = [b]
    f = [-1] * n
    used = [False] * n
    nodes = 0

    def consistent(a):
        for x in range(a + 1):
            for y, z in ((a, x), (x, a)):
                if A.mul is not None and f[A.mul[y][z]] >= 0 and f[A.mul[y][z]] != B.mul[f[y]][f[z]]:
                    return False
                m = A.hsum[y][z]
                if all(f[i] >= 0 for i in es.iter_members(m)):
                    if es.mask(f[i] for i in es.iter_members(m)) != B.hsum[f[y]][f[z]]:
                        return False
                elif es.size(m) != es.size(B.hsum[f[y]][f[z]]):
                    return False
        return True

    def full_check():
        for y in range(n):
            for z in range(n):
                if es.mask(f[i] for i in es.iter_members(A.hsum[y][z])) != B.hsum[f[y]][f[z]]:
                    return False
                if A.mul is not None and f[A.mul[y][z]] != B.mul[f[y]][f[z]]:
                    return False
        return True

    def go(a):
        nonlocal nodes
        if a == n:
            return full_check()
        for b in cands[a]:
            if used[b]:
                continue
            nodes += 1
            f[a], used[b] = b, True
            if consistent(a) and go(a + 1):
                return True
            f[a], used[b] = -1, False
        return False

    if go(0):
        return IsoResult(tuple(f), nodes)
    return IsoResult(None, nodes)


def invert(mapping: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(mapping)
    for a, b in enumerate(mapping):
        inv[b] = a
    return tuple(inv)


# --------------------------------------------------------- functor laws


def functor_laws(kind: str, arrows: Sequence[MapArrow], compositions: Sequence[tuple[MapArrow, MapArrow]] = (),
                 objects: Sequence = ()) -> Verdict:
    """Identity and composition laws of the power-set or residue functor.

    ``powerset``: arrows are ⊆-morphisms of hypertables; also checks that
    distinct arrows extend to distinct maps and that every map f on the
    objects whose extension is a ⪯-morphism is itself a ⊆-morphism.
    ``residue``: arrows are residue maps; ``compositions`` holds triples
    (g, f, gf) where gf is the residue map of the composite base map.
    """
    details = {"arrows": len(arrows), "compositions": len(compositions)}
    if kind == "powerset":
        for H in objects:
            ext = powerset_extension(identity(H)).arrow
            if ext.table != tuple(range(ext.domain.n)):
                return Verdict(False, ("identity", H.name), 0, "F(id) ≠ id", details)
        for g, f in compositions:
            lhs = powerset_extension(compose(g, f)).arrow
            rhs = compose(powerset_extension(g).arrow, powerset_extension(f).arrow)
            if lhs.table != rhs.table:
                return Verdict(False, ("composition", g.name, f.name), 0, "F(g∘f) ≠ F(g)∘F(f)", details)
        seen = {}
        for f in arrows:
            key = (id(f.domain), id(f.codomain), powerset_extension(f).arrow.table)
            if key in seen and seen[key] != f.table:
                return Verdict(False, ("faithful", f.name), 0, "distinct arrows share an extension", details)
            seen[key] = f.table
        restricted = 0
        for A in objects:
            for B in objects:
                if A.n ** A.n * B.n > 4096:
                    continue
                for table in itertools.product(range(B.n), repeat=A.n):
                    if A.zero is not None and table[A.zero] != B.zero:
                        continue
                    f = MapArrow(A, B, table)
                    PA, PB = powerset_pair(A), powerset_pair(B)
                    pos = {m: i for i, m in enumerate(PB.masks)}
                    F = MapArrow(PA, PB, tuple(pos[f.image(m)] for m in PA.masks))
                    if is_preceq_morphism(F):
                        restricted += 1
                        if not is_subset_morphism(f):
                            return Verdict(False, ("full", A.name, B.name, table), 0,
                                           "⪯-morphism restricts to a non-⊆-morphism", details)
        details["preceq_maps_restricted"] = restricted
        return Verdict(True, None, len(arrows) + len(compositions), "", details)
    if kind == "residue":
        for f in arrows:
            v = is_subset_morphism(f)
            if not v:
                return Verdict(False, ("subset", f.name) + tuple(v.witness or ()), 0, v.note, details)
        for H in objects:
            if not is_subset_morphism(identity(H)):
                return Verdict(False, ("identity", H.name), 0, "", details)
        for g, f, gf in compositions:
            if compose(g, f).table != gf.table or not is_subset_morphism(gf):
                return Verdict(False, ("composition", g.name, f.name), 0, "F(g∘f) ≠ F(g)∘F(f)", details)
        return Verdict(True, None, len(arrows) + len(compositions), "", details)
    raise ValueError(f"unknown functor kind {kind!r}")
