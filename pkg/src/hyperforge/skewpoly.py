"""Skew polynomials GF(q)[x; σ] with σ a power of Frobenius.

Multiplication follows x^k·a = σ^k(a)·x^k. Division is on the right:
g = q·f + r with deg r < deg f, for monic f. The Pumpluen algebra is the
set of remainders with [r1][r2] = remainder of r1·r2.
"""

from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass

from .carrier import FinRing
from .report import Verdict


class SkewPolyError(ValueError):
    pass


@dataclass(frozen=True)
class SkewPoly:
    """Coefficients lowest degree first, with no trailing zeros."""

    coeffs: tuple[int, ...]

    @property
    def deg(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> int:
        return self.coeffs[-1]


class SkewRing:
    def __init__(self, F: FinRing, twist: int = 1):
        if not F.is_field:
            raise SkewPolyError("coefficients must form a field")
        self.F = F
        self.twist = twist
        p = F.characteristic
        k = 1
        while p ** k < F.n:
            k += 1
        self.degree = k
        # σ^j as a table, for j up to the order of σ
        self._sigma = [tuple(range(F.n))]
        frob = tuple(F.power(a, p ** (twist % k if k else 0)) for a in range(F.n))
        while True:
            nxt = tuple(frob[a] for a in self._sigma[-1])
            if nxt == self._sigma[0]:
                break
            self._sigma.append(nxt)

    @property
    def name(self) -> str:
        return f"{self.F.name}[x;σ^{self.twist}]"

    def sigma(self, a: int, times: int = 1) -> int:
        return self._sigma[times % len(self._sigma)][a]

    def make(self, coeffs) -> SkewPoly:
        cs = list(coeffs)
        while cs and cs[-1] == self.F.zero:
            cs.pop()
        return SkewPoly(tuple(cs))

    def const(self, a: int) -> SkewPoly:
        return self.make([a])

    def monomial(self, a: int, k: int) -> SkewPoly:
        return self.make([self.F.zero] * k + [a])

    @property
    def one(self) -> SkewPoly:
        return self.const(self.F.one)

    @property
    def zero(self) -> SkewPoly:
        return SkewPoly(())

    def add(self, p: SkewPoly, q: SkewPoly) -> SkewPoly:
        F = self.F
        n = max(len(p.coeffs), len(q.coeffs))
        a = p.coeffs + (F.zero,) * (n - len(p.coeffs))
        b = q.coeffs + (F.zero,) * (n - len(q.coeffs))
        return self.make(F.add[x][y] for x, y in zip(a, b))

    def neg(self, p: SkewPoly) -> SkewPoly:
        return self.make(self.F.neg(c) for c in p.coeffs)

    def sub(self, p: SkewPoly, q: SkewPoly) -> SkewPoly:
        return self.add(p, self.neg(q))

    def mul(self, p: SkewPoly, q: SkewPoly) -> SkewPoly:
        """(Σ a_i x^i)(Σ b_j x^j) = Σ a_i σ^i(b_j) x^(i+j)."""
        F = self.F
        if p.is_zero() or q.is_zero():
            return self.zero
        out = [F.zero] * (p.deg + q.deg + 1)
        for i, a in enumerate(p.coeffs):
            if a == F.zero:
                continue
            for j, b in enumerate(q.coeffs):
                out[i + j] = F.add[out[i + j]][F.mul[a][self.sigma(b, i)]]
        return self.make(out)

    def divmod(self, g: SkewPoly, f: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
        """Right division g = q·f + r, deg r < deg f, for monic f of degree ≥ 1."""
        if f.is_zero() or f.lead() != self.F.one:
            raise SkewPolyError("divisor must be monic")
        if f.deg < 1:
            raise SkewPolyError("divisor must have degree at least 1")
        q, r = self.zero, g
        while not r.is_zero() and r.deg >= f.deg:
            t = self.monomial(r.lead(), r.deg - f.deg)
            q = self.add(q, t)
            r = self.sub(r, self.mul(t, f))
        return q, r

    # ------------------------------------------------------------ text

    def fmt(self, p: SkewPoly) -> str:
        if p.is_zero():
            return "0"
        terms = []
        for k in range(p.deg, -1, -1):
            c = p.coeffs[k]
            if c == self.F.zero:
                continue
            name = self.F.elements[c]
            if "+" in name:
                name = f"({name})"
            if k == 0:
                terms.append(name)
                continue
            mono = "x" if k == 1 else f"x^{k}"
            terms.append(mono if c == self.F.one else f"{name}{mono}")
        return "+".join(terms)

    _TERM = re.compile(r"^(?:\((?P<pc>[^()]*)\)|(?P<c>[^()*]*?))\*?x(?:\^(?P<k>\d+))?$")

    def parse(self, text: str) -> SkewPoly:
        s = text.replace(" ", "")
        if not s:
            raise SkewPolyError("empty polynomial")
        parts, depth, cur = [], 0, ""
        for ch in s:
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            if ch == "+" and depth == 0:
                parts.append(cur)
                cur = ""
            else:
                cur += ch
        parts.append(cur)
        acc = self.zero
        for part in parts:
            m = self._TERM.match(part)
            try:
                if m:
                    cname = m.group("pc") if m.group("pc") is not None else m.group("c")
                    c = self.F.index(cname) if cname else self.F.one
                    k = int(m.group("k") or 1)
                    acc = self.add(acc, self.monomial(c, k))
                else:
                    acc = self.add(acc, self.const(self.F.index(part.strip("()"))))
            except KeyError as exc:
                raise SkewPolyError(f"unknown coefficient in term {part!r}") from exc
        return acc


def skew_mul(S: SkewRing, p: SkewPoly, q: SkewPoly) -> SkewPoly:
    return S.mul(p, q)


def skew_divmod(S: SkewRing, g: SkewPoly, f: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    return S.divmod(g, f)


# ----------------------------------------------------------- Pumpluen


class PumpluenAlgebra:
    """Remainders modulo a monic f with [r1][r2] = (r1·r2 mod_r f)."""

    def __init__(self, S: SkewRing, f: SkewPoly):
        if f.is_zero() or f.lead() != S.F.one or f.deg < 1:
            raise SkewPolyError("modulus must be monic of degree at least 1")
        self.S, self.f, self.m = S, f, f.deg
        q = S.F.n
        self.elements = [S.make(cs) for cs in itertools.product(range(q), repeat=self.m)]
        # lexicographic by degree then coefficients, zero first
        self.elements.sort(key=lambda p: (len(p.coeffs), tuple(reversed(p.coeffs))))
        self._pos = {p: i for i, p in enumerate(self.elements)}
        self._table = None

    @property
    def n(self) -> int:
        return len(self.elements)

    def index(self, p: SkewPoly) -> int:
        return self._pos[p]

    def mul(self, r1: SkewPoly, r2: SkewPoly) -> SkewPoly:
        for r in (r1, r2):
            if not r.is_zero() and r.deg >= self.m:
                raise SkewPolyError("operand is not reduced")
        return self.S.divmod(self.S.mul(r1, r2), self.f)[1]

    def table(self) -> list[list[int]]:
        if self._table is None:
            E = self.elements
            self._table = [[self._pos[self.mul(a, b)] for b in E] for a in E]
        return self._table

    def names(self) -> list[str]:
        return [self.S.fmt(p) for p in self.elements]

    def to_json(self) -> dict:
        return {"schema": "hyperforge/1", "ring": self.S.name, "modulus": self.S.fmt(self.f),
                "elements": self.names(), "mul": self.table()}


def pumpluen_mul(A: PumpluenAlgebra, r1: SkewPoly, r2: SkewPoly) -> SkewPoly:
    return A.mul(r1, r2)


def nonassociativity_witness(A: PumpluenAlgebra):
    """Least (a, b, c) in carrier order with (ab)c ≠ a(bc), or None."""
    T = A.table()
    for a, b, c in itertools.product(range(A.n), repeat=3):
        if T[T[a][b]][c] != T[a][T[b][c]]:
            return a, b, c
    return None


def is_invariant(A: PumpluenAlgebra) -> bool:
    """f is two-sided: x·f and c·f lie in R·f for every scalar c."""
    S, f = A.S, A.f
    x = S.monomial(S.F.one, 1)
    probes = [x] + [S.const(c) for c in range(S.F.n)]
    return all(S.divmod(S.mul(f, p), f)[1].is_zero() for p in probes)


def min_degree_in_coset(S: SkewRing, g: SkewPoly, f: SkewPoly) -> SkewPoly:
    """Minimum-degree element of g + R·f, by enumeration of the multipliers.

    Candidates are g - h·f for every h of degree at most deg g - deg f.
    Does not use the division routine. Raises if the minimum is not unique.
    """
    if g.is_zero() or g.deg < f.deg:
        return g
    span = g.deg - f.deg + 1
    best, best_deg = [], None
    for cs in itertools.product(range(S.F.n), repeat=span):
        h = S.make(cs)
        cand = S.sub(g, S.mul(h, f))
        d = -1 if cand.is_zero() else cand.deg
        if best_deg is None or d < best_deg:
            best, best_deg = [cand], d
        elif d == best_deg and cand not in best:
            best.append(cand)
    if len(best) != 1:
        raise SkewPolyError("minimum-degree element is not unique")
    return best[0]


def mhyper_product_set(A: PumpluenAlgebra, r1: SkewPoly, r2: SkewPoly, bound: int) -> set[SkewPoly]:
    """Cosets {(r1 + h·f)·r2 + L : deg h ≤ bound}, each named by its remainder."""
    S, f = A.S, A.f
    out = set()
    for cs in itertools.product(range(S.F.n), repeat=bound + 1):
        h = S.make(cs)
        g = S.mul(S.add(r1, S.mul(h, f)), r2)
        out.add(S.divmod(g, f)[1])
    return out


def crosscheck_mhyperring(A: PumpluenAlgebra, samples: int = 50, seed: int = 0,
                          pairs=None) -> Verdict:
    """Compare [r1][r2] with the minimum-degree element of r1·r2 + L.

    r1·r2 + L is the h = 0 member of the m-hyperring product set. Per pair,
    the product set itself is also computed with deg h ≤ deg r1 + 1 and again
    one degree higher, to confirm that it has stabilized.
    """
    S = A.S
    rng = random.Random(seed)
    if pairs is None:
        pairs = [(rng.choice(A.elements), rng.choice(A.elements)) for _ in range(samples)]
    rows, bad, unstable = [], None, []
    for k, (r1, r2) in enumerate(pairs):
        direct = pumpluen_mul(A, r1, r2)
        brute = min_degree_in_coset(S, S.mul(r1, r2), A.f)
        bound = (0 if r1.is_zero() else r1.deg) + 1
        pset = mhyper_product_set(A, r1, r2, bound)
        if mhyper_product_set(A, r1, r2, bound + 1) != pset:
            unstable.append(k)
        overall = min(pset, key=lambda p: (len(p.coeffs), tuple(reversed(p.coeffs))))
        rows.append({"r1": S.fmt(r1), "r2": S.fmt(r2), "pumpluen": S.fmt(direct),
                     "min_degree_rep": S.fmt(brute),
                     "product_set": sorted(S.fmt(p) for p in pset),
                     "product_set_min": S.fmt(overall),
                     "multivalued": len(pset) > 1,
                     "contains_h0_coset": direct in pset})
        if (brute != direct or direct not in pset) and bad is None:
            bad = (S.fmt(r1), S.fmt(r2))
    ok = bad is None
    note = "" if ok else "Pumpluen product differs from the minimum-degree representative"
    if unstable:
        note = (note + "; " if note else "") + f"product set grew past the h bound for {len(unstable)} pairs"
    return Verdict(ok, bad, len(pairs), note, {"pairs": rows, "unstable": unstable})
