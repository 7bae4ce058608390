"""Rule-based hyperfields on infinite carriers with exact set values.

Elements:

* Krasner: ``0``, ``1``; signs: ``-1``, ``0``, ``1``.
* tropical: a ``Fraction`` or ``NEG_INF`` (the zero).
* signed tropical: ``(sign, Fraction)`` with sign in {1, -1}, or ``NEG_INF``.
* phase: an angle in turns, a ``Fraction`` in [0, 1), or ``ZERO``.

A :class:`SetValue` is canonical, so ``==`` is set equality. Phase regions
are stored as critical angles, each with two flags: whether the angle is a
member and whether the open gap up to the next critical angle is. Every
critical angle has to matter, so the form is unique.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .report import AxiomReport

NEG_INF = float("-inf")
HALF = Fraction(1, 2)


class _Zero:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "ZERO"

    def __reduce__(self):
        return (_Zero, ())


ZERO = _Zero()


class FieldMismatch(ValueError):
    pass


@dataclass(frozen=True)
class SetValue:
    field: str
    points: frozenset = frozenset()
    ray: object = None
    crit: tuple = ()
    full: bool = False
    zero: bool = False

    def is_empty(self) -> bool:
        return not (self.points or self.ray is not None or self.full or self.zero
                    or any(p or g for _, p, g in self.crit))


# --------------------------------------------------------------- phase regions


def _angle(x) -> Fraction:
    return Fraction(x) % 1


def _canon_region(triples: list) -> tuple[tuple, bool]:
    triples = sorted(triples)
    k = len(triples)
    if not k:
        return (), False
    keep = []
    for i, (c, p, g) in enumerate(triples):
        before = triples[i - 1][2]
        if not (p == g == before):
            keep.append((c, p, g))
    if not keep:
        return (), triples[0][1]
    return tuple(keep), False


def _gap_midpoints(angles: list[Fraction]) -> list[Fraction]:
    out = []
    for i, c in enumerate(angles):
        nxt = angles[(i + 1) % len(angles)]
        if i == len(angles) - 1:
            nxt += 1
        out.append(((c + nxt) / 2) % 1)
    return out


def _build_region(angles: Iterable[Fraction], pred) -> tuple[tuple, bool]:
    angles = sorted({_angle(a) for a in angles} | {Fraction(0)})
    mids = _gap_midpoints(angles)
    return _canon_region([(c, pred(c), pred(m)) for c, m in zip(angles, mids)])


def _locate(crit: tuple, theta: Fraction):
    """('crit', i) when theta is critical, else ('gap', i) for the gap after i."""
    for i, (c, _, _) in enumerate(crit):
        if c == theta:
            return "crit", i
    last = len(crit) - 1
    for i in range(len(crit)):
        if crit[i][0] > theta:
            return "gap", (i - 1) % len(crit)
    return "gap", last


def _region_has(crit: tuple, full: bool, theta: Fraction) -> bool:
    if not crit:
        return full
    kind, i = _locate(crit, _angle(theta))
    return crit[i][1] if kind == "crit" else crit[i][2]


def _dist(crit: tuple, full: bool, theta: Fraction, ahead: bool):
    """inf{x > 0 : theta -/+ x in region}, or None if the region is empty."""
    if full:
        return Fraction(0)
    if not crit:
        return None
    theta = _angle(theta)
    kind, i = _locate(crit, theta)
    k = len(crit)
    if kind == "gap" and crit[i][2]:
        return Fraction(0)
    if kind == "crit" and (crit[i][2] if ahead else crit[i - 1][2]):
        return Fraction(0)
    best = None
    for j, (c, p, g) in enumerate(crit):
        d = (c - theta) % 1 if ahead else (theta - c) % 1
        if d == 0:
            d = Fraction(1)
        side = g if ahead else crit[j - 1][2]
        if k == 1:
            side = g
        if p or side:
            best = d if best is None or d < best else best
    return best


def _phase_sum_pred(A: SetValue, B: SetValue):
    a_ang = [c for c, _, _ in A.crit]
    b_ang = [c for c, _, _ in B.crit]

    def has(V, t):
        return _region_has(V.crit, V.full, t)

    def lt_half(d1, d2):
        return d1 is not None and d2 is not None and d1 + d2 < HALF

    def pred(t):
        if has(A, t) and has(B, t):
            return True
        if has(A, t) and has(B, t + HALF) or has(A, t + HALF) and has(B, t):
            return True
        if lt_half(_dist(A.crit, A.full, t, False), _dist(B.crit, B.full, t, True)):
            return True
        return lt_half(_dist(A.crit, A.full, t, True), _dist(B.crit, B.full, t, False))

    angles = a_ang + b_ang + [c + HALF for c in a_ang + b_ang]
    return angles, pred


# ------------------------------------------------------------------ fields


class SymField:
    """Common interface; subclasses supply the element-level rules."""

    name = ""
    zero = None
    one = None

    def check(self, x):
        if not self.is_element(x):
            raise FieldMismatch(f"{x!r} is not an element of {self.name}")
        return x

    def is_element(self, x) -> bool:
        raise NotImplementedError

    def mul(self, x, y):
        raise NotImplementedError

    def neg(self, x):
        raise NotImplementedError

    def hsum(self, x, y) -> SetValue:
        raise NotImplementedError

    def points(self, xs: Iterable) -> SetValue:
        raise NotImplementedError

    def union(self, U: SetValue, V: SetValue) -> SetValue:
        raise NotImplementedError

    def contains(self, V: SetValue, x) -> bool:
        raise NotImplementedError

    def hsum_sets(self, U: SetValue, V: SetValue) -> SetValue:
        raise NotImplementedError

    def scale(self, x, V: SetValue) -> SetValue:
        raise NotImplementedError

    def is_subset(self, U: SetValue, V: SetValue) -> bool:
        return self.union(U, V) == V

    def witness_outside(self, U: SetValue, V: SetValue):
        """Some member of U not in V, or None when U ⊆ V."""
        raise NotImplementedError

    def default_sample(self) -> list:
        raise NotImplementedError

    def encode(self, x):
        return str(x)

    def _own(self, *vals: SetValue):
        for v in vals:
            if v.field != self.name:
                raise FieldMismatch(f"set value of {v.field} used in {self.name}")


class FiniteRuleField(SymField):
    """Krasner and sign hyperfields, given by their rule tables."""

    def __init__(self, name: str, elements: Sequence, rule, mul, neg):
        self.name = name
        self.elements = tuple(elements)
        self._rule, self._mul, self._neg = rule, mul, neg
        self.zero, self.one = 0, 1

    def is_element(self, x):
        return x in self.elements

    def mul(self, x, y):
        return self._mul(self.check(x), self.check(y))

    def neg(self, x):
        return self._neg(self.check(x))

    def hsum(self, x, y):
        self.check(x), self.check(y)
        return self.points(self._rule(x, y))

    def points(self, xs):
        return SetValue(self.name, frozenset(self.check(x) for x in xs))

    def union(self, U, V):
        self._own(U, V)
        return SetValue(self.name, U.points | V.points)

    def contains(self, V, x):
        return x in V.points

    def hsum_sets(self, U, V):
        self._own(U, V)
        out = frozenset()
        for a in U.points:
            for b in V.points:
                out |= self.hsum(a, b).points
        return SetValue(self.name, out)

    def scale(self, x, V):
        return SetValue(self.name, frozenset(self.mul(x, v) for v in V.points))

    def witness_outside(self, U, V):
        rest = sorted(U.points - V.points)
        return rest[0] if rest else None

    def default_sample(self):
        return list(self.elements)

    def components(self, V):
        return [{"kind": "point", "value": str(p)} for p in sorted(V.points)]


def _krasner_rule(x, y):
    if x == 0:
        return {y}
    if y == 0:
        return {x}
    return {0, 1}


def _sign_rule(x, y):
    if x == 0:
        return {y}
    if y == 0 or x == y:
        return {x}
    return {-1, 0, 1}


KRASNER = FiniteRuleField("krasner", (0, 1), _krasner_rule, lambda x, y: x * y, lambda x: x)
SIGNS = FiniteRuleField("signs", (-1, 0, 1), _sign_rule, lambda x, y: x * y, lambda x: -x)


class TropicalField(SymField):
    """Rationals with -inf; a ⊞ b = {max} if a != b, a ⊞ a = [-inf, a]."""

    name = "tropical"
    zero = NEG_INF
    one = Fraction(0)

    def is_element(self, x):
        return x == NEG_INF or isinstance(x, (int, Fraction)) and not isinstance(x, bool)

    def check(self, x):
        x = super().check(x)
        return x if x == NEG_INF else Fraction(x)

    def mul(self, x, y):
        x, y = self.check(x), self.check(y)
        return NEG_INF if NEG_INF in (x, y) else x + y

    def neg(self, x):
        return self.check(x)

    def _make(self, pts, ray):
        if ray == NEG_INF:
            ray, pts = None, set(pts) | {NEG_INF}
        pts = frozenset(p for p in pts if ray is None or p > ray)
        return SetValue(self.name, pts, ray)

    def hsum(self, x, y):
        x, y = self.check(x), self.check(y)
        if x == y:
            return self._make((), x)
        return self._make({max(x, y)}, None)

    def points(self, xs):
        return self._make({self.check(x) for x in xs}, None)

    def ray_value(self, top):
        return self._make((), self.check(top))

    def union(self, U, V):
        self._own(U, V)
        tops = [r for r in (U.ray, V.ray) if r is not None]
        return self._make(U.points | V.points, max(tops) if tops else None)

    def contains(self, V, x):
        x = self.check(x)
        return x in V.points or (V.ray is not None and x <= V.ray)

    def hsum_sets(self, U, V):
        self._own(U, V)
        pts, tops = set(), []
        for a in U.points:
            for b in V.points:
                r = self.hsum(a, b)
                pts |= r.points
                if r.ray is not None:
                    tops.append(r.ray)
        for ray_top, others in ((U.ray, V), (V.ray, U)):
            if ray_top is None:
                continue
            for b in others.points:
                if b <= ray_top:
                    tops.append(ray_top)
                else:
                    pts.add(b)
            if others.ray is not None:
                tops.append(max(ray_top, others.ray))
        return self._make(pts, max(tops) if tops else None)

    def scale(self, x, V):
        x = self.check(x)
        if x == NEG_INF:
            return self._make({NEG_INF}, None)
        ray = None if V.ray is None else V.ray + x
        return self._make({NEG_INF if p == NEG_INF else p + x for p in V.points}, ray)

    def witness_outside(self, U, V):
        for p in sorted(U.points):
            if not self.contains(V, p):
                return p
        if U.ray is not None:
            if not self.contains(V, NEG_INF):
                return NEG_INF
            if V.ray is None or U.ray > V.ray:
                lo = V.ray if V.ray is not None else U.ray - 1
                cands = sorted({U.ray} | {(lo + U.ray) / 2})
                for c in cands:
                    if not self.contains(V, c):
                        return c
        return None

    def default_sample(self):
        return [NEG_INF, Fraction(0), Fraction(1), Fraction(2)]

    def encode(self, x):
        return "-inf" if x == NEG_INF else str(x)

    def components(self, V):
        out = [{"kind": "ray", "top": self.encode(V.ray)}] if V.ray is not None else []
        return out + [{"kind": "point", "value": self.encode(p)} for p in sorted(V.points)]


class SignedTropicalField(SymField):
    """Pairs (sign, magnitude); opposite signs of equal magnitude balance.

    (s, a) ⊞ (-s, a) is the balanced ray B(a): every element of magnitude at
    most a, in both signs, plus -inf.
    """

    name = "signed_tropical"
    zero = NEG_INF
    one = (1, Fraction(0))

    def is_element(self, x):
        if x == NEG_INF:
            return True
        return isinstance(x, tuple) and len(x) == 2 and x[0] in (1, -1)

    def check(self, x):
        x = super().check(x)
        return x if x == NEG_INF else (x[0], Fraction(x[1]))

    def mul(self, x, y):
        x, y = self.check(x), self.check(y)
        if NEG_INF in (x, y):
            return NEG_INF
        return (x[0] * y[0], x[1] + y[1])

    def neg(self, x):
        x = self.check(x)
        return x if x == NEG_INF else (-x[0], x[1])

    @staticmethod
    def _mag(x):
        return NEG_INF if x == NEG_INF else x[1]

    def _make(self, pts, ray):
        pts = frozenset(p for p in pts if ray is None or self._mag(p) > ray)
        return SetValue(self.name, pts, ray)

    def hsum(self, x, y):
        x, y = self.check(x), self.check(y)
        if x == NEG_INF:
            return self._make({y}, None)
        if y == NEG_INF:
            return self._make({x}, None)
        if x[1] != y[1]:
            return self._make({max(x, y, key=lambda t: t[1])}, None)
        if x[0] == y[0]:
            return self._make({x}, None)
        return self._make((), x[1])

    def points(self, xs):
        return self._make({self.check(x) for x in xs}, None)

    def union(self, U, V):
        self._own(U, V)
        tops = [r for r in (U.ray, V.ray) if r is not None]
        return self._make(U.points | V.points, max(tops) if tops else None)

    def contains(self, V, x):
        x = self.check(x)
        return x in V.points or (V.ray is not None and self._mag(x) <= V.ray)

    def hsum_sets(self, U, V):
        self._own(U, V)
        acc = self._make((), None)
        for a in U.points:
            for b in V.points:
                acc = self.union(acc, self.hsum(a, b))
        pts, tops = set(), []
        for ray_top, others in ((U.ray, V), (V.ray, U)):
            if ray_top is None:
                continue
            for b in others.points:
                if self._mag(b) <= ray_top:
                    tops.append(ray_top)
                else:
                    pts.add(b)
            if others.ray is not None:
                tops.append(max(ray_top, others.ray))
        return self.union(acc, self._make(pts, max(tops) if tops else None))

    def scale(self, x, V):
        x = self.check(x)
        if x == NEG_INF:
            return self._make({NEG_INF}, None)
        ray = None if V.ray is None else V.ray + x[1]
        return self._make({self.mul(x, p) for p in V.points}, ray)

    def witness_outside(self, U, V):
        for p in sorted(U.points, key=lambda t: (self._mag(t), 0 if t == NEG_INF else t[0])):
            if not self.contains(V, p):
                return p
        if U.ray is not None:
            for c in (NEG_INF, (1, U.ray), (-1, U.ray)):
                if not self.contains(V, c):
                    return c
            if V.ray is None or V.ray < U.ray:
                lo = V.ray if V.ray is not None else U.ray - 1
                c = (1, (lo + U.ray) / 2)
                if not self.contains(V, c):
                    return c
        return None

    def default_sample(self):
        return [NEG_INF, (1, Fraction(0)), (-1, Fraction(0)), (1, Fraction(1)), (-1, Fraction(1))]

    def encode(self, x):
        if x == NEG_INF:
            return "-inf"
        return ("+" if x[0] > 0 else "-") + str(x[1])

    def components(self, V):
        out = [{"kind": "balanced_ray", "top": str(V.ray)}] if V.ray is not None else []
        return out + [{"kind": "point", "value": self.encode(p)}
                      for p in sorted(V.points, key=lambda t: (self._mag(t), 0 if t == NEG_INF else t[0]))]


class PhaseField(SymField):
    """Unit circle plus 0; a ⊞ b is the open shorter arc between a and b."""

    name = "phase"
    zero = ZERO
    one = Fraction(0)

    def is_element(self, x):
        if x is ZERO:
            return True
        return isinstance(x, (int, Fraction)) and not isinstance(x, bool) and 0 <= x < 1

    def mul(self, x, y):
        x, y = self.check(x), self.check(y)
        if ZERO in (x, y):
            return ZERO
        return _angle(x + y)

    def neg(self, x):
        x = self.check(x)
        return x if x is ZERO else _angle(x + HALF)

    def _region(self, crit, full, zero):
        return SetValue(self.name, crit=crit, full=full, zero=zero)

    def points(self, xs):
        xs = [self.check(x) for x in xs]
        angs = {_angle(x) for x in xs if x is not ZERO}
        crit, full = _build_region(angs, lambda t: t in angs)
        return self._region(crit, full, any(x is ZERO for x in xs))

    def arc(self, lo, hi, open_lo=True, open_hi=True) -> SetValue:
        """The counterclockwise arc from lo to hi."""
        lo, hi = _angle(lo), _angle(hi)
        span = (hi - lo) % 1

        def pred(t):
            d = (t - lo) % 1
            if d == 0:
                return not open_lo
            if d == span:
                return not open_hi
            return d < span

        crit, full = _build_region({lo, hi}, pred)
        return self._region(crit, full, False)

    def hsum(self, x, y):
        x, y = self.check(x), self.check(y)
        if x is ZERO:
            return self.points([y])
        if y is ZERO:
            return self.points([x])
        if x == y:
            return self.points([x])
        if _angle(x - y) == HALF:
            return self.points([x, y, ZERO])
        if (y - x) % 1 < HALF:
            return self.arc(x, y)
        return self.arc(y, x)

    def union(self, U, V):
        self._own(U, V)
        crit, full = _build_region([c for c, _, _ in U.crit + V.crit],
                                   lambda t: self._has(U, t) or self._has(V, t))
        return self._region(crit, full, U.zero or V.zero)

    def intersection(self, U, V):
        self._own(U, V)
        crit, full = _build_region([c for c, _, _ in U.crit + V.crit],
                                   lambda t: self._has(U, t) and self._has(V, t))
        return self._region(crit, full, U.zero and V.zero)

    @staticmethod
    def _has(V, t):
        return _region_has(V.crit, V.full, t)

    def contains(self, V, x):
        x = self.check(x)
        return V.zero if x is ZERO else self._has(V, x)

    def _circle_nonempty(self, V):
        return V.full or any(p or g for _, p, g in V.crit)

    def hsum_sets(self, U, V):
        self._own(U, V)
        angles, pred = _phase_sum_pred(U, V)
        crit, full = _build_region(angles, pred)
        out = self._region(crit, full, False)
        if U.zero:
            out = self.union(out, V)
        if V.zero:
            out = self.union(out, U)
        antipodal = self._circle_nonempty(self.intersection(
            self._region(U.crit, U.full, False), self.rotate(HALF, V)))
        if antipodal:
            out = self._region(out.crit, out.full, True)
        return out

    def rotate(self, u, V):
        crit = tuple(sorted((_angle(c + u), p, g) for c, p, g in V.crit))
        return self._region(crit, V.full, False)

    def scale(self, x, V):
        x = self.check(x)
        if x is ZERO:
            return self.points([ZERO])
        r = self.rotate(x, V)
        return self._region(r.crit, r.full, V.zero)

    def witness_outside(self, U, V):
        if U.zero and not V.zero:
            return ZERO
        angs = sorted({c for c, _, _ in U.crit + V.crit} | {Fraction(0)})
        for c, m in zip(angs, _gap_midpoints(angs)):
            if self._has(U, c) and not self._has(V, c):
                return c
            if self._has(U, m) and not self._has(V, m):
                return m
        return None

    def default_sample(self):
        return [ZERO] + [Fraction(k, 8) for k in range(8)]

    def encode(self, x):
        return "0" if x is ZERO else f"angle:{x}"

    def components(self, V):
        out = [{"kind": "zero"}] if V.zero else []
        if V.full:
            return out + [{"kind": "circle"}]
        crit = V.crit
        k = len(crit)
        if not k:
            return out
        # start a run at a critical angle where the previous gap is not in
        starts = [i for i in range(k) if not crit[i - 1][2] or not crit[i][1]]
        if not starts:
            return out + [{"kind": "circle"}]
        comps = []
        for i in starts:
            c, p, g = crit[i]
            if not g:
                if p:
                    comps.append({"kind": "point", "value": str(c)})
                continue
            j = (i + 1) % k
            while crit[j][1] and crit[j][2] and j != i:
                j = (j + 1) % k
            comps.append({"kind": "arc", "from": str(c), "to": str(crit[j][0]),
                          "open_from": not p, "open_to": not crit[j][1]})
        return out + comps


TROPICAL = TropicalField()
SIGNED_TROPICAL = SignedTropicalField()
PHASE = PhaseField()

FIELDS = {f.name: f for f in (KRASNER, SIGNS, TROPICAL, SIGNED_TROPICAL, PHASE)}


def get_field(name: str) -> SymField:
    key = name.replace("-", "_")
    if key not in FIELDS:
        raise KeyError(f"unknown symbolic field {name!r}")
    return FIELDS[key]


def hsum_sym(F: SymField, x, y) -> SetValue:
    return F.hsum(x, y)


def hsum_setvalues(F: SymField, U: SetValue, V: SetValue) -> SetValue:
    return F.hsum_sets(U, V)


def setvalue_to_json(F: SymField, V: SetValue) -> dict:
    return {"schema": "hyperforge/1", "field": F.name, "components": F.components(V)}


# ------------------------------------------------------------------ checks


def spot_check_axioms(F: SymField, sample: Sequence | None = None) -> AxiomReport:
    """Hyperfield axioms over all sample triples with exact set comparison."""
    sample = list(F.default_sample() if sample is None else sample)
    rep = AxiomReport(f"{F.name} spot check")
    pt = F.points
    zero = F.zero

    bad, n = None, 0
    for a in sample:
        n += 1
        if F.hsum(zero, a) != pt([a]) or F.hsum(a, zero) != pt([a]):
            bad = bad or (a,)
    rep.record("hyperneutral_zero", bad is None, bad, n)

    bad, n = None, 0
    for a, b, c in itertools.product(sample, repeat=3):
        n += 1
        lhs = F.hsum_sets(F.hsum(a, b), pt([c]))
        rhs = F.hsum_sets(pt([a]), F.hsum(b, c))
        if lhs != rhs:
            bad = (a, b, c)
            break
    rep.record("associativity", bad is None, bad, n)

    bad, n = None, 0
    for a in sample:
        for b in sample:
            n += 1
            if F.contains(F.hsum(a, b), zero) != (b == F.neg(a)):
                bad = bad or (a, b)
    rep.record("hypernegative_unique", bad is None, bad, n)

    bad, n = None, 0
    for a1, a2, a3 in itertools.product(sample, repeat=3):
        n += 1
        if F.contains(F.hsum(a1, a2), a3) != F.contains(F.hsum(a3, F.neg(a1)), a2):
            bad = (a1, a2, a3)
            break
    rep.record("reversibility", bad is None, bad, n)

    bad, n = None, 0
    for a, b, c in itertools.product(sample, repeat=3):
        n += 1
        if F.scale(a, F.hsum(b, c)) != F.hsum_sets(pt([F.mul(a, b)]), pt([F.mul(a, c)])):
            bad = (a, b, c)
            break
    rep.record("distributivity", bad is None, bad, n)

    rep.info["commutative"] = all(F.hsum(a, b) == F.hsum(b, a) for a in sample for b in sample)
    return rep


@dataclass
class GapWitness:
    found: bool
    S: tuple = ()
    S1: tuple = ()
    S2: tuple = ()
    lhs: SetValue | None = None
    rhs: SetValue | None = None
    point: object = None
    checked: int = 0
    inclusion_violations: list = field(default_factory=list)

    def to_json(self, F: SymField) -> dict:
        enc = F.encode
        out = {"found": self.found, "checked": self.checked}
        if self.found:
            out.update({"S": [enc(x) for x in self.S], "S1": [enc(x) for x in self.S1],
                        "S2": [enc(x) for x in self.S2],
                        "lhs": F.components(self.lhs), "rhs": F.components(self.rhs),
                        "point": enc(self.point)})
        return out


def powerset_sides(F: SymField, S, S1, S2) -> tuple[SetValue, SetValue]:
    """S(S1 ⊞ S2) and SS1 ⊞ SS2 for finite element sets."""
    inner = F.hsum_sets(F.points(S1), F.points(S2))
    lhs = F.points([])
    for s in S:
        lhs = F.union(lhs, F.scale(s, inner))
    SS1 = F.points([F.mul(s, a) for s in S for a in S1])
    SS2 = F.points([F.mul(s, a) for s in S for a in S2])
    return lhs, F.hsum_sets(SS1, SS2)


def distributivity_gap(F: SymField, budget: int = 10_000, pool: Sequence | None = None) -> GapWitness:
    """Search S, S1, S2 with S(S1 ⊞ S2) strictly inside SS1 ⊞ SS2.

    Candidates are nonempty subsets of ``pool`` (default: quarter turns for
    phase, the whole carrier for finite fields), smallest S first. The
    returned point lies in rhs but not lhs and is re-verified by membership.
    """
    if pool is None:
        pool = [Fraction(k, 4) for k in range(4)] if F is PHASE else F.default_sample()[:4]
    subsets = [c for r in range(1, len(pool) + 1) for c in itertools.combinations(pool, r)]
    checked, violations = 0, []
    for S in subsets:
        for S1 in subsets:
            for S2 in subsets:
                if checked >= budget:
                    return GapWitness(False, checked=checked, inclusion_violations=violations)
                checked += 1
                lhs, rhs = powerset_sides(F, S, S1, S2)
                if not F.is_subset(lhs, rhs):
                    violations.append((S, S1, S2))
                    continue
                if lhs != rhs:
                    pt = F.witness_outside(rhs, lhs)
                    if pt is not None and F.contains(rhs, pt) and not F.contains(lhs, pt):
                        return GapWitness(True, S, S1, S2, lhs, rhs, pt, checked, violations)
    return GapWitness(False, checked=checked, inclusion_violations=violations)
