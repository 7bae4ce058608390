"""Constructions on pairs: products, sums, polynomials, matrices, tensors.

Tensor products are computed inside a depth-bounded universe of terms of
the free magma, so every reported equality is sound but classes that
would merge only through deeper terms stay apart.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .pairs import Pair

DEFAULT_TERM_BUDGET = 250_000


class BudgetExceeded(RuntimeError):
    pass


def trivial_pair(label: str = "ι") -> Pair:
    return Pair((label,), ((0,),), 0, frozenset({0}), ("1",), ((0,),), 0, ((0,),), ((0,),),
                (0,), ((0,),), "trivial")


def _tuple_label(parts: Sequence[str]) -> str:
    return "(" + ",".join(parts) + ")"


def _product_core(Ps: Sequence[Pair]):
    shape = [P.n for P in Ps]
    elems = list(itertools.product(*[range(k) for k in shape]))
    pos = {e: i for i, e in enumerate(elems)}
    labels = tuple(_tuple_label([P.labels[c] for P, c in zip(Ps, e)]) for e in elems)
    op = tuple(tuple(pos[tuple(P.op[x][y] for P, x, y in zip(Ps, a, b))] for b in elems) for a in elems)
    mul = None
    if all(P.mul is not None for P in Ps):
        mul = tuple(tuple(pos[tuple(P.mul[x][y] for P, x, y in zip(Ps, a, b))] for b in elems) for a in elems)
    iota = pos[tuple(P.iota for P in Ps)]
    null = frozenset(i for i, e in enumerate(elems) if all(c in P.null for P, c in zip(Ps, e)))
    return elems, pos, labels, op, mul, iota, null


def product_pair(Ps: Sequence[Pair]) -> Pair:
    """Componentwise carrier, operation and action of the product monoid."""
    Ps = list(Ps)
    elems, pos, labels, op, mul, iota, null = _product_core(Ps)
    t_elems = list(itertools.product(*[range(P.t_n) for P in Ps]))
    tpos = {t: i for i, t in enumerate(t_elems)}
    t_mul = tuple(tuple(tpos[tuple(P.t_mul[x][y] for P, x, y in zip(Ps, s, t))] for t in t_elems) for s in t_elems)
    left = tuple(tuple(pos[tuple(P.left[x][c] for P, x, c in zip(Ps, t, e))] for e in elems) for t in t_elems)
    right = tuple(tuple(pos[tuple(P.right[x][c] for P, x, c in zip(Ps, t, e))] for e in elems) for t in t_elems)
    if all(P.weakly_admissible for P in Ps):
        embed = tuple(pos[tuple(P.embed[x] for P, x in zip(Ps, t))] for t in t_elems)
    else:
        embed = (None,) * len(t_elems)
    return Pair(labels, op, iota, null,
                tuple(_tuple_label([P.t_labels[x] for P, x in zip(Ps, t)]) for t in t_elems),
                t_mul, tpos[tuple(P.t_one for P in Ps)], left, right, embed, mul,
                " × ".join(P.name for P in Ps))


def direct_sum_pair(Ps: Sequence[Pair]) -> Pair:
    """Finite direct sum over a common T acting diagonally."""
    Ps = list(Ps)
    T0 = Ps[0]
    for P in Ps[1:]:
        if P.t_labels != T0.t_labels or P.t_mul != T0.t_mul:
            raise ValueError("direct sums need a common T")
    elems, pos, labels, op, mul, iota, null = _product_core(Ps)
    left = tuple(tuple(pos[tuple(P.left[t][c] for P, c in zip(Ps, e))] for e in elems) for t in range(T0.t_n))
    right = tuple(tuple(pos[tuple(P.right[t][c] for P, c in zip(Ps, e))] for e in elems) for t in range(T0.t_n))
    if all(P.weakly_admissible for P in Ps):
        embed = tuple(pos[tuple(P.embed[t] for P in Ps)] for t in range(T0.t_n))
    else:
        embed = (None,) * T0.t_n
    return Pair(labels, op, iota, null, T0.t_labels, T0.t_mul, T0.t_one, left, right, embed, mul,
                " ⊕ ".join(P.name for P in Ps))


def boolean_pair() -> Pair:
    """({0,1}, max, min) with A0 = {0} and T = {1}."""
    return Pair(("0", "1"), ((0, 1), (1, 1)), 0, frozenset({0}), ("1",), ((0,),), 0,
                ((0, 1),), ((0, 1),), (1,), ((0, 0), (0, 1)), "boolean")


# ------------------------------------------------------------ polynomials


def _pair_sum(P: Pair, xs: Iterable[int]) -> int:
    acc = P.iota
    for x in xs:
        acc = P.op[acc][x]
    return acc


def polynomial_pair(P: Pair, max_degree: int, truncate: bool = True) -> Pair:
    """Coefficient vectors b0 + b1λ + ... + b_dλ^d with convolution product.

    With ``truncate`` the terms beyond degree d are dropped; otherwise a
    product reaching past d raises. T is the monomials tλ^i plus 0.
    """
    if P.mul is None:
        raise ValueError("polynomial pairs need a pre-semiring base")
    if not P.weakly_admissible:
        raise ValueError("polynomial pairs need T inside the carrier")
    d = max_degree
    elems = list(itertools.product(range(P.n), repeat=d + 1))
    pos = {e: i for i, e in enumerate(elems)}

    def name(e):
        terms = []
        for i, c in enumerate(e):
            if c == P.iota:
                continue
            mono = "" if i == 0 else ("λ" if i == 1 else f"λ^{i}")
            coef = P.labels[c]
            terms.append(coef if not mono else (mono if coef == "1" else f"{coef}{mono}"))
        return "+".join(terms) if terms else P.labels[P.iota]

    def pmul(a, b):
        out = []
        for k in range(2 * d + 1):
            s = _pair_sum(P, (P.mul[a[i]][b[k - i]] for i in range(max(0, k - d), min(k, d) + 1)))
            out.append(s)
        if not truncate and any(c != P.iota for c in out[d + 1:]):
            raise ValueError("product exceeds the degree bound")
        return tuple(out[:d + 1])

    op = tuple(tuple(pos[tuple(P.op[x][y] for x, y in zip(a, b))] for b in elems) for a in elems)
    mul = tuple(tuple(pos[pmul(a, b)] for b in elems) for a in elems)
    zero_vec = (P.iota,) * (d + 1)
    monos = [zero_vec] + [tuple(P.embed[t] if j == i else P.iota for j in range(d + 1))
                          for i in range(d + 1) for t in range(P.t_n)]
    monos = list(dict.fromkeys(monos))
    one = tuple(P.embed[P.t_one] if j == 0 else P.iota for j in range(d + 1))
    monos.remove(one)
    monos = [one] + monos
    tpos = {m: i for i, m in enumerate(monos)}
    t_mul = tuple(tuple(tpos[pmul(a, b)] for b in monos) for a in monos)
    left = tuple(tuple(mul[pos[m]][pos[e]] for e in elems) for m in monos)
    right = tuple(tuple(mul[pos[e]][pos[m]] for e in elems) for m in monos)
    null = frozenset(i for i, e in enumerate(elems) if all(c in P.null for c in e))
    labels = tuple(name(e) for e in elems)
    return Pair(labels, op, pos[zero_vec], null, tuple(name(m) for m in monos), t_mul, 0,
                left, right, tuple(pos[m] for m in monos), mul, f"{P.name}[λ]≤{d}")


def poly_element(P: Pair, coeffs: Sequence[str], max_degree: int) -> int:
    """Index in ``polynomial_pair(P, max_degree)`` of b0 + b1λ + ..., labels lowest degree first."""
    cs = [P.index(c) for c in coeffs] + [P.iota] * (max_degree + 1 - len(coeffs))
    idx = 0
    for c in cs:
        idx = idx * P.n + c
    return idx


# ----------------------------------------------------------------- matrices


def matrix_pair(P: Pair, n: int = 2) -> Pair:
    """n×n matrices over a semiring pair; T = scaled matrix units plus 0 and 1."""
    if P.mul is None:
        raise ValueError("matrix pairs need a semiring base")
    if n > 3 or P.n ** (n * n) > 20_000:
        raise ValueError("matrix carrier too large for exhaustive checks")
    if not P.weakly_admissible:
        raise ValueError("matrix pairs need T inside the carrier")
    cells = n * n
    elems = list(itertools.product(range(P.n), repeat=cells))
    pos = {e: i for i, e in enumerate(elems)}

    def mm(a, b):
        return tuple(_pair_sum(P, (P.mul[a[i * n + k]][b[k * n + j]] for k in range(n)))
                     for i in range(n) for j in range(n))

    op = tuple(tuple(pos[tuple(P.op[x][y] for x, y in zip(a, b))] for b in elems) for a in elems)
    mul = tuple(tuple(pos[mm(a, b)] for b in elems) for a in elems)
    zero = (P.iota,) * cells
    ident = tuple(P.embed[P.t_one] if i == j else P.iota for i in range(n) for j in range(n))
    units = [tuple(P.embed[t] if c == i * n + j else P.iota for c in range(cells))
             for i in range(n) for j in range(n) for t in range(P.t_n)]
    monos = list(dict.fromkeys([ident, zero] + units))
    tpos = {m: i for i, m in enumerate(monos)}
    t_mul = tuple(tuple(tpos[mm(a, b)] for b in monos) for a in monos)
    left = tuple(tuple(mul[pos[m]][pos[e]] for e in elems) for m in monos)
    right = tuple(tuple(mul[pos[e]][pos[m]] for e in elems) for m in monos)
    null = frozenset(i for i, e in enumerate(elems) if all(c in P.null for c in e))

    def label(e):
        return "/".join("".join(P.labels[e[i * n + j]] for j in range(n)) for i in range(n))

    return Pair(tuple(label(e) for e in elems), op, pos[zero], null, tuple(label(m) for m in monos),
                t_mul, 0, left, right, tuple(pos[m] for m in monos), mul, f"M{n}({P.name})")


def matrix_unit(A: Pair, i: int, j: int, n: int = 2, entry: str = "1") -> int:
    """Carrier index of the matrix with ``entry`` at (i, j) and ι elsewhere."""
    return A.index(_unit_label(A, i, j, n, entry))


def _unit_label(A: Pair, i, j, n, entry):
    zero = A.labels[A.iota].split("/")[0][0]
    rows = [[zero] * n for _ in range(n)]
    rows[i][j] = entry
    return "/".join("".join(r) for r in rows)


# ------------------------------------------------------------- free magma


@dataclass
class TermUniverse:
    """All terms of height at most ``depth`` over the given leaves.

    Terms are ids; ``nodes[i]`` is None for a leaf or ``(left, right)``.
    """

    leaves: tuple[str, ...]
    nodes: list
    height: list
    index: dict
    depth: int

    def __len__(self) -> int:
        return len(self.nodes)

    def node(self, a: int, b: int) -> int | None:
        return self.index.get((a, b))

    def render(self, i: int) -> str:
        nd = self.nodes[i]
        if nd is None:
            return self.leaves[i]
        l, r = nd
        ls = self.render(l) if self.nodes[l] is None else f"({self.render(l)})"
        rs = self.render(r) if self.nodes[r] is None else f"({self.render(r)})"
        return f"{ls}*{rs}"

    def leaf_ids(self, i: int) -> list[int]:
        nd = self.nodes[i]
        if nd is None:
            return [i]
        return self.leaf_ids(nd[0]) + self.leaf_ids(nd[1])

    def parse(self, text: str) -> int:
        """Inverse of :meth:`render` for leaf names without '*', '(' or ')'."""
        pos = {name: i for i, name in enumerate(self.leaves)}
        s = text.replace(" ", "")
        k = 0

        def atom():
            nonlocal k
            if s[k] == "(":
                k += 1
                t = expr()
                k += 1
                return t
            j = k
            while k < len(s) and s[k] not in "*()":
                k += 1
            return pos[s[j:k]]

        def expr():
            nonlocal k
            t = atom()
            if k < len(s) and s[k] == "*":
                k += 1
                u = atom()
                v = self.node(t, u)
                if v is None:
                    raise KeyError(f"{text!r} is outside the universe")
                return v
            return t

        return expr()


def term_counts(leaves: int, depth: int) -> list[int]:
    h = [leaves]
    for _ in range(depth):
        h.append(leaves + h[-1] ** 2)
    return h


def free_T_magma(X: Sequence[str], T: Sequence[str] = ("1",), depth: int = 2,
                 budget: int = DEFAULT_TERM_BUDGET) -> TermUniverse:
    """Free magma on the decorated leaves t·x, truncated at the given height.

    The neutral scalar leaves x undecorated.
    """
    leaves = tuple(x if t == T[0] else f"{t}·{x}" for x in X for t in T)
    return _universe(leaves, depth, budget)


def _universe(leaves: tuple[str, ...], depth: int, budget: int) -> TermUniverse:
    if term_counts(len(leaves), depth)[-1] > budget:
        raise BudgetExceeded(f"universe of height {depth} over {len(leaves)} leaves exceeds {budget} terms")
    nodes = [None] * len(leaves)
    height = [0] * len(leaves)
    index = {}
    for h in range(1, depth + 1):
        prev = len(nodes)
        for a in range(prev):
            for b in range(prev):
                if max(height[a], height[b]) == h - 1:
                    index[(a, b)] = len(nodes)
                    nodes.append((a, b))
                    height.append(h)
    return TermUniverse(leaves, nodes, height, index, depth)


# ------------------------------------------------------ congruence closure


@dataclass
class CongRel:
    universe: TermUniverse
    parent: list

    def find(self, i: int) -> int:
        p = self.parent
        root = i
        while p[root] != root:
            root = p[root]
        while p[i] != root:
            p[i], i = root, p[i]
        return root

    def same(self, a: int, b: int) -> bool:
        return self.find(a) == self.find(b)

    def classes(self) -> list[list[int]]:
        groups = {}
        for i in range(len(self.parent)):
            groups.setdefault(self.find(i), []).append(i)
        return sorted(groups.values())

    def partition(self) -> frozenset:
        return frozenset(frozenset(c) for c in self.classes())

    def is_congruence(self) -> bool:
        sig = {}
        for i, nd in enumerate(self.universe.nodes):
            if nd is None:
                continue
            key = (self.find(nd[0]), self.find(nd[1]))
            if key in sig and not self.same(sig[key], i):
                return False
            sig.setdefault(key, i)
        return True


def congruence_closure(U: TermUniverse, pairs: Iterable[tuple[int, int]]) -> CongRel:
    """Least congruence on U containing ``pairs``, by union-find to a fixpoint."""
    parent = list(range(len(U)))
    C = CongRel(U, parent)

    def union(a, b):
        ra, rb = C.find(a), C.find(b)
        if ra == rb:
            return False
        if ra < rb:
            parent[rb] = ra
        else:
            parent[ra] = rb
        return True

    for a, b in pairs:
        if not (0 <= a < len(U) and 0 <= b < len(U)):
            raise ValueError(f"pair {(a, b)} is outside the universe")
        union(a, b)
    internal = [(i, nd) for i, nd in enumerate(U.nodes) if nd is not None]
    changed = True
    while changed:
        changed = False
        sig = {}
        for i, (l, r) in internal:
            key = (C.find(l), C.find(r))
            j = sig.setdefault(key, i)
            if j != i and union(i, j):
                changed = True
    return C


# ----------------------------------------------------------------- tensor


@dataclass
class TensorProduct:
    left: Pair
    right: Pair
    depth: int
    universe: TermUniverse
    closure: CongRel
    generators: dict
    null_classes: frozenset

    def gen(self, x1: int, x2: int) -> int:
        return self.generators[(x1, x2)]

    def class_of(self, term: int) -> int:
        return self.closure.find(term)

    def classes(self) -> list[list[int]]:
        return self.closure.classes()

    def is_null(self, term: int) -> bool:
        return self.class_of(term) in self.null_classes

    def balanced(self, x1: int, a: int, x2: int) -> bool:
        """(x1·a) ⊗ x2 and x1 ⊗ (a·x2) share a class."""
        return self.closure.same(self.gen(self.left.right[a][x1], x2), self.gen(x1, self.right.left[a][x2]))

    def bilinear_left(self, m: int, n: int, x2: int) -> bool | None:
        t = self.universe.node(self.gen(m, x2), self.gen(n, x2))
        if t is None:
            return None
        return self.closure.same(self.gen(self.left.op[m][n], x2), t)

    def bilinear_right(self, x1: int, m: int, n: int) -> bool | None:
        t = self.universe.node(self.gen(x1, m), self.gen(x1, n))
        if t is None:
            return None
        return self.closure.same(self.gen(x1, self.right.op[m][n]), t)

    def to_json(self) -> dict:
        U = self.universe
        classes = self.classes()
        return {
            "schema": "hyperforge/1",
            "depth": self.depth,
            "terms": len(U),
            "classes": [[U.render(t) for t in c] for c in classes],
            "null_classes": [[U.render(t) for t in c] for c in classes if self.closure.find(c[0]) in self.null_classes],
        }


def tensor_relations(M1: Pair, M2: Pair, U: TermUniverse, gens: dict) -> list[tuple[int, int]]:
    rel = []
    for x2 in range(M2.n):
        for m in range(M1.n):
            for n in range(M1.n):
                t = U.node(gens[(m, x2)], gens[(n, x2)])
                if t is not None:
                    rel.append((gens[(M1.op[m][n], x2)], t))
    for x1 in range(M1.n):
        for m in range(M2.n):
            for n in range(M2.n):
                t = U.node(gens[(x1, m)], gens[(x1, n)])
                if t is not None:
                    rel.append((gens[(x1, M2.op[m][n])], t))
    for a in range(M1.t_n):
        for x1 in range(M1.n):
            for x2 in range(M2.n):
                rel.append((gens[(M1.right[a][x1], x2)], gens[(x1, M2.left[a][x2])]))
    return rel


def tensor_product(M1: Pair, M2: Pair, depth: int = 2, budget: int = DEFAULT_TERM_BUDGET,
                   order: Sequence[int] | None = None) -> TensorProduct:
    """M1 ⊗ M2 over the common T, truncated at term height ``depth``.

    ``order`` optionally permutes the generating relations; the closure
    does not depend on it.
    """
    if M1.t_labels != M2.t_labels or M1.t_mul != M2.t_mul:
        raise ValueError("tensor factors need a common T")
    pairs_ = [(x1, x2) for x1 in range(M1.n) for x2 in range(M2.n)]
    leaves = tuple(f"{M1.labels[x1]}⊗{M2.labels[x2]}" for x1, x2 in pairs_)
    U = _universe(leaves, depth, budget)
    gens = {p: i for i, p in enumerate(pairs_)}
    rel = tensor_relations(M1, M2, U, gens)
    if order is not None:
        rel = [rel[i] for i in order]
    C = congruence_closure(U, rel)
    null = set()
    for t in range(len(U)):
        lf = [pairs_[i] for i in U.leaf_ids(t)]
        if all(x1 in M1.null for x1, _ in lf) or all(x2 in M2.null for _, x2 in lf):
            null.add(C.find(t))
    return TensorProduct(M1, M2, depth, U, C, gens, frozenset(null))
