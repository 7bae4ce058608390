"""Named built-in objects and the spec strings the CLI accepts.

Table specs:
    krasner, signs
    gf:Q                 GF(Q) as a hyperfield (singleton sums)
    gf:Q/units           GF(Q) modulo its whole unit group
    gf:Q/order:K         GF(Q) modulo the unit subgroup of order K
    gf:Q/{a,b,...}       GF(Q) modulo the listed units
    path/to/table.json   a HyperTable document

Ring specs (for ``mhyper``): gf:Q, z:N, m2:gf:Q or m2:gfQ, m2:z:N.
Left-ideal specs: col0 (second column zero), col1, zero, all, mult:K,
or an explicit {name,...} list.
"""

from __future__ import annotations

import json
import os
import re

from .carrier import (FinMonoid, FinRing, finite_field, matrix_ring, subgroup_of_order,
                      unit_subgroups, zmod)
from .hyperstruct import HyperTable, field_table, krasner, signs
from .pairs import Pair
from .quotient import krasner_quotient
from .symbolic import FIELDS, get_field


class CatalogError(ValueError):
    pass


SYMBOLIC = tuple(sorted(FIELDS))


def _field(text: str) -> FinRing:
    m = re.fullmatch(r"gf:?(\d+)", text)
    if not m:
        raise CatalogError(f"not a field spec: {text!r}")
    try:
        return finite_field(int(m.group(1)))
    except ValueError as exc:
        raise CatalogError(str(exc)) from exc


def ring(spec: str) -> FinRing:
    spec = spec.strip().lower()
    if spec.startswith("m2:"):
        return matrix_ring(ring(spec[3:]), 2)
    m = re.fullmatch(r"z:?(\d+)", spec)
    if m:
        return zmod(int(m.group(1)))
    return _field(spec)


def subgroup(R: FinRing, spec: str) -> frozenset[int]:
    spec = spec.strip()
    if spec in ("units", "all"):
        return frozenset(R.units())
    if spec in ("1", "trivial"):
        return frozenset({R.one})
    m = re.fullmatch(r"order:(\d+)", spec)
    if m:
        try:
            return subgroup_of_order(R, int(m.group(1))).members
        except ValueError as exc:
            raise CatalogError(str(exc)) from exc
    if spec.startswith("{") and spec.endswith("}"):
        try:
            return frozenset(R.index(x.strip()) for x in spec[1:-1].split(",") if x.strip())
        except KeyError as exc:
            raise CatalogError(f"unknown element in {spec!r}") from exc
    raise CatalogError(f"unknown subgroup spec {spec!r}")


def table(spec: str) -> HyperTable:
    spec = spec.strip()
    if spec == "krasner":
        return krasner()
    if spec == "signs":
        return signs()
    if spec.startswith("gf") and not spec.endswith(".json"):
        base, _, sub = spec.partition("/")
        R = _field(base)
        if not sub:
            return field_table(R)
        return krasner_quotient(R, subgroup(R, sub))
    if spec.endswith(".json") or os.path.sep in spec:
        try:
            with open(spec, encoding="utf-8") as fh:
                return HyperTable.from_json(json.load(fh))
        except OSError as exc:
            raise CatalogError(f"cannot read {spec}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise CatalogError(f"{spec} is not valid JSON: {exc}") from exc
    if spec.replace("-", "_") in FIELDS:
        raise CatalogError(f"{spec} has an infinite carrier; use the symbolic commands")
    raise CatalogError(f"unknown table {spec!r}")


def symbolic(spec: str):
    try:
        return get_field(spec)
    except KeyError as exc:
        raise CatalogError(str(exc)) from exc


def left_ideal(R: FinRing, spec: str) -> frozenset[int]:
    spec = spec.strip()
    if spec == "zero":
        return frozenset({R.zero})
    if spec == "all":
        return frozenset(range(R.n))
    entries = getattr(R, "entries", None)
    if spec in ("col0", "col1"):
        if entries is None:
            raise CatalogError("column ideals need a matrix ring")
        keep = int(spec[-1])
        size = int(len(entries[0]) ** 0.5)
        zero = entries[R.zero][0]
        return frozenset(i for i, e in enumerate(entries)
                         if all(e[r * size + c] == zero for r in range(size) for c in range(size) if c != keep))
    m = re.fullmatch(r"mult:(\d+)", spec)
    if m:
        k = int(m.group(1))
        out, x = {R.zero}, R.zero
        gen = R.zero
        for _ in range(k):
            gen = R.add[gen][R.one]
        while True:
            x = R.add[x][gen]
            if x in out:
                break
            out.add(x)
        return frozenset(out)
    if spec.startswith("{") and spec.endswith("}"):
        try:
            return frozenset(R.index(x.strip()) for x in spec[1:-1].split(",") if x.strip())
        except KeyError as exc:
            raise CatalogError(f"unknown element in {spec!r}") from exc
    raise CatalogError(f"unknown left-ideal spec {spec!r}")


def all_quotients(limit: int = 32):
    """(q, field, subgroup members) for every prime power q ≤ limit and every unit subgroup."""
    from .carrier import prime_powers

    for q in prime_powers(limit):
        R = finite_field(q)
        for G in unit_subgroups(R):
            yield q, R, G.members


# ----------------------------------------------------------- fixtures


def tensor_fixture() -> tuple[Pair, Pair]:
    """Two 2-element magma pairs over T = {1, s} with s idempotent.

    Left factor {ι, x} with x*x = x and s acting trivially on the right;
    right factor {ι, y} with y*y = ι and s·b = ι.
    """
    t_labels, t_mul = ("1", "s"), ((0, 1), (1, 1))
    ident = (0, 1)
    M1 = Pair(("ι", "x"), ((0, 1), (1, 1)), 0, frozenset({0}), t_labels, t_mul, 0,
              (ident, ident), (ident, ident), (None, None), None, "M1")
    M2 = Pair(("ι", "y"), ((0, 1), (1, 0)), 0, frozenset({0}), t_labels, t_mul, 0,
              (ident, (0, 0)), (ident, (0, 0)), (None, None), None, "M2")
    return M1, M2


def pair(spec: str) -> Pair:
    """Pair specs: a JSON document path, or fixture:left / fixture:right."""
    if spec in ("fixture:left", "fixture:right"):
        M1, M2 = tensor_fixture()
        return M1 if spec.endswith("left") else M2
    try:
        with open(spec, encoding="utf-8") as fh:
            return Pair.from_json(json.load(fh))
    except OSError as exc:
        raise CatalogError(f"cannot read {spec}: {exc}") from exc
    except (json.JSONDecodeError, ValueError) as exc:
        raise CatalogError(f"{spec}: {exc}") from exc


def monoid(spec: str) -> FinMonoid:
    from .carrier import symmetric_group, zmod_units

    m = re.fullmatch(r"units:(\d+)", spec)
    if m:
        return zmod_units(int(m.group(1)))
    m = re.fullmatch(r"s(\d)", spec)
    if m:
        return symmetric_group(int(m.group(1)))
    raise CatalogError(f"unknown monoid {spec!r}")
