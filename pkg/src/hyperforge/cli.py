"""Command-line driver.

Every document written carries ``"schema": "hyperforge/1"``. Exit status is
0 when every check in the emitted report passes, 1 when some check fails
(the witnesses are in the output) and 2 for usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import sys

from . import catalog
from .census import CensusError, census
from .constructs import DEFAULT_TERM_BUDGET, BudgetExceeded, tensor_product
from .hyperstruct import (SCHEMA, check_hyperfield, check_hypergroup, check_hyperring,
                          check_powerset_weak_distributivity)
from .morphisms import iso_search
from .pairs import (check_pair_axioms, check_property_N, check_surpassing, infinity_pair,
                    is_uniquely_negated, mhyper_pair, negation_map, powerset_pair, subset_relation,
                    supertropical_pair, zero_relation)
from .quotient import check_mhyper_distributivity, coset_hypermonoid, krasner_quotient, m_hyperring
from .skewpoly import (PumpluenAlgebra, SkewRing, crosscheck_mhyperring,
                       nonassociativity_witness)
from .symbolic import SymField, distributivity_gap, spot_check_axioms

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
DEFAULT_BUDGET = 10_000


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _budget(args) -> int:
    if args.budget is not None:
        return args.budget
    env = os.environ.get("HYPERFORGE_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"HYPERFORGE_BUDGET must be an integer, got {env!r}") from None
    return DEFAULT_BUDGET


def _doc(kind: str, passed: bool | None, **body) -> dict:
    out = {"schema": SCHEMA, "kind": kind}
    if passed is not None:
        out["passed"] = passed
    out.update(body)
    return out


# ------------------------------------------------------------ commands


def cmd_quotient(args):
    R = catalog.ring(args.base)
    if args.monoid:
        M = catalog.monoid(args.monoid)
        G = frozenset(M.index(x.strip()) for x in args.subgroup.strip("{}").split(","))
        H, _ = coset_hypermonoid(M, G, args.mode)
        return _doc("coset_hypermonoid", None, table=H.to_json()), H
    G = catalog.subgroup(R, args.subgroup)
    H = krasner_quotient(R, G)
    body = {"table": H.to_json()}
    passed = None
    if args.verify:
        rep = check_hyperfield(H)
        body["report"] = rep.to_dict()
        passed = rep.passed
    return _doc("quotient", passed, **body), H


_SUITES = {"hypergroup": check_hypergroup, "hyperring": check_hyperring, "hyperfield": check_hyperfield}


def _check_symbolic(F: SymField, args):
    rep = spot_check_axioms(F)
    body = {"field": F.name, "report": rep.to_dict()}
    if args.gap:
        gap = distributivity_gap(F, budget=_budget(args))
        body["distributivity_gap"] = gap.to_json(F)
    return _doc("check", rep.passed, **body), None


def cmd_check(args):
    name = args.table.replace("-", "_")
    if name in catalog.SYMBOLIC and name not in ("krasner", "signs"):
        return _check_symbolic(catalog.symbolic(args.table), args)
    H = catalog.table(args.table)
    if args.suite == "powerset":
        rep = check_powerset_weak_distributivity(H, budget=_budget(args), seed=args.seed)
    else:
        rep = _SUITES[args.suite](H)
    return _doc("check", rep.passed, table=H.name or args.table, suite=args.suite,
                report=rep.to_dict()), H


def cmd_iso(args):
    A, B = catalog.table(args.a), catalog.table(args.b)
    res = iso_search(A, B)
    mapping = None
    if res.found:
        mapping = {A.elements[i]: B.elements[j] for i, j in enumerate(res.mapping)}
    return _doc("iso", res.found, iso=mapping, nodes_explored=res.nodes_explored), None


def cmd_mhyper(args):
    R = catalog.ring(args.ring)
    L = catalog.left_ideal(R, args.left_ideal)
    M = m_hyperring(R, L)
    rep = check_mhyper_distributivity(M)
    return _doc("mhyper", rep.passed, structure=M.to_json(), report=rep.to_dict()), None


def _twist(text: str) -> int:
    if text == "id":
        return 0
    if text.startswith("frob:"):
        try:
            return int(text[5:])
        except ValueError:
            pass
    raise UsageError(f"unknown twist {text!r}; use frob:K or id")


def cmd_pumpluen(args):
    F = catalog.ring(args.field)
    if not F.is_field:
        raise UsageError(f"{args.field} is not a field")
    S = SkewRing(F, _twist(args.twist))
    f = S.parse(args.modulus)
    A = PumpluenAlgebra(S, f)
    body = {"ring": S.name, "modulus": S.fmt(f), "size": A.n}
    passed = None
    if args.table:
        body["algebra"] = A.to_json()
    if args.mul:
        a, b = (S.parse(x) for x in args.mul)
        body["product"] = {"a": S.fmt(a), "b": S.fmt(b), "value": S.fmt(A.mul(a, b))}
    wit = nonassociativity_witness(A)
    body["nonassociative_witness"] = None if wit is None else [S.fmt(A.elements[i]) for i in wit]
    if args.crosscheck:
        v = crosscheck_mhyperring(A, samples=args.crosscheck, seed=args.seed)
        body["crosscheck"] = v.to_dict()
        passed = v.passed
    return _doc("pumpluen", passed, **body), None


def cmd_tensor(args):
    M1, M2 = catalog.pair(args.left), catalog.pair(args.right)
    depth = args.depth if args.depth is not None else 2
    try:
        Tp = tensor_product(M1, M2, depth=depth, budget=args.budget or DEFAULT_TERM_BUDGET)
    except (BudgetExceeded, ValueError) as exc:
        raise UsageError(str(exc)) from None
    bad_bal = [(x1, a, x2) for a in range(M1.t_n) for x1 in range(M1.n) for x2 in range(M2.n)
               if not Tp.balanced(x1, a, x2)]
    bil = [Tp.bilinear_left(m, n, x2) for m in range(M1.n) for n in range(M1.n) for x2 in range(M2.n)]
    bil += [Tp.bilinear_right(x1, m, n) for x1 in range(M1.n) for m in range(M2.n) for n in range(M2.n)]
    rng = random.Random(args.seed)
    base = Tp.closure.partition()
    n_rel = _relation_count(M1, M2, Tp)
    shuffles_ok = True
    for _ in range(args.shuffles):
        order = list(range(n_rel))
        rng.shuffle(order)
        if tensor_product(M1, M2, depth=depth, order=order).closure.partition() != base:
            shuffles_ok = False
    passed = not bad_bal and all(b is not False for b in bil) and shuffles_ok
    body = Tp.to_json()
    body.pop("schema", None)
    body.update({"balanced_failures": bad_bal, "bilinear_checked": sum(b is not None for b in bil),
                 "order_independent": shuffles_ok, "shuffles": args.shuffles})
    return _doc("tensor", passed, **body), None


def _relation_count(M1, M2, Tp) -> int:
    from .constructs import tensor_relations

    return len(tensor_relations(M1, M2, Tp.universe, Tp.generators))


def _pair_from_args(args):
    spec = args.pair
    if spec is None:
        return powerset_pair(catalog.table(args.table))
    if spec.startswith("infinity:"):
        return infinity_pair(catalog.monoid(spec[9:]))
    if spec.startswith("infinity-idem:"):
        return infinity_pair(catalog.monoid(spec[14:]), idempotent=True)
    if spec == "supertropical":
        return supertropical_pair()
    if spec.startswith("mhyper:"):
        ring_spec, _, ideal = spec[7:].rpartition(":")
        R = catalog.ring(ring_spec)
        return mhyper_pair(m_hyperring(R, catalog.left_ideal(R, ideal)))
    return catalog.pair(spec)


def cmd_pairs(args):
    P = _pair_from_args(args)
    rep = check_pair_axioms(P)
    kind = args.relation or ("subset" if P.masks is not None else "zero")
    R = subset_relation(P) if kind == "subset" else zero_relation(P)
    rep.merge(check_surpassing(R), "surpassing.")
    body = {"pair": P.name, "relation": R.kind}
    if P.weakly_admissible:
        prop = check_property_N(P)
        body["property_N"] = prop.to_json()
        nu = negation_map(P)
        body["negation_map"] = None if nu is None else {P.labels[a]: P.labels[b] for a, b in nu.items()}
        body["uniquely_negated"] = is_uniquely_negated(P).to_dict()
        if args.require_negation:
            rep.record("property_N", prop.holds, prop.witness)
            un = is_uniquely_negated(P)
            rep.record("uniquely_negated", un.passed, un.witness, un.checked, un.note)
    body["report"] = rep.to_dict()
    return _doc("pairs", rep.passed, **body), None


def cmd_census(args):
    try:
        entries = census(args.max_order)
    except CensusError as exc:
        raise UsageError(str(exc)) from None
    return _doc("census", None, max_order=args.max_order, count=len(entries),
                entries=[e.to_json() for e in entries]), None


# ------------------------------------------------------------ plumbing


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--out", help="write output here instead of standard output")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget", type=int, default=None)
    common.add_argument("--depth", type=int, default=None)
    common.add_argument("--format", choices=("json", "csv"), default="json")

    p = _Parser(prog="hyperforge", description="Residue hyperstructures and their axiom checks.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    q = sub.add_parser("quotient", parents=[common], help="Krasner quotient of a finite field")
    q.add_argument("--base", default="gf:5")
    q.add_argument("--subgroup", required=True)
    q.add_argument("--monoid", help="build a coset hypermonoid of this monoid (units:N, sN)")
    q.add_argument("--mode", choices=("right", "double"), default="right")
    q.add_argument("--verify", action="store_true", help="also run the hyperfield checks")
    q.set_defaults(func=cmd_quotient)

    c = sub.add_parser("check", parents=[common], help="verify axioms of a table or symbolic field")
    c.add_argument("--table", required=True)
    c.add_argument("--suite", choices=(*_SUITES, "powerset"), default="hyperfield")
    c.add_argument("--gap", action="store_true", help="search for a distributivity gap (symbolic fields)")
    c.set_defaults(func=cmd_check)

    i = sub.add_parser("iso", parents=[common], help="isomorphism search between two tables")
    i.add_argument("--a", required=True)
    i.add_argument("--b", required=True)
    i.set_defaults(func=cmd_iso)

    m = sub.add_parser("mhyper", parents=[common], help="m-hyperring of a ring by a left ideal")
    m.add_argument("--ring", required=True)
    m.add_argument("--left-ideal", required=True)
    m.set_defaults(func=cmd_mhyper)

    s = sub.add_parser("pumpluen", parents=[common], help="skew-polynomial remainder algebra")
    s.add_argument("--field", default="gf:4")
    s.add_argument("--twist", default="frob:1")
    s.add_argument("--modulus", required=True)
    s.add_argument("--table", action="store_true", help="emit the full multiplication table")
    s.add_argument("--mul", nargs=2, metavar=("A", "B"))
    s.add_argument("--crosscheck", type=int, default=0, metavar="N",
                   help="compare with the m-hyperring on N seeded random pairs")
    s.set_defaults(func=cmd_pumpluen)

    t = sub.add_parser("tensor", parents=[common], help="depth-truncated tensor product of pairs")
    t.add_argument("--left", default="fixture:left")
    t.add_argument("--right", default="fixture:right")
    t.add_argument("--shuffles", type=int, default=10)
    t.set_defaults(func=cmd_tensor)

    r = sub.add_parser("pairs", parents=[common], help="pair axioms, surpassing relation, Property N")
    g = r.add_mutually_exclusive_group(required=True)
    g.add_argument("--table", help="use the power-set pair of this table")
    g.add_argument("--pair", help="JSON file, fixture:left|right, infinity:units:N, supertropical, "
                                   "mhyper:RING:IDEAL")
    r.add_argument("--relation", choices=("subset", "zero"),
                   help="surpassing relation (default: subset on power-set pairs, else zero)")
    r.add_argument("--require-negation", action="store_true",
                   help="count Property N and unique negation as checks")
    r.set_defaults(func=cmd_pairs)

    n = sub.add_parser("census", parents=[common], help="hyperfields up to isomorphism")
    n.add_argument("--max-order", type=int, default=3)
    n.set_defaults(func=cmd_census)
    return p


def _to_csv(doc: dict, table) -> str:
    if table is not None and "report" not in doc:
        return table.to_csv()
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(["check", "passed", "witness", "checked", "note"])
    report = doc.get("report")
    if "entries" in doc:
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["name", "order", "realizable", "realized_by"])
        for e in doc["entries"]:
            rb = e["realized_by"][0] if e["realized_by"] else None
            w.writerow([e["name"], len(e["elements"]), e["realizable"],
                        "" if rb is None else f"GF({rb['q']})/{{{','.join(rb['subgroup'])}}}"])
        return buf.getvalue()
    if report:
        for name, res in report["axioms"].items():
            w.writerow([name, res["passed"], json.dumps(res["witness"], ensure_ascii=False),
                        res["checked"], res["note"]])
    else:
        w.writerow([doc["kind"], doc.get("passed", ""), "", "", ""])
    return buf.getvalue()


def run(argv=None) -> tuple[int, str]:
    """Parse and execute; returns (exit code, rendered output)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        doc, table = args.func(args)
    except (UsageError, ValueError, KeyError) as exc:
        msg = exc.args[0] if exc.args else str(exc)
        return EXIT_USAGE, json.dumps({"schema": SCHEMA, "error": str(msg)}, ensure_ascii=False)
    text = _to_csv(doc, table) if args.format == "csv" else json.dumps(doc, ensure_ascii=False, indent=2)
    code = EXIT_FAIL if doc.get("passed") is False else EXIT_OK
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
        return code, ""
    return code, text


def main(argv=None) -> int:
    code, text = run(argv)
    if text:
        stream = sys.stderr if code == EXIT_USAGE else sys.stdout
        print(text, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
