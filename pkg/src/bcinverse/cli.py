"""Command-line front end.

stdout carries exactly one JSON document (sorted keys), stderr carries
diagnostics.  Exit codes: 0 success, 1 nonexistence or violation, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import BCInverseError
from .inverses import (
    BCResult,
    Reason,
    bc_inverse_linear,
    bott_duffin_ef,
    group_inverse,
    image_kernel_inverse,
    inner_inverse,
    mary_inverse,
    pq_outer_inverse,
    verify_bc_axioms,
)
from .laws import get_law
from .oracle import parse_scope, search_counterexample
from .rings import element_from_json, ring_from_json

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _verify_bd(a, e, f, y):
    return y == e * y == y * f and y * a * e == e and f * a * y == f


KINDS = {
    # kind: (parameter names, solver, axiom check on a found value)
    "bc": (("a", "b", "c"), bc_inverse_linear, verify_bc_axioms),
    "mary": (("a", "d"), mary_inverse, lambda a, d, y: verify_bc_axioms(a, d, d, y)),
    "bott-duffin": (("a", "e", "f"), bott_duffin_ef, _verify_bd),
    "image-kernel": (("a", "e", "f"), image_kernel_inverse, lambda a, e, f, y: _verify_bd(a, e, 1 - f, y)),
    "pq-outer": (("a", "p", "q"), pq_outer_inverse,
                 lambda a, p, q, y: y * a * y == y and y * a == p and a * y == 1 - q),
    "group": (("a",), lambda a: _wrap(group_inverse(a), Reason.GROUP_INVERSE_MISSING),
              lambda a, y: a * y * a == a and y * a * y == y and a * y == y * a),
    "inner": (("a",), lambda a: _wrap(inner_inverse(a), Reason.NOT_REGULAR),
              lambda a, y: a * y * a == a),
}


def _wrap(value, reason):
    return BCResult(value) if value is not None else BCResult.missing(reason)


def _parse_ring(text):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError:
        obj = text
    try:
        return ring_from_json(obj)
    except (KeyError, TypeError) as exc:
        raise InputError(f"bad ring descriptor {text!r}: {exc}") from None


def _parse_bindings(ring, items, required, optional=()):
    out = {}
    for item in items or []:
        name, sep, raw = item.partition("=")
        if not sep or not name:
            raise InputError(f"binding must look like name=<json>, got {item!r}")
        if name in out:
            raise InputError(f"parameter {name!r} bound twice")
        try:
            value = json.loads(raw)
        except json.JSONDecodeError:
            value = raw
        out[name] = element_from_json(value, ring)
    missing = [n for n in required if n not in out and n not in optional]
    extra = [n for n in out if n not in required]
    if missing or extra:
        raise InputError(f"expected parameters {list(required)}; missing {missing}, unexpected {extra}")
    return out


def cmd_compute(args):
    ring = _parse_ring(args.ring)
    if args.kind not in KINDS:
        raise InputError(f"unknown kind {args.kind!r}")
    names, solve, verify = KINDS[args.kind]
    bind = _parse_bindings(ring, args.bind, names)
    res = solve(*(bind[n] for n in names))
    out = res.to_json()
    out["kind"] = args.kind
    out["ring"] = ring.to_json()
    if res.exists:
        out["verified"] = bool(verify(*(bind[n] for n in names), res.value))
    return out, (EXIT_OK if res.exists else EXIT_NEGATIVE)


def cmd_check(args):
    law = get_law(args.law)
    ring = _parse_ring(args.ring)
    bind = _parse_bindings(ring, args.bind, law.params, law.optional)
    rep = law.evaluate(**bind)
    out = rep.to_json()
    out["ring"] = ring.to_json()
    return out, (EXIT_OK if rep.equivalence_ok else EXIT_NEGATIVE)


def cmd_sweep(args):
    get_law(args.law)
    ring = _parse_ring(args.ring)
    try:
        scope = parse_scope(args.scope)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    outcome = search_counterexample(ring, args.law, scope, workers=args.workers)
    if outcome.found:
        print(f"counterexample for {args.law} after {outcome.tuples_checked} tuples", file=sys.stderr)
    return outcome.to_json(), (EXIT_NEGATIVE if outcome.found else EXIT_OK)


def build_parser():
    p = argparse.ArgumentParser(prog="bcinv", description="Exact (b,c)-inverses and reverse-order law checks.")
    p.add_argument("--output", "-o", help="write the JSON result here instead of stdout")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="compute a generalized inverse")
    c.add_argument("--kind", required=True, choices=sorted(KINDS))
    c.add_argument("--ring", required=True, help="ring as JSON or shorthand such as zmod:6, matfp:2:2")
    c.add_argument("--bind", action="append", metavar="NAME=JSON")
    c.set_defaults(func=cmd_compute)

    k = sub.add_parser("check", help="evaluate a reverse-order law on one instance")
    k.add_argument("--law", required=True)
    k.add_argument("--ring", required=True)
    k.add_argument("--bind", action="append", metavar="NAME=JSON")
    k.set_defaults(func=cmd_check)

    s = sub.add_parser("sweep", help="search a finite ring for a counterexample")
    s.add_argument("--law", required=True)
    s.add_argument("--ring", required=True)
    s.add_argument("--scope", default="exhaustive", help="exhaustive or sample:<count>:<seed>")
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=cmd_sweep)

    for sp in (c, k, s):
        sp.add_argument("--output", "-o", default=argparse.SUPPRESS)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        result, code = args.func(args)
    except (InputError, BCInverseError, ValueError, TypeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    text = json.dumps(result, sort_keys=True) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
