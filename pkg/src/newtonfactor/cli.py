"""Command-line front end.  Every command prints one JSON object on stdout.

Exit codes: 0 success, 1 input error (or a failed verification), 2 search
gave up.  Diagnostics go to stderr.
"""
from __future__ import annotations

import argparse
import json
import sys

import jsonschema

from .classify import classify
from .errors import FactorizationError, Inconclusive
from .factor import factor_by_certificate
from .field import FieldError, parse_field
from .oracle import DEFAULT_CAP, is_absolutely_reducible, ostrowski_fuzz, z_status
from .polytope import enumerate_decompositions, hull
from .support import MAX_COORD, Polynomial, Support
from .witness import build_characteristic_witness, verify_witness

SCHEMA_VERSION = 1

_COORD = {"type": "integer", "minimum": 0, "maximum": MAX_COORD}

SUPPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "support",
    "type": "object",
    "required": ["n", "points"],
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "n": {"type": "integer", "minimum": 1},
        "points": {"type": "array", "minItems": 1, "items": {"type": "array", "items": _COORD}},
    },
}

POLY_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "polynomial",
    "type": "object",
    "required": ["p", "n", "terms"],
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "p": {"type": "integer", "minimum": 2},
        "k": {"type": "integer", "minimum": 1},
        "n": {"type": "integer", "minimum": 1},
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["exp", "coeff"],
                "properties": {
                    "exp": {"type": "array", "items": _COORD},
                    "coeff": {
                        "oneOf": [
                            {"type": "integer", "minimum": 0},
                            {"type": "array", "items": {"type": "integer", "minimum": 0}},
                        ]
                    },
                },
            },
        },
    },
}

WITNESS_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "characteristic witness",
    "type": "object",
    "required": ["case", "primes", "J"],
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "case": {"enum": ["A", "B", "a", "b"]},
        "primes": {"type": "array", "items": {"type": "integer", "minimum": 2}},
        "J": SUPPORT_SCHEMA,
    },
}


def _params_schema(title: str, props: dict, required=()) -> dict:
    return {
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "title": title,
        "description": "command-line parameters; this command reads no input file",
        "type": "object",
        "required": list(required),
        "properties": props,
    }


SCHEMAS = {
    "classify": SUPPORT_SCHEMA,
    "factor": POLY_SCHEMA,
    "probe": SUPPORT_SCHEMA,
    "irreducible": POLY_SCHEMA,
    "decompose": SUPPORT_SCHEMA,
    "witness": _params_schema(
        "witness parameters",
        {"primes": {"type": "string", "pattern": "^([0-9]+(,[0-9]+)*)?$"}, "case": {"enum": ["a", "b"]}},
        ["primes", "case"],
    ),
    "verify": WITNESS_SCHEMA,
    "ostrowski-fuzz": _params_schema(
        "ostrowski-fuzz parameters",
        {"seed": {"type": "integer"}, "count": {"type": "integer", "minimum": 0}},
        ["seed"],
    ),
}


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # usage errors are input errors; exit status 2 is reserved for "inconclusive"
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


class VerificationFailed(Exception):
    def __init__(self, result: dict, message: str):
        super().__init__(message)
        self.result = result


def _emit(obj: dict) -> None:
    out = dict(obj)
    out["schema_version"] = SCHEMA_VERSION
    sys.stdout.write(json.dumps(out, sort_keys=True, separators=(",", ":")) + "\n")


def _load(path: str, schema: dict):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    err = jsonschema.exceptions.best_match(jsonschema.Draft202012Validator(schema).iter_errors(data))
    if err is not None:
        where = "$" + "".join(f"[{p}]" if isinstance(p, int) else f".{p}" for p in err.absolute_path)
        raise InputError(f"{path}: schema violation at {where}: {err.message}")
    return data


def _check_dims(path: str, n: int, exps, label: str) -> None:
    for idx, e in enumerate(exps):
        if len(e) != n:
            raise InputError(f"{path}: dimension mismatch at $.{label}[{idx}]: expected {n} coordinates, got {len(e)}")


def _support(path: str) -> Support:
    data = _load(path, SUPPORT_SCHEMA)
    _check_dims(path, data["n"], data["points"], "points")
    return Support.from_json(data)


def _poly(path: str) -> Polynomial:
    data = _load(path, POLY_SCHEMA)
    _check_dims(path, data["n"], [t["exp"] for t in data["terms"]], "terms[*].exp")
    try:
        P = Polynomial.from_json(data)
    except (ValueError, FieldError) as exc:
        raise InputError(f"{path}: {exc}") from exc
    if P.is_zero():
        raise InputError(f"{path}: zero polynomial")
    return P


def _fields(spec: str):
    return [parse_field(s) for s in spec.split(",") if s]


def _primes(spec: str) -> set[int]:
    try:
        return {int(x) for x in spec.split(",") if x.strip()}
    except ValueError as exc:
        raise InputError(f"bad prime list {spec!r}") from exc


def _require(args, *names):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise InputError(f"{args.command}: missing {', '.join(missing)}")


# ---------------------------------------------------------------- commands


def cmd_classify(args):
    _require(args, "support")
    return classify(_support(args.support)).to_json()


def cmd_factor(args):
    _require(args, "poly")
    P = _poly(args.poly)
    c = classify(P.support())
    try:
        Q, R = factor_by_certificate(P, c, args.max_ext)
    except FactorizationError as exc:
        raise InputError(str(exc)) from exc
    return {
        "classification": c.to_json(),
        "left": Q.to_json(),
        "right": R.to_json(),
        "field": Q.ctx.spec(),
        "extension_degree": Q.ctx.k // P.ctx.k,
    }


def cmd_probe(args):
    _require(args, "support", "field")
    I = _support(args.support)
    z = z_status(I, parse_field(args.field), args.max_ext, args.cap, args.jobs)
    return z.to_json()


def cmd_irreducible(args):
    _require(args, "poly")
    P = _poly(args.poly)
    red, cert = is_absolutely_reducible(P, args.max_ext, args.cap)
    out = {"absolutely_irreducible": not red, "certificate": None}
    if cert is not None:
        Q, R = cert
        out["certificate"] = {"left": Q.to_json(), "right": R.to_json(), "field": Q.ctx.spec()}
    return out


def cmd_decompose(args):
    _require(args, "support")
    C = hull(_support(args.support))
    decs = enumerate_decompositions(C, require_positive_dims=args.positive_dims)
    return {"count": len(decs), "decompositions": [d.to_json() for d in decs]}


def _verify_result(w, fields, args) -> dict:
    report = verify_witness(w, fields, args.max_ext, args.cap, args.jobs)
    out = {"witness": w.to_json(), "report": report}
    if any(e["ok"] is False for e in report):
        raise VerificationFailed(out, "verification failed for " + ", ".join(e["field"] for e in report if e["ok"] is False))
    if any(e["ok"] is None for e in report):
        raise Inconclusive("verification inconclusive for " + ", ".join(e["field"] for e in report if e["ok"] is None))
    return out


def cmd_witness(args):
    _require(args, "primes", "case")
    w = build_characteristic_witness(_primes(args.primes), args.case)
    if not args.verify:
        return {"witness": w.to_json()}
    return _verify_result(w, _fields(args.fields), args)


def cmd_verify(args):
    _require(args, "witness")
    data = _load(args.witness, WITNESS_SCHEMA)
    J = data["J"]
    _check_dims(args.witness, J["n"], J["points"], "J.points")
    w = build_characteristic_witness(set(data["primes"]), data["case"])
    if Support.from_json(J) != w.J:
        raise InputError(f"{args.witness}: $.J does not match the construction for case {data['case']} and primes {sorted(data['primes'])}")
    return _verify_result(w, _fields(args.fields), args)


def cmd_ostrowski_fuzz(args):
    _require(args, "seed")
    r = ostrowski_fuzz(args.seed, args.count, parse_field(args.field), args.n, args.degree)
    if r["failures"]:
        raise VerificationFailed(r, f"{len(r['failures'])} pairs violate the Minkowski property")
    return r


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="newtonfactor", description="Newton polytopes and reducibility of polynomials with fixed support.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--schema", action="store_true", help="print the input JSON schema and exit")
        p.set_defaults(func=func)
        return p

    def search_opts(p, jobs=True):
        p.add_argument("--max-ext", type=int, default=None, help="largest extension degree searched")
        p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="search node budget")
        if jobs:
            p.add_argument("--jobs", type=int, default=1, help="worker processes")

    p = add("classify", cmd_classify, "which characteristics make every polynomial with this support reducible")
    p.add_argument("--support")

    p = add("factor", cmd_factor, "constructive factorization from the support certificate")
    p.add_argument("--poly")
    p.add_argument("--max-ext", type=int, default=None)

    p = add("probe", cmd_probe, "count absolutely reducible members of a support over a field")
    p.add_argument("--support")
    p.add_argument("--field", help="field as p^k")
    search_opts(p)

    p = add("irreducible", cmd_irreducible, "absolute irreducibility by exhaustive search")
    p.add_argument("--poly")
    search_opts(p, jobs=False)

    p = add("decompose", cmd_decompose, "integral Minkowski decompositions of the Newton polytope")
    p.add_argument("--support")
    p.add_argument("--positive-dims", action="store_true", help="only summands of positive dimension")

    p = add("witness", cmd_witness, "support realizing a prescribed set of characteristics")
    p.add_argument("--primes", help="comma separated primes; empty for none")
    p.add_argument("--case", type=str.lower, choices=["a", "b"])
    p.add_argument("--verify", action="store_true")
    p.add_argument("--fields", default="2^1,3^1", help="comma separated p^k list")
    search_opts(p)

    p = add("verify", cmd_verify, "re-check a witness file")
    p.add_argument("--witness")
    p.add_argument("--fields", default="2^1,3^1")
    search_opts(p)

    p = add("ostrowski-fuzz", cmd_ostrowski_fuzz, "seeded random check of the Minkowski property")
    p.add_argument("--seed", type=int, help="required")
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--field", default="5^1")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--degree", type=int, default=4)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.schema:
        sys.stdout.write(json.dumps(SCHEMAS[args.command], sort_keys=True, indent=2) + "\n")
        return 0
    try:
        _emit(args.func(args))
        return 0
    except Inconclusive as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        _emit({"status": "inconclusive", "detail": str(exc)})
        return 2
    except VerificationFailed as exc:
        print(f"error: {exc}", file=sys.stderr)
        _emit(exc.result)
        return 1
    except (InputError, ValueError, FieldError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
