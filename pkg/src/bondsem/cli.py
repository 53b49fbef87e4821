"""Command-line entry point: ``bondsem {eval,laws,nat,enum,circuit,fixtures}``.

Exit status is 0 on success, 1 when a law or naturality check fails and 2
for usage, parse and input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import laws
from .bondgraph import ORIENTATIONS, eval_corel, eval_lagrel, naturality_sweep, potential_current
from .circuit import CircuitError, load_circuit, to_dot, underlying_corelation
from .corelation import Corelation
from .dsl import show, parse
from .reach import enumerate_hom
from .terms import BOND, SIGNATURES, TermError, get_signature, typecheck

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

BACKEND_CHOICES = ("corel", "lagrel-effortflow", "lagrel-potentialcurrent")
_LAW_BACKEND = {"corel": "corel", "lagrel-effortflow": "lagrel", "lagrel-potentialcurrent": "potential"}


class UsageError(Exception):
    pass


def _emit(obj, as_json: bool, text: str) -> None:
    print(json.dumps(obj, sort_keys=True) if as_json else text)


def _describe(value) -> str:
    if isinstance(value, Corelation):
        return repr(value)
    rows = "\n".join("  [" + ", ".join(map(str, v)) + "]" for v in value.basis)
    return f"relation k^{value.dom_dim} -> k^{value.cod_dim}, dim {value.dim}\n{rows}"


def cmd_eval(args) -> int:
    sig = get_signature(args.sig)
    term = parse(args.term, sig)
    dom, cod = typecheck(term, sig)
    if args.backend == "corel":
        value = eval_corel(term, sig)
    elif args.backend == "lagrel-effortflow":
        if sig.name != BOND.name:
            raise UsageError("backend lagrel-effortflow needs --sig bond")
        value = eval_lagrel(term, sig)
    else:
        value = potential_current(term, sig)
    out = {"term": show(term), "dom": dom, "cod": cod, "backend": args.backend, "value": value.to_json()}
    _emit(out, args.json, f"{show(term)} : {dom} -> {cod}\n{_describe(value)}")
    return EXIT_OK


def cmd_laws(args) -> int:
    if args.suite not in laws.SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(laws.SUITES)}")
    backends = [_LAW_BACKEND[args.backend]] if args.backend else laws.default_backends(args.suite)
    status = EXIT_OK
    for backend in backends:
        for v in laws.run_suite(args.suite, backend):
            if not v.ok:
                status = EXIT_FAIL
            mark = "ok" if v.ok else "UNEXPECTED"
            outcome = "holds" if v.holds else "fails"
            _emit(v.to_json(), args.json, f"{mark:10} {backend:9} {v.equation}: {outcome}")
    return status


def cmd_nat(args) -> int:
    reports = naturality_sweep(args.count, args.max_size, args.seed, args.orientation)
    failures = 0
    for k, r in enumerate(reports):
        failures += not r.equal
        row = {"index": k, "term": show(r.term), **r.summary()}
        text = (f"{'ok' if r.equal else 'FAIL':4} #{k:<4} {r.dom}->{r.cod} "
                f"dims {r.left.dim}/{r.right.dim} sandwich={'ok' if r.sandwich_equal else 'FAIL'}  {show(r.term)}")
        _emit(row, args.json, text)
    if not args.json:
        print(f"{len(reports) - failures}/{len(reports)} terms natural")
    return EXIT_OK if failures == 0 else EXIT_FAIL


def cmd_enum(args) -> int:
    sig = get_signature(args.sig)
    found = enumerate_hom(args.ports_in, args.ports_out, args.max_size, sig)
    rows = [{"term": show(r.term), "size": r.size, "corelation": r.value.to_json()} for r in found]
    if args.json:
        print(json.dumps(rows, sort_keys=True))
    else:
        for r in found:
            print(f"{r.size:3}  {r.value!r:40}  {show(r.term)}")
        print(f"{len(found)} distinct corelations {args.ports_in} -> {args.ports_out} within {args.max_size} leaves")
    return EXIT_OK


def cmd_circuit(args) -> int:
    try:
        c = load_circuit(args.file)
    except OSError as exc:
        raise UsageError(str(exc)) from None
    value = underlying_corelation(c)
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(to_dot(c))
    _emit(value.to_json(), args.json, repr(value))
    return EXIT_OK


def cmd_fixtures(args) -> int:
    sys.stdout.write(laws.dump_fixtures())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bondsem", description="Exact semantics for circuits and bond graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, sig=True):
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        if sig:
            sp.add_argument("--sig", choices=sorted(SIGNATURES), default="bond")

    sp = sub.add_parser("eval", help="evaluate a DSL term")
    sp.add_argument("term")
    sp.add_argument("--backend", choices=BACKEND_CHOICES, default="corel")
    common(sp)
    sp.set_defaults(run=cmd_eval)

    sp = sub.add_parser("laws", help="check a law suite")
    sp.add_argument("suite", help=", ".join(laws.SUITES))
    sp.add_argument("--backend", choices=BACKEND_CHOICES, default=None,
                    help="defaults to the backends the suite is stated for")
    common(sp, sig=False)
    sp.set_defaults(run=cmd_laws)

    sp = sub.add_parser("nat", help="random naturality sweep")
    sp.add_argument("--count", type=int, default=200)
    sp.add_argument("--max-size", type=int, default=12)
    sp.add_argument("--seed", type=int, default=7)
    sp.add_argument("--orientation", choices=ORIENTATIONS, default="forward")
    common(sp, sig=False)
    sp.set_defaults(run=cmd_nat)

    sp = sub.add_parser("enum", help="enumerate reachable corelations")
    sp.add_argument("ports_in", type=int)
    sp.add_argument("ports_out", type=int)
    sp.add_argument("--max-size", type=int, default=3)
    common(sp)
    sp.set_defaults(run=cmd_enum, sig="corel-port")

    sp = sub.add_parser("circuit", help="underlying corelation of a circuit JSON file")
    sp.add_argument("file")
    sp.add_argument("--dot", metavar="PATH", help="also write a Graphviz rendering")
    common(sp, sig=False)
    sp.set_defaults(run=cmd_circuit)

    sp = sub.add_parser("fixtures", help="dump all registered equations as JSON lines")
    sp.set_defaults(run=cmd_fixtures)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.run(args)
    except (UsageError, TermError, CircuitError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) else str(exc)
        print(f"bondsem: error: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
