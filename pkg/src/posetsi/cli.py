"""Command-line interface: every operation as a subcommand.

Posets are given as named families (chain:n, antichain:n, zigzag:n,
grid:m:n), as files in the line-oriented text format, or as '-' for
standard input. Exit codes: 0 success, 1 verification failure, 2
malformed input, 3 resource cap exceeded.
"""

import argparse
import json
import os
import sys

from . import acceptance, domino, h2, ruskey
from .errors import (
    BadGoodSet,
    CycleError,
    FormatError,
    HeightExceeded,
    InvalidExtension,
    MalformedPartition,
    NotATableau,
    ResourceLimit,
    VerificationError,
)
from .euler import check_congruence, euler_numbers, primes_never_dividing
from .linext import (
    DOWNSET_CAP,
    ENUM_CAP,
    count_extensions,
    enumerate_extensions,
    sign,
    signed_count,
)
from .poset import Poset
from .textio import (
    parse_family,
    read_poset,
    read_relation_pairs,
    write_poset,
    write_tableau,
)

_INPUT_ERRORS = (
    FormatError,
    CycleError,
    InvalidExtension,
    MalformedPartition,
    NotATableau,
    BadGoodSet,
    HeightExceeded,
    ValueError,
    OSError,
)


def _load_poset(spec: str) -> Poset:
    if ":" in spec:
        return parse_family(spec)
    if spec == "-":
        return read_poset(sys.stdin.read())
    with open(spec, "r", encoding="utf-8") as fh:
        return read_poset(fh.read())


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _cmd_count(args) -> int:
    p = _load_poset(args.poset)
    e = count_extensions(p, downset_cap=args.downset_cap)
    _emit(args, {"e": str(e)}, [f"e = {e}"])
    return 0


def _cmd_si(args) -> int:
    p = _load_poset(args.poset)
    sc = signed_count(p, downset_cap=args.downset_cap)
    brute = None
    if sc.total <= args.enum_cap:
        brute = abs(sum(sign(p, lab) for lab in enumerate_extensions(p)))
    quot = domino.si_via_quotients(p)
    payload = {
        "e": str(sc.total),
        "signed": str(sc.signed),
        "si": str(sc.imbalance),
        "si_brute": None if brute is None else str(brute),
        "si_quotient": str(quot),
    }
    lines = [
        f"e = {sc.total}",
        f"signed sum = {sc.signed}",
        f"si (signed DP) = {sc.imbalance}",
        f"si (brute force) = {'skipped: over enumeration cap' if brute is None else brute}",
        f"si (quotient route) = {quot}",
    ]
    agree = {sc.imbalance, quot} | ({brute} if brute is not None else set())
    if len(agree) > 1:
        _emit(args, payload, lines + ["MISMATCH between routes"])
        return 1
    _emit(args, payload, lines)
    return 0


def _cmd_domino(args) -> int:
    p = _load_poset(args.poset)
    tabs = domino.enumerate_tableaux(p)
    items = []
    lines = [f"tableaux: {len(tabs)}"]
    for i, t in enumerate(tabs):
        q = domino.quotient(p, t)
        item = {
            "pairs": [list(pr) for pr in t.pairs],
            "singleton": t.singleton,
            "sign": domino.tableau_sign(p, t),
            "quotient_e": str(count_extensions(q)),
            "adapted_count": str(domino.adapted_count(p, t)),
            "quotient": write_poset(q),
        }
        items.append(item)
        lines.append(f"tableau {i}:")
        lines += ["  " + ln for ln in write_tableau(t).splitlines()]
        lines.append(
            f"  sign {item['sign']}  quotient e {item['quotient_e']}"
            f"  adapted {item['adapted_count']}"
        )
    lines.append(f"si (quotient route) = {domino.si_via_quotients(p)}")
    _emit(
        args,
        {"tableaux": items, "si": str(domino.si_via_quotients(p))},
        lines,
    )
    return 0


def _cmd_lift(args) -> int:
    p = _load_poset(args.poset)
    rel = h2.good_base(p)
    if args.rel:
        with open(args.rel, "r", encoding="utf-8") as fh:
            rel = rel | frozenset(read_relation_pairs(fh.read()))
    lifted = h2.build_lift(p, rel)
    sys.stdout.write(write_poset(lifted))
    return 0


def _cmd_decompose(args) -> int:
    p = _load_poset(args.poset)
    dec = h2.decompose(p)
    payload: dict = {"kind": dec.kind}
    lines = [f"kind: {dec.kind}"]
    if dec.base is not None:
        payload["base"] = write_poset(dec.base)
        payload["rel"] = sorted(map(list, dec.rel))
        lines.append("base poset:")
        lines += ["  " + ln for ln in write_poset(dec.base).splitlines()]
        lines.append(
            "rel: " + " ".join(f"({a},{b})" for a, b in sorted(dec.rel))
        )
    if dec.isolated is not None:
        payload["isolated"] = dec.isolated
        lines.append(f"isolated vertex: {dec.isolated}")
    _emit(args, payload, lines)
    return 0


def _cmd_h2sb(args) -> int:
    p = _load_poset(args.poset)
    verdict = h2.h2sb_decide(p, args.k)
    _emit(
        args,
        {"k": args.k, "at_least": verdict},
        [f"si >= {args.k}: {'yes' if verdict else 'no'}"],
    )
    return 0


def _cmd_f(args) -> int:
    if args.q is not None:
        count = h2.count_f_q(args.n, args.q)
        _emit(
            args,
            {"n": args.n, "q": args.q, "count": count},
            [f"height-2 classes on {args.n} vertices with e not divisible "
             f"by {args.q}: {count}"],
        )
        return 0
    rep = h2.count_f(args.n)
    _emit(
        args,
        rep,
        [f"formula: {rep['formula']}", f"direct: {rep['direct']}"],
    )
    return 0


def _cmd_bounds(args) -> int:
    rep = h2.odd_e_bounds(args.n)
    lines = [
        f"vertices: {rep['vertices']}",
        f"bounds: [{rep['lower']}, {rep['upper']}]",
        f"odd e values: {rep['odd_e_values']}",
        f"classes with odd e: {rep['classes_with_odd_e']}",
    ]
    _emit(args, rep, lines)
    return 0


def _cmd_spectrum(args) -> int:
    rep = h2.spectrum(args.max_n)
    payload = {
        "max_vertices": rep["max_vertices"],
        "values": rep["values"],
        "gaps": rep["gaps"],
        "witnesses": {str(v): write_poset(p) for v, p in rep["witnesses"].items()},
    }
    lines = [
        f"achievable e values (height <= 2, at most {args.max_n} vertices):",
        " ".join(map(str, rep["values"])),
        f"gaps below max: {rep['gaps']}",
    ]
    _emit(args, payload, lines)
    return 0


def _cmd_ruskey(args) -> int:
    p = _load_poset(args.poset)
    rep = ruskey.ruskey_report(
        p,
        adjacent_only=args.adjacent,
        search_path=args.hampath,
        graph_cap=args.graph_cap,
        path_cap=args.path_cap,
    )
    lines = [f"{k}: {v}" for k, v in rep.items() if k != "path"]
    if "path" in rep:
        lines.append("path: " + " ".join(map(str, rep["path"])))
    if args.dump_graph:
        g = ruskey.build_graph(p, args.adjacent, args.graph_cap)
        lines.append("vertices:")
        for i, v in enumerate(g.vertices):
            lines.append(f"  {i} " + " ".join(map(str, v)))
        lines.append("edges:")
        for a, b in g.edges:
            lines.append(f"  {a} {b}")
        rep = dict(rep)
        rep["vertices"] = [list(v) for v in g.vertices]
        rep["edges"] = [list(e) for e in g.edges]
    _emit(args, rep, lines)
    if rep.get("consistent_with_conjecture") is False:
        return 1
    return 0


def _cmd_euler(args) -> int:
    if args.primes:
        out = primes_never_dividing(args.bound)
        print(json.dumps(out))
        return 0
    if args.congruence:
        qs = args.q or [3, 5, 7, 11]
        failures = []
        for q in qs:
            for n in range(q + 1, args.max_n + 1):
                if not check_congruence(n, q):
                    failures.append((n, q))
        payload = {
            "max_n": args.max_n,
            "q": qs,
            "failures": [list(f) for f in failures],
        }
        _emit(
            args,
            payload,
            [
                f"congruence checked for q in {qs}, n <= {args.max_n}: "
                + ("all hold" if not failures else f"failures: {failures}")
            ],
        )
        return 1 if failures else 0
    for value in euler_numbers(args.max_n):
        print(value)
    return 0


def _cmd_verify_all(args) -> int:
    results = acceptance.run_all(threads=args.threads)
    if args.json:
        print(
            json.dumps(
                [
                    {
                        "number": r.number,
                        "title": r.title,
                        "ok": r.ok,
                        "known_defect": r.known_defect,
                        "details": r.details,
                    }
                    for r in results
                ]
            )
        )
    else:
        for r in results:
            print(f"{r.number:>2} {r.status:<24} {r.title}")
            for d in r.details:
                print(f"     {d}")
    return 0 if all(r.ok for r in results) else 1


def _add_poset_arg(sub) -> None:
    sub.add_argument(
        "poset",
        help="named family (chain:n, antichain:n, zigzag:n, grid:m:n), "
        "a poset file, or '-' for stdin",
    )


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="posetsi",
        description="sign imbalance of finite posets: exact counts, "
        "tableaux, height-2 lifts, transposition graphs",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(s):
        s.add_argument("--json", action="store_true", help="machine output")
        s.add_argument("--downset-cap", type=int, default=DOWNSET_CAP)
        s.add_argument("--enum-cap", type=int, default=ENUM_CAP)
        s.set_defaults(func=None)
        return s

    s = common(sub.add_parser("count", help="number of linear extensions"))
    _add_poset_arg(s)
    s.set_defaults(func=_cmd_count)

    s = common(sub.add_parser("si", help="sign imbalance by three routes"))
    _add_poset_arg(s)
    s.set_defaults(func=_cmd_si)

    s = common(sub.add_parser("domino", help="list domino tableaux"))
    _add_poset_arg(s)
    s.set_defaults(func=_cmd_domino)

    s = common(sub.add_parser("lift", help="two-level lift of a poset"))
    _add_poset_arg(s)
    s.add_argument("--rel", help="file of extra relation pairs 'u v'")
    s.set_defaults(func=_cmd_lift)

    s = common(sub.add_parser("decompose", help="invert the lift"))
    _add_poset_arg(s)
    s.set_defaults(func=_cmd_decompose)

    s = common(sub.add_parser("h2sb", help="decide si >= k for height-2 posets"))
    _add_poset_arg(s)
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(func=_cmd_h2sb)

    s = common(sub.add_parser("f", help="height-2 census counts"))
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--q", type=int)
    s.set_defaults(func=_cmd_f)

    s = common(sub.add_parser("bounds", help="odd-e bounds on 2n vertices"))
    s.add_argument("--n", type=int, required=True, help="half the vertex count")
    s.set_defaults(func=_cmd_bounds)

    s = common(sub.add_parser("spectrum", help="achievable extension counts"))
    s.add_argument("--max-n", type=int, required=True)
    s.set_defaults(func=_cmd_spectrum)

    s = common(sub.add_parser("ruskey", help="transposition graph report"))
    _add_poset_arg(s)
    s.add_argument("--adjacent", action="store_true",
                   help="adjacent-transposition edges only")
    s.add_argument("--hampath", action="store_true",
                   help="search for a Hamiltonian path")
    s.add_argument("--dump-graph", action="store_true",
                   help="print the vertex table and edge list")
    s.add_argument("--graph-cap", type=int, default=ruskey.GRAPH_CAP)
    s.add_argument("--path-cap", type=int, default=ruskey.HAMPATH_CAP)
    s.set_defaults(func=_cmd_ruskey)

    s = common(sub.add_parser("euler", help="zigzag number table and primes"))
    s.add_argument("--max-n", type=int, default=30)
    s.add_argument("--congruence", action="store_true")
    s.add_argument("--q", type=int, action="append",
                   help="modulus for --congruence (repeatable)")
    s.add_argument("--primes", action="store_true")
    s.add_argument("--bound", type=int, default=600)
    s.set_defaults(func=_cmd_euler)

    s = common(sub.add_parser("verify-all", help="run the acceptance suite"))
    s.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    s.set_defaults(func=_cmd_verify_all)

    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except VerificationError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1
    except ResourceLimit as exc:
        print(f"resource cap exceeded: {exc}", file=sys.stderr)
        return 3
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
