"""Command line front end: ``bident count|enumerate|critical|verify``.

Exit status is 0 on success, 1 when a verification suite fails and 2 on
usage errors (including requests above a size cap).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Iterable, Sequence

from . import critical, oracle, smooth, transform, verify
from .core import Structure

ENUM_MAX_N = int(os.environ.get("BIDENT_ENUM_MAX_N", 12))
SMOOTH_MAX_N = int(os.environ.get("BIDENT_SMOOTH_MAX_N", 60))

FORMATS = ("csv", "json", "text")


class UsageError(Exception):
    pass


def _cap(requested: int, default: int, override: int | None, what: str) -> int:
    cap = default if override is None else override
    if requested > cap:
        raise UsageError(f"{what} is capped at n <= {cap} (got {requested}); raise it with --max-n")
    return cap


def _json_line(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _emit_table(out, fmt: str, header: Sequence[str], rows: Iterable[Sequence]) -> None:
    rows = list(rows)
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
    elif fmt == "json":
        for row in rows:
            out.write(_json_line(dict(zip(header, row))) + "\n")
    else:
        cells = [[str(c) for c in header]] + [[str(c) for c in row] for row in rows]
        widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
        for r in cells:
            out.write("  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() + "\n")


def _vec(v: Sequence[int]) -> str:
    return " ".join(str(x) for x in v)


def cmd_count(args, out) -> int:
    if not 3 <= args.n_from <= args.n_to:
        raise UsageError(f"need 3 <= from <= to, got {args.n_from} {args.n_to}")
    _cap(args.n_to, SMOOTH_MAX_N, args.max_n, "count")
    if args.smooth:
        header = ("n", "smooth")
        rows = [(n, smooth.count_smooth(n)) for n in range(args.n_from, args.n_to + 1)]
    else:
        header = ("n", "smooth", "total")
        rows = [
            (n, smooth.count_smooth(n), transform.count_total(n))
            for n in range(args.n_from, args.n_to + 1)
        ]
    _emit_table(out, args.format, header, rows)
    return 0


def _records(structures: Iterable[Structure]):
    for s in structures:
        yield {"n": s.n, "d": list(s.d), "r": list(s.r), "order": critical.group_order(s)}


def cmd_enumerate(args, out) -> int:
    n = args.n
    if n < 3:
        raise UsageError(f"n must be >= 3, got {n}")
    if args.smooth:
        _cap(n, SMOOTH_MAX_N, args.max_n, "smooth enumeration")
        structures = smooth.enumerate_smooth(n)
    else:
        cap = _cap(n, ENUM_MAX_N, args.max_n, "enumeration")
        structures = oracle.oracle_all(n, cap=max(cap, oracle.MAX_ALL_N))
    recs = list(_records(structures))
    if args.format == "json":
        for rec in recs:
            out.write(_json_line(rec) + "\n")
    elif args.format == "csv":
        _emit_table(out, "csv", ("n", "d", "r", "order"),
                    [(r["n"], _vec(r["d"]), _vec(r["r"]), r["order"]) for r in recs])
    else:
        for r in recs:
            out.write(f"d=({_vec(r['d'])})  r=({_vec(r['r'])})  order={r['order']}\n")
    return 0


def cmd_critical(args, out) -> int:
    if args.order is not None:
        m = args.order
        if m < 1:
            raise UsageError(f"order must be >= 1, got {m}")
        if m == 1:
            # every structure on D_3 has the trivial group
            n, k, witness = 3, None, smooth.smooth_from_triple(1, 1, 2)
        else:
            k = critical.best_k(m)
            n, witness = critical.min_vertices(m), critical.order_witness(m, k)
        w = witness.to_dict()
        if args.format == "json":
            out.write(_json_line({"order": m, "n": n, "k": k, "witness": w}) + "\n")
        elif args.format == "csv":
            _emit_table(out, "csv", ("order", "n", "k", "d", "r"),
                        [(m, n, "" if k is None else k, _vec(w["d"]), _vec(w["r"]))])
        else:
            out.write(f"order {m}: smallest bident is D_{n}")
            out.write("\n" if k is None else f" (k = {k})\n")
            out.write(f"witness d=({_vec(w['d'])})  r=({_vec(w['r'])})\n")
        return 0

    if args.n is None:
        raise UsageError("critical needs either <n> or --order <m>")
    n = args.n
    if n < 3:
        raise UsageError(f"n must be >= 3, got {n}")
    cap = _cap(n, ENUM_MAX_N, args.max_n, "critical group distribution")
    dist = critical.order_distribution(n, cap=max(cap, oracle.MAX_ALL_N))
    if args.format == "json":
        out.write(_json_line({"n": n, "counts": {str(k): v for k, v in dist.items()}}) + "\n")
    else:
        _emit_table(out, args.format, ("n", "order", "count"), [(n, k, v) for k, v in dist.items()])
    return 0


def cmd_verify(args, out) -> int:
    name, max_n = args.suite, args.max_n
    caps = {
        "smooth-oracle": oracle.MAX_SMOOTH_N,
        "total-oracle": oracle.MAX_ALL_N,
        "critical": oracle.MAX_ALL_N,
        "bounds": SMOOTH_MAX_N,
        "parity": SMOOTH_MAX_N - 1,
    }
    if max_n is not None and name in caps and max_n > caps[name]:
        raise UsageError(f"verify {name} is capped at --max-n {caps[name]} (got {max_n})")
    checks = verify.run_suite(name, max_n)
    failed = False
    rows = []
    for c in checks:
        status = "pass" if c.ok else ("FAIL" if c.fatal else "note")
        failed |= not c.ok and c.fatal
        rows.append((c.name, status, c.cases, _json_line(c.detail) if c.detail else ""))
    if args.format == "json":
        for c in checks:
            out.write(_json_line({"check": c.name, "ok": c.ok, "fatal": c.fatal,
                                  "cases": c.cases, "counterexample": c.detail}) + "\n")
    elif args.format == "csv":
        _emit_table(out, "csv", ("check", "status", "cases", "counterexample"), rows)
    else:
        for name_, status, cases, detail in rows:
            out.write(f"[{status}] {name_} ({cases} cases)\n")
            if detail:
                out.write(f"       counterexample: {detail}\n")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="csv")
    common.add_argument("--max-n", type=int, default=None,
                        help="override the size cap (verify: problem size)")

    p = argparse.ArgumentParser(prog="bident",
                                description="Arithmetical structures on bident graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", parents=[common], help="smooth and total counts per n")
    c.add_argument("n_from", type=int)
    c.add_argument("n_to", type=int)
    c.add_argument("--smooth", action="store_true", help="smooth counts only")
    c.set_defaults(func=cmd_count)

    e = sub.add_parser("enumerate", parents=[common], help="list structures on D_n")
    e.add_argument("n", type=int)
    e.add_argument("--smooth", action="store_true", help="smooth structures only")
    e.set_defaults(func=cmd_enumerate)

    k = sub.add_parser("critical", parents=[common], help="critical group orders")
    k.add_argument("n", type=int, nargs="?")
    k.add_argument("--order", type=int, default=None, metavar="M",
                   help="smallest bident carrying a group of order M, with a witness")
    k.set_defaults(func=cmd_critical)

    v = sub.add_parser("verify", parents=[common], help="run an invariant suite")
    v.add_argument("suite", choices=sorted(verify.SUITES) + ["all"])
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    buf = io.StringIO()
    try:
        code = args.func(args, buf)
    except UsageError as exc:
        print(f"bident: error: {exc}", file=sys.stderr)
        return 2
    out.write(buf.getvalue())
    return code


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
