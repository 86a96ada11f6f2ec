"""Command-line interface.

Exit codes: 0 on success, 1 when an internal invariant fails, 2 on bad
user input.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .analysis import classify_quotients, stabilization_scan, weil_sweep
from .cache import QuotientCache
from .enumeration import census, enumerate_hyperfields, write_inventory
from .errors import HyperfieldError
from .hyperfield import HyperfieldTable, bits, check_axioms, full_table, iso_map
from .quotient import build_quotient, build_valuation_quotient


def label_set(T: HyperfieldTable, mask: int) -> str:
    return "{" + ",".join(T.label(e) for e in bits(mask)) + "}"


def render_table(T: HyperfieldTable) -> str:
    """Hyperaddition grid with labels 0, 1, g, g², ..."""
    table = full_table(T)
    labels = [T.label(a) for a in T.elements()]
    cells = [["⊞"] + labels]
    for a in T.elements():
        cells.append([labels[a]] + [label_set(T, table[a][b]) for b in T.elements()])
    widths = [max(len(row[j]) for row in cells) for j in range(len(cells[0]))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
    lines.insert(1, "-" * len(lines[0]))
    return "\n".join(lines)


def parse_rendered(text: str, T: HyperfieldTable) -> list[list[frozenset[int]]]:
    """Read a grid produced by :func:`render_table` back into element sets."""
    index = {T.label(a): a for a in T.elements()}
    out = []
    for line in text.splitlines()[2:]:
        parts = line.split()
        out.append([
            frozenset(index[x] for x in cell.strip("{}").split(",")) for cell in parts[1:]
        ])
    return out


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def _write(path, text: str) -> None:
    if path:
        Path(path).write_text(text + "\n", encoding="utf-8")


def _render_hyperfield(T: HyperfieldTable, fmt: str) -> str:
    if fmt == "json":
        return T.to_json()
    return f"order {T.n}, H^× = {_group_name(T)}, -1 = {T.label(T.neg_one)}\n" + render_table(T)


def _group_name(T: HyperfieldTable) -> str:
    if not T.factors:
        return "1"
    return " × ".join(f"Z/{d}" for d in T.factors)


def cmd_quotient(args) -> int:
    if args.no_cache:
        T = build_quotient(args.q, args.r)
    else:
        T = QuotientCache().get_or_build(args.q, args.r, verify=args.verify_cache)
    report = check_axioms(T)
    if not report.ok:
        raise AssertionError(f"F_{args.q}/G^{args.r} fails {report.axiom} at {report.witness}")
    print(_render_hyperfield(T, args.format))
    return 0


def cmd_valq(args) -> int:
    if args.r < 1:
        raise HyperfieldError("r must be positive")
    print(_render_hyperfield(build_valuation_quotient(args.r), args.format))
    return 0


def cmd_enumerate(args) -> int:
    tables = enumerate_hyperfields(args.order, jobs=args.jobs)
    if args.out:
        write_inventory(args.out, tables, args.order)
    print(f"{len(tables)} classes")
    return 0


def cmd_classify(args) -> int:
    report = classify_quotients(args.order, jobs=args.jobs)
    data = report.to_dict()
    _write(args.out, _dump(data))
    if args.format == "json":
        print(_dump(data))
        return 0
    print(f"order {report.order}: bound N = {report.bound}, scanned q = {report.scanned_q}")
    for i, c in enumerate(report.classes, 1):
        T = c.table
        rows = " ".join(f"1⊞{T.label(x)}={label_set(T, T.row(x))}" for x in T.group.elements())
        if c.witness:
            how = f"q={c.witness['q']}" + (f" ({c.witness['stable']})" if c.witness["stable"] else "")
        else:
            how = c.realization or c.obstruction.value
        print(f"{i:3d}  {c.status:18s} {how:34s} {_group_name(T):8s} {rows}")
    counts = {s: len(report.by_status(s)) for s in ("finite-quotient", "infinite-quotient", "not-quotient", "undetermined")}
    print(", ".join(f"{v} {k}" for k, v in counts.items()))
    return 0


def cmd_stabilize(args) -> int:
    report = stabilization_scan(args.r, args.qmax)
    data = report.to_dict()
    _write(args.out, _dump(data))
    if args.format == "json":
        print(_dump(data))
        return 0
    for rec in report.q_records:
        print(f"q={rec.q:6d}  {'stable' if rec.stable else 'sporadic'}")
    lo, hi = report.sharp_interval
    print(f"sporadics: {[s.q for s in report.sporadics]}")
    print(f"sharp threshold interval ({lo}, {hi}]; formula bound {report.bound_formula}")
    return 0


def cmd_weil(args) -> int:
    records = weil_sweep(args.qmax)
    failures = [r for r in records if not r.ok]
    _write(args.out, _dump([vars(r) for r in records]))
    if failures:
        for f in failures:
            print(f"bound violated: q={f.q} r={f.r} c={f.c} M={f.points}")
        print(f"{len(failures)} of {len(records)} checks failed")
        return 1
    print(f"{len(records)} curves checked; all checks passed")
    return 0


def cmd_census(args) -> int:
    record = census(args.order, jobs=args.jobs)
    _write(args.out, _dump(record.to_dict()))
    source = "published" if record.published else "computed"
    print(f"order {record.order}: {record.H_count} classes ({source}), "
          f"{record.Q_finite_count} quotients of finite fields")
    return 0


def _read_table(path) -> HyperfieldTable:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise HyperfieldError(str(exc)) from exc
    first = next((ln for ln in text.splitlines() if ln.strip()), "")
    try:
        return HyperfieldTable.from_json(text)
    except HyperfieldError:
        return HyperfieldTable.from_json(first)


def cmd_iso(args) -> int:
    A, B = _read_table(args.first), _read_table(args.second)
    perm = iso_map(A, B)
    if perm is None:
        print("not isomorphic")
    else:
        print("isomorphic: " + ", ".join(f"{A.label(a)}->{B.label(perm[a])}" for a in A.elements()))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hyperfields", description="Finite hyperfields and quotients of finite fields.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("quotient", help="the quotient hyperfield F_q / G^r_q")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.add_argument("--no-cache", action="store_true")
    p.add_argument("--verify-cache", action="store_true", help="recompute and compare cached entries")
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("valq", help="valuation quotient of Q with index r")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.set_defaults(func=cmd_valq)

    p = sub.add_parser("enumerate", help="all hyperfields of an order, up to isomorphism")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--out")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("classify", help="which hyperfields of an order are quotients")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.add_argument("--out")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("stabilize", help="scan F_q / G^r_q over q")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--qmax", type=int, required=True)
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.add_argument("--out")
    p.set_defaults(func=cmd_stabilize)

    p = sub.add_parser("weil", help="check the Davenport-Hasse bound over q <= qmax")
    p.add_argument("--qmax", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_weil)

    p = sub.add_parser("census", help="class counts H_r and Q_r")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--out")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("iso", help="compare two hyperfield JSON files")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=cmd_iso)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
