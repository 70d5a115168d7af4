"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 usage error or oracle
cap exceeded, 3 unparsable input file, 4 inconsistent count table.
"""

from __future__ import annotations

import argparse
import logging
import sys
from itertools import product
from pathlib import Path

from . import enumeration as en
from . import oracle as orc
from .errors import InconsistentTableError, OracleCapError
from .series import WeightVector, dump_series, parse_rational
from .tables import (CountTable, connected_table_to_jsonl,
                     count_table_to_csv, count_table_to_jsonl, diff_tables,
                     read_connected_jsonl, read_count_csv)

log = logging.getLogger("graphcount")

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_PARSE, EXIT_INCONSISTENT = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def _error(message: str) -> None:
    print(f"graphcount: error: {message}", file=sys.stderr)


def parse_weights(text: str | None) -> WeightVector:
    """``"1,1/2,2/3"`` -> (1, 1/2, 2/3, 1, 1, ...); a single value is used for every order."""
    if text is None or not text.strip():
        return WeightVector()
    try:
        values = [parse_rational(part) for part in text.split(",")]
    except ValueError as exc:
        raise UsageError(f"--weights: {exc}") from exc
    if len(values) == 1:
        return WeightVector.constant(values[0])
    return WeightVector(values)


def parse_forbid(items) -> list:
    """``["1:0", "3:2,1"]`` -> [(1, (0,)), (3, (2, 1))]."""
    out = []
    for item in items or ():
        try:
            n, k = item.split(":")
            n = int(n)
            kv = tuple(int(v) for v in k.split(","))
        except ValueError as exc:
            raise UsageError(f"--forbid expects n:k, got {item!r}") from exc
        if n < 1 or any(v < 0 for v in kv):
            raise UsageError(f"--forbid entry out of range: {item!r}")
        out.append((n, kv))
    return out


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-order", type=int, default=10, metavar="N",
                        help="largest graph order (default 10)")
    common.add_argument("--weights", default=None,
                        help="comma-separated component weights, e.g. 1,1/2,2/3 "
                             "(orders past the list weigh 1; a single value applies to all)")
    common.add_argument("--weight-mode", choices=[orc.PER_COMPONENT, orc.SIZE_WEIGHTED],
                        default=orc.PER_COMPONENT)
    common.add_argument("--format", choices=["csv", "jsonl", "series-dump"], default=None)
    common.add_argument("--output", type=Path, default=None)
    common.add_argument("--emit-zeros", action="store_true",
                        help="also print zero rows over the attainable (n, k, nu) grid")
    common.add_argument("--forbid", action="append", default=[], metavar="n:k",
                        help="exclude graphs having a component of order n and size k")
    common.add_argument("--with-isolated", action="store_true",
                        help="bipartite commands: keep single-vertex components "
                             "(default: graphs without isolated vertices)")
    common.add_argument("--oracle-cap", type=int, default=orc.DEFAULT_CAP)
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="graphcount",
        description="Exact counts of labeled graphs by order, additive statistics "
                    "and weighted number of connected components.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("bipartite-table", parents=[common],
                   help="bipartite graphs by order, size and weighted component number")
    p = sub.add_parser("pipeline", parents=[common],
                       help="weighted component counts from a JSON-lines count table")
    p.add_argument("table", type=Path)
    p.add_argument("--input", choices=["connected", "all"], default="connected",
                   help="whether the table counts connected graphs or all graphs")
    v = sub.add_parser("verify", parents=[common],
                       help="compare the bipartite engine with brute force (or a CSV file)")
    v.add_argument("--against", type=Path, default=None,
                   help="compare with the rows of this CSV instead of the oracle")
    sub.add_parser("dump", parents=[common],
                   help="dump the weighted generating function or the connected table")
    o = sub.add_parser("oracle", parents=[common], help="brute-force count table")
    o.add_argument("--property", choices=["bipartite", "all"], default="bipartite")
    return parser


def _weights(args) -> WeightVector:
    w = parse_weights(args.weights)
    return w.size_weighted() if args.weight_mode == orc.SIZE_WEIGHTED else w


def _emit(args, text: str) -> None:
    if args.output is None:
        sys.stdout.write(text)
    else:
        args.output.write_text(text)


def _zero_keys(table: CountTable, order: int, w: WeightVector, k_max) -> list:
    keys = []
    for n in range(1, order + 1):
        nus = sorted(en.nu_values(n, w))
        for k in product(*(range(b + 1) for b in k_max(n))):
            keys.extend((n, k, nu) for nu in nus)
    return keys


def _write_table(args, table: CountTable, w: WeightVector, k_max) -> None:
    zeros = _zero_keys(table, args.max_order, w, k_max) if args.emit_zeros else ()
    if args.format == "jsonl":
        _emit(args, count_table_to_jsonl(table, zeros))
    else:
        _emit(args, count_table_to_csv(table, zeros))


def _bipartite_k_max(n):
    return (n * n // 4,)


def _oracle_predicate(args, forbidden, bipartite=True):
    base = orc.is_bipartite if bipartite else None
    drop = set(forbidden)
    if bipartite and not args.with_isolated:
        drop.add(en.ISOLATED_VERTEX)
    if not drop:
        return base
    return orc.AvoidComponents(frozenset(drop), base)


def cmd_bipartite_table(args) -> int:
    w = _weights(args)
    forbidden = parse_forbid(args.forbid)
    if args.format == "series-dump":
        _emit(args, dump_series(en.bipartite_gf(args.max_order, w, forbidden, args.with_isolated)))
        return EXIT_OK
    table = en.bipartite_component_table(args.max_order, w, forbidden, args.with_isolated)
    _write_table(args, table, w, _bipartite_k_max)
    return EXIT_OK


def cmd_pipeline(args) -> int:
    try:
        table = read_connected_jsonl(args.table.read_text())
    except OSError as exc:
        _error(f"cannot read {args.table}: {exc}")
        return EXIT_PARSE
    except ValueError as exc:
        _error(f"{args.table}: {exc}")
        return EXIT_PARSE
    w = _weights(args)
    try:
        conn = table.restrict(args.max_order)
        if args.input == "all":
            conn = en.connected_from_all(conn, args.max_order)
        conn = conn.without(parse_forbid(args.forbid))
        if args.format == "series-dump":
            aux = en.build_aux(conn, args.max_order)
            _emit(args, dump_series(en.apply_tau(aux, w)))
            return EXIT_OK
        result = en.enumerate_weighted(conn, w, args.max_order)
    except InconsistentTableError as exc:
        _error(f"inconsistent table: {exc}")
        return EXIT_INCONSISTENT

    def k_max(n):
        ks = [k for m, k, _ in result.keys() if m == n]
        return tuple(max(col) for col in zip(*ks)) if ks else (0,) * result.arity

    _write_table(args, result, w, k_max)
    return EXIT_OK


def cmd_verify(args) -> int:
    w = _weights(args)
    forbidden = parse_forbid(args.forbid)
    engine = en.bipartite_component_table(args.max_order, w, forbidden, args.with_isolated)
    if args.against is not None:
        try:
            expected = read_count_csv(args.against.read_text())
        except (OSError, ValueError) as exc:
            _error(f"{args.against}: {exc}")
            return EXIT_PARSE
        lines = diff_tables(expected, engine, expected.keys())
        checked = len(expected)
    else:
        try:
            orc.check_cap(args.max_order, args.oracle_cap)
        except OracleCapError as exc:
            _error(str(exc))
            return EXIT_USAGE
        lines = []
        checked = 0
        predicate = _oracle_predicate(args, forbidden)
        mode = args.weight_mode
        base_w = parse_weights(args.weights)
        for n in range(1, args.max_order + 1):
            truth = orc.oracle_table(n, base_w, predicate, mode, args.oracle_cap)
            mine = engine.restrict([n])
            lines += diff_tables(truth, mine)
            checked += len(set(truth.keys()) | set(mine.keys()))
            log.info("order %d: %d graphs checked", n, sum(c for _, c in truth.items()))
    out = "".join(line + "\n" for line in lines)
    if lines:
        _emit(args, out)
        return EXIT_MISMATCH
    _emit(args, f"ok: {checked} (n, k, nu) entries agree for n <= {args.max_order}\n")
    return EXIT_OK


def cmd_dump(args) -> int:
    w = _weights(args)
    forbidden = parse_forbid(args.forbid)
    if args.format in ("jsonl", "csv"):
        conn = en.bipartite_components(args.max_order, args.with_isolated, forbidden)
        _emit(args, connected_table_to_jsonl(conn))
        return EXIT_OK
    _emit(args, dump_series(en.bipartite_gf(args.max_order, w, forbidden, args.with_isolated)))
    return EXIT_OK


def cmd_oracle(args) -> int:
    try:
        orc.check_cap(args.max_order, args.oracle_cap)
    except OracleCapError as exc:
        _error(str(exc))
        return EXIT_USAGE
    forbidden = parse_forbid(args.forbid)
    predicate = _oracle_predicate(args, forbidden, bipartite=args.property == "bipartite")
    table = orc.oracle_tables(args.max_order, parse_weights(args.weights), predicate,
                              args.weight_mode, args.oracle_cap)
    _write_table(args, table, _weights(args), _bipartite_k_max if args.property == "bipartite"
                 else (lambda n: (n * (n - 1) // 2,)))
    return EXIT_OK


COMMANDS = {
    "bipartite-table": cmd_bipartite_table,
    "pipeline": cmd_pipeline,
    "verify": cmd_verify,
    "dump": cmd_dump,
    "oracle": cmd_oracle,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s", stream=sys.stderr)
    if args.max_order < 1:
        parser.error("--max-order must be at least 1")
    try:
        parse_weights(args.weights)
        parse_forbid(args.forbid)
    except UsageError as exc:
        parser.error(str(exc))
    return COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
