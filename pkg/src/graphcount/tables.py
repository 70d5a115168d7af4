"""Count tables and their text formats.

``ConnectedCountTable`` maps ``(n, k)`` to a count and is used both for
connected-graph counts and, when convenient, for all-graph counts.
``CountTable`` maps ``(n, k, nu)`` to the number of graphs of order n,
statistic vector k and weighted component number nu.

Formats:
  * connected tables: JSON lines ``{"n": 4, "k": [3], "count": "16"}``
  * count tables: CSV with header ``n,k,nu,count``; for more than one
    statistic the k column holds the entries joined by ``;``.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Iterable, Mapping

from .series import format_rational, parse_rational


def _key_k(k, arity):
    if isinstance(k, int):
        k = (k,)
    k = tuple(int(v) for v in k)
    if len(k) != arity:
        raise ValueError(f"k={k} does not have arity {arity}")
    if any(v < 0 for v in k):
        raise ValueError(f"negative statistic value in k={k}")
    return k


def _check_count(c):
    if isinstance(c, bool) or not isinstance(c, int):
        raise ValueError(f"count must be an integer, got {c!r}")
    if c < 0:
        raise ValueError(f"count must be nonnegative, got {c}")
    return c


class ConnectedCountTable:
    """Counts g_{n,k} keyed by order n >= 1 and statistic vector k; zeros are not stored."""

    def __init__(self, entries: Mapping | Iterable = (), arity: int = 1):
        self.arity = arity
        items = entries.items() if isinstance(entries, Mapping) else entries
        self._entries: dict = {}
        for (n, k), c in items:
            n = int(n)
            if n < 1:
                raise ValueError("connected tables have no order-0 entries")
            key = (n, _key_k(k, arity))
            c = _check_count(c)
            if c:
                self._entries[key] = self._entries.get(key, 0) + c

    def __getitem__(self, key) -> int:
        n, k = key
        return self._entries.get((n, _key_k(k, self.arity)), 0)

    def items(self) -> list:
        return sorted(self._entries.items())

    def keys(self):
        return sorted(self._entries)

    def __len__(self):
        return len(self._entries)

    def __eq__(self, other):
        if not isinstance(other, ConnectedCountTable):
            return NotImplemented
        return self.arity == other.arity and self._entries == other._entries

    def __repr__(self):
        return f"ConnectedCountTable({self.items()!r}, arity={self.arity})"

    @property
    def max_order(self) -> int:
        return max((n for n, _ in self._entries), default=0)

    def restrict(self, max_order: int) -> "ConnectedCountTable":
        return ConnectedCountTable({key: c for key, c in self._entries.items()
                                    if key[0] <= max_order}, self.arity)

    def without(self, forbidden: Iterable) -> "ConnectedCountTable":
        drop = {(int(n), _key_k(k, self.arity)) for n, k in forbidden}
        return ConnectedCountTable({key: c for key, c in self._entries.items()
                                    if key not in drop}, self.arity)


class CountTable:
    """Counts T_{n,k,nu}; zero counts are not stored."""

    def __init__(self, entries: Mapping | Iterable = (), arity: int = 1):
        self.arity = arity
        items = entries.items() if isinstance(entries, Mapping) else entries
        self._entries: dict = {}
        for (n, k, nu), c in items:
            key = (int(n), _key_k(k, arity), parse_rational(nu))
            c = _check_count(c)
            if c:
                self._entries[key] = self._entries.get(key, 0) + c

    def __getitem__(self, key) -> int:
        n, k, nu = key
        return self._entries.get((n, _key_k(k, self.arity), parse_rational(nu)), 0)

    def items(self) -> list:
        return sorted(self._entries.items())

    def keys(self):
        return sorted(self._entries)

    def __len__(self):
        return len(self._entries)

    def __eq__(self, other):
        if not isinstance(other, CountTable):
            return NotImplemented
        return self.arity == other.arity and self._entries == other._entries

    def __repr__(self):
        return f"CountTable({len(self)} rows, arity={self.arity})"

    def orders(self) -> list:
        return sorted({n for n, _, _ in self._entries})

    def restrict(self, orders) -> "CountTable":
        orders = set(orders)
        return CountTable({key: c for key, c in self._entries.items() if key[0] in orders},
                          self.arity)

    def merged(self, other: "CountTable") -> "CountTable":
        if other.arity != self.arity:
            raise ValueError("arity mismatch")
        return CountTable(list(self._entries.items()) + list(other._entries.items()), self.arity)

    def marginal(self) -> dict:
        """Sum over nu: {(n, k): count}."""
        out: dict = {}
        for (n, k, _), c in self._entries.items():
            out[(n, k)] = out.get((n, k), 0) + c
        return out


def diff_tables(expected: CountTable, actual: CountTable, keys=None) -> list:
    """One line per differing (n, k, nu); ``keys`` limits the comparison."""
    if keys is None:
        keys = sorted(set(expected.keys()) | set(actual.keys()))
    lines = []
    for n, k, nu in keys:
        e, a = expected[(n, k, nu)], actual[(n, k, nu)]
        if e != a:
            lines.append(f"n={n} k={_fmt_k(k)} nu={format_rational(nu)}: "
                         f"expected {e}, got {a}")
    return lines


# -- formats --

def _fmt_k(k) -> str:
    return ";".join(str(v) for v in k)


def count_table_rows(table: CountTable, zero_keys=()) -> list:
    """Rows (n, k, nu, count) in canonical order, plus explicit zeros for ``zero_keys``."""
    keys = sorted(set(table.keys()) | set(zero_keys))
    return [(n, k, nu, table[(n, k, nu)]) for n, k, nu in keys]


def write_count_csv(table: CountTable, out, zero_keys=()) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["n", "k", "nu", "count"])
    for n, k, nu, c in count_table_rows(table, zero_keys):
        writer.writerow([n, _fmt_k(k), format_rational(nu), c])


def count_table_to_csv(table: CountTable, zero_keys=()) -> str:
    buf = io.StringIO()
    write_count_csv(table, buf, zero_keys)
    return buf.getvalue()


def read_count_csv(text: str, arity: int | None = None) -> CountTable:
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header != ["n", "k", "nu", "count"]:
        raise ValueError(f"line 1: expected header n,k,nu,count, got {header}")
    rows = []
    for lineno, row in enumerate(reader, 2):
        if not row:
            continue
        try:
            n, k, nu, c = row
            kv = tuple(int(v) for v in k.split(";")) if k else ()
            rows.append(((int(n), kv, parse_rational(nu)), int(c)))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: bad row {row}: {exc}") from exc
    if arity is None:
        arity = len(rows[0][0][1]) if rows else 1
    return CountTable(rows, arity)


def count_table_to_jsonl(table: CountTable, zero_keys=()) -> str:
    return "".join(
        json.dumps({"n": n, "k": list(k), "nu": format_rational(nu), "count": str(c)},
                   separators=(",", ":")) + "\n"
        for n, k, nu, c in count_table_rows(table, zero_keys))


def read_count_jsonl(text: str) -> CountTable:
    rows, arity = [], None
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
            k = tuple(int(v) for v in obj["k"])
            rows.append(((int(obj["n"]), k, parse_rational(obj["nu"])), int(obj["count"])))
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"line {lineno}: bad row: {exc}") from exc
        arity = len(k) if arity is None else arity
    return CountTable(rows, arity or 1)


def connected_table_to_jsonl(table: ConnectedCountTable) -> str:
    return "".join(
        json.dumps({"n": n, "k": list(k), "count": str(c)}, separators=(",", ":")) + "\n"
        for (n, k), c in table.items())


def read_connected_jsonl(text: str) -> ConnectedCountTable:
    """Parse the JSON-lines connected table format; errors name the offending line."""
    rows, arity = [], None
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
            if not isinstance(obj, dict):
                raise ValueError("expected a JSON object")
            n = obj["n"]
            if isinstance(n, bool) or not isinstance(n, int) or n < 1:
                raise ValueError(f"n must be a positive integer, got {n!r}")
            if not isinstance(obj["k"], list) or not all(
                    isinstance(v, int) and not isinstance(v, bool) for v in obj["k"]):
                raise ValueError("k must be a list of integers")
            k = tuple(obj["k"])
            count = obj["count"]
            if not isinstance(count, str) or not count.strip().isdigit():
                raise ValueError(f"count must be a decimal integer string, got {count!r}")
            count = int(count)
            if arity is None:
                arity = len(k)
            elif len(k) != arity:
                raise ValueError(f"k has length {len(k)}, earlier rows have {arity}")
            if any(v < 0 for v in k):
                raise ValueError("negative statistic value")
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"line {lineno}: {exc}") from exc
        rows.append(((n, k), count))
    return ConnectedCountTable(rows, arity or 1)
