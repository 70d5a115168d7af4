"""Brute-force ground truth: every labeled graph on [n], tallied exhaustively.

A graph on [n] is an integer bit pattern over the C(n, 2) vertex pairs in
lexicographic order (1,2), (1,3), ..., (n-1,n). Vertices are 0-based
internally.
"""

from __future__ import annotations

from collections import Counter, deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterator, Optional

from .errors import OracleCapError
from .series import WeightVector
from .tables import CountTable

DEFAULT_CAP = 7
HARD_CAP = 8

PER_COMPONENT = "per-component"
SIZE_WEIGHTED = "size-weighted"


@lru_cache(maxsize=None)
def vertex_pairs(n: int) -> tuple:
    return tuple(combinations(range(n), 2))


@dataclass(frozen=True)
class LabeledGraph:
    n: int
    edges: int = 0

    @classmethod
    def from_edges(cls, n: int, edge_list) -> "LabeledGraph":
        """Build from 1-based vertex pairs."""
        index = {p: b for b, p in enumerate(vertex_pairs(n))}
        bits = 0
        for u, v in edge_list:
            u, v = sorted((u - 1, v - 1))
            bits |= 1 << index[(u, v)]
        return cls(n, bits)

    def edge_list(self) -> list:
        """0-based pairs present in the graph."""
        return [p for b, p in enumerate(vertex_pairs(self.n)) if self.edges >> b & 1]

    @property
    def size(self) -> int:
        return bin(self.edges).count("1")

    def neighbours(self) -> list:
        adj = [[] for _ in range(self.n)]
        for u, v in self.edge_list():
            adj[u].append(v)
            adj[v].append(u)
        return adj


def _find(parent, a):
    while parent[a] != a:
        parent[a] = parent[parent[a]]
        a = parent[a]
    return a


def component_profile(g: LabeledGraph) -> list:
    """Sorted (order, size) of each connected component, via union-find."""
    parent = list(range(g.n))
    edges = g.edge_list()
    for u, v in edges:
        ru, rv = _find(parent, u), _find(parent, v)
        if ru != rv:
            parent[rv] = ru
    order, size = Counter(), Counter()
    for v in range(g.n):
        order[_find(parent, v)] += 1
    for u, _ in edges:
        size[_find(parent, u)] += 1
    return sorted((order[r], size[r]) for r in order)


def components(g: LabeledGraph) -> list:
    return sorted(o for o, _ in component_profile(g))


def is_bipartite(g: LabeledGraph) -> bool:
    return two_coloring(g) is not None


def two_coloring(g: LabeledGraph) -> Optional[list]:
    """A proper black/white colouring found by breadth-first search, or None."""
    adj = g.neighbours()
    colour = [-1] * g.n
    for start in range(g.n):
        if colour[start] >= 0:
            continue
        colour[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if colour[v] < 0:
                    colour[v] = 1 - colour[u]
                    queue.append(v)
                elif colour[v] == colour[u]:
                    return None
    return colour


def count_two_colorings(g: LabeledGraph) -> int:
    """Proper black/white colourings, by trying all 2^n assignments."""
    edges = g.edge_list()
    return sum(1 for mask in range(1 << g.n)
               if all((mask >> u & 1) != (mask >> v & 1) for u, v in edges))


def has_no_isolated_vertex(g: LabeledGraph) -> bool:
    return all(o > 1 for o, _ in component_profile(g))


def bipartite_without_isolated(g: LabeledGraph) -> bool:
    return is_bipartite(g) and has_no_isolated_vertex(g)


@dataclass(frozen=True)
class AvoidComponents:
    """Predicate wrapper: ``base`` holds and no component has a forbidden (order, size)."""

    forbidden: frozenset
    base: Optional[Callable] = None

    def __call__(self, g: LabeledGraph) -> bool:
        if self.base is not None and not self.base(g):
            return False
        return not any((o, (s,)) in self.forbidden for o, s in component_profile(g))


def check_cap(n: int, cap: int = DEFAULT_CAP) -> None:
    if cap > HARD_CAP:
        raise OracleCapError(f"oracle cap {cap} exceeds the hard limit {HARD_CAP}")
    if n > cap:
        raise OracleCapError(f"order {n} exceeds the oracle cap {cap}")


def enumerate_graphs(n: int, predicate: Optional[Callable] = None,
                     cap: int = DEFAULT_CAP) -> Iterator[LabeledGraph]:
    """Each of the 2^C(n,2) graphs on [n] once, filtered by ``predicate``."""
    if n < 1:
        raise ValueError("n must be positive")
    check_cap(n, cap)
    for bits in range(1 << len(vertex_pairs(n))):
        g = LabeledGraph(n, bits)
        if predicate is None or predicate(g):
            yield g


def weighted_nu(g: LabeledGraph, w: WeightVector, mode: str = PER_COMPONENT) -> Fraction:
    orders = components(g)
    if mode == PER_COMPONENT:
        return sum((w[o] for o in orders), Fraction(0))
    if mode == SIZE_WEIGHTED:
        return sum((w[o] * o for o in orders), Fraction(0))
    raise ValueError(f"unknown weight mode {mode!r}")


def _tally(n, w, predicate, mode, lo, hi) -> Counter:
    tally = Counter()
    for bits in range(lo, hi):
        g = LabeledGraph(n, bits)
        if predicate is not None and not predicate(g):
            continue
        tally[(g.size, weighted_nu(g, w, mode))] += 1
    return tally


def oracle_table(n: int, w: Optional[WeightVector] = None, predicate: Optional[Callable] = None,
                 mode: str = PER_COMPONENT, cap: int = DEFAULT_CAP,
                 workers: int = 1) -> CountTable:
    """Exhaustive (n, size, nu) tally over graphs on [n] passing ``predicate``.

    With ``workers > 1`` the bit-pattern range is split into chunks tallied
    in separate processes; ``predicate`` must then be picklable.
    """
    if n < 1:
        raise ValueError("n must be positive")
    check_cap(n, cap)
    w = w or WeightVector()
    total = 1 << len(vertex_pairs(n))
    if workers <= 1 or total < 4096:
        tally = _tally(n, w, predicate, mode, 0, total)
    else:
        chunks = workers * 4
        bounds = [total * i // chunks for i in range(chunks + 1)]
        tally = Counter()
        with ProcessPoolExecutor(workers) as pool:
            futures = [pool.submit(_tally, n, w, predicate, mode, lo, hi)
                       for lo, hi in zip(bounds, bounds[1:])]
            for f in futures:
                tally.update(f.result())
    return CountTable({(n, (k,), nu): c for (k, nu), c in tally.items()}, 1)


def oracle_tables(max_order: int, w: Optional[WeightVector] = None,
                  predicate: Optional[Callable] = None, mode: str = PER_COMPONENT,
                  cap: int = DEFAULT_CAP, workers: int = 1) -> CountTable:
    check_cap(max_order, cap)
    table = CountTable()
    for n in range(1, max_order + 1):
        table = table.merged(oracle_table(n, w, predicate, mode, cap, workers))
    return table
