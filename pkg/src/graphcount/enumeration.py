"""Exponential-formula pipelines.

All series here are EGFs: the coefficient of x^n y^k (z-part) already
carries the 1/n! factor, and counts are read back as n! * coefficient.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Iterator

from .errors import InconsistentTableError
from .series import (MULTI, WEIGHTED, Monomial, Series, WeightVector, apply_tau,
                     exp_series, log_series)
from .tables import ConnectedCountTable, CountTable


def egf(table: ConnectedCountTable, order: int, tag_components: bool = False,
        constant: int = 0) -> Series:
    """Sum of g_{n,k} x^n y^k / n! over n <= order, optionally tagged by z_n."""
    terms = {}
    if constant:
        terms[Series.unit_monomial(table.arity)] = Fraction(constant)
    for (n, k), c in table.items():
        if n <= order:
            z = ((n, 1),) if tag_components else ()
            terms[Monomial(n, k, z)] = Fraction(c, factorial(n))
    return Series(terms, order, table.arity, MULTI)


def _as_count(coeff: Fraction, n: int, where: str) -> int:
    value = coeff * factorial(n)
    if value.denominator != 1 or value < 0:
        raise InconsistentTableError(
            f"{where}: {n}! * {coeff} = {value} is not a nonnegative integer")
    return value.numerator


def graph_counts(s: Series) -> ConnectedCountTable:
    """Read g_{n,k} = n! * [x^n y^k] off a series with trivial z-part (n >= 1)."""
    if s.kind != MULTI:
        raise ValueError("expected a series with multi-index z-part")
    rows = {}
    for m, c in s.items():
        if m.z:
            raise ValueError(f"series still carries z tags at {m}")
        if m.x:
            rows[(m.x, m.y)] = _as_count(c, m.x, f"x^{m.x} y^{m.y}")
    return ConnectedCountTable(rows, s.arity)


def bicolored_counts(n_max: int) -> ConnectedCountTable:
    """Number c_{n,k} of black/white properly coloured graphs of order n and size k."""
    if n_max < 1:
        raise ValueError("n_max must be positive")
    rows = {}
    for n in range(1, n_max + 1):
        for k in range(n * n // 4 + 1):
            rows[(n, (k,))] = sum(comb(n, i) * comb(i * (n - i), k) for i in range(n + 1))
    return ConnectedCountTable(rows, 1)


def connected_from_all(all_counts: ConnectedCountTable, order: int) -> ConnectedCountTable:
    """Connected counts from all-graph counts via the formal logarithm."""
    g = egf(all_counts, order, constant=1)
    try:
        return graph_counts(log_series(g))
    except InconsistentTableError as exc:
        raise InconsistentTableError(f"input is not a homogeneous-property table ({exc})") from exc


def components_from_connected(conn: ConnectedCountTable, order: int) -> Series:
    """EGF of all graphs whose components are drawn from ``conn``."""
    return exp_series(egf(conn, order))


def remove_components(g: Series, forbidden: Iterable, conn: ConnectedCountTable) -> Series:
    """Drop graphs having any component whose (order, k) lies in ``forbidden``.

    ``g`` must be the exponential of ``conn``'s EGF.
    """
    log_g = log_series(g)
    drop = ConnectedCountTable({(n, k): conn[(n, k)] for n, k in set(
        (int(n), tuple(k) if not isinstance(k, int) else (k,)) for n, k in forbidden)},
        conn.arity)
    return exp_series(log_g - egf(drop, g.order))


def build_aux(conn: ConnectedCountTable, order: int) -> Series:
    """exp of sum g_{n,k} x^n y^k z_n / n!: z-exponents record component orders."""
    return exp_series(egf(conn, order, tag_components=True))


def weighted_counts(s: Series) -> CountTable:
    if s.kind != WEIGHTED:
        raise ValueError("expected a series after apply_tau")
    rows = {}
    for m, c in s.items():
        if m.x:
            rows[(m.x, m.y, m.z)] = _as_count(c, m.x, f"x^{m.x} y^{m.y} z^{m.z}")
    return CountTable(rows, s.arity)


def enumerate_weighted(conn: ConnectedCountTable, w: WeightVector, order: int,
                       check: bool = False) -> CountTable:
    """T_{n,k,nu} for 1 <= n <= order.

    With ``check`` the auxiliary series is compared monomial by monomial
    against the closed-form product over component multiplicities.
    """
    aux = build_aux(conn, order)
    if check:
        check_aux_coefficients(conn, aux)
    try:
        return weighted_counts(apply_tau(aux, w))
    except InconsistentTableError as exc:
        raise InconsistentTableError(f"internal inconsistency: {exc}") from exc


# -- partition systems --

def partition_systems(conn: ConnectedCountTable, n: int, k) -> Iterator[tuple]:
    """Multisets of component types summing to order n and statistics k.

    Yields tuples of ``((order, k_vec), multiplicity)`` with types in
    increasing order and only types of nonzero count.
    """
    k = tuple(k) if not isinstance(k, int) else (k,)
    types = [key for key, c in conn.items() if key[0] <= n]

    def rec(i, rem_n, rem_k, chosen):
        if rem_n == 0:
            if not any(rem_k):
                yield tuple(chosen)
            return
        if i == len(types):
            return
        m, kv = types[i]
        yield from rec(i + 1, rem_n, rem_k, chosen)
        mult = 0
        while True:
            mult += 1
            rem_n -= m
            rem_k = tuple(a - b for a, b in zip(rem_k, kv))
            if rem_n < 0 or any(v < 0 for v in rem_k):
                return
            chosen.append(((m, kv), mult))
            yield from rec(i + 1, rem_n, rem_k, chosen)
            chosen.pop()

    yield from rec(0, n, k, [])


def system_count(conn: ConnectedCountTable, n: int, system) -> int:
    """Graphs on [n] whose components realise ``system`` exactly."""
    value = Fraction(factorial(n))
    for (m, kv), mult in system:
        value *= Fraction(conn[(m, kv)] ** mult, factorial(m) ** mult * factorial(mult))
    if value.denominator != 1:
        raise InconsistentTableError(f"non-integral system count {value}")
    return value.numerator


def system_nu(system, w: WeightVector) -> Fraction:
    return sum((w[m] * mult for (m, _), mult in system), Fraction(0))


def count_via_partitions(conn: ConnectedCountTable, n: int, k, w: WeightVector, nu) -> int:
    """T_{n,k,nu} summed directly over partition systems, without series arithmetic."""
    if n < 1:
        raise ValueError("n must be positive")
    nu = Fraction(nu)
    return sum(system_count(conn, n, sys) for sys in partition_systems(conn, n, k)
               if system_nu(sys, w) == nu)


def aux_coefficient_by_partitions(conn: ConnectedCountTable, n: int, k, alpha) -> Fraction:
    """Coefficient of x^n y^k z^alpha in the auxiliary series, from partition systems."""
    alpha = dict(alpha)
    total = Fraction(0)
    for sys in partition_systems(conn, n, k):
        orders: dict = {}
        for (m, _), mult in sys:
            orders[m] = orders.get(m, 0) + mult
        if orders != alpha:
            continue
        term = Fraction(1)
        for (m, kv), mult in sys:
            term *= Fraction(conn[(m, kv)], factorial(m)) ** mult / factorial(mult)
        total += term
    return total


def check_aux_coefficients(conn: ConnectedCountTable, aux: Series) -> None:
    for m, c in aux.items():
        if m.x == 0:
            continue
        if sum(i * a for i, a in m.z) != m.x:
            raise InconsistentTableError(f"z tags of {m} do not sum to its order")
        expected = aux_coefficient_by_partitions(conn, m.x, m.y, m.z)
        if expected != c:
            raise InconsistentTableError(f"aux coefficient at {m}: {c} != {expected}")


# -- bipartite application --

def connected_bipartite_series(order: int) -> tuple:
    """(connected bipartite counts b_{n,k}, their EGF) for n <= order."""
    if order < 1:
        raise ValueError("order must be positive")
    bicol = connected_from_all(bicolored_counts(order), order)
    rows = {}
    for key, c in bicol.items():
        if c % 2:
            raise InconsistentTableError(f"odd connected bicoloured count {c} at {key}")
        rows[key] = c // 2
    table = ConnectedCountTable(rows, 1)
    return table, egf(table, order)


ISOLATED_VERTEX = (1, (0,))


def bipartite_components(order: int, include_isolated: bool = False,
                         forbidden: Iterable = ()) -> ConnectedCountTable:
    """Connected bipartite table actually fed to the weighted pipeline.

    By default the single-vertex component is left out, so counts are of
    bipartite graphs without isolated vertices (the convention of the
    published order-10 table).
    """
    conn, _ = connected_bipartite_series(order)
    drop = list(forbidden)
    if not include_isolated:
        drop.append(ISOLATED_VERTEX)
    return conn.without(drop)


def bipartite_component_table(order: int, w: WeightVector | None = None,
                              forbidden: Iterable = (),
                              include_isolated: bool = False) -> CountTable:
    """b_{n,k,nu}: bipartite graphs by order, size and weighted component number."""
    conn = bipartite_components(order, include_isolated, forbidden)
    return enumerate_weighted(conn, w or WeightVector(), order)


def bipartite_gf(order: int, w: WeightVector | None = None, forbidden: Iterable = (),
                 include_isolated: bool = False) -> Series:
    """tau_w applied to the z-tagged exponential of the connected bipartite EGF."""
    conn = bipartite_components(order, include_isolated, forbidden)
    return apply_tau(build_aux(conn, order), w or WeightVector())


# -- explicit zero rows --

def _partitions(n: int, largest: int | None = None) -> Iterator[dict]:
    largest = n if largest is None else largest
    if n == 0:
        yield {}
        return
    for part in range(min(n, largest), 0, -1):
        for rest in _partitions(n - part, part):
            out = dict(rest)
            out[part] = out.get(part, 0) + 1
            yield out


def nu_values(n: int, w: WeightVector) -> set:
    """Every weighted component number a graph of order n can have."""
    return {sum((w[m] * c for m, c in p.items()), Fraction(0)) for p in _partitions(n)}


def zero_grid(order: int, w: WeightVector, k_max) -> list:
    """All (n, k, nu) with n <= order, 0 <= k <= k_max(n) and attainable nu (arity 1)."""
    keys = []
    for n in range(1, order + 1):
        nus = sorted(nu_values(n, w))
        for k in range(k_max(n) + 1):
            keys.extend((n, (k,), nu) for nu in nus)
    return keys
