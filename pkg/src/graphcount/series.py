"""Sparse truncated multivariate power series over the rationals.

A series lives in Q[x, y_1..y_s, z-part] truncated at x-degree ``order``.
The z-part of a monomial is either a multi-index over z_1, z_2, ...
(stored as a sorted tuple of ``(i, alpha_i)`` pairs) or, after
:func:`apply_tau`, a single rational exponent on one variable z.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, NamedTuple, Union

from .errors import ConstantTermError, IncompatibleSeriesError, SeriesKindError

MULTI = "multi"
WEIGHTED = "weighted"

MultiIndex = tuple  # tuple[tuple[int, int], ...], sorted by index
ZPart = Union[MultiIndex, Fraction]


def parse_rational(text) -> Fraction:
    """Parse ``"p/q"``, ``"p"`` or an int into a Fraction; floats are refused."""
    if isinstance(text, bool) or isinstance(text, float):
        raise ValueError(f"not an exact rational: {text!r}")
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not an exact rational: {text!r}") from exc


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class Monomial(NamedTuple):
    x: int
    y: tuple
    z: ZPart


def _normalize_multi(z) -> MultiIndex:
    items = z.items() if isinstance(z, Mapping) else z
    out = {}
    for i, a in items:
        i, a = int(i), int(a)
        if i < 1 or a < 0:
            raise ValueError(f"bad multi-index entry z_{i}^{a}")
        if a:
            out[i] = out.get(i, 0) + a
    return tuple(sorted(out.items()))


def monomial(x: int, y=(), z=None, kind: str = MULTI) -> Monomial:
    """Convenience constructor: ``z`` is a dict/pairs for MULTI or a rational for WEIGHTED."""
    if isinstance(y, int):
        y = (y,)
    y = tuple(int(k) for k in y)
    if x < 0 or any(k < 0 for k in y):
        raise ValueError("exponents must be nonnegative")
    if kind == MULTI:
        zz = _normalize_multi(z or ())
    elif kind == WEIGHTED:
        zz = parse_rational(0 if z is None else z)
    else:
        raise SeriesKindError(f"unknown z kind {kind!r}")
    return Monomial(int(x), y, zz)


def _z_kind(z) -> str:
    return WEIGHTED if isinstance(z, Fraction) else MULTI


def _mul_z(a: ZPart, b: ZPart, kind: str) -> ZPart:
    if kind == WEIGHTED:
        return a + b
    if not a:
        return b
    if not b:
        return a
    merged = dict(a)
    for i, e in b:
        merged[i] = merged.get(i, 0) + e
    return tuple(sorted(merged.items()))


def sort_key(m: Monomial):
    return (m.x, m.y, m.z)


@dataclass(frozen=True)
class WeightVector:
    """Component weights omega_1, omega_2, ... with a constant fill past the listed entries.

    With ``by_order`` set, a component of order i weighs ``i * omega_i``
    instead of ``omega_i``.
    """

    entries: tuple = ()
    fill: Fraction = Fraction(1)
    by_order: bool = False

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(parse_rational(e) for e in self.entries))
        object.__setattr__(self, "fill", parse_rational(self.fill))

    @classmethod
    def trivial(cls) -> "WeightVector":
        return cls()

    @classmethod
    def constant(cls, value) -> "WeightVector":
        return cls((), value)

    def __getitem__(self, i: int) -> Fraction:
        if i < 1:
            raise IndexError("component orders start at 1")
        base = self.entries[i - 1] if i <= len(self.entries) else self.fill
        return base * i if self.by_order else base

    def size_weighted(self) -> "WeightVector":
        return WeightVector(self.entries, self.fill, by_order=True)

    def __str__(self):
        listed = ",".join(format_rational(e) for e in self.entries)
        text = f"({listed + ',' if listed else ''}{format_rational(self.fill)},...)"
        return f"order*{text}" if self.by_order else text


class Series:
    """Immutable sparse series truncated at x-degree ``order``.

    ``terms`` maps :class:`Monomial` to Fraction. Zero coefficients and
    monomials above the truncation order are dropped on construction.
    """

    __slots__ = ("order", "arity", "kind", "_terms")

    def __init__(self, terms: Mapping | Iterable = (), order: int = 1,
                 arity: int = 1, kind: str = MULTI):
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        if kind not in (MULTI, WEIGHTED):
            raise SeriesKindError(f"unknown z kind {kind!r}")
        self.order = order
        self.arity = arity
        self.kind = kind
        items = terms.items() if isinstance(terms, Mapping) else terms
        store: dict = {}
        for m, c in items:
            if not isinstance(m, Monomial):
                m = Monomial(*m)
            if len(m.y) != arity:
                raise IncompatibleSeriesError(
                    f"monomial {m} has {len(m.y)} y-exponents, series arity is {arity}")
            if _z_kind(m.z) != kind:
                raise SeriesKindError(f"monomial {m} does not match z kind {kind}")
            if m.x > order:
                continue
            c = parse_rational(c)
            if c:
                store[m] = store.get(m, 0) + c
        self._terms = {m: c for m, c in store.items() if c}

    @classmethod
    def _raw(cls, terms: dict, order, arity, kind) -> "Series":
        # trusted path: terms already normalized and truncated
        s = cls.__new__(cls)
        s.order, s.arity, s.kind = order, arity, kind
        s._terms = terms
        return s

    @classmethod
    def constant(cls, c, order, arity=1, kind=MULTI) -> "Series":
        return cls({cls.unit_monomial(arity, kind): c}, order, arity, kind)

    @classmethod
    def one(cls, order, arity=1, kind=MULTI) -> "Series":
        return cls.constant(1, order, arity, kind)

    @staticmethod
    def unit_monomial(arity=1, kind=MULTI) -> Monomial:
        return Monomial(0, (0,) * arity, () if kind == MULTI else Fraction(0))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def items(self) -> list:
        """Terms in canonical order."""
        return sorted(self._terms.items(), key=lambda t: sort_key(t[0]))

    def __iter__(self) -> Iterator[Monomial]:
        return iter(m for m, _ in self.items())

    def __getitem__(self, m: Monomial) -> Fraction:
        return self._terms.get(m, Fraction(0))

    def coeff(self, x, y=None, z=None) -> Fraction:
        if y is None:
            y = (0,) * self.arity
        return self[monomial(x, y, z, self.kind)]

    def constant_term(self) -> Fraction:
        return self[self.unit_monomial(self.arity, self.kind)]

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return ((self.order, self.arity, self.kind) == (other.order, other.arity, other.kind)
                and self._terms == other._terms)

    def __hash__(self):
        return hash((self.order, self.arity, self.kind, frozenset(self._terms.items())))

    def __repr__(self):
        body = " + ".join(f"{format_rational(c)}*{_mono_str(m)}" for m, c in self.items()) or "0"
        return f"Series({body}; O(x^{self.order + 1}))"

    def __add__(self, other):
        return add(self, _coerce(other, self))

    __radd__ = __add__

    def __neg__(self):
        return Series._raw({m: -c for m, c in self._terms.items()}, self.order, self.arity, self.kind)

    def __sub__(self, other):
        return add(self, -_coerce(other, self))

    def __rsub__(self, other):
        return add(_coerce(other, self), -self)

    def __mul__(self, other):
        if isinstance(other, Series):
            return mul(self, other)
        c = parse_rational(other)
        if not c:
            return Series._raw({}, self.order, self.arity, self.kind)
        return Series._raw({m: v * c for m, v in self._terms.items()},
                           self.order, self.arity, self.kind)

    __rmul__ = __mul__

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise ValueError("cannot raise truncation order of a truncated series")
        return Series._raw({m: c for m, c in self._terms.items() if m.x <= order},
                           order, self.arity, self.kind)


def _coerce(other, like: Series) -> Series:
    if isinstance(other, Series):
        return other
    return Series.constant(parse_rational(other), like.order, like.arity, like.kind)


def _mono_str(m: Monomial) -> str:
    parts = [f"x^{m.x}"]
    parts += [f"y{i + 1}^{k}" for i, k in enumerate(m.y) if k]
    if isinstance(m.z, Fraction):
        if m.z:
            parts.append(f"z^{format_rational(m.z)}")
    else:
        parts += [f"z{i}^{a}" for i, a in m.z]
    return "*".join(parts)


def _check(a: Series, b: Series):
    if a.order != b.order or a.arity != b.arity:
        raise IncompatibleSeriesError(
            f"order/arity mismatch: ({a.order}, {a.arity}) vs ({b.order}, {b.arity})")
    if a.kind != b.kind:
        raise IncompatibleSeriesError(f"z kind mismatch: {a.kind} vs {b.kind}")


def add(a: Series, b: Series) -> Series:
    _check(a, b)
    out = dict(a._terms)
    for m, c in b._terms.items():
        v = out.get(m, 0) + c
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return Series._raw(out, a.order, a.arity, a.kind)


def _by_x(s: Series) -> dict:
    buckets = defaultdict(list)
    for m, c in s._terms.items():
        buckets[m.x].append((m, c))
    return buckets


def mul(a: Series, b: Series) -> Series:
    """Product truncated at the common order; exponents add componentwise."""
    _check(a, b)
    order, kind = a.order, a.kind
    bx = _by_x(b)
    acc: dict = defaultdict(Fraction)
    for ma, ca in a._terms.items():
        room = order - ma.x
        for dx, bucket in bx.items():
            if dx > room:
                continue
            x = ma.x + dx
            for mb, cb in bucket:
                y = tuple(p + q for p, q in zip(ma.y, mb.y))
                acc[Monomial(x, y, _mul_z(ma.z, mb.z, kind))] += ca * cb
    return Series._raw({m: c for m, c in acc.items() if c}, order, a.arity, kind)


def exp_series(s: Series) -> Series:
    """Truncated sum of s^k / k!; ``s`` must have no x^0 terms."""
    if any(m.x == 0 for m in s._terms):
        raise ConstantTermError("exp needs a series without x^0 terms")
    result = Series.one(s.order, s.arity, s.kind)
    power = result
    for k in range(1, s.order + 1):
        power = mul(power, s) * Fraction(1, k)
        if not power:
            break
        result = add(result, power)
    return result


def log_series(s: Series) -> Series:
    """Truncated alternating sum of (s - 1)^k / k; ``s`` must be 1 + O(x)."""
    one = Series.one(s.order, s.arity, s.kind)
    unit = one.items()[0][0]
    if s[unit] != 1 or any(m.x == 0 and m != unit for m in s._terms):
        raise ConstantTermError("log needs a series of the form 1 + (terms with x-degree >= 1)")
    u = add(s, -one)
    result = Series._raw({}, s.order, s.arity, s.kind)
    power = u
    for k in range(1, s.order + 1):
        if not power:
            break
        result = add(result, power * Fraction((-1) ** (k + 1), k))
        power = mul(power, u)
    return result


def apply_tau(s: Series, w: WeightVector) -> Series:
    """Ring homomorphism z_1^a_1 z_2^a_2 ... -> z^(sum w_i a_i); colliding images merge."""
    if s.kind != MULTI:
        raise SeriesKindError("apply_tau needs a series with multi-index z exponents")
    out: dict = defaultdict(Fraction)
    weights: dict = {}
    for m, c in s._terms.items():
        nu = Fraction(0)
        for i, a in m.z:
            if i not in weights:
                weights[i] = w[i]
            nu += weights[i] * a
        out[Monomial(m.x, m.y, nu)] += c
    return Series._raw({m: c for m, c in out.items() if c}, s.order, s.arity, WEIGHTED)


def specialize(s: Series, set_y_to_one: bool = False, set_z_to_one: bool = False) -> Series:
    if not (set_y_to_one or set_z_to_one):
        return s
    zero_y = (0,) * s.arity
    zero_z = () if s.kind == MULTI else Fraction(0)
    out: dict = defaultdict(Fraction)
    for m, c in s._terms.items():
        out[Monomial(m.x, zero_y if set_y_to_one else m.y,
                     zero_z if set_z_to_one else m.z)] += c
    return Series._raw({m: c for m, c in out.items() if c}, s.order, s.arity, s.kind)


def coefficient(s: Series, m: Monomial) -> Fraction:
    return s[m]


# -- series dump format: one JSON object per line, canonical monomial order --

def term_to_json(m: Monomial, c: Fraction) -> str:
    if isinstance(m.z, Fraction):
        z = format_rational(m.z)
    else:
        z = {str(i): a for i, a in m.z}
    return json.dumps({"x": m.x, "y": list(m.y), "z": z, "coeff": format_rational(c)},
                      separators=(",", ":"))


def dump_series(s: Series) -> str:
    return "".join(term_to_json(m, c) + "\n" for m, c in s.items())


def load_series(text: str, order: int) -> Series:
    """Inverse of :func:`dump_series`; arity and kind are read off the first term."""
    terms = []
    arity, kind = 1, MULTI
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
            z = obj["z"]
            if isinstance(z, dict):
                mk, zz = MULTI, _normalize_multi((int(i), a) for i, a in z.items())
            else:
                mk, zz = WEIGHTED, parse_rational(z)
            m = Monomial(int(obj["x"]), tuple(int(k) for k in obj["y"]), zz)
            c = parse_rational(obj["coeff"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"line {lineno}: bad series term: {exc}") from exc
        if not terms:
            arity, kind = len(m.y), mk
        terms.append((m, c))
    return Series(terms, order, arity, kind)
