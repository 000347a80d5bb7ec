"""Exact sparse polynomials in the variables a, b, q with integer coefficients.

A :class:`QPoly` is an immutable map ``Monomial -> int`` with no zero
coefficients.  Monomials are ordered by ``(total degree, ea, eb, eq)``; this
order fixes the canonical text form, the leading term used by long
division, and the "leading difference term" reported by :func:`dominates`.

The exponent of ``q`` may go negative for intermediate Laurent rewrites; the
exponents of ``a`` and ``b`` never do.
"""

from __future__ import annotations

import heapq
import json
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, NamedTuple, Optional, Union


class NotDivisible(ArithmeticError):
    """Raised by :func:`exact_div` when the remainder is nonzero."""


class Monomial(NamedTuple):
    ea: int = 0
    eb: int = 0
    eq: int = 0

    @property
    def degree(self) -> int:
        return self.ea + self.eb + self.eq

    def sort_key(self) -> tuple[int, int, int, int]:
        return (self.ea + self.eb + self.eq, self.ea, self.eb, self.eq)

    def __str__(self) -> str:
        return _mono_str(self) or "1"


def _key(m: tuple[int, int, int]) -> tuple[int, int, int, int]:
    return (m[0] + m[1] + m[2], m[0], m[1], m[2])


def _qkey(m: tuple[int, int, int]) -> tuple[int, int, int, int]:
    # q-degree first; used when the leading term is wanted by q-order
    return (m[2], m[0] + m[1] + m[2], m[0], m[1])


MonoLike = Union[Monomial, tuple]


class QPoly:
    """Immutable sparse polynomial in a, b, q over the integers."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[MonoLike, int]] = None):
        clean: dict[tuple[int, int, int], int] = {}
        if terms:
            for mono, c in terms.items():
                if c:
                    mono = tuple(mono)
                    if len(mono) != 3 or mono[0] < 0 or mono[1] < 0:
                        raise ValueError(f"bad monomial {mono!r}")
                    clean[mono] = clean.get(mono, 0) + int(c)
            clean = {k: v for k, v in clean.items() if v}
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "QPoly":
        # trusted constructor: terms already canonical (no zeros, tuple keys)
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    # -- constructors -------------------------------------------------------
    @classmethod
    def const(cls, c: int) -> "QPoly":
        return cls._raw({(0, 0, 0): int(c)} if c else {})

    @classmethod
    def monomial(cls, ea: int = 0, eb: int = 0, eq: int = 0, coeff: int = 1) -> "QPoly":
        return cls({(ea, eb, eq): coeff})

    # -- inspection ---------------------------------------------------------
    @property
    def terms(self) -> dict[Monomial, int]:
        return {Monomial(*k): v for k, v in self._terms.items()}

    def items(self) -> list[tuple[Monomial, int]]:
        """Terms in canonical (ascending) order."""
        return [(Monomial(*k), self._terms[k]) for k in sorted(self._terms, key=_key)]

    def __iter__(self) -> Iterator[tuple[Monomial, int]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, mono: MonoLike) -> int:
        return self._terms.get(tuple(mono), 0)

    def min_q_exponent(self) -> Optional[int]:
        return min((k[2] for k in self._terms), default=None)

    def max_q_exponent(self) -> Optional[int]:
        return max((k[2] for k in self._terms), default=None)

    def leading(self) -> Optional[tuple[Monomial, int]]:
        """Largest term in the canonical order."""
        if not self._terms:
            return None
        k = max(self._terms, key=_key)
        return Monomial(*k), self._terms[k]

    def lowest(self, order: str = "canonical") -> Optional[tuple[Monomial, int]]:
        """Smallest term, by the canonical order or (``order="q"``) q-degree first."""
        if not self._terms:
            return None
        key = _key if order == "canonical" else _qkey
        k = min(self._terms, key=key)
        return Monomial(*k), self._terms[k]

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if len(self._terms) < len(other._terms):
            small, big = self._terms, other._terms
        else:
            small, big = other._terms, self._terms
        out = dict(big)
        for k, v in small.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return QPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly._raw({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        s, o = self._terms, other._terms
        if not s or not o:
            return ZERO
        if len(o) == 1:
            (k2, c2), = o.items()
            return QPoly._raw({(k[0] + k2[0], k[1] + k2[1], k[2] + k2[2]): v * c2 for k, v in s.items()})
        if len(s) == 1:
            return other * self
        out: dict[tuple[int, int, int], int] = {}
        get = out.get
        for (a1, b1, q1), c1 in s.items():
            for (a2, b2, q2), c2 in o.items():
                k = (a1 + a2, b1 + b2, q1 + q2)
                out[k] = get(k, 0) + c1 * c2
        return QPoly._raw({k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QPoly":
        if n < 0:
            raise ValueError("negative power")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"QPoly({to_text(self)!r})"

    def __str__(self) -> str:
        return to_text(self)


def _coerce(x):
    if isinstance(x, QPoly):
        return x
    if isinstance(x, int):
        return QPoly.const(x)
    return NotImplemented


ZERO = QPoly._raw({})
ONE = QPoly._raw({(0, 0, 0): 1})
A = QPoly._raw({(1, 0, 0): 1})
B = QPoly._raw({(0, 1, 0): 1})
Q = QPoly._raw({(0, 0, 1): 1})


def mono(ea: int = 0, eb: int = 0, eq: int = 0, coeff: int = 1) -> QPoly:
    return QPoly.monomial(ea, eb, eq, coeff)


def add(p: QPoly, r: QPoly) -> QPoly:
    return p + r


def mul(p: QPoly, r: QPoly) -> QPoly:
    return p * r


def shift(p: QPoly, m: MonoLike) -> QPoly:
    """Multiply ``p`` by the monomial ``m`` (unit coefficient)."""
    da, db, dq = m
    return QPoly._raw({(k[0] + da, k[1] + db, k[2] + dq): v for k, v in p._terms.items()})


def coeff(p: QPoly, m: MonoLike) -> int:
    return p.coeff(m)


def truncate_q(p: QPoly, D: int) -> QPoly:
    """Keep the terms whose q-exponent is at most ``D``."""
    return QPoly._raw({k: v for k, v in p._terms.items() if k[2] <= D})


def set_ab_one(p: QPoly) -> QPoly:
    """Substitute a = b = 1."""
    out: dict[tuple[int, int, int], int] = {}
    for (_, _, eq), v in p._terms.items():
        out[(0, 0, eq)] = out.get((0, 0, eq), 0) + v
    return QPoly._raw({k: v for k, v in out.items() if v})


def strip_ab(p: QPoly) -> QPoly:
    """Substitute a = b = 0."""
    return QPoly._raw({k: v for k, v in p._terms.items() if k[0] == 0 and k[1] == 0})


def evaluate(p: QPoly, a: int = 1, b: int = 1, q: int = 1):
    """Numeric value; negative q-exponents need a ``q`` that is a unit or a Fraction."""
    return sum(c * a ** k[0] * b ** k[1] * q ** k[2] for k, c in p._terms.items())


def exact_div(num: QPoly, den: QPoly) -> QPoly:
    """Exact quotient ``num / den`` by long division in the canonical order.

    Raises :class:`NotDivisible` if the division leaves a remainder and
    :class:`ZeroDivisionError` if ``den`` is zero.
    """
    if not den._terms:
        raise ZeroDivisionError("division by the zero polynomial")
    if not num._terms:
        return ZERO
    # Laurent inputs: shift both into the polynomial ring, divide, shift back.
    sn = -min(0, min(k[2] for k in num._terms))
    sd = -min(0, min(k[2] for k in den._terms))
    if sn:
        num = shift(num, (0, 0, sn))
    if sd:
        den = shift(den, (0, 0, sd))

    lk = max(den._terms, key=_key)
    lc = den._terms[lk]
    rest = [(k, c) for k, c in den._terms.items() if k != lk]

    rem = dict(num._terms)
    heap = [tuple(-x for x in _key(k)) for k in rem]
    heapq.heapify(heap)
    quot: dict[tuple[int, int, int], int] = {}
    while heap:
        neg = heapq.heappop(heap)
        k = (-neg[1], -neg[2], -neg[3])
        c = rem.pop(k, 0)
        if not c:
            continue
        # duplicate heap entries for k are skipped via the pop above
        da, db, dq = k[0] - lk[0], k[1] - lk[1], k[2] - lk[2]
        if da < 0 or db < 0 or dq < 0:
            raise NotDivisible(f"leading term {Monomial(*k)} not divisible by {Monomial(*lk)}")
        t, r = divmod(c, lc)
        if r:
            raise NotDivisible(f"coefficient {c} not divisible by {lc}")
        quot[(da, db, dq)] = t
        for (ka, kb, kq), kc in rest:
            m = (ka + da, kb + db, kq + dq)
            v = rem.get(m, 0) - t * kc
            if v:
                if m not in rem:
                    heapq.heappush(heap, tuple(-x for x in _key(m)))
                rem[m] = v
            else:
                rem.pop(m, None)
    out = QPoly._raw(quot)
    if sn != sd:
        out = shift(out, (0, 0, sd - sn))
    return out


# -- dominance ---------------------------------------------------------------

@dataclass(frozen=True)
class DominanceResult:
    """Outcome of comparing two series coefficient-wise.

    ``leading`` is the smallest nonzero term of the difference (canonical
    order) and ``leading_q`` the smallest by q-degree; ``witness`` is the
    first negative difference term in the canonical order, if any.
    """

    dominates: bool
    difference: QPoly
    leading: Optional[tuple[Monomial, int]]
    leading_q: Optional[tuple[Monomial, int]]
    witness: Optional[tuple[Monomial, int]] = None

    def __bool__(self) -> bool:
        return self.dominates


def dominates(p: QPoly, r: QPoly) -> DominanceResult:
    """Check ``p >= r`` coefficient-wise."""
    diff = p - r
    negatives = [k for k, v in diff._terms.items() if v < 0]
    witness = None
    if negatives:
        k = min(negatives, key=_key)
        witness = (Monomial(*k), diff._terms[k])
    return DominanceResult(
        dominates=witness is None,
        difference=diff,
        leading=diff.lowest("canonical"),
        leading_q=diff.lowest("q"),
        witness=witness,
    )


# -- serialization -----------------------------------------------------------

def _mono_str(k) -> str:
    parts = []
    for name, e in zip("abq", k):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def to_text(p: QPoly) -> str:
    """Canonical text form, e.g. ``1 + b*q - 2*a*q^3``."""
    if not p._terms:
        return "0"
    out = []
    for k in sorted(p._terms, key=_key):
        c = p._terms[k]
        m = _mono_str(k)
        mag = abs(c)
        body = m if (m and mag == 1) else (f"{mag}*{m}" if m else str(mag))
        if not out:
            out.append(body if c > 0 else "-" + body)
        else:
            out.append((" + " if c > 0 else " - ") + body)
    return "".join(out)


_TERM = re.compile(r"^(?:(\d+)\*?)?((?:[abq](?:\^-?\d+)?\*?)*)$")


def from_text(s: str) -> QPoly:
    """Parse the output of :func:`to_text` (also accepts ``+ -`` separators)."""
    s = s.strip()
    if s == "0":
        return ZERO
    tokens = re.split(r"\s+([+-])\s+", s)
    signs = ["+"] + tokens[1::2]
    bodies = tokens[0::2]
    terms: dict[tuple[int, int, int], int] = {}
    for sign, body in zip(signs, bodies):
        body = body.replace(" ", "")
        neg = sign == "-"
        while body.startswith("-"):
            neg, body = not neg, body[1:]
        mt = _TERM.match(body)
        if not mt or not body:
            raise ValueError(f"cannot parse term {body!r}")
        c = int(mt.group(1)) if mt.group(1) else 1
        exps = [0, 0, 0]
        for var, e in re.findall(r"([abq])(?:\^(-?\d+))?", mt.group(2)):
            exps["abq".index(var)] += int(e) if e else 1
        k = tuple(exps)
        terms[k] = terms.get(k, 0) + (-c if neg else c)
    return QPoly(terms)


def to_json_obj(p: QPoly) -> list[dict]:
    return [
        {"ea": k.ea, "eb": k.eb, "eq": k.eq, "coeff": str(c)} for k, c in p.items()
    ]


def from_json_obj(obj: Iterable[Mapping]) -> QPoly:
    return QPoly({(int(t["ea"]), int(t["eb"]), int(t["eq"])): int(t["coeff"]) for t in obj})


def to_json(p: QPoly) -> str:
    return json.dumps(to_json_obj(p))


def from_json(s: str) -> QPoly:
    return from_json_obj(json.loads(s))


def to_csv_rows(p: QPoly) -> list[tuple[int, int, int, int]]:
    return [(k.ea, k.eb, k.eq, c) for k, c in p.items()]
