"""Constrained partition families and their brute-force enumeration.

Families (``m`` is 1 or 2, parts are indexed from 1 at the largest part):

``A(m)``
    distinct parts; odd-indexed parts avoid ``m`` mod 3, even-indexed parts
    avoid ``3 - m`` mod 3; gap rules depend on index parity.
``C(m)``
    distinct parts not congruent to ``+-m`` mod 6.
``D(m)``
    parts different from ``m``; consecutive parts differ by at least 4,
    except multiples of 3 differing by 3 or pairs summing to a multiple of 6
    (difference at least 2).
``P(m, N, i, j)``
    ``A(m)`` with largest part at most ``3 ceil(N/2) - 2m frac(N/2)`` and,
    optionally, exactly ``i`` parts = 2 mod 3 and ``j`` parts = 1 mod 3.
``Q(m, N, i, j)``
    ``C(m)`` with residue-class bounds; ``i`` and ``j`` count the
    ``m + (-1)^(m+1)`` and ``3 + m`` classes mod 6.
``G(m, N)``
    ``D(m)`` with largest part at most ``N``.

Enumeration is a depth-first search over parts in decreasing order, so
lists come out lexicographically decreasing.
"""

from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

from .qpoly import QPoly

FAMILIES = ("A", "C", "D", "P", "Q", "G")


class UnboundedClass(ValueError):
    """An infinite family was enumerated without a norm cap."""


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(x < 1 for x in parts) or any(x < y for x, y in zip(parts, parts[1:])):
            raise ValueError(f"not a partition: {parts}")

    @property
    def norm(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, t):
        return self.parts[t]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"

    @classmethod
    def parse(cls, s: str) -> "Partition":
        body = s.strip()
        if not re.fullmatch(r"\(\s*(\d+\s*(,\s*\d+\s*)*)?\)", body):
            raise ValueError(f"bad partition string {s!r}")
        inner = body[1:-1].strip()
        return cls(tuple(int(x) for x in inner.split(",")) if inner else ())


@dataclass(frozen=True)
class PartitionClass:
    family: str
    m: int
    N: Optional[int] = None
    i: Optional[int] = None
    j: Optional[int] = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.m not in (1, 2):
            raise ValueError("m must be 1 or 2")
        if self.family in ("P", "Q", "G"):
            if self.N is None or self.N < 0:
                raise ValueError(f"family {self.family} needs N >= 0")
        elif self.N is not None:
            raise ValueError(f"family {self.family} takes no N")
        if (self.i is None) != (self.j is None):
            raise ValueError("give both i and j or neither")
        if self.i is not None:
            if self.family not in ("P", "Q"):
                raise ValueError("only P and Q carry (i, j)")
            if self.i < 0 or self.j < 0:
                raise ValueError("i, j must be nonnegative")

    @property
    def bounded(self) -> bool:
        return self.family in ("P", "Q", "G")

    def __str__(self) -> str:
        args = [str(self.m)] + [str(x) for x in (self.N, self.i, self.j) if x is not None]
        return f"{self.family}({', '.join(args)})"


def A(m: int) -> PartitionClass:
    return PartitionClass("A", m)


def C(m: int) -> PartitionClass:
    return PartitionClass("C", m)


def D(m: int) -> PartitionClass:
    return PartitionClass("D", m)


def P(m: int, N: int, i: Optional[int] = None, j: Optional[int] = None) -> PartitionClass:
    return PartitionClass("P", m, N, i, j)


def Q(m: int, N: int, i: Optional[int] = None, j: Optional[int] = None) -> PartitionClass:
    return PartitionClass("Q", m, N, i, j)


def G(m: int, N: int) -> PartitionClass:
    return PartitionClass("G", m, N)


# -- elementary rules ----------------------------------------------------------

def residue_stats(pi) -> tuple[int, int]:
    """(number of parts = 2 mod 3, number of parts = 1 mod 3)."""
    i = j = 0
    for x in pi:
        r = x % 3
        if r == 2:
            i += 1
        elif r == 1:
            j += 1
    return i, j


def a_forbidden_residue(m: int, t: int) -> int:
    """Residue mod 3 that the part at 1-based index ``t`` must avoid in family A."""
    r = t % 2
    return (3 - m + (-1) ** m * r) % 3


def a_min_gap(m: int, t: int) -> int:
    """Parts ``t`` and ``t + 1`` must differ by more than this in family A."""
    r = t % 2
    return m // 2 + (-1) ** (m - 1) * r


def p_largest_part(m: int, N: int) -> int:
    """Largest-part bound ``3 ceil(N/2) - 2m frac(N/2)``."""
    if N % 2 == 0:
        return 3 * (N // 2)
    return 3 * ((N + 1) // 2) - m


def capparelli_gap_ok(x: int, y: int) -> bool:
    """Difference condition between consecutive parts ``x >= y``."""
    d = x - y
    return d >= 4 or (d == 3 and x % 3 == 0) or (d >= 2 and (x + y) % 6 == 0)


def q_classes(m: int) -> tuple[int, int]:
    """Residues mod 6 whose multiplicities are ``i`` and ``j`` in family Q."""
    return (m + (-1) ** (m + 1)) % 6, (3 + m) % 6


def q_counts(m: int, pi) -> tuple[int, int]:
    ci, cj = q_classes(m)
    return sum(1 for x in pi if x % 6 == ci), sum(1 for x in pi if x % 6 == cj)


def _q_bounds(m: int, N: int, i: int, j: int) -> tuple[int, int, int]:
    ci_bound = 6 * N - (3 + m)
    cj_bound = 6 * (N - i) - (m + (-1) ** (m + 1))
    zero_bound = 3 * (N - i - j)
    return ci_bound, cj_bound, zero_bound


# -- whole-partition predicates ------------------------------------------------

def _sat_A(m: int, parts) -> bool:
    k = len(parts)
    for t in range(1, k + 1):
        if parts[t - 1] % 3 == a_forbidden_residue(m, t):
            return False
        if t < k and parts[t - 1] - parts[t] <= a_min_gap(m, t):
            return False
    return True


def _sat_C(m: int, parts) -> bool:
    bad = {m % 6, (-m) % 6}
    return all(x % 6 not in bad for x in parts) and all(x > y for x, y in zip(parts, parts[1:]))


def _sat_D(m: int, parts) -> bool:
    return all(x != m for x in parts) and all(capparelli_gap_ok(x, y) for x, y in zip(parts, parts[1:]))


def _sat_Q(m: int, N: int, i: int, j: int, parts) -> bool:
    if not _sat_C(m, parts):
        return False
    if q_counts(m, parts) != (i, j):
        return False
    ci, cj = q_classes(m)
    bi, bj, b0 = _q_bounds(m, N, i, j)
    for x in parts:
        r = x % 6
        if r == ci and x > bi:
            return False
        if r == cj and x > bj:
            return False
        if r % 3 == 0 and x > b0:
            return False
    return True


def satisfies(pc: PartitionClass, pi) -> bool:
    """Whether ``pi`` belongs to the class ``pc``."""
    parts = tuple(pi)
    f, m = pc.family, pc.m
    if f == "A":
        return _sat_A(m, parts)
    if f == "C":
        return _sat_C(m, parts)
    if f == "D":
        return _sat_D(m, parts)
    if f == "G":
        return (not parts or parts[0] <= pc.N) and _sat_D(m, parts)
    if f == "P":
        if parts and parts[0] > p_largest_part(m, pc.N):
            return False
        if pc.i is not None and residue_stats(parts) != (pc.i, pc.j):
            return False
        return _sat_A(m, parts)
    if f == "Q":
        if pc.i is None:
            i, j = q_counts(m, parts)
        else:
            i, j = pc.i, pc.j
        return _sat_Q(m, pc.N, i, j, parts)
    raise AssertionError(f)


def satisfies_alt_A(m: int, pi) -> bool:
    """Family A via distinct parts and no adjacent pair ``(3l+2, 3l+1)``."""
    parts = tuple(pi)
    for t, x in enumerate(parts, start=1):
        if x % 3 == a_forbidden_residue(m, t):
            return False
    for x, y in zip(parts, parts[1:]):
        if x <= y:
            return False
        if x - y == 1 and x % 3 == 2:
            return False
    return True


# -- enumeration ---------------------------------------------------------------

@dataclass
class _Rules:
    top: Optional[int]
    part_ok: Callable[[int, int], bool]
    pair_ok: Callable[[int, int, int], bool]
    # (i, j) residue-count targets; None means unconstrained
    target: Optional[tuple[int, int]] = None


def _rules(pc: PartitionClass) -> _Rules:
    m = pc.m
    f = pc.family
    if f in ("A", "P"):
        top = p_largest_part(m, pc.N) if f == "P" else None
        forb = {1: a_forbidden_residue(m, 1), 0: a_forbidden_residue(m, 2)}
        gaps = {1: a_min_gap(m, 1), 0: a_min_gap(m, 2)}
        target = (pc.i, pc.j) if pc.i is not None else None
        return _Rules(
            top,
            lambda v, t: v % 3 != forb[t % 2],
            lambda x, y, t: x - y > gaps[t % 2],
            target,
        )
    if f in ("D", "G"):
        top = pc.N if f == "G" else None
        return _Rules(top, lambda v, t: v != m, lambda x, y, t: capparelli_gap_ok(x, y))
    if f == "C":
        bad = {m % 6, (-m) % 6}
        return _Rules(None, lambda v, t: v % 6 not in bad, lambda x, y, t: x > y)
    if f == "Q":
        assert pc.i is not None
        ci, cj = q_classes(m)
        bi, bj, b0 = _q_bounds(m, pc.N, pc.i, pc.j)
        bad = {m % 6, (-m) % 6}

        def part_ok(v, t):
            r = v % 6
            if r in bad:
                return False
            if r == ci:
                return v <= bi
            if r == cj:
                return v <= bj
            return v <= b0

        # Q counts are the residue counts, possibly swapped
        target = (pc.i, pc.j) if ci % 3 == 2 else (pc.j, pc.i)
        top = max(bi, bj, b0, 0)
        return _Rules(top, part_ok, lambda x, y, t: x > y, target)
    raise AssertionError(f)


def _dfs(rules: _Rules, cap: int, exact: Optional[int]) -> Iterator[tuple[int, ...]]:
    """Yield member parts tuples with norm <= cap (or == exact)."""
    part_ok, pair_ok, target = rules.part_ok, rules.pair_ok, rules.target
    parts: list[int] = []

    def rec(prev: int, t: int, used: int, ci: int, cj: int):
        if exact is None or used == exact:
            if target is None or (ci, cj) == target:
                yield tuple(parts)
        room = (exact if exact is not None else cap) - used
        hi = room if prev is None else min(prev - 1, room)
        if t == 1 and rules.top is not None:
            hi = min(hi, rules.top)
        for v in range(hi, 0, -1):
            if exact is not None and v * (v + 1) // 2 < room:
                # distinct parts below v cannot fill the remaining norm
                break
            if not part_ok(v, t):
                continue
            if prev is not None and not pair_ok(prev, v, t - 1):
                continue
            r = v % 3
            ni, nj = ci + (r == 2), cj + (r == 1)
            if target is not None and (ni > target[0] or nj > target[1]):
                continue
            parts.append(v)
            yield from rec(v, t + 1, used + v, ni, nj)
            parts.pop()

    yield from rec(None, 1, 0, 0, 0)


def _max_norm(pc: PartitionClass) -> int:
    # crude upper bound on the norm of any member of a bounded class
    if pc.family == "P":
        top = p_largest_part(pc.m, pc.N)
    elif pc.family == "G":
        top = pc.N
    else:
        top = 6 * pc.N
    return max(top, 0) * (max(top, 0) + 1) // 2


def _split_q(pc: PartitionClass) -> list[PartitionClass]:
    if pc.family == "Q" and pc.i is None:
        return [Q(pc.m, pc.N, i, j) for i in range(pc.N + 1) for j in range(pc.N + 1 - i)]
    return [pc]


def members(pc: PartitionClass, max_norm: Optional[int] = None) -> Iterator[Partition]:
    """All members of ``pc`` with norm <= ``max_norm`` (all members if bounded and omitted)."""
    if max_norm is None:
        if not pc.bounded:
            raise UnboundedClass(f"{pc} is infinite; give max_norm")
    for sub in _split_q(pc):
        cap = _max_norm(sub) if max_norm is None else max_norm
        for parts in _dfs(_rules(sub), cap, None):
            yield Partition(parts)


def enumerate_partitions(pc: PartitionClass, n: int) -> list[Partition]:
    """Members of ``pc`` with norm exactly ``n``, lexicographically decreasing."""
    if n < 0:
        return []
    out: list[tuple[int, ...]] = []
    for sub in _split_q(pc):
        out.extend(_dfs(_rules(sub), n, n))
    out.sort(reverse=True)
    return [Partition(p) for p in out]


def count(pc: PartitionClass, n: int) -> int:
    return len(enumerate_partitions(pc, n))


def counts_by_norm(pc: PartitionClass, n_max: int) -> list[int]:
    """``[#members of norm n for n in 0..n_max]``."""
    out = [0] * (n_max + 1)
    for pi in members(pc, n_max):
        out[pi.norm] += 1
    return out


def oracle_genfun(pc: PartitionClass, max_norm: Optional[int] = None) -> QPoly:
    """Sum of ``a^i b^j q^norm`` over the class, ``(i, j) = residue_stats``."""
    terms: dict[tuple[int, int, int], int] = defaultdict(int)
    for pi in members(pc, max_norm):
        i, j = residue_stats(pi)
        terms[(i, j, pi.norm)] += 1
    return QPoly(terms)


def oracle_by_counts(pc: PartitionClass, max_norm: Optional[int] = None) -> dict[tuple[int, int], QPoly]:
    """The oracle generating function split by residue counts into q-only polynomials."""
    buckets: dict[tuple[int, int], dict] = defaultdict(lambda: defaultdict(int))
    for pi in members(pc, max_norm):
        buckets[residue_stats(pi)][(0, 0, pi.norm)] += 1
    return {k: QPoly(v) for k, v in buckets.items()}


@dataclass
class RefinedTable:
    """Counts keyed by ``(n, i, j)``; absent keys count zero."""

    entries: dict[tuple[int, int, int], int] = field(default_factory=dict)

    def __getitem__(self, key: tuple[int, int, int]) -> int:
        return self.entries.get(key, 0)

    def __eq__(self, other) -> bool:
        return isinstance(other, RefinedTable) and self.entries == other.entries

    def __len__(self) -> int:
        return len(self.entries)

    def total(self, n: int) -> int:
        return sum(c for (nn, _, _), c in self.entries.items() if nn == n)

    def keys(self):
        return sorted(self.entries)

    def first_difference(self, other: "RefinedTable"):
        for k in sorted(set(self.entries) | set(other.entries)):
            if self[k] != other[k]:
                return k, self[k], other[k]
        return None


def refined_table(pc: PartitionClass, n_max: Optional[int] = None) -> RefinedTable:
    """Counts of members by (norm, #parts = 2 mod 3, #parts = 1 mod 3).

    ``pc`` is a bounded A-family ``P(m, N)`` or ``Q(m, N)``; with ``n_max``
    omitted the full (finite) support is tabulated.
    """
    entries: dict[tuple[int, int, int], int] = defaultdict(int)
    for pi in members(pc, n_max):
        i, j = residue_stats(pi)
        entries[(pi.norm, i, j)] += 1
    return RefinedTable(dict(entries))


def all_partitions(n: int, largest: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """Every partition of ``n`` (parts weakly decreasing), unconstrained."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for x in range(min(n, largest), 0, -1):
        for rest in all_partitions(n - x, x):
            yield (x,) + rest
