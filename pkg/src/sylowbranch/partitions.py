"""Integer partitions and the closed-form partition families used for Sylow branching.

Partitions are immutable tuples of weakly decreasing positive integers.  The
symbolic families (full set, punctured set, box, punctured box, explicit list)
answer membership in time linear in the size of the partition.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

ENUMERATION_CAP = 200


class PartitionError(ValueError):
    pass


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Zero parts are stripped on construction, so ``Partition((3, 1, 0))`` equals
    ``Partition((3, 1))``.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(x) for x in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise PartitionError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise PartitionError(f"parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @property
    def n(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """The i-th part (1-indexed), zero beyond the length."""
        return self[i - 1] if 0 < i <= len(self) else 0

    def __repr__(self) -> str:
        return format_partition(self)


def two_row(n: int, x: int) -> Partition:
    """The two-row partition (x, n-x)."""
    if not (n - x <= x <= n):
        raise PartitionError(f"two-row partition needs ceil(n/2) <= x <= n, got n={n}, x={x}")
    return Partition((x, n - x))


def hook(n: int, y: int) -> Partition:
    """The hook partition (y, 1^(n-y))."""
    if not (1 <= y <= n):
        raise PartitionError(f"hook needs 1 <= y <= n, got n={n}, y={y}")
    return Partition((y,) + (1,) * (n - y))


def conjugate(lam: Sequence[int]) -> Partition:
    if not lam:
        return Partition()
    return Partition(sum(1 for part in lam if part > j) for j in range(lam[0]))


def closure(parts: Iterable[Sequence[int]]) -> frozenset[Partition]:
    """Closure of a collection of partitions under conjugation."""
    out = set()
    for lam in parts:
        lam = Partition(lam)
        out.add(lam)
        out.add(conjugate(lam))
    return frozenset(out)


def is_subpartition(mu: Sequence[int], lam: Sequence[int]) -> bool:
    if len(mu) > len(lam):
        return False
    return all(a <= b for a, b in zip(mu, lam))


def add(lam: Sequence[int], mu: Sequence[int]) -> Partition:
    """Part-wise sum, padding the shorter partition with zeros."""
    m = max(len(lam), len(mu))
    lam = tuple(lam) + (0,) * (m - len(lam))
    mu = tuple(mu) + (0,) * (m - len(mu))
    return Partition(a + b for a, b in zip(lam, mu))


def is_thin(lam: Sequence[int]) -> bool:
    """Hook, two-row, or conjugate of a two-row partition."""
    return len(lam) < 2 or lam[1] <= 1 or len(lam) <= 2 or lam[0] <= 2


def normalized_width(lam: Sequence[int]) -> int:
    """max(first part, length): the side of the smallest square box holding lam."""
    if not lam:
        raise PartitionError("normalized width of the empty partition is undefined")
    return max(lam[0], len(lam))


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """Number of partitions of n by Euler's pentagonal recurrence."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > n:
            break
        sign = 1 if k % 2 else -1
        total += sign * partition_count(n - g1)
        g2 = k * (3 * k + 1) // 2
        if g2 <= n:
            total += sign * partition_count(n - g2)
        k += 1
    return total


def _partitions_bounded(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=64)
def _enumerate_cached(n: int) -> tuple[Partition, ...]:
    return tuple(Partition(parts) for parts in _partitions_bounded(n, n))


def enumerate_partitions(n: int, cap: int = ENUMERATION_CAP) -> tuple[Partition, ...]:
    """All partitions of n in descending lexicographic order."""
    if n < 0:
        raise PartitionError("n must be non-negative")
    if n > cap:
        raise PartitionError(f"refusing to enumerate partitions of {n} (cap {cap})")
    return _enumerate_cached(n)


def partitions_in_box(n: int, t: int) -> Iterator[Partition]:
    """Partitions of n with first part and length at most t, descending lex order."""
    def rec(rem: int, largest: int, rows_left: int):
        if rem == 0:
            yield ()
            return
        if rows_left == 0:
            return
        for first in range(min(rem, largest), 0, -1):
            if first * rows_left < rem:
                break
            for rest in rec(rem - first, first, rows_left - 1):
                yield (first,) + rest

    for parts in rec(n, t, t):
        yield Partition(parts)


# -- text format -----------------------------------------------------------------

_TOKEN = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$")


def parse_partition(text: str) -> Partition:
    """Parse ``[6,2]`` or ``[4,1^3]`` (brackets optional)."""
    body = text.strip()
    if body.startswith("[") or body.startswith("("):
        if not (body.endswith("]") or body.endswith(")")):
            raise PartitionError(f"unbalanced brackets in {text!r}")
        body = body[1:-1]
    if not body.strip():
        return Partition()
    parts: list[int] = []
    for token in body.split(","):
        m = _TOKEN.match(token)
        if not m:
            raise PartitionError(f"bad partition token {token!r} in {text!r}")
        value, exp = int(m.group(1)), int(m.group(2) or 1)
        parts.extend([value] * exp)
    return Partition(parts)


def format_partition(lam: Sequence[int]) -> str:
    return "[" + ",".join(str(x) for x in lam) + "]"


# -- symbolic families ---------------------------------------------------------------


@dataclass(frozen=True)
class FullSet:
    """All partitions of n."""

    n: int

    def to_json(self) -> dict:
        return {"kind": "full", "n": self.n}

    def __str__(self) -> str:
        return f"P({self.n})"


@dataclass(frozen=True)
class PuncturedFull:
    """All partitions of n except (n-1,1) and its conjugate."""

    n: int

    def __post_init__(self):
        if self.n < 3:
            raise PartitionError(f"punctured full set needs n >= 3, got {self.n}")

    def to_json(self) -> dict:
        return {"kind": "punctured_full", "n": self.n}

    def __str__(self) -> str:
        return f"°P({self.n})"


@dataclass(frozen=True)
class Box:
    """Partitions of n fitting inside a t-by-t square."""

    n: int
    t: int

    def __post_init__(self):
        if self.n < 0 or self.t < 0:
            raise PartitionError(f"invalid box parameters n={self.n}, t={self.t}")

    def to_json(self) -> dict:
        return {"kind": "box", "n": self.n, "t": self.t}

    def __str__(self) -> str:
        return f"B_{self.n}({self.t})"


@dataclass(frozen=True)
class PuncturedBox:
    """Box(n, t) minus the conjugation closure of (t, n-t-1, 1) and (t, 2, 1^(n-t-2)).

    Defined only for n/2 < t <= n-2.  At t = n-2 the set coincides with
    Box(n, n-3); the literal definition is kept.
    """

    n: int
    t: int

    def __post_init__(self):
        if not (2 * self.t > self.n and self.t <= self.n - 2):
            raise PartitionError(
                f"punctured box needs n/2 < t <= n-2, got n={self.n}, t={self.t}"
            )

    def excluded(self) -> frozenset[Partition]:
        n, t = self.n, self.t
        return closure([(t, n - t - 1, 1), (t, 2) + (1,) * (n - t - 2)])

    def to_json(self) -> dict:
        return {"kind": "punctured_box", "n": self.n, "t": self.t}

    def __str__(self) -> str:
        return f"°B_{self.n}({self.t})"


@dataclass(frozen=True)
class Explicit:
    """An explicit finite set of partitions of n, stored sorted descending."""

    n: int
    members: tuple[Partition, ...]

    def __post_init__(self):
        for lam in self.members:
            if sum(lam) != self.n:
                raise PartitionError(f"{lam} is not a partition of {self.n}")

    @classmethod
    def of(cls, n: int, members: Iterable[Sequence[int]], closed: bool = False) -> "Explicit":
        ms = sorted({Partition(m) for m in members}, reverse=True)
        out = cls(n, tuple(ms))
        if closed:
            as_set = set(ms)
            if any(conjugate(m) not in as_set for m in ms):
                raise PartitionError("explicit set flagged closed is not closed under conjugation")
        return out

    def as_set(self) -> frozenset[Partition]:
        return frozenset(self.members)

    def to_json(self) -> dict:
        return {"kind": "explicit", "n": self.n, "members": [list(m) for m in self.members]}

    def __str__(self) -> str:
        return "{" + ", ".join(format_partition(m) for m in self.members) + "}"


SymbolicPartitionSet = FullSet | PuncturedFull | Box | PuncturedBox | Explicit


def in_box(lam: Sequence[int], t: int) -> bool:
    return (not lam) or (lam[0] <= t and len(lam) <= t)


def sym_contains(s: SymbolicPartitionSet, lam: Sequence[int]) -> bool:
    if sum(lam) != s.n:
        raise PartitionError(f"{format_partition(lam)} is not a partition of {s.n}")
    if isinstance(s, FullSet):
        return True
    if isinstance(s, PuncturedFull):
        n = s.n
        return tuple(lam) not in ((n - 1, 1), (2,) + (1,) * (n - 2))
    if isinstance(s, Box):
        return in_box(lam, s.t)
    if isinstance(s, PuncturedBox):
        if not in_box(lam, s.t):
            return False
        return Partition(lam) not in s.excluded()
    if isinstance(s, Explicit):
        return Partition(lam) in s.as_set()
    raise TypeError(f"not a symbolic partition set: {s!r}")


def sym_materialize(s: SymbolicPartitionSet, cap: int = ENUMERATION_CAP) -> Explicit:
    if isinstance(s, Explicit):
        return s
    if s.n > cap:
        raise PartitionError(f"refusing to materialize a set over {s.n} (cap {cap})")
    if isinstance(s, (Box, PuncturedBox)):
        candidates = partitions_in_box(s.n, s.t)
    else:
        candidates = enumerate_partitions(s.n, cap)
    return Explicit(s.n, tuple(lam for lam in candidates if sym_contains(s, lam)))


def parse_symbolic(text: str) -> SymbolicPartitionSet:
    """Parse ``B:n:t``, ``oB:n:t``, ``P:n`` or ``oP:n``."""
    fields = text.strip().split(":")
    kind = fields[0]
    try:
        args = [int(a) for a in fields[1:]]
        if kind == "P":
            (n,) = args
            return FullSet(n)
        if kind == "oP":
            (n,) = args
            return PuncturedFull(n)
        if kind == "B":
            n, t = args
            return Box(n, t)
        if kind == "oB":
            n, t = args
            return PuncturedBox(n, t)
    except ValueError as exc:
        raise PartitionError(f"bad set descriptor {text!r}") from exc
    raise PartitionError(f"unknown set kind in {text!r}; expected B, oB, P or oP")
