"""Littlewood-Richardson coefficients, the star product of partition sets, and mixed sets.

Coefficients are counted by filling the skew shape lam/mu in reading order
(rows top to bottom, each row right to left) with a column-strict filling whose
reading word stays a lattice word.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Sequence

from .partitions import (
    Box,
    Explicit,
    FullSet,
    Partition,
    PartitionError,
    PuncturedBox,
    PuncturedFull,
    SymbolicPartitionSet,
    closure,
    conjugate,
    enumerate_partitions,
    is_subpartition,
    partitions_in_box,
    sym_materialize,
)

LR_CACHE_SIZE = 1 << 20


class HypothesisError(ValueError):
    """A closed-form identity was requested outside the range where it is valid."""


# -- tableau enumeration -----------------------------------------------------------------


def _skew_cells(lam: Sequence[int], mu: Sequence[int]):
    """Cells of lam/mu in reading order, with the index of the right neighbour and the cell above."""
    cells: list[tuple[int, int]] = []
    index: dict[tuple[int, int], int] = {}
    for r, length in enumerate(lam):
        start = mu[r] if r < len(mu) else 0
        for c in range(length - 1, start - 1, -1):
            index[(r, c)] = len(cells)
            cells.append((r, c))
    right = [index.get((r, c + 1), -1) for r, c in cells]
    above = [index.get((r - 1, c), -1) for r, c in cells]
    rows = [r for r, _ in cells]
    return cells, right, above, rows


def _fillings(lam: Sequence[int], mu: Sequence[int], content: Sequence[int] | None) -> Iterator[tuple[int, ...]]:
    """Yield the content of every LR filling of lam/mu, restricted to `content` if given."""
    cells, right, above, rows = _skew_cells(lam, mu)
    ncells = len(cells)
    if ncells == 0:
        yield ()
        return
    limit = list(content) if content is not None else None
    depth = len(limit) if limit is not None else len(lam)
    counts = [0] * (depth + 2)
    values = [0] * ncells

    def rec(i: int):
        if i == ncells:
            yield tuple(counts[1 : depth + 1])
            return
        hi = rows[i] + 1
        if right[i] >= 0:
            hi = min(hi, values[right[i]])
        lo = 1
        if above[i] >= 0:
            lo = values[above[i]] + 1
        hi = min(hi, depth)
        for e in range(lo, hi + 1):
            if e > 1 and counts[e] >= counts[e - 1]:
                continue
            if limit is not None and counts[e] >= limit[e - 1]:
                continue
            counts[e] += 1
            values[i] = e
            yield from rec(i + 1)
            counts[e] -= 1

    yield from rec(0)


def _check_sizes(lam: Sequence[int], parts: Iterable[Sequence[int]]) -> None:
    total = sum(sum(m) for m in parts)
    if total != sum(lam):
        raise PartitionError(f"sizes do not add up: |lam|={sum(lam)}, factors sum to {total}")


@lru_cache(maxsize=LR_CACHE_SIZE)
def _lr(lam: Partition, mu: Partition, nu: Partition) -> int:
    if not is_subpartition(mu, lam) or not is_subpartition(nu, lam):
        return 0
    # first-part bound: lam_1 <= mu_1 + nu_1
    if lam and lam[0] > (mu[0] if mu else 0) + (nu[0] if nu else 0):
        return 0
    return sum(1 for _ in _fillings(lam, mu, nu))


def lr_coeff(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """Multiplicity of mu x nu in the restriction of lam to a two-block Young subgroup."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    _check_sizes(lam, (mu, nu))
    if len(mu) < len(nu):
        # the coefficient is symmetric in mu and nu; filling the smaller content is cheaper
        mu, nu = nu, mu
    return _lr(lam, mu, nu)


@lru_cache(maxsize=LR_CACHE_SIZE)
def skew_support(lam: Partition, mu: Partition) -> frozenset[Partition]:
    """All nu with LR(lam; mu, nu) > 0."""
    if not is_subpartition(mu, lam):
        return frozenset()
    return frozenset(Partition(c) for c in _fillings(lam, mu, None))


def subpartitions(lam: Sequence[int], size: int) -> Iterator[Partition]:
    """Partitions of `size` contained in lam."""
    lam = tuple(lam)

    def rec(i: int, rem: int, cap: int):
        if rem == 0:
            yield ()
            return
        if i >= len(lam):
            return
        for part in range(min(rem, cap, lam[i]), 0, -1):
            for rest in rec(i + 1, rem - part, part):
                yield (part,) + rest

    for parts in rec(0, size, size):
        yield Partition(parts)


def lr_multi(lam: Sequence[int], factors: Sequence[Sequence[int]]) -> int:
    """LR(lam; mu^1, ..., mu^t), folding the factors from the left over subpartitions of lam."""
    lam = Partition(lam)
    factors = [Partition(f) for f in factors]
    _check_sizes(lam, factors)
    layer: dict[Partition, int] = {Partition(): 1}
    size = 0
    for mu in factors:
        size += mu.n
        nxt: dict[Partition, int] = {}
        for kappa in subpartitions(lam, size):
            total = 0
            for prev, coeff in layer.items():
                if is_subpartition(prev, kappa):
                    c = lr_coeff(kappa, prev, mu)
                    if c:
                        total += coeff * c
            if total:
                nxt[kappa] = total
        layer = nxt
        if not layer:
            return 0
    return layer.get(lam, 0)


def restrict_to_young(lam: Sequence[int], blocks: Sequence[int]) -> dict[tuple[Partition, ...], int]:
    """Decompose the restriction of lam to S_{b1} x ... x S_{bt} as {factor tuple: multiplicity}."""
    lam = Partition(lam)
    blocks = [int(b) for b in blocks]
    if sum(blocks) != lam.n or any(b < 0 for b in blocks):
        raise PartitionError(f"blocks {blocks} do not partition {lam.n}")

    def rec(outer: Partition, bs: tuple[int, ...]) -> Counter:
        if not bs:
            return Counter({(): 1})
        last = bs[-1]
        out: Counter = Counter()
        for kappa in subpartitions(outer, outer.n - last):
            for nu in skew_support(outer, kappa):
                c = lr_coeff(outer, kappa, nu)
                for head, mult in rec(kappa, bs[:-1]).items():
                    out[head + (nu,)] += mult * c
        return out

    return dict(sorted(rec(lam, tuple(blocks)).items(), reverse=True))


# -- star product -----------------------------------------------------------------------


def _uniform_size(parts: Iterable[Sequence[int]], what: str) -> tuple[frozenset[Partition], int | None]:
    members = frozenset(Partition(p) for p in parts)
    sizes = {m.n for m in members}
    if len(sizes) > 1:
        raise PartitionError(f"{what} mixes partitions of different sizes: {sorted(sizes)}")
    return members, (sizes.pop() if sizes else None)


def product_support(mu: Sequence[int], nu: Sequence[int]) -> frozenset[Partition]:
    """All lam with LR(lam; mu, nu) > 0."""
    mu, nu = Partition(mu), Partition(nu)
    return _product_support(mu, nu) if mu >= nu else _product_support(nu, mu)


@lru_cache(maxsize=LR_CACHE_SIZE)
def _product_support(mu: Partition, nu: Partition) -> frozenset[Partition]:
    # lam contains mu, and adding nu to mu can lengthen each row by at most nu_1 and add at most l(nu) rows
    n = mu.n + nu.n
    out = set()
    width = (mu[0] if mu else 0) + (nu[0] if nu else 0)
    for lam in partitions_in_box_rect(n, width, len(mu) + len(nu)):
        if is_subpartition(mu, lam) and is_subpartition(nu, lam) and _lr(lam, mu, nu) > 0:
            out.add(lam)
    return frozenset(out)


def partitions_in_box_rect(n: int, width: int, height: int) -> Iterator[Partition]:
    """Partitions of n with first part at most `width` and at most `height` parts."""
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

    for parts in rec(n, width, height):
        yield Partition(parts)


def star_explicit(a: Iterable[Sequence[int]], b: Iterable[Sequence[int]]) -> frozenset[Partition]:
    """A star B: every partition with a nonzero LR coefficient against some pair in A x B."""
    a_set, na = _uniform_size(a, "first set")
    b_set, nb = _uniform_size(b, "second set")
    if not a_set or not b_set:
        return frozenset()
    # iterate over the smaller set on the skew side
    if len(a_set) > len(b_set):
        a_set, b_set, na, nb = b_set, a_set, nb, na
    out = set()
    for lam in enumerate_partitions(na + nb):
        for mu in a_set:
            if is_subpartition(mu, lam) and not skew_support(lam, mu).isdisjoint(b_set):
                out.add(lam)
                break
    return frozenset(out)


def star_many(sets: Sequence[Iterable[Sequence[int]]]) -> frozenset[Partition]:
    acc = frozenset({Partition()})
    for s in sets:
        acc = star_explicit(acc, s)
    return acc


def _supports_of_tuple(parts: Sequence[Partition]) -> frozenset[Partition]:
    layer = {Partition()}
    for mu in parts:
        nxt = set()
        for kappa in layer:
            nxt |= product_support(kappa, mu)
        layer = nxt
    return frozenset(layer)


def mixed_set(q: int, a: Iterable[Sequence[int]]) -> frozenset[Partition]:
    """M(q, A): support of LR over q-tuples from A that are not all equal."""
    members, _ = _uniform_size(a, "set")
    if q < 1:
        raise ValueError("q must be positive")
    out: set[Partition] = set()
    ordered = sorted(members, reverse=True)
    for combo in combinations_with_replacement(ordered, q):
        if len(set(combo)) < 2:
            continue
        out |= _supports_of_tuple(combo)
    return frozenset(out)


def mixed_box_closed_form(q: int, m: int, t: int) -> frozenset[Partition]:
    """Closed form of M(q, B_m(t)) for q >= 3 and 2 < m/2 + 1 < t <= m."""
    if not (q >= 3 and 2 < m / 2 + 1 < t <= m):
        raise HypothesisError(f"closed form needs q >= 3 and 2 < m/2+1 < t <= m; got q={q}, m={m}, t={t}")
    n = q * m
    if m - t == 1:
        return frozenset(partitions_in_box(n, q * t - 1))
    excluded = closure([(q * t, n - q * t), (q * t,) + (1,) * (n - q * t)])
    return frozenset(lam for lam in partitions_in_box(n, q * t) if lam not in excluded)


# -- closed-form star algebra -------------------------------------------------------------


def _family(s: SymbolicPartitionSet) -> tuple[str, int, int]:
    """(kind, n, parameter) with full boxes folded into the full set."""
    if isinstance(s, FullSet):
        return "P", s.n, s.n
    if isinstance(s, Box):
        if s.t >= s.n:
            return "P", s.n, s.n
        return "B", s.n, s.t
    if isinstance(s, PuncturedFull):
        return "oP", s.n, s.n
    if isinstance(s, PuncturedBox):
        return "oB", s.n, s.t
    raise HypothesisError(f"no closed form for {s}; use star_explicit")


def normalize(s: SymbolicPartitionSet) -> SymbolicPartitionSet:
    if isinstance(s, Box) and s.t >= s.n:
        return FullSet(s.n)
    return s


def _box(n: int, t: int) -> SymbolicPartitionSet:
    return FullSet(n) if t >= n else Box(n, t)


def _require(cond: bool, rule: str, s1, s2) -> None:
    if not cond:
        raise HypothesisError(f"{s1} * {s2}: parameters outside the range of the {rule} rule; use star_explicit")


def star_symbolic(s1: SymbolicPartitionSet, s2: SymbolicPartitionSet) -> SymbolicPartitionSet:
    """Closed-form star product of two families, valid only inside the hypotheses of each rule."""
    k1, x, a = _family(s1)
    k2, y, b = _family(s2)
    order = {"P": 0, "B": 1, "oP": 2, "oB": 3}
    if order[k1] > order[k2]:
        k1, x, a, k2, y, b = k2, y, b, k1, x, a
        s1, s2 = s2, s1
    big = lambda n, t: 2 * t > n  # noqa: E731
    pb_ok = lambda n, t: n + 2 < 2 * t and t <= n - 5  # noqa: E731

    if k1 in ("P", "B") and k2 in ("P", "B"):
        _require(big(x, a) and big(y, b), "box-box", s1, s2)
        return _box(x + y, a + b)
    if k1 in ("P", "B") and k2 == "oP":
        _require(big(x, a) and y >= 5, "box-punctured-set", s1, s2)
        return _box(x + y, a + y)
    if k1 == "oP" and k2 == "oP":
        _require(x >= 5 and y >= 5, "punctured-set pair", s1, s2)
        return FullSet(x + y)
    if k1 == "B" and k2 == "oB":
        _require(big(x, a) and a <= x - 1 and pb_ok(y, b), "box-punctured-box", s1, s2)
        return _box(x + y, a + b)
    if k1 == "P" and k2 == "oB":
        _require(pb_ok(y, b), "full-punctured-box", s1, s2)
        return PuncturedBox(x + y, x + b)
    if k1 == "oP" and k2 == "oB":
        _require(x >= 5 and pb_ok(y, b), "punctured-set-punctured-box", s1, s2)
        return PuncturedBox(x + y, x + b)
    if k1 == "oB" and k2 == "oB":
        _require(pb_ok(x, a) and pb_ok(y, b), "punctured-box pair", s1, s2)
        return _box(x + y, a + b)
    raise HypothesisError(f"no closed form for {s1} * {s2}")


def as_set(s: SymbolicPartitionSet | Iterable[Sequence[int]]) -> frozenset[Partition]:
    if isinstance(s, (FullSet, PuncturedFull, Box, PuncturedBox, Explicit)):
        return sym_materialize(s).as_set()
    return frozenset(Partition(x) for x in s)


def conjugate_closed(parts: Iterable[Sequence[int]]) -> bool:
    s = {Partition(x) for x in parts}
    return all(conjugate(x) in s for x in s)
