"""Closed-form description of Omega(theta), the set of partitions lam with
[chi^lam restricted to P_n, theta] != 0, read off tree statistics.

Every description carries an inner box B_n(m) contained in Omega(theta) and an
outer box B_n(M) containing it.  Descriptions are exact where the shape is
known and otherwise bounded, with the guarantee that nothing thin lies
outside the inner box.

Omega of the trivial character (the punctured full set at prime powers, the
full set otherwise) is taken as an input fact rather than derived here.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .lr import star_symbolic
from .partitions import (
    Box,
    FullSet,
    Partition,
    PartitionError,
    PuncturedBox,
    PuncturedFull,
    SymbolicPartitionSet,
    closure,
    conjugate,
    format_partition,
    hook,
    in_box,
    is_thin,
    normalized_width,
    sym_contains,
    two_row,
)
from .trees import CharDescriptor, Tree, TreeStats, common_ancestors_zero, tree_stats


class UnsupportedPrimeError(ValueError):
    """The closed-form results here hold only for p >= 5."""


class Membership(enum.Enum):
    IN = "In"
    OUT = "Out"
    UNKNOWN = "Unknown"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class ExactSet:
    shape: SymbolicPartitionSet

    @property
    def n(self) -> int:
        return self.shape.n

    def to_json(self) -> dict:
        return {**self.shape.to_json(), "exact": True}


@dataclass(frozen=True)
class ExactLayered:
    """B_n(inner) together with the conjugation closure of {(boundary, mu) : mu in tail}."""

    n: int
    inner: int
    boundary: int
    tail: SymbolicPartitionSet

    def __post_init__(self):
        if self.tail.n != self.n - self.boundary:
            raise PartitionError("tail set must partition n - boundary")

    def to_json(self) -> dict:
        return {
            "kind": "layered",
            "n": self.n,
            "inner": self.inner,
            "boundary": self.boundary,
            "tail": self.tail.to_json(),
        }


@dataclass(frozen=True)
class Bounded:
    """B_n(m) is inside, everything is inside B_n(M), and no thin partition lies outside B_n(m)."""

    n: int
    m: int
    M: int
    no_thin_outside_inner: bool = True

    def to_json(self) -> dict:
        return {"kind": "bounded", "n": self.n, "m": self.m, "M": self.M, "no_thin_outside_inner": True}


OmegaDescription = ExactSet | ExactLayered | Bounded


def describe_text(desc: OmegaDescription) -> str:
    if isinstance(desc, ExactSet):
        return str(desc.shape)
    if isinstance(desc, ExactLayered):
        return f"B_{desc.n}({desc.inner}) + closure{{({desc.boundary}, mu) : mu in {desc.tail}}}"
    return f"B_{desc.n}({desc.m}) <= Omega <= B_{desc.n}({desc.M}), no thin outside B_{desc.n}({desc.m})"


def describes(desc: OmegaDescription, lam: Sequence[int]) -> bool:
    """Membership for the exact variants."""
    if isinstance(desc, ExactSet):
        return sym_contains(desc.shape, lam)
    if isinstance(desc, ExactLayered):
        lam = Partition(lam)
        if in_box(lam, desc.inner):
            return True
        for cand in (lam, conjugate(lam)):
            if cand[0] == desc.boundary and len(cand) <= desc.boundary:
                rest = Partition(cand[1:])
                if rest.n == desc.tail.n and sym_contains(desc.tail, rest):
                    return True
        return False
    raise TypeError("bounded descriptions do not decide membership")


# -- statistics -------------------------------------------------------------------------------


def _require_prime(theta: CharDescriptor) -> None:
    if theta.p < 5:
        raise UnsupportedPrimeError(f"p = {theta.p}: these formulas need p >= 5")


def _is_prime_power(p: int, n: int) -> bool:
    while n > 1 and n % p == 0:
        n //= p
    return n == 1


def capital_M(theta: CharDescriptor) -> int:
    """Largest normalized width in Omega(theta): n - gamma_0."""
    _require_prime(theta)
    return theta.n - theta.stats().gamma_at(0)


def _tree_punctured(t: Tree, st: TreeStats, p: int) -> bool:
    return st.value == 1 and st.eta >= 2 and common_ancestors_zero(t, p)


def is_punctured(theta: CharDescriptor) -> bool:
    """For value-1 characters: is Omega(theta) a punctured box?"""
    _require_prime(theta)
    st = theta.stats()
    if st.value != 1:
        raise ValueError(f"punctured is defined only for value 1, got value {st.value}")
    live = [(t, tree_stats(t, theta.p)) for _, t in theta.trees]
    live = [(t, s) for t, s in live if s.value > 0]
    if len(live) != 1:
        return False
    t, s = live[0]
    return _tree_punctured(t, s, theta.p)


def little_m(theta: CharDescriptor) -> int:
    """Largest t with B_n(t) inside Omega(theta)."""
    _require_prime(theta)
    st = theta.stats()
    base = theta.n - st.gamma_at(0) - st.gamma_at(1)
    if st.value == 0 and theta.n > 1 and _is_prime_power(theta.p, theta.n):
        return base - 2
    if st.value == 1 and is_punctured(theta):
        return base - 1
    return base


# -- per-component shapes -----------------------------------------------------------------------


def component_shape(p: int, k: int, t: Tree | None) -> OmegaDescription:
    """Omega of a single character of P_{p^k}."""
    if p < 5:
        raise UnsupportedPrimeError(f"p = {p}: these formulas need p >= 5")
    n = p**k
    if t is None or k == 0:
        return ExactSet(FullSet(1))
    st = tree_stats(t, p)
    g0, g1 = st.gamma_at(0), st.gamma_at(1)
    if st.value == 0:
        return ExactSet(PuncturedFull(n))
    if st.value == 1:
        if _tree_punctured(t, st, p):
            return ExactSet(PuncturedBox(n, n - g0))
        return ExactSet(Box(n, n - g0) if n - g0 < n else FullSet(n))
    if k == 2:
        # X(i;j): inner box one below the boundary layer
        return ExactLayered(n, n - p - 1, n - p, Box(p, p - 1))
    return Bounded(n, n - g0 - g1, n - g0)


def _core(desc: OmegaDescription) -> SymbolicPartitionSet:
    """The set Delta with desc = Delta plus non-thin extras."""
    if isinstance(desc, ExactSet):
        return desc.shape
    if isinstance(desc, ExactLayered):
        return Box(desc.n, desc.inner)
    return Box(desc.n, desc.m)


def _outer(desc: OmegaDescription) -> int:
    if isinstance(desc, ExactSet):
        s = desc.shape
        return s.t if isinstance(s, (Box, PuncturedBox)) else s.n
    if isinstance(desc, ExactLayered):
        return desc.boundary
    return desc.M


def inner_width(s: SymbolicPartitionSet) -> int:
    """Largest t with B_n(t) inside the family."""
    if isinstance(s, FullSet):
        return s.n
    if isinstance(s, PuncturedFull):
        return s.n - 2
    if isinstance(s, Box):
        return min(s.t, s.n)
    if isinstance(s, PuncturedBox):
        return s.t - 1
    raise TypeError(f"no inner width for {s!r}")


def compose(parts: Sequence[OmegaDescription]) -> OmegaDescription:
    """Star product of component descriptions.

    Exact operands combine by the closed-form family algebra.  A layered or
    bounded operand makes the result bounded; its inner box is the star of
    the cores and the no-thin guarantee carries over.
    """
    core = _core(parts[0])
    for d in parts[1:]:
        core = star_symbolic(core, _core(d))
    if all(isinstance(d, ExactSet) for d in parts):
        if isinstance(core, Box) and core.t >= core.n:
            core = FullSet(core.n)
        return ExactSet(core)
    if len(parts) == 1:
        return parts[0]
    return Bounded(core.n, inner_width(core), sum(_outer(d) for d in parts))


def omega_shape(theta: CharDescriptor) -> OmegaDescription:
    _require_prime(theta)
    return compose([component_shape(theta.p, k, t) for k, t in theta.components])


def shape_bounds(desc: OmegaDescription) -> tuple[int, int]:
    """(m, M) read off a description."""
    if isinstance(desc, ExactSet):
        return inner_width(desc.shape), _outer(desc)
    if isinstance(desc, ExactLayered):
        return desc.inner, desc.boundary
    return desc.m, desc.M


def omega_member(theta: CharDescriptor, lam: Sequence[int]) -> Membership:
    lam = Partition(lam)
    if lam.n != theta.n:
        raise PartitionError(f"{format_partition(lam)} is not a partition of {theta.n}")
    desc = omega_shape(theta)
    if not isinstance(desc, Bounded):
        return Membership.IN if describes(desc, lam) else Membership.OUT
    w = normalized_width(lam)
    if w <= desc.m:
        return Membership.IN
    if w > desc.M:
        return Membership.OUT
    if is_thin(lam):
        st = theta.stats()
        return Membership.IN if w <= theta.n - st.gamma_at(0) - st.gamma_at(1) else Membership.OUT
    return Membership.UNKNOWN


def omega_intersection_lower(p: int, n: int) -> Box:
    """A box contained in Omega(theta) for every theta: B_n(floor((p-2)n/p))."""
    if p < 5:
        raise UnsupportedPrimeError(f"p = {p}: these formulas need p >= 5")
    return Box(n, (p - 2) * n // p)


@dataclass(frozen=True)
class GapReport:
    gap: int
    gamma1: int
    c: int

    def to_json(self) -> dict:
        return {"gap": self.gap, "gamma1": self.gamma1, "c": self.c}


def gap_report(theta: CharDescriptor) -> GapReport:
    """M - m split as gamma_1 + c."""
    M, m = capital_M(theta), little_m(theta)
    g1 = theta.stats().gamma_at(1)
    c = M - m - g1
    if c not in (0, 1, 2):
        raise AssertionError(f"gap {M - m} minus gamma_1 = {g1} leaves c = {c}")
    if (M - m) * theta.p**2 > theta.n + 2 * theta.p**2:
        raise AssertionError(f"gap {M - m} exceeds n/p^2 + 2")
    return GapReport(M - m, g1, c)


def boundary_claims(theta: CharDescriptor) -> list[tuple[Partition, str]]:
    """Predicted multiplicities at the thin partitions on the edge of the inner box.

    For a prime-power n: value 1 gives multiplicity exactly 1 at width n - gamma_0,
    value at least 2 gives multiplicity at least 2 at width n - gamma_0 - gamma_1.
    """
    _require_prime(theta)
    n = theta.n
    if not _is_prime_power(theta.p, n) or n == 1:
        return []
    st = theta.stats()
    if st.value == 1:
        w, want = n - st.gamma_at(0), "=1"
    elif st.value >= 2:
        w, want = n - st.gamma_at(0) - st.gamma_at(1), ">=2"
    else:
        return []
    return [(lam, want) for lam in sorted(closure([two_row(n, w), hook(n, w)]), reverse=True)]
