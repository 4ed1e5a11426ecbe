"""Exact arithmetic in Z[zeta_p] on the power basis 1, zeta, ..., zeta^(p-2)."""

from __future__ import annotations

import cmath
from typing import Sequence


class CyclotomicInt:
    """An element sum c_i zeta^i of Z[zeta_p], reduced by 1 + zeta + ... + zeta^(p-1) = 0."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Sequence[int]):
        if len(coeffs) == p:
            # fold zeta^(p-1) = -(1 + ... + zeta^(p-2))
            top = coeffs[p - 1]
            coeffs = [c - top for c in coeffs[: p - 1]]
        elif len(coeffs) != p - 1:
            raise ValueError(f"expected {p - 1} or {p} coefficients, got {len(coeffs)}")
        self.p = p
        self.coeffs = tuple(int(c) for c in coeffs)

    @classmethod
    def from_int(cls, p: int, value: int) -> "CyclotomicInt":
        return cls(p, [value] + [0] * (p - 2))

    @classmethod
    def root(cls, p: int, k: int) -> "CyclotomicInt":
        """zeta^k."""
        v = [0] * p
        v[k % p] = 1
        return cls(p, v)

    @classmethod
    def from_counts(cls, p: int, counts: Sequence[int]) -> "CyclotomicInt":
        """sum counts[j] zeta^j for a length-p vector."""
        return cls(p, list(counts))

    def _other(self, other) -> "CyclotomicInt":
        if isinstance(other, int):
            return CyclotomicInt.from_int(self.p, other)
        if not isinstance(other, CyclotomicInt) or other.p != self.p:
            raise TypeError("operands must lie in the same cyclotomic ring")
        return other

    def __add__(self, other) -> "CyclotomicInt":
        o = self._other(other)
        return CyclotomicInt(self.p, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> "CyclotomicInt":
        return CyclotomicInt(self.p, [-a for a in self.coeffs])

    def __sub__(self, other) -> "CyclotomicInt":
        return self + (-self._other(other))

    def __rsub__(self, other) -> "CyclotomicInt":
        return self._other(other) - self

    def __mul__(self, other) -> "CyclotomicInt":
        o = self._other(other)
        p = self.p
        full = [0] * p
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        full[(i + j) % p] += a * b
        return CyclotomicInt(p, full)

    __rmul__ = __mul__

    def conj(self) -> "CyclotomicInt":
        """Complex conjugate: zeta^i -> zeta^(-i)."""
        p = self.p
        full = [0] * p
        for i, a in enumerate(self.coeffs):
            full[(-i) % p] += a
        return CyclotomicInt(p, full)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def to_int(self) -> int:
        if not self.is_rational():
            raise ValueError(f"{self} is not a rational integer")
        return self.coeffs[0]

    def to_complex(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.p)
        return sum(c * z**i for i, c in enumerate(self.coeffs))

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = CyclotomicInt.from_int(self.p, other)
        if not isinstance(other, CyclotomicInt):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.p, self.coeffs))

    def __repr__(self) -> str:
        return f"CyclotomicInt({self.p}, {list(self.coeffs)})"

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(str(c) if i == 0 else f"{c}*z^{i}")
        return " + ".join(terms) if terms else "0"


def reduce_counts(p: int, counts: Sequence[int]) -> tuple[int, ...]:
    """Power-basis coordinates of a length-p vector of zeta^j multiplicities."""
    top = counts[p - 1]
    return tuple(int(c) - int(top) for c in counts[: p - 1])
