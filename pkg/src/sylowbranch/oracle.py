"""Brute-force Sylow branching coefficients for p = 5.

Multiplicities [chi^lam restricted to P_n, theta] are computed as exact class
function inner products: Murnaghan-Nakayama values of chi^lam on cycle types,
wreath-product character values in Z[zeta_5], and a final exact division by
|P_n|.  Components of P_n are C_5 (exponent 1) and C_5 wr C_5 (exponent 2), so
n may only use the 5-adic digits 1, 5 and 25.

Class data for C_5 wr C_5 is written down analytically; brute_force_wreath()
rebuilds the group as 15625 explicit permutations of 25 points so that the
tests can check the analytic tables against it.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial
from typing import Iterable, Sequence

import numpy as np

from .cyclotomic import CyclotomicInt
from .partitions import Partition, conjugate, enumerate_partitions
from .trees import CharDescriptor, Tree, canonicalize, enumerate_irr, p_adic_exponents

P = 5
MAX_EXPONENT = 2
FULL_OMEGA_MAX_N = 30


class ScaleError(ValueError):
    """The request is outside the range the oracle can enumerate."""


class OracleConsistencyError(AssertionError):
    """An inner product came out non-integral, irrational or negative."""


# -- Murnaghan-Nakayama ---------------------------------------------------------------------


def _beta(lam: Sequence[int]) -> tuple[int, ...]:
    m = len(lam)
    return tuple(lam[i] + (m - 1 - i) for i in range(m))


def _from_beta(beta: Sequence[int]) -> Partition:
    b = sorted(beta, reverse=True)
    m = len(b)
    return Partition(b[i] - (m - 1 - i) for i in range(m))


@lru_cache(maxsize=1 << 21)
def _mn(lam: Partition, cycles: tuple[int, ...]) -> int:
    if not cycles:
        return 1 if not lam else 0
    r, rest = cycles[0], cycles[1:]
    beta = _beta(lam)
    present = set(beta)
    total = 0
    for b in beta:
        c = b - r
        if c < 0 or c in present:
            continue
        # sign of the removed rim hook: parity of beta entries jumped over
        height = sum(1 for x in beta if c < x < b)
        shape = _from_beta([c if x == b else x for x in beta])
        term = _mn(shape, rest)
        total += -term if height % 2 else term
    return total


def mn_char(lam: Sequence[int], cycle_type: Sequence[int]) -> int:
    """chi^lam at a permutation of the given cycle type."""
    lam = Partition(lam)
    ct = tuple(sorted((int(c) for c in cycle_type if c), reverse=True))
    if sum(ct) != lam.n:
        raise ValueError(f"cycle type {ct} does not match |lam| = {lam.n}")
    return _mn(lam, ct)


def hook_length_dim(lam: Sequence[int]) -> int:
    """Degree of chi^lam by the hook length formula."""
    lam = Partition(lam)
    conj = conjugate(lam)
    prod = 1
    for i, row in enumerate(lam):
        for j in range(row):
            prod *= (row - j - 1) + (conj[j] - i - 1) + 1
    return factorial(lam.n) // prod


# -- conjugacy classes ----------------------------------------------------------------------


def _min_rotation(x: tuple[int, ...]) -> tuple[int, ...]:
    return min(x[r:] + x[:r] for r in range(len(x)))


@dataclass(frozen=True)
class ComponentClass:
    label: tuple
    size: int
    cycle_type: Partition


@lru_cache(maxsize=None)
def component_classes(e: int) -> tuple[ComponentClass, ...]:
    """Classes of P_{5^e} for e in {0, 1, 2}."""
    if e == 0:
        return (ComponentClass(("id",), 1, Partition((1,))),)
    if e == 1:
        return tuple(
            ComponentClass(("c", j), 1, Partition((1,) * P if j == 0 else (P,))) for j in range(P)
        )
    if e == 2:
        out = []
        for x in itertools.product(range(P), repeat=P):
            if x != _min_rotation(x):
                continue
            nonzero = sum(1 for v in x if v)
            size = 1 if len(set(x)) == 1 else P
            out.append(ComponentClass(("base", x), size, Partition((P,) * nonzero + (1,) * (P * P - P * nonzero))))
        for j in range(1, P):
            for s in range(P):
                ct = Partition((P * P,)) if s else Partition((P,) * P)
                out.append(ComponentClass(("skew", j, s), P ** (P - 1), ct))
        return tuple(out)
    raise ScaleError(f"no class data for P_(5^{e}); the oracle stops at exponent {MAX_EXPONENT}")


def _order_of_component(e: int) -> int:
    # |P_{p^e}| = p^((p^e - 1)/(p - 1))
    return P ** ((P**e - 1) // (P - 1))


def sylow_order(n: int) -> int:
    out = 1
    for e in p_adic_exponents(P, n):
        out *= _order_of_component(e)
    return out


@dataclass(frozen=True)
class ConjClass:
    labels: tuple
    size: int
    cycle_type: Partition


def _check_scale(n: int) -> tuple[int, ...]:
    exps = p_adic_exponents(P, n)
    if any(e > MAX_EXPONENT for e in exps):
        raise ScaleError(f"n={n} has a 5-adic digit at exponent > {MAX_EXPONENT}; the oracle cannot handle it")
    return exps


def classes(p: int, n: int) -> list[ConjClass]:
    """All conjugacy classes of P_n as products of component classes."""
    if p != P:
        raise ScaleError("the oracle supports p = 5 only")
    exps = _check_scale(n)
    out = []
    for combo in itertools.product(*(component_classes(e) for e in exps)):
        size = 1
        parts: list[int] = []
        for c in combo:
            size *= c.size
            parts.extend(c.cycle_type)
        out.append(ConjClass(tuple(c.label for c in combo), size, Partition(sorted(parts, reverse=True))))
    return out


# -- character values -----------------------------------------------------------------------


def _counts_root(k: int) -> tuple[int, ...]:
    v = [0] * P
    v[k % P] = 1
    return tuple(v)


def component_value(e: int, tree: Tree | None, label: tuple) -> tuple[int, ...]:
    """Character value as a length-5 vector of zeta^j multiplicities."""
    if e == 0:
        return _counts_root(0)
    if e == 1:
        return _counts_root(tree.label * label[1])
    if e != 2:
        raise ScaleError("exponent above 2")
    top = tree.label
    kind = label[0]
    if top < P:
        a = tree.children[0].label
        if kind == "base":
            return _counts_root(a * sum(label[1]))
        _, j, s = label
        return _counts_root(top * j + a * s)
    if kind == "skew":
        return (0,) * P
    eps = [c.label for c in tree.children]
    x = label[1]
    v = [0] * P
    for r in range(P):
        v[sum(eps[i] * x[(i + r) % P] for i in range(P)) % P] += 1
    return tuple(v)


def theta_value(theta: CharDescriptor, g: ConjClass) -> CyclotomicInt:
    if theta.p != P:
        raise ScaleError("the oracle supports p = 5 only")
    _check_scale(theta.n)
    out = CyclotomicInt.from_int(P, 1)
    for (e, tree), label in zip(theta.components, g.labels):
        out = out * CyclotomicInt.from_counts(P, component_value(e, tree, label))
    return out


# -- cycle-type sums --------------------------------------------------------------------------


def _conj_counts(v: Sequence[int]) -> list[int]:
    return [v[(-j) % P] for j in range(P)]


@lru_cache(maxsize=None)
def _component_table(e: int):
    """Per character of P_{5^e}: {cycle type: sum over classes of size * conj(value)}."""
    trees = enumerate_irr(P, e) if e else [None]
    table = {}
    for t in trees:
        sums: dict[Partition, list[int]] = {}
        for c in component_classes(e):
            v = _conj_counts(component_value(e, t, c.label))
            acc = sums.setdefault(c.cycle_type, [0] * P)
            for j in range(P):
                acc[j] += c.size * v[j]
        table[t] = {ct: tuple(v) for ct, v in sums.items()}
    return table


def _convolve(u: Sequence[int], v: Sequence[int]) -> list[int]:
    out = [0] * P
    for i, a in enumerate(u):
        if a:
            for j, b in enumerate(v):
                if b:
                    out[(i + j) % P] += a * b
    return out


def cycle_type_sums(theta: CharDescriptor) -> dict[Partition, tuple[int, ...]]:
    """sum over g in P_n with the given cycle type of conj(theta(g)), as zeta^j multiplicities."""
    _check_scale(theta.n)
    acc: dict[tuple[int, ...], list[int]] = {(): _counts_root(0)}
    for e, tree in theta.components:
        comp = _component_table(e)[canonicalize(tree) if tree is not None else None]
        nxt: dict[tuple[int, ...], list[int]] = {}
        for ct1, u in acc.items():
            for ct2, v in comp.items():
                key = tuple(sorted(ct1 + tuple(ct2), reverse=True))
                w = _convolve(u, v)
                cur = nxt.setdefault(key, [0] * P)
                for j in range(P):
                    cur[j] += w[j]
        acc = nxt
    return {Partition(k): tuple(v) for k, v in acc.items()}


def _finish(total: Sequence[int], order: int, where: str) -> int:
    coords = [total[j] - total[P - 1] for j in range(P - 1)]
    if any(coords[1:]):
        raise OracleConsistencyError(f"{where}: inner product {coords} is not rational")
    q, r = divmod(coords[0], order)
    if r:
        raise OracleConsistencyError(f"{where}: {coords[0]} is not divisible by |P| = {order}")
    if q < 0:
        raise OracleConsistencyError(f"{where}: negative multiplicity {q}")
    return q


def restriction_mult(lam: Sequence[int], theta: CharDescriptor) -> int:
    """[chi^lam restricted to P_n, theta], grouping the class sum by cycle type."""
    lam = Partition(lam)
    if lam.n != theta.n:
        raise ValueError(f"|lam| = {lam.n} but theta lives on n = {theta.n}")
    total = [0] * P
    for ct, v in cycle_type_sums(theta).items():
        chi = mn_char(lam, ct)
        if chi:
            for j in range(P):
                total[j] += chi * v[j]
    return _finish(total, sylow_order(theta.n), f"lam={lam}, theta={theta}")


def restriction_mult_direct(lam: Sequence[int], theta: CharDescriptor) -> int:
    """The same multiplicity summed class by class in Z[zeta_5]; slow, used as a cross-check."""
    lam = Partition(lam)
    acc = CyclotomicInt.from_int(P, 0)
    for g in classes(P, theta.n):
        chi = mn_char(lam, g.cycle_type)
        if chi:
            acc = acc + theta_value(theta, g).conj() * (chi * g.size)
    if not acc.is_rational():
        raise OracleConsistencyError(f"lam={lam}, theta={theta}: {acc} is not rational")
    q, r = divmod(acc.to_int(), sylow_order(theta.n))
    if r or q < 0:
        raise OracleConsistencyError(f"lam={lam}, theta={theta}: bad inner product {acc}")
    return q


class MultiplicityEngine:
    """Vectorised multiplicities for every theta against a fixed list of partitions of n."""

    def __init__(self, n: int, lambdas: Iterable[Sequence[int]] | None = None):
        self.exps = _check_scale(n)
        self.n = n
        if lambdas is None:
            if n > FULL_OMEGA_MAX_N:
                raise ScaleError(f"full enumeration is capped at n = {FULL_OMEGA_MAX_N}")
            lambdas = enumerate_partitions(n)
        self.lambdas = [Partition(x) for x in lambdas]
        self.order = sylow_order(n)
        self.identity = Partition((1,) * n)
        cts: set[Partition] = set()
        for combo in itertools.product(*(component_classes(e) for e in self.exps)):
            cts.add(Partition(sorted(itertools.chain.from_iterable(c.cycle_type for c in combo), reverse=True)))
        cts.discard(self.identity)
        self.cycle_types = sorted(cts, reverse=True)
        chi = [[mn_char(lam, ct) for ct in self.cycle_types] for lam in self.lambdas]
        self.chi_max = max((abs(v) for row in chi for v in row), default=0)
        self.chi = np.array(chi, dtype=np.int64) if self.chi_max < 2**40 else np.array(chi, dtype=object)
        self.dims = np.array([hook_length_dim(lam) for lam in self.lambdas], dtype=object)
        self.index = {lam: i for i, lam in enumerate(self.lambdas)}
        self.evaluations = len(self.lambdas) * (len(self.cycle_types) + 1)

    def mults(self, theta: CharDescriptor) -> np.ndarray:
        if theta.n != self.n:
            raise ValueError("theta lives on a different n")
        sums = cycle_type_sums(theta)
        ident = sums.get(self.identity, (0,) * P)
        s = np.array([sums.get(ct, (0,) * P) for ct in self.cycle_types], dtype=object).reshape(-1, P)
        bound = self.chi_max * int(sum(abs(int(v)) for v in s.flat)) if s.size else 0
        if self.chi.dtype == np.int64 and bound < 2**62:
            rest = self.chi @ s.astype(np.int64)
            rest = rest.astype(object)
        else:
            rest = self.chi.astype(object) @ s
        coords = rest[:, : P - 1] - rest[:, P - 1 : P]
        if np.any(coords[:, 1:] != 0):
            raise OracleConsistencyError(f"theta={theta}: irrational inner product")
        base = ident[0] - ident[P - 1]
        if any(ident[j] - ident[P - 1] for j in range(1, P - 1)):
            raise OracleConsistencyError(f"theta={theta}: irrational degree")
        total = self.dims * base + coords[:, 0]
        q = total // self.order
        if np.any(total - q * self.order != 0):
            raise OracleConsistencyError(f"theta={theta}: inner product not divisible by |P| = {self.order}")
        if np.any(q < 0):
            raise OracleConsistencyError(f"theta={theta}: negative multiplicity")
        return q

    def mult_dict(self, theta: CharDescriptor) -> dict[Partition, int]:
        return {lam: int(m) for lam, m in zip(self.lambdas, self.mults(theta))}


@lru_cache(maxsize=8)
def engine(n: int) -> MultiplicityEngine:
    return MultiplicityEngine(n)


def omega_oracle(theta: CharDescriptor) -> frozenset[Partition]:
    """All lam with nonzero multiplicity, by full enumeration of partitions of n."""
    if theta.n > FULL_OMEGA_MAX_N:
        raise ScaleError(f"omega_oracle enumerates partitions only up to n = {FULL_OMEGA_MAX_N}")
    eng = engine(theta.n)
    m = eng.mults(theta)
    return frozenset(lam for lam, v in zip(eng.lambdas, m) if v)


def degree_from_values(theta: CharDescriptor) -> int:
    """theta(1) read off the identity class."""
    ident = next(g for g in classes(P, theta.n) if all(
        lab in (("id",), ("c", 0)) or (lab[0] == "base" and not any(lab[1])) for lab in g.labels
    ))
    return theta_value(theta, ident).to_int()


# -- brute-force model of C_5 wr C_5 ---------------------------------------------------------


def _perm_base(x: Sequence[int]) -> tuple[int, ...]:
    return tuple(P * i + (a + x[i]) % P for i in range(P) for a in range(P))


def _perm_top(j: int) -> tuple[int, ...]:
    return tuple(P * ((i + j) % P) + a for i in range(P) for a in range(P))


def _compose(f: Sequence[int], g: Sequence[int]) -> tuple[int, ...]:
    """f after g."""
    return tuple(f[g[i]] for i in range(len(g)))


def _inverse(f: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(f)
    for i, v in enumerate(f):
        inv[v] = i
    return tuple(inv)


def perm_cycle_type(f: Sequence[int]) -> Partition:
    seen = [False] * len(f)
    lengths = []
    for i in range(len(f)):
        if not seen[i]:
            length = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = f[j]
                length += 1
            lengths.append(length)
    return Partition(sorted(lengths, reverse=True))


@dataclass
class WreathModel:
    """C_5 wr C_5 as explicit permutations of 25 points; element (x; j) is base(x) after top(j)."""

    elements: dict[tuple[int, ...], tuple[tuple[int, ...], int]] = field(default_factory=dict)

    def decode(self, perm: Sequence[int]) -> tuple[tuple[int, ...], int]:
        return self.elements[tuple(perm)]

    def conjugacy_classes(self) -> list[frozenset[tuple[int, ...]]]:
        gens = [_perm_base((1, 0, 0, 0, 0)), _perm_top(1)]
        gens_inv = [_inverse(g) for g in gens]
        seen: set[tuple[int, ...]] = set()
        out = []
        for g in self.elements:
            if g in seen:
                continue
            orbit = {g}
            frontier = [g]
            while frontier:
                h = frontier.pop()
                for a, ai in zip(gens, gens_inv):
                    c = _compose(_compose(a, h), ai)
                    if c not in orbit:
                        orbit.add(c)
                        frontier.append(c)
            seen |= orbit
            out.append(frozenset(orbit))
        return out


def brute_force_wreath() -> WreathModel:
    model = WreathModel()
    for x in itertools.product(range(P), repeat=P):
        base = _perm_base(x)
        for j in range(P):
            model.elements[_compose(base, _perm_top(j))] = (tuple(x), j)
    return model


def analytic_label(x: Sequence[int], j: int) -> tuple:
    """Class label of the element (x; j) under the analytic description."""
    if j == 0:
        return ("base", _min_rotation(tuple(x)))
    return ("skew", j, sum(x) % P)


# -- verification against the formula path ------------------------------------------------------


@dataclass
class VerificationReport:
    theta: str
    ok: bool
    shape: str
    mismatches: list[str] = field(default_factory=list)
    seconds: float = 0.0

    def to_json(self) -> dict:
        return {
            "theta": self.theta,
            "status": "ok" if self.ok else "mismatch",
            "shape": self.shape,
            "mismatches": self.mismatches,
            "seconds": round(self.seconds, 3),
        }


def verify(theta: CharDescriptor, mults: dict[Partition, int] | None = None) -> VerificationReport:
    """Compare the brute-force Omega of theta with the closed-form description."""
    from . import omega as om
    from .partitions import closure, is_thin, normalized_width

    start = time.perf_counter()
    if mults is None:
        mults = engine(theta.n).mult_dict(theta)
    support = frozenset(lam for lam, v in mults.items() if v)
    desc = om.omega_shape(theta)
    bad: list[str] = []
    n = theta.n
    st = theta.stats()
    m, M = om.little_m(theta), om.capital_M(theta)

    if isinstance(desc, (om.ExactSet, om.ExactLayered)):
        expected = frozenset(lam for lam in enumerate_partitions(n) if om.describes(desc, lam))
        for lam in sorted(expected - support, reverse=True)[:10]:
            bad.append(f"missing {lam}")
        for lam in sorted(support - expected, reverse=True)[:10]:
            bad.append(f"unexpected {lam}")
    for lam in support:
        w = normalized_width(lam)
        if w > M:
            bad.append(f"{lam} wider than M={M}")
        elif w > m and is_thin(lam) and not isinstance(desc, (om.ExactSet, om.ExactLayered)):
            bad.append(f"thin {lam} outside B({m})")
    for lam in enumerate_partitions(n):
        if normalized_width(lam) <= m and lam not in support:
            bad.append(f"{lam} inside B({m}) but absent")
            break
    if max((normalized_width(lam) for lam in support), default=0) != M:
        bad.append("maximum width differs from M")

    # boundary multiplicity predictions
    for lam, want in om.boundary_claims(theta):
        got = mults[lam]
        if want == "=1" and got != 1:
            bad.append(f"multiplicity {got} at {lam}, predicted 1")
        if want == ">=2" and got < 2:
            bad.append(f"multiplicity {got} at {lam}, predicted at least 2")
    return VerificationReport(str(theta), not bad, om.describe_text(desc), bad, time.perf_counter() - start)
