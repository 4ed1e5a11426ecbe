"""Labelled complete p-ary trees and the orbit encoding of Irr(P_{p^k}).

A tree in F_k has height k-1 and vertex labels in 0..p.  The iterated cyclic
group acts by rotating the children of each internal vertex; an orbit is
represented by its canonical tree, obtained by canonicalizing every subtree and
then choosing the lexicographically least rotation of the child list.

Admissible orbits correspond to irreducible characters of the Sylow
p-subgroup of S_{p^k}: a vertex labelled e < p has p identical subtrees (the
character X(phi; phi_e)), and a vertex labelled p has subtrees that are not all
identical (an induced character from the base group).
"""

from __future__ import annotations

import json
import random
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, NamedTuple, Sequence

DEFAULT_ORBIT_GUARD = 10**7


class TreeError(ValueError):
    pass


class Tree(NamedTuple):
    label: int
    children: tuple["Tree", ...] = ()

    @property
    def height(self) -> int:
        return 0 if not self.children else 1 + self.children[0].height

    def __str__(self) -> str:
        return format_tree(self)


def leaf(label: int) -> Tree:
    return Tree(label, ())


def check_shape(t: Tree, p: int) -> int:
    """Validate that t is complete p-ary with labels in [0, p]; return its height."""
    if not (0 <= t.label <= p):
        raise TreeError(f"label {t.label} outside [0, {p}]")
    if not t.children:
        return 0
    if len(t.children) != p:
        raise TreeError(f"vertex has {len(t.children)} children, expected {p}")
    heights = {check_shape(c, p) for c in t.children}
    if len(heights) != 1:
        raise TreeError("leaves are not all at the same depth")
    return 1 + heights.pop()


def rotations(children: Sequence[Tree]) -> Iterator[tuple[Tree, ...]]:
    for r in range(len(children)):
        yield tuple(children[r:]) + tuple(children[:r])


@lru_cache(maxsize=1 << 18)
def canonicalize(t: Tree) -> Tree:
    """Least representative of the orbit of t under iterated child rotations."""
    if not t.children:
        return t
    kids = tuple(canonicalize(c) for c in t.children)
    return Tree(t.label, min(rotations(kids)))


def random_rotate(t: Tree, rng: random.Random) -> Tree:
    """Apply an independent random rotation at every internal vertex."""
    if not t.children:
        return t
    kids = [random_rotate(c, rng) for c in t.children]
    r = rng.randrange(len(kids))
    return Tree(t.label, tuple(kids[r:] + kids[:r]))


def is_admissible(t: Tree, p: int) -> bool:
    check_shape(t, p)
    return _admissible(t, p)


def _admissible(t: Tree, p: int) -> bool:
    if not t.children:
        return t.label < p
    if not all(_admissible(c, p) for c in t.children):
        return False
    same_orbit = len({canonicalize(c) for c in t.children}) == 1
    return same_orbit if t.label < p else not same_orbit


# -- enumeration ------------------------------------------------------------------------


def count_irr(p: int, k: int) -> int:
    """Number of admissible orbits in F_k, by a(1) = p and a(j+1) = (a^p - a)/p + p*a."""
    if k < 1:
        raise TreeError("k must be at least 1")
    a = p
    for _ in range(k - 1):
        a = (a**p - a) // p + p * a
    return a


def _necklaces(items: Sequence[Tree], p: int) -> Iterator[tuple[Tree, ...]]:
    """Non-constant p-tuples from items that are least among their rotations."""
    m = len(items)

    def rec(prefix: list[int]):
        if len(prefix) == p:
            if len(set(prefix)) > 1:
                word = tuple(prefix)
                if all(word <= word[r:] + word[:r] for r in range(1, p)):
                    yield tuple(items[i] for i in word)
            return
        # a least rotation starts with its smallest letter
        lo = prefix[0] if prefix else 0
        for i in range(lo, m):
            prefix.append(i)
            yield from rec(prefix)
            prefix.pop()

    yield from rec([])


def enumerate_irr(p: int, k: int, guard: int = DEFAULT_ORBIT_GUARD) -> list[Tree]:
    """All admissible orbits in F_k (canonical trees), sorted."""
    total = count_irr(p, k)
    if total > guard:
        raise TreeError(f"F_{k} at p={p} has {total} admissible orbits, above the guard {guard}")
    level = [leaf(e) for e in range(p)]
    for _ in range(k - 1):
        nxt = []
        for t in level:
            for e in range(p):
                nxt.append(Tree(e, (t,) * p))
        # level is sorted, so necklaces come out already in canonical rotation
        for kids in _necklaces(level, p):
            nxt.append(Tree(p, kids))
        level = sorted(nxt)
    assert len(level) == total
    return level


# -- statistics -------------------------------------------------------------------------


@dataclass(frozen=True)
class TreeStats:
    eta: int
    gamma: tuple[int, ...]
    value: int
    degree_exponent: int
    label_counts: tuple[int, ...] = field(default=())

    def gamma_at(self, i: int) -> int:
        return self.gamma[i] if i < len(self.gamma) else 0

    def to_json(self) -> dict:
        return {
            "eta": self.eta,
            "gamma": list(self.gamma),
            "value": self.value,
            "degree_exponent": self.degree_exponent,
            "label_counts": list(self.label_counts),
        }


def _walk(t: Tree, p: int, gamma: list[int], labels: list[int]) -> int:
    """Return the largest number of people on a descending path from t, recording gammas."""
    labels[t.label] += 1
    below = max((_walk(c, p, gamma, labels) for c in t.children), default=0)
    if 0 < t.label < p:
        while len(gamma) <= below:
            gamma.append(0)
        gamma[below] += 1
        return below + 1
    return below


def _combine(stats: Sequence[TreeStats], p: int) -> TreeStats:
    width = max((len(s.gamma) for s in stats), default=0)
    gamma = tuple(sum(s.gamma_at(i) for s in stats) for i in range(width))
    labels = tuple(sum(s.label_counts[i] if s.label_counts else 0 for s in stats) for i in range(p + 1))
    return TreeStats(
        eta=sum(s.eta for s in stats),
        gamma=gamma,
        value=max((s.value for s in stats), default=0),
        degree_exponent=sum(s.degree_exponent for s in stats),
        label_counts=labels,
    )


def tree_stats(t: Tree, p: int) -> TreeStats:
    gamma: list[int] = []
    labels = [0] * (p + 1)
    _walk(t, p, gamma, labels)
    value = next(i for i in range(len(gamma) + 1) if i == len(gamma) or gamma[i] == 0)
    return TreeStats(
        eta=sum(gamma),
        gamma=tuple(gamma),
        value=value,
        degree_exponent=labels[p],
        label_counts=tuple(labels),
    )


def _people_below(t: Tree, p: int, ok: list[bool]) -> int:
    counts = [_people_below(c, p, ok) for c in t.children]
    below = sum(counts)
    person = 0 < t.label < p
    if person and below:
        ok[0] = False  # ancestor-descendant pair meets at a person
    if sum(1 for c in counts if c) >= 2 and t.label != 0:
        ok[0] = False
    return below + person


def common_ancestors_zero(t: Tree, p: int) -> bool:
    """True when every pair of people in t has closest common ancestor labelled 0."""
    ok = [True]
    _people_below(t, p, ok)
    return ok[0]


def mask_people(t: Tree, p: int) -> Tree:
    """Replace every person label by the sentinel -1, keeping labels 0 and p."""
    label = -1 if 0 < t.label < p else t.label
    return Tree(label, tuple(mask_people(c, p) for c in t.children))


def equivalent_trees(t1: Tree, t2: Tree, p: int) -> bool:
    """Trees agree on the positions of labels 0 and p in some representatives of their orbits."""
    if t1.height != t2.height:
        return False
    return canonicalize(mask_people(t1, p)) == canonicalize(mask_people(t2, p))


# -- characters of P_n ------------------------------------------------------------------


def p_adic_exponents(p: int, n: int) -> tuple[int, ...]:
    """Exponents n_1 <= ... <= n_t with n = sum p^{n_i}, each repeated at most p-1 times."""
    if n < 1:
        raise TreeError("n must be positive")
    out: list[int] = []
    e = 0
    while n:
        n, d = divmod(n, p)
        out.extend([e] * d)
        e += 1
    return tuple(out)


@dataclass(frozen=True)
class CharDescriptor:
    """theta_1 x ... x theta_t along the p-adic expansion of n.

    Components with exponent 0 belong to the trivial group P_1 and carry no tree
    (stored as None).
    """

    p: int
    n: int
    components: tuple[tuple[int, Tree | None], ...]

    def __post_init__(self):
        exps = tuple(k for k, _ in self.components)
        if exps != p_adic_exponents(self.p, self.n):
            raise TreeError(f"component exponents {exps} do not match the {self.p}-adic expansion of {self.n}")
        for k, t in self.components:
            if k == 0:
                if t is not None:
                    raise TreeError("exponent-0 components carry no tree")
                continue
            if t is None or check_shape(t, self.p) != k - 1:
                raise TreeError(f"component of exponent {k} needs a tree of height {k - 1}")
            if not is_admissible(t, self.p):
                raise TreeError(f"tree {format_tree(t)} is not admissible")

    @property
    def trees(self) -> list[tuple[int, Tree]]:
        return [(k, t) for k, t in self.components if t is not None]

    def stats(self) -> TreeStats:
        return _combine([tree_stats(t, self.p) for _, t in self.trees], self.p) if self.trees else TreeStats(
            0, (), 0, 0, tuple([0] * (self.p + 1))
        )

    def component_stats(self) -> list[TreeStats | None]:
        return [tree_stats(t, self.p) if t is not None else None for _, t in self.components]

    def is_trivial(self) -> bool:
        return self.stats().eta == 0

    def __str__(self) -> str:
        return format_descriptor(self)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "n": self.n,
            "components": [
                {"exponent": k, "tree": tree_to_json(t) if t is not None else None} for k, t in self.components
            ],
        }


def p_adic_descriptor(p: int, n: int, orbits: Sequence[Tree]) -> CharDescriptor:
    """Attach trees to the positive exponents of n in order; exponent-0 slots are filled automatically."""
    exps = p_adic_exponents(p, n)
    positive = [k for k in exps if k > 0]
    orbits = [canonicalize(t) for t in orbits]
    if len(orbits) != len(positive):
        raise TreeError(f"n={n} needs {len(positive)} trees for exponents {positive}, got {len(orbits)}")
    given = sorted(orbits, key=lambda t: t.height)
    comps: list[tuple[int, Tree | None]] = [(0, None)] * (len(exps) - len(positive))
    for k, t in zip(positive, given):
        if t.height != k - 1:
            raise TreeError(f"tree heights {[t.height for t in given]} do not match exponents {positive}")
        comps.append((k, t))
    return CharDescriptor(p, n, tuple(comps))


def stats(theta: CharDescriptor | Tree, p: int | None = None) -> TreeStats:
    if isinstance(theta, CharDescriptor):
        return theta.stats()
    if p is None:
        raise TypeError("p is required for a bare tree")
    return tree_stats(theta, p)


def degree(theta: CharDescriptor) -> int:
    return theta.p ** theta.stats().degree_exponent


def equivalent_0p(theta: CharDescriptor, zeta: CharDescriptor) -> bool:
    if theta.p != zeta.p or theta.n != zeta.n:
        return False
    for (k1, t1), (k2, t2) in zip(theta.components, zeta.components):
        if k1 != k2:
            return False
        if t1 is None or t2 is None:
            if t1 is not t2:
                return False
            continue
        if not equivalent_trees(t1, t2, theta.p):
            return False
    return True


def enumerate_descriptors(p: int, n: int, guard: int = DEFAULT_ORBIT_GUARD) -> Iterator[CharDescriptor]:
    """Every irreducible character of P_n as a descriptor."""
    exps = p_adic_exponents(p, n)
    pools = [enumerate_irr(p, k, guard) if k > 0 else [None] for k in exps]

    def rec(i: int, acc: list):
        if i == len(exps):
            yield CharDescriptor(p, n, tuple(acc))
            return
        for t in pools[i]:
            acc.append((exps[i], t))
            yield from rec(i + 1, acc)
            acc.pop()

    yield from rec(0, [])


# -- notation ---------------------------------------------------------------------------


def format_tree(t: Tree) -> str:
    if not t.children:
        return str(t.label)
    return "(" + "|".join(format_tree(c) for c in t.children) + f";{t.label})"


def format_descriptor(theta: CharDescriptor) -> str:
    return ", ".join(format_tree(t) for _, t in theta.trees) if theta.trees else "1"


def tree_to_json(t: Tree) -> dict:
    return {"label": t.label, "children": [tree_to_json(c) for c in t.children]}


def tree_from_json(obj: dict) -> Tree:
    return Tree(int(obj["label"]), tuple(tree_from_json(c) for c in obj.get("children", [])))


def linear_tree(p: int, labels: Sequence[int]) -> Tree:
    """X(a;b;c...): leaves labelled a, then each level above labelled by the next entry."""
    if not labels:
        raise TreeError("X(...) needs at least one label")
    t = leaf(labels[0])
    for e in labels[1:]:
        t = Tree(e, (t,) * p)
    return t


def trivial_tree(p: int, k: int) -> Tree:
    return linear_tree(p, [0] * k)


_X_RE = re.compile(r"^X\(([\d\s;]+)\)$")
_ONE_RE = re.compile(r"^1_(\d+)$")


class _TreeParser:
    def __init__(self, text: str, p: int):
        self.s = re.sub(r"\s+", "", text)
        self.i = 0
        self.p = p

    def error(self, msg: str) -> TreeError:
        return TreeError(f"{msg} at position {self.i} in {self.s!r}")

    def parse(self) -> Tree:
        t = self.tree()
        if self.i != len(self.s):
            raise self.error("trailing input")
        return t

    def tree(self) -> Tree:
        s = self.s
        if s.startswith("X(", self.i):
            end = s.find(")", self.i)
            if end < 0:
                raise self.error("unclosed X(...)")
            m = _X_RE.match(s[self.i : end + 1])
            if not m:
                raise self.error("bad X(...) shorthand")
            self.i = end + 1
            return linear_tree(self.p, [int(x) for x in m.group(1).split(";")])
        if s.startswith("1_", self.i):
            j = self.i + 2
            while j < len(s) and s[j].isdigit():
                j += 1
            size = int(s[self.i + 2 : j])
            k = 0
            while self.p**k < size:
                k += 1
            if self.p**k != size or k == 0:
                raise self.error(f"1_{size} needs a positive power of {self.p}")
            self.i = j
            return trivial_tree(self.p, k)
        if s.startswith("(", self.i):
            self.i += 1
            kids = [self.tree()]
            while s.startswith("|", self.i):
                self.i += 1
                kids.append(self.tree())
            if not s.startswith(";", self.i):
                raise self.error("expected ';'")
            self.i += 1
            label = self.number()
            if not s.startswith(")", self.i):
                raise self.error("expected ')'")
            self.i += 1
            return Tree(label, tuple(kids))
        label = self.number()
        if s.startswith("^", self.i):
            raise self.error("repetition is only allowed inside a child list")
        return leaf(label)

    def number(self) -> int:
        j = self.i
        while j < len(self.s) and self.s[j].isdigit():
            j += 1
        if j == self.i:
            raise self.error("expected a label")
        v = int(self.s[self.i : j])
        self.i = j
        return v


def _expand_powers(text: str) -> str:
    """Expand child repetitions like 2^5 or (..)^5 inside a child list."""
    out = text
    pattern = re.compile(r"(\d+|\([^()]*\)|X\([^()]*\)|1_\d+)\^(\d+)")
    while True:
        m = pattern.search(out)
        if not m:
            return out
        item, times = m.group(1), int(m.group(2))
        out = out[: m.start()] + "|".join([item] * times) + out[m.end() :]


def parse_tree(text: str, p: int) -> Tree:
    """Parse `(T1|...|Tp;e)`, bare leaf labels, `X(a;b;c)` or `1_{p^k}`; `T^r` repeats a child r times."""
    t = _TreeParser(_expand_powers(text), p).parse()
    check_shape(t, p)
    return t


def _split_top(text: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [x.strip() for x in parts if x.strip()]


def parse_descriptor(text: str, p: int, n: int | None = None) -> CharDescriptor:
    """Parse comma-separated component trees; n defaults to the sum of component sizes."""
    trees = [parse_tree(part, p) for part in _split_top(text) if part not in (".", "1_1")]
    if n is None:
        n = sum(p ** (t.height + 1) for t in trees)
    return p_adic_descriptor(p, n, trees)


def dumps_tree(t: Tree) -> str:
    return json.dumps(tree_to_json(t), separators=(",", ":"))
