"""Classical root systems and their Weyl groups as signed permutations.

Roots are integer tuples in epsilon-coordinates, weights are tuples of
Fractions, and a Weyl group element w is stored by its one-line notation
(w(1), ..., w(n)) where w(e_i) = e_{w(i)} and e_{-i} = -e_i.
"""
from __future__ import annotations

import itertools
from array import array
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import factorial
from typing import Iterable, Iterator, Sequence

from . import kernels
from .errors import CapExceeded, NotDominant, NotParabolic, UnsupportedType
from .linalg import inverse

Root = tuple[int, ...]
Weight = tuple[Fraction, ...]
RootSet = frozenset

DEFAULT_CAP = 10 ** 7
FAMILIES = ("A", "B", "C", "D")


def as_weight(xs: Iterable) -> Weight:
    """Coerce ints, Fractions or "p/q" strings into an exact weight."""
    return tuple(Fraction(x) for x in xs)


def pair(x: Sequence, y: Sequence):
    """Euclidean pairing in epsilon-coordinates."""
    if len(x) != len(y):
        raise ValueError(f"dimension mismatch: {len(x)} vs {len(y)}")
    return sum(a * b for a, b in zip(x, y))


def unit(n: int, i: int, c: int = 1) -> Root:
    v = [0] * n
    v[i] = c
    return tuple(v)


def neg(r: Sequence) -> tuple:
    return tuple(-x for x in r)


def is_positive_vector(r: Sequence) -> bool:
    """A root is positive when its last nonzero coordinate is positive.

    This matches every family built here, since each simple root has a
    positive last coordinate and the others only add earlier coordinates.
    """
    for x in reversed(r):
        if x:
            return x > 0
    raise ValueError("zero vector")


def _root_key(r: Root):
    return tuple(reversed(r))


class RootSystem:
    """Roots of type A_r (in R^(r+1)) or B_n, C_n, D_n (in R^n)."""

    def __init__(self, family: str, rank: int):
        family = str(family).upper()
        low = 0 if family == "A" else 1
        if family not in FAMILIES or not isinstance(rank, int) or rank < low:
            raise UnsupportedType(f"unsupported type {family}{rank}")
        if family == "D" and rank < 2:
            raise UnsupportedType("type D needs rank at least 2")
        self.family = family
        self.rank = rank
        n = rank + 1 if family == "A" else rank
        self.ambient_dim = n
        e = lambda i, c=1: unit(n, i, c)  # noqa: E731
        add = lambda u, v: tuple(a + b for a, b in zip(u, v))  # noqa: E731

        if family == "A":
            simple = [add(e(i + 1), e(i, -1)) for i in range(rank)]
            pos = [add(e(j), e(i, -1)) for i in range(n) for j in range(i + 1, n)]
        else:
            first = {"B": lambda: e(0), "C": lambda: e(0, 2), "D": lambda: add(e(0), e(1))}[family]()
            simple = [first] + [add(e(i), e(i - 1, -1)) for i in range(1, n)]
            pos = []
            for j in range(n):
                for i in range(j):
                    pos.append(add(e(j), e(i, -1)))
                    pos.append(add(e(j), e(i)))
                if family == "B":
                    pos.append(e(j))
                elif family == "C":
                    pos.append(e(j, 2))
        self.simple_roots: tuple[Root, ...] = tuple(simple)
        self._gram_inv = inverse([[pair(a, b) for b in simple] for a in simple]) if simple else []
        pos.sort(key=lambda r: (self.height(r), _root_key(r)))
        self.positive_roots: tuple[Root, ...] = tuple(pos)
        self.roots: tuple[Root, ...] = self.positive_roots + tuple(neg(r) for r in pos)
        self._bit = {r: 1 << k for k, r in enumerate(pos)}
        self.full_mask = (1 << len(pos)) - 1

    # identity -----------------------------------------------------------

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    def __repr__(self):
        return f"RootSystem({self.family!r}, {self.rank})"

    def __eq__(self, other):
        return isinstance(other, RootSystem) and (self.family, self.rank) == (other.family, other.rank)

    def __hash__(self):
        return hash((self.family, self.rank))

    def __reduce__(self):
        return (build_root_system, (self.family, self.rank))

    # roots --------------------------------------------------------------

    def simple_coordinates(self, r: Sequence) -> tuple:
        """Coefficients of r in the basis of simple roots."""
        rhs = [pair(r, a) for a in self.simple_roots]
        coeffs = [sum(g * b for g, b in zip(row, rhs)) for row in self._gram_inv]
        return tuple(int(c) if c.denominator == 1 else c for c in coeffs)

    def from_simple_coordinates(self, coeffs: Sequence[int]) -> Root:
        if len(coeffs) != self.rank:
            raise ValueError(f"expected {self.rank} simple-root coefficients")
        v = [0] * self.ambient_dim
        for c, a in zip(coeffs, self.simple_roots):
            for k, x in enumerate(a):
                v[k] += c * x
        return tuple(v)

    def height(self, r: Sequence) -> int:
        return sum(self.simple_coordinates(r))

    def is_root(self, r: Sequence) -> bool:
        r = tuple(r)
        return r in self._bit or neg(r) in self._bit

    def is_positive(self, r: Sequence) -> bool:
        return tuple(r) in self._bit

    def is_long(self, r: Sequence) -> bool:
        return pair(r, r) == max(pair(a, a) for a in self.simple_roots)

    def mask(self, roots: Iterable[Sequence]) -> int:
        """Bitmask of a set of positive roots (negative members are ignored)."""
        m = 0
        for r in roots:
            m |= self._bit.get(tuple(r), 0)
        return m

    def roots_of(self, mask: int) -> frozenset:
        return frozenset(r for r in self.positive_roots if mask & self._bit[r])

    def coroot(self, r: Sequence) -> Weight:
        L = pair(r, r)
        return tuple(Fraction(2 * x, L) for x in r)

    def reflect(self, r: Sequence, x: Sequence) -> tuple:
        c = Fraction(2 * pair(x, r), pair(r, r))
        return tuple(a - c * b for a, b in zip(x, r))

    # weights ------------------------------------------------------------

    def check_weight(self, x: Sequence) -> Weight:
        x = as_weight(x)
        if len(x) != self.ambient_dim:
            raise ValueError(f"{self.name} weights have {self.ambient_dim} coordinates, got {len(x)}")
        return x

    def is_dominant(self, x: Sequence) -> bool:
        return all(pair(x, a) >= 0 for a in self.simple_roots)

    def is_integral(self, x: Sequence) -> bool:
        """All pairings with roots are integers."""
        return all(Fraction(pair(x, a)).denominator == 1 for a in self.simple_roots)

    def require_dominant(self, x: Sequence) -> Weight:
        x = self.check_weight(x)
        if not self.is_dominant(x):
            raise NotDominant(f"{fmt_vector(x)} is not dominant for {self.name}")
        return x

    def rho(self) -> Weight:
        """Half the sum of the positive coroots."""
        total = [Fraction(0)] * self.ambient_dim
        for r in self.positive_roots:
            for k, c in enumerate(self.coroot(r)):
                total[k] += c
        return tuple(t / 2 for t in total)

    def weight_from_pairings(self, values: Sequence) -> Weight:
        """The weight with the given pairings against the simple roots.

        Type A is underdetermined along (1, ..., 1); the first coordinate is
        pinned to 0 there.
        """
        if len(values) != self.rank:
            raise ValueError(f"expected {self.rank} pairings")
        vals = [Fraction(v) for v in values]
        if self.family == "A":
            out = [Fraction(0)]
            for v in vals:
                out.append(out[-1] + v)
            return tuple(out)
        # solve against the square matrix of simple roots
        m = inverse([list(a) for a in self.simple_roots])
        return tuple(sum(m[i][j] * vals[j] for j in range(self.rank)) for i in range(self.rank))

    def dominant_representative(self, x: Sequence) -> tuple[Weight, "WeylElement"]:
        """Move x into the closed fundamental chamber; returns (wx, w)."""
        x = self.check_weight(x)
        w = self.identity()
        changed = True
        while changed:
            changed = False
            for i, a in enumerate(self.simple_roots, 1):
                if pair(x, a) < 0:
                    x = self.reflect(a, x)
                    w = self.s(i) * w
                    changed = True
        return x, w

    # group --------------------------------------------------------------

    def order(self) -> int:
        n = self.rank
        if self.family == "A":
            return factorial(n + 1)
        if self.family == "D":
            return 2 ** (n - 1) * factorial(n)
        return 2 ** n * factorial(n)

    def identity(self) -> "WeylElement":
        return WeylElement(self, tuple(range(1, self.ambient_dim + 1)))

    def s(self, i: int) -> "WeylElement":
        """Simple reflection s_i (1-based, matching alpha_i)."""
        return self._simple_reflections[i - 1]

    @cached_property
    def _simple_reflections(self) -> tuple["WeylElement", ...]:
        out = []
        n = self.ambient_dim
        for a in self.simple_roots:
            perm = []
            for k in range(n):
                img = self.reflect(a, unit(n, k))
                (pos,) = [j for j, x in enumerate(img) if x]
                perm.append((pos + 1) * int(img[pos]))
            out.append(WeylElement(self, tuple(perm)))
        return tuple(out)

    def longest_element(self) -> "WeylElement":
        return _greedy_longest(self, range(1, self.rank + 1))

    def parabolic_longest(self, zset: Iterable[Sequence]) -> "WeylElement":
        """Longest element of the parabolic subgroup whose positive roots are ``zset``."""
        zset = frozenset(tuple(r) for r in zset)
        if not all(self.is_positive(r) for r in zset):
            raise NotParabolic("set contains non-positive roots")
        K = [i for i, a in enumerate(self.simple_roots, 1) if a in zset]
        support = set(K)
        generated = frozenset(
            r for r in self.positive_roots
            if all(c == 0 or i in support for i, c in enumerate(self.simple_coordinates(r), 1))
        )
        if generated != zset:
            raise NotParabolic("set is not generated by the simple roots it contains")
        v = _greedy_longest(self, K)
        if v.inversion_set() != zset:
            raise AssertionError("parabolic longest element has the wrong inversion set")
        return v

    def zero_set(self, gamma: Sequence) -> frozenset:
        return frozenset(r for r in self.positive_roots if pair(gamma, r) == 0)

    def minimal_coset_representative(self, gamma: Sequence) -> "WeylElement":
        """Minimal-length representative u of w0*W_gamma, for dominant gamma."""
        gamma = self.require_dominant(gamma)
        z = self.zero_set(gamma)
        v = self.parabolic_longest(z)
        u = self.longest_element() * v.inverse()
        if u.inversion_set() != frozenset(self.positive_roots) - z:
            raise AssertionError("R(u) differs from the complement of Z(gamma)")
        return u

    def group(self, cap: int = DEFAULT_CAP) -> "GroupTable":
        size = self.order()
        if size > cap:
            raise CapExceeded(f"Weyl group {self.name}", size, cap)
        return _group_table(self.family, self.rank)

    def elements(self, cap: int = DEFAULT_CAP) -> Iterator["WeylElement"]:
        table = self.group(cap)
        for i in range(len(table)):
            yield table.element(i)

    # closures -----------------------------------------------------------

    def closure(self, K: Iterable[Sequence]) -> frozenset:
        """Smallest subset of R+ containing K and closed under root addition."""
        cur = set(tuple(r) for r in K)
        for r in cur:
            if not self.is_positive(r):
                raise ValueError(f"{r} is not a positive root")
        frontier = list(cur)
        while frontier:
            new = []
            for a in frontier:
                for b in list(cur):
                    s = tuple(x + y for x, y in zip(a, b))
                    if s in self._bit and s not in cur:
                        cur.add(s)
                        new.append(s)
            frontier = new
        return frozenset(cur)

    def weak_leq(self, v: "WeylElement", w: "WeylElement") -> bool:
        """v <= w in the weak order, i.e. R(v) is contained in R(w)."""
        mv, mw = v.inversion_mask(), w.inversion_mask()
        return mv & mw == mv


@lru_cache(maxsize=None)
def build_root_system(family: str, rank: int) -> RootSystem:
    return RootSystem(family, rank)


def _greedy_longest(R: RootSystem, indices: Iterable[int]) -> "WeylElement":
    indices = list(indices)
    w = R.identity()
    while True:
        for i in indices:
            if is_positive_vector(w.act_root(R.simple_roots[i - 1])):
                w = w * R.s(i)
                break
        else:
            return w


@dataclass(frozen=True)
class WeylElement:
    system: RootSystem
    perm: tuple[int, ...]

    def __post_init__(self):
        n = self.system.ambient_dim
        if len(self.perm) != n or sorted(abs(k) for k in self.perm) != list(range(1, n + 1)):
            raise ValueError(f"{self.perm} is not a signed permutation of 1..{n}")
        if self.system.family == "A" and any(k < 0 for k in self.perm):
            raise ValueError("type A elements cannot change signs")
        if self.system.family == "D" and sum(k < 0 for k in self.perm) % 2:
            raise ValueError("type D elements change an even number of signs")

    def __call__(self, i: int) -> int:
        k = self.perm[abs(i) - 1]
        return k if i > 0 else -k

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        if other.system != self.system:
            raise ValueError("elements of different groups")
        return WeylElement(self.system, tuple(self(k) for k in other.perm))

    def inverse(self) -> "WeylElement":
        out = [0] * len(self.perm)
        for i, k in enumerate(self.perm, 1):
            out[abs(k) - 1] = i if k > 0 else -i
        return WeylElement(self.system, tuple(out))

    def act(self, x: Sequence) -> tuple:
        if len(x) != len(self.perm):
            raise ValueError(f"dimension mismatch: {len(x)} vs {len(self.perm)}")
        y = [0] * len(x)
        for xi, k in zip(x, self.perm):
            y[abs(k) - 1] = xi if k > 0 else -xi
        return tuple(y)

    act_root = act

    def inversion_mask(self) -> int:
        R = self.system
        m = 0
        for r in R.positive_roots:
            if not is_positive_vector(self.act(r)):
                m |= R._bit[r]
        return m

    def inversion_set(self) -> frozenset:
        return self.system.roots_of(self.inversion_mask())

    def length(self) -> int:
        return self.inversion_mask().bit_count()

    def descent_set(self) -> frozenset:
        """Simple roots alpha_i with w s_i < w."""
        return frozenset(a for a in self.system.simple_roots if not is_positive_vector(self.act(a)))

    def reduced_word(self) -> tuple[int, ...]:
        R = self.system
        word = []
        w = self
        while True:
            for i, a in enumerate(R.simple_roots, 1):
                if not is_positive_vector(w.act(a)):
                    word.append(i)
                    w = w * R.s(i)
                    break
            else:
                return tuple(reversed(word))

    def oneline(self) -> str:
        return "(" + ",".join(str(k) for k in self.perm) + ")"

    def __repr__(self):
        return f"{self.system.name}{self.oneline()}"

    def __lt__(self, other: "WeylElement"):
        return (self.length(), self.perm) < (other.length(), other.perm)


def from_word(R: RootSystem, word: Iterable[int]) -> WeylElement:
    w = R.identity()
    for i in word:
        w = w * R.s(i)
    return w


def _signed_perms(family: str, n: int) -> Iterator[tuple[int, ...]]:
    for p in itertools.permutations(range(1, n + 1)):
        if family == "A":
            yield p
            continue
        for signs in itertools.product((1, -1), repeat=n):
            if family == "D" and signs.count(-1) % 2:
                continue
            yield tuple(s * k for s, k in zip(signs, p))


def kernel_roots(R: RootSystem) -> array:
    """Encode each positive root as (p, a, q, b) for the scan kernels."""
    out = array("q")
    for r in R.positive_roots:
        nz = [(k, c) for k, c in enumerate(r) if c]
        (p, a), (q, b) = (nz + [(-1, 0)])[:2]
        out.extend((p, a, q, b))
    return out


class GroupTable:
    """All elements of W sorted by (length, one-line notation), with inversion masks."""

    def __init__(self, R: RootSystem):
        self.system = R
        n = R.ambient_dim
        perms = list(_signed_perms(R.family, n))
        flat = array("q", itertools.chain.from_iterable(perms))
        masks = kernels.inversion_masks(flat, n, kernel_roots(R))
        order = sorted(range(len(perms)), key=lambda i: (masks[i].bit_count(), perms[i]))
        self.perms: list[tuple[int, ...]] = [perms[i] for i in order]
        self.masks: array = array("Q", (masks[i] for i in order))
        self.index = {p: i for i, p in enumerate(self.perms)}

    def __len__(self):
        return len(self.perms)

    def element(self, i: int) -> WeylElement:
        return WeylElement(self.system, self.perms[i])

    def length(self, i: int) -> int:
        return self.masks[i].bit_count()

    @cached_property
    def left_table(self) -> list[tuple[int, ...]]:
        """left_table[i][k] is the index of s_{k+1} * w_i."""
        gens = [s.perm for s in self.system._simple_reflections]
        out = []
        for p in self.perms:
            row = []
            for g in gens:
                row.append(self.index[tuple(g[k - 1] if k > 0 else -g[-k - 1] for k in p)])
            out.append(tuple(row))
        return out

    def select(self, zmask: int, pmask: int, jmask: int) -> list[int]:
        return kernels.select(self.masks, zmask, pmask, jmask)

    def group_by_label(self, zmask: int, pmask: int) -> dict[int, list[int]]:
        return kernels.group_by_label(self.masks, zmask, pmask)

    def interval(self, lo: int, hi: int) -> list[int]:
        """Indices of the weak-order interval [w_lo, w_hi], grown along covers."""
        mlo, mhi = self.masks[lo], self.masks[hi]
        if mlo & mhi != mlo:
            return []
        seen = {lo}
        frontier = [lo]
        table = self.left_table
        while frontier:
            nxt = []
            for i in frontier:
                for j in table[i]:
                    if j not in seen and self.masks[j] & ~mhi == 0 and self.masks[j].bit_count() > self.masks[i].bit_count():
                        seen.add(j)
                        nxt.append(j)
            frontier = nxt
        return sorted(seen)

    def minimal(self, indices: Iterable[int]) -> list[int]:
        """Weak-order minimal elements of a subset."""
        return self._extremal(indices, lower=True)

    def maximal(self, indices: Iterable[int]) -> list[int]:
        return self._extremal(indices, lower=False)

    def _extremal(self, indices, lower: bool) -> list[int]:
        members = set(indices)
        table = self.left_table
        masks = self.masks
        local = []
        for i in members:
            li = masks[i].bit_count()
            for j in table[i]:
                lj = masks[j].bit_count()
                if j in members and (lj < li if lower else lj > li):
                    break
            else:
                local.append(i)
        # a local extremum that lies beyond another one is not global
        out = []
        for i in local:
            mi = masks[i]
            beaten = False
            for j in local:
                if j == i:
                    continue
                mj = masks[j]
                if lower and mj & mi == mj and mj != mi:
                    beaten = True
                if not lower and mj & mi == mi and mj != mi:
                    beaten = True
                if beaten:
                    break
            if not beaten:
                out.append(i)
        return sorted(out)


@lru_cache(maxsize=None)
def _group_table(family: str, rank: int) -> GroupTable:
    return GroupTable(build_root_system(family, rank))


def fmt_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def fmt_vector(x: Sequence) -> str:
    return "(" + ",".join(fmt_rational(c) for c in x) + ")"


def fmt_root(r: Sequence) -> str:
    """Root in e-notation, e.g. e3-e1, e2+e1, 2e1."""
    terms = []
    for k in range(len(r) - 1, -1, -1):
        c = r[k]
        if not c:
            continue
        mag = "" if abs(c) == 1 else str(abs(c))
        sign = "-" if c < 0 else ("+" if terms else "")
        terms.append(f"{sign}{mag}e{k + 1}")
    return "".join(terms)
