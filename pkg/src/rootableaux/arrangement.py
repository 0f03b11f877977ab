"""Affine root arrangements, their intersection lattices and orbit counts."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable

from .errors import CapExceeded
from .linalg import pivots, rref
from .roots import DEFAULT_CAP, Root, RootSystem, WeylElement, build_root_system

LEVELS = {"triple": (-1, 0, 1), "shi": (0, 1)}

Key = tuple  # reduced echelon rows of [alpha | level]


@dataclass(frozen=True)
class IntersectionClass:
    """A nonempty affine subspace {x | <x, alpha> = level for each row}."""

    key: Key
    dim: int

    def equations(self) -> list[tuple[tuple[Fraction, ...], Fraction]]:
        return [(r[:-1], r[-1]) for r in self.key]


class AffineArrangement:
    """Hyperplanes H_{alpha + c delta} = {x | <x, alpha> = c}."""

    def __init__(self, system: RootSystem, mode: str = "triple"):
        if mode not in LEVELS:
            raise ValueError(f"unknown arrangement mode {mode!r}")
        self.system = system
        self.mode = mode
        self.hyperplanes: list[tuple[Root, int]] = [
            (a, c) for a in system.positive_roots for c in LEVELS[mode]
        ]
        self._lattice: list[Key] | None = None

    @property
    def dim(self) -> int:
        return self.system.ambient_dim

    def _row(self, h) -> tuple:
        a, c = h
        return tuple(a) + (c,)

    @staticmethod
    def consistent(key: Key) -> bool:
        return all(p < len(r) - 1 for r, p in zip(key, pivots(key)))

    def intersect(self, key: Key, h) -> Key | None:
        """Canonical key of key & h, or None when the intersection is empty."""
        new = rref(list(key) + [self._row(h)])
        return new if self.consistent(new) else None

    def lattice(self, cap: int = DEFAULT_CAP) -> list[Key]:
        """All nonempty intersections, grown one hyperplane at a time."""
        if self._lattice is not None:
            return self._lattice
        seen = {(): None}
        frontier = [()]
        while frontier:
            nxt = []
            for key in frontier:
                for h in self.hyperplanes:
                    k2 = self.intersect(key, h)
                    if k2 is None or k2 in seen:
                        continue
                    seen[k2] = None
                    nxt.append(k2)
                    if len(seen) > cap:
                        raise CapExceeded("intersection lattice", len(seen), cap)
            frontier = nxt
        self._lattice = list(seen)
        return self._lattice

    def classes(self, cap: int = DEFAULT_CAP) -> list[IntersectionClass]:
        return [IntersectionClass(k, self.dim - len(k)) for k in self.lattice(cap)]

    def act(self, w: WeylElement, key: Key) -> Key:
        """Image of the subspace under w: the row (alpha | c) becomes (w alpha | c)."""
        return rref([tuple(w.act(r[:-1])) + (r[-1],) for r in key])

    def orbits(self, cap: int = DEFAULT_CAP) -> list[list[Key]]:
        keys = self.lattice(cap)
        where = {k: i for i, k in enumerate(keys)}
        parent = list(range(len(keys)))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        gens = [self.system.s(i) for i in range(1, self.system.rank + 1)]
        for i, k in enumerate(keys):
            for s in gens:
                j = where[self.act(s, k)]
                a, b = find(i), find(j)
                if a != b:
                    parent[max(a, b)] = min(a, b)
        groups: dict[int, list[Key]] = {}
        for i, k in enumerate(keys):
            groups.setdefault(find(i), []).append(k)
        return list(groups.values())

    def contains_dominant(self, key: Key) -> bool:
        """Does the subspace meet the closed fundamental chamber?"""
        ineqs = [tuple(a) for a in self.system.simple_roots]
        return _meets_cone(key, ineqs, self.dim)

    def is_flat_of_dominant(self, key: Key) -> bool:
        """Is the subspace exactly the set cut out by the hyperplanes through some dominant point?

        Equivalently, the dominant part of the subspace is not swallowed by any
        hyperplane that does not already contain the whole subspace.
        """
        cone = [(tuple(a), 0, False) for a in self.system.simple_roots]
        if not _feasible(_restrict(key, self.dim, cone)):
            return False
        for h in self.hyperplanes:
            if rref(list(key) + [self._row(h)]) == key:
                continue
            a, c = h
            above = _feasible(_restrict(key, self.dim, cone + [(tuple(a), c, True)]))
            below = _feasible(_restrict(key, self.dim, cone + [(tuple(-x for x in a), -c, True)]))
            if not (above or below):
                return False
        return True


# Fourier-Motzkin feasibility --------------------------------------------------------

def _parametrize(key: Key, dim: int):
    """x = base + sum_f t_f e_f over the free coordinates of the echelon form."""
    piv = pivots(key)
    free = [c for c in range(dim) if c not in piv]
    base = [Fraction(0)] * dim
    dirs = {f: [Fraction(0)] * dim for f in free}
    for f in free:
        dirs[f][f] = Fraction(1)
    for r, p in zip(key, piv):
        base[p] = r[-1]
        for f in free:
            dirs[f][p] = -r[f]
    return base, [dirs[f] for f in free]


def _normalise(coeffs, const, strict=False):
    scale = next((abs(c) for c in coeffs if c != 0), None)
    if scale is None:
        return tuple(coeffs), const, strict
    return tuple(c / scale for c in coeffs), const / scale, strict


def _feasible(rows) -> bool:
    """Is there t with coeffs . t + const >= 0 (> 0 when strict) for every row?"""
    rows = list({_normalise(*r) for r in rows})
    nvars = len(rows[0][0]) if rows else 0
    for v in range(nvars):
        pos = [r for r in rows if r[0][v] > 0]
        neg = [r for r in rows if r[0][v] < 0]
        rest = [r for r in rows if r[0][v] == 0]
        for pc, pk, ps in pos:
            for nc, nk, ns in neg:
                a, b = pc[v], -nc[v]
                coeffs = tuple(b * x + a * y for x, y in zip(pc, nc))
                rest.append(_normalise(coeffs, b * pk + a * nk, ps or ns))
        rows = list(set(rest))
    return all(k > 0 if strict else k >= 0 for _, k, strict in rows)


def _restrict(key: Key, dim: int, ineqs) -> list:
    """Rewrite rows (a, c, strict): <x, a> - c >= 0 in the free parameters of key."""
    base, dirs = _parametrize(key, dim)
    rows = []
    for a, c, strict in ineqs:
        const = sum(Fraction(x) * y for x, y in zip(a, base)) - c
        coeffs = tuple(sum(Fraction(x) * y for x, y in zip(a, d)) for d in dirs)
        rows.append((coeffs, const, strict))
    return rows


def _meets_cone(key: Key, ineqs: Iterable[tuple], dim: int) -> bool:
    return _feasible(_restrict(key, dim, [(a, 0, False) for a in ineqs]))


# counts ----------------------------------------------------------------------------------

def count_calibration_classes(R: RootSystem, cap: int = DEFAULT_CAP) -> int:
    """Number of W-orbits of nonempty intersections from H_{alpha}, H_{alpha +- delta}."""
    return len(AffineArrangement(R, "triple").orbits(cap))


def calibration_classes_type_a(n: int, cap: int = DEFAULT_CAP) -> int:
    """Same count for S_n acting on R^n; n = 1 has no hyperplanes and one class."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return 1
    return count_calibration_classes(build_root_system("A", n - 1), cap)


SHI_READINGS = ("flat", "meets")


def count_shi_dominant_intersections(n: int, reading: str = "flat", cap: int = DEFAULT_CAP) -> int:
    """Shi-arrangement intersections in type A on R^n tied to the dominant cone.

    reading="flat" counts subspaces that are exactly the set of hyperplanes
    through some dominant point, i.e. the realised (Z, P) patterns of dominant
    weights. reading="meets" counts every subspace touching the closed cone.
    """
    if reading not in SHI_READINGS:
        raise ValueError(f"unknown reading {reading!r}")
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return 1
    arr = AffineArrangement(build_root_system("A", n - 1), "shi")
    test = arr.is_flat_of_dominant if reading == "flat" else arr.contains_dominant
    return sum(1 for k in arr.lattice(cap) if test(k))


def shi_count_report(max_n: int = 3, cap: int = DEFAULT_CAP) -> dict:
    rows = []
    for n in range(1, max_n + 1):
        row = {"n": n, "formula": shi_dominant_formula(n)}
        for r in SHI_READINGS:
            row[r] = count_shi_dominant_intersections(n, r, cap)
        rows.append(row)
    return {"rows": rows,
            "matches": [r for r in SHI_READINGS if all(x[r] == x["formula"] for x in rows)]}


def fibonacci(k: int) -> int:
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def shi_dominant_formula(n: int) -> int:
    return sum(comb(n - 1, k - 1) * fibonacci(2 * k - 1) for k in range(1, n + 1))


def product_series(order: int, sign: int = 1) -> list[int]:
    """Coefficients of prod_{k>=1} (1 - q^k)^(sign * 2^(k-1)) up to q^order."""
    coeffs = [1] + [0] * order
    for k in range(1, order + 1):
        m = sign * 2 ** (k - 1)
        factor = [0] * (order + 1)
        for j in range(order // k + 1):
            if m >= 0:
                c = comb(m, j) * (-1) ** j
            else:
                c = comb(-m + j - 1, j)
            factor[j * k] = c
        coeffs = [
            sum(coeffs[i] * factor[d - i] for i in range(d + 1)) for d in range(order + 1)
        ]
    return coeffs


def calibration_count_report(max_n: int = 4, cap: int = DEFAULT_CAP) -> dict:
    """Brute-force class counts against both readings of the generating product.

    The coefficient of q^n is compared with the count on R^n ("ambient")
    and with the count for the rank-n system ("rank").
    """
    brute = {n: calibration_classes_type_a(n, cap) for n in range(1, max_n + 2)}
    printed = product_series(max_n, 1)
    recip = product_series(max_n, -1)
    report = {"brute": {n: brute[n] for n in range(1, max_n + 1)},
              "brute_rank": {n: brute[n + 1] for n in range(1, max_n + 1)},
              "printed": printed[1:], "reciprocal": recip[1:], "matches": []}
    for label, series in (("printed", printed), ("reciprocal", recip)):
        for align, vals in (("ambient", report["brute"]), ("rank", report["brute_rank"])):
            if all(series[n] == vals[n] for n in range(1, max_n + 1)):
                report["matches"].append(f"{label}/{align}")
    return report
