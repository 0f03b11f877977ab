"""Placed shapes (gamma, J) and their standard tableaux as Weyl group elements.

A standard tableau of shape (gamma, J) is an element w with R(w) disjoint
from Z(gamma) and R(w) & P(gamma) == J, where Z(gamma) holds the positive
roots orthogonal to gamma and P(gamma) the roots pairing to exactly 1.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import InvalidShape, NotStandard
from .roots import (
    DEFAULT_CAP,
    RootSystem,
    WeylElement,
    Weight,
    fmt_root,
    fmt_vector,
    neg,
    pair,
)


def zero_and_one_sets(R: RootSystem, gamma: Sequence) -> tuple[frozenset, frozenset]:
    """(Z, P): positive roots orthogonal to gamma, and all roots pairing to 1."""
    gamma = R.check_weight(gamma)
    Z = frozenset(r for r in R.positive_roots if pair(gamma, r) == 0)
    P = frozenset(r for r in R.roots if pair(gamma, r) == 1)
    return Z, P


def rho(R: RootSystem) -> Weight:
    return R.rho()


@dataclass(frozen=True)
class PlacedShape:
    system: RootSystem
    gamma: Weight
    J: frozenset
    Z: frozenset = field(init=False, compare=False, repr=False)
    P: frozenset = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        R = self.system
        gamma = R.check_weight(self.gamma)
        J = frozenset(tuple(r) for r in self.J)
        Z, P = zero_and_one_sets(R, gamma)
        if not J <= P:
            bad = sorted(fmt_root(r) for r in J - P)
            raise InvalidShape(f"J is not contained in P(gamma): {', '.join(bad)}")
        object.__setattr__(self, "gamma", gamma)
        object.__setattr__(self, "J", J)
        object.__setattr__(self, "Z", Z)
        object.__setattr__(self, "P", P)

    @property
    def is_dominant(self) -> bool:
        return self.system.is_dominant(self.gamma)

    @property
    def zmask(self) -> int:
        return self.system.mask(self.Z)

    @property
    def pmask(self) -> int:
        return self.system.mask(self.P)

    @property
    def jmask(self) -> int:
        return self.system.mask(self.J)

    def contains(self, w: WeylElement) -> bool:
        """Is w a standard tableau of this shape? No enumeration needed."""
        if any(not self.system.is_positive(r) for r in self.J):
            return False
        m = w.inversion_mask()
        return not m & self.zmask and m & self.pmask == self.jmask

    def describe(self) -> str:
        J = ", ".join(sorted(fmt_root(r) for r in self.J)) or "-"
        return f"{self.system.name} gamma={fmt_vector(self.gamma)} J={{{J}}}"


def placed_shape(R: RootSystem, gamma: Sequence, J: Iterable = (), *, dominant: bool = True) -> PlacedShape:
    """Build a PlacedShape; rejects non-dominant gamma unless ``dominant=False``."""
    gamma = R.require_dominant(gamma) if dominant else R.check_weight(gamma)
    return PlacedShape(R, gamma, frozenset(tuple(r) for r in J))


@dataclass(frozen=True)
class TableauSet:
    shape: PlacedShape
    elements: tuple[WeylElement, ...]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def tableau_indices(shape: PlacedShape, cap: int = DEFAULT_CAP) -> list[int]:
    """Positions in the group table of the standard tableaux of ``shape``."""
    R = shape.system
    table = R.group(cap)
    if any(not R.is_positive(r) for r in shape.J):
        return []
    return table.select(shape.zmask, shape.pmask, shape.jmask)


def enumerate_standard_tableaux(shape: PlacedShape, cap: int = DEFAULT_CAP) -> TableauSet:
    table = shape.system.group(cap)
    return TableauSet(shape, tuple(table.element(i) for i in tableau_indices(shape, cap)))


def descent_set(w: WeylElement) -> frozenset:
    return w.descent_set()


def nonemptiness_violations(shape: PlacedShape) -> list[tuple]:
    """Triples (beta, alpha, beta - alpha) breaking the nonemptiness condition."""
    R = shape.system
    out = []
    for b in sorted(shape.J):
        for a in sorted(shape.Z):
            d = tuple(x - y for x, y in zip(b, a))
            if R.is_positive(d) and d not in shape.J:
                out.append((b, a, d))
    return out


def nonemptiness_condition(shape: PlacedShape) -> bool:
    """beta in J, alpha in Z and beta - alpha in R+ force beta - alpha in J."""
    return not nonemptiness_violations(shape)


def is_ribbon(shape: PlacedShape) -> bool:
    return not shape.Z


# skew shapes -----------------------------------------------------------------

SIMPLY_LACED_MODES = ("regular", "first_long", "second_long")


def _cartan(R: RootSystem, i: int, j: int) -> Fraction:
    """<alpha_j, alpha_i coroot> for 1-based simple indices."""
    a, b = R.simple_roots[i - 1], R.simple_roots[j - 1]
    return Fraction(2 * pair(b, a), pair(a, a))


def _tau_orbit(R: RootSystem, i: int, j: int, start: tuple) -> frozenset:
    """Orbit of a linear function on span(alpha_i, alpha_j) under W_{ij}.

    Functions are stored by their values on (alpha_i, alpha_j).
    """
    cij, cji = _cartan(R, i, j), _cartan(R, j, i)

    def si(f):
        a, b = f
        return (-a, b - cij * a)

    def sj(f):
        a, b = f
        return (a - cji * b, -b)

    seen = {start}
    todo = [start]
    while todo:
        f = todo.pop()
        for g in (si(f), sj(f)):
            if g not in seen:
                seen.add(g)
                todo.append(g)
    return frozenset(seen)


def _pair_subsystem(R: RootSystem, i: int, j: int) -> list:
    keep = {i, j}
    return [
        r for r in R.positive_roots
        if all(c == 0 or k in keep for k, c in enumerate(R.simple_coordinates(r), 1))
    ]


@dataclass
class SkewReport:
    skew: bool
    empty: bool
    witness: WeylElement | None = None
    reason: str = ""
    by_mode: dict = field(default_factory=dict)

    @property
    def modes_disagree(self) -> bool:
        return len(set(self.by_mode.values())) > 1


def _skew_test(R: RootSystem, x: Sequence, mode: str) -> str:
    """Empty string if wgamma = x passes, else the reason it fails."""
    simple = R.simple_roots
    vals = [pair(x, a) for a in simple]
    for i, v in enumerate(vals, 1):
        if v == 0:
            return f"<w gamma, alpha_{i}> = 0"
    for i, j in itertools.combinations(range(1, R.rank + 1), 2):
        if _cartan(R, i, j) == 0:
            continue
        sub = _pair_subsystem(R, i, j)
        if all(pair(x, r) != 0 for r in sub):
            continue
        li, lj = pair(simple[i - 1], simple[i - 1]), pair(simple[j - 1], simple[j - 1])
        starts = []
        if li > lj:
            starts.append((Fraction(1), Fraction(0)))
        elif lj > li:
            starts.append((Fraction(0), Fraction(1)))
        elif mode == "first_long":
            starts.append((Fraction(1), Fraction(0)))
        elif mode == "second_long":
            starts.append((Fraction(0), Fraction(1)))
        f = (Fraction(vals[i - 1]), Fraction(vals[j - 1]))
        if not any(f in _tau_orbit(R, i, j, s) for s in starts):
            return f"restriction to alpha_{i}, alpha_{j} is neither regular nor a tau image"
    return ""


def skew_report(shape: PlacedShape, mode: str = "regular", cap: int = DEFAULT_CAP) -> SkewReport:
    """Evaluate the rank-1 and rank-2 skewness test on every tableau.

    ``mode`` decides how a simply-laced pair is treated when the restriction
    is not regular: "regular" rejects it, the other two accept images of the
    function that is 1 on one simple root and 0 on the other.
    """
    if mode not in SIMPLY_LACED_MODES:
        raise ValueError(f"mode must be one of {SIMPLY_LACED_MODES}")
    R = shape.system
    elems = enumerate_standard_tableaux(shape, cap).elements
    by_mode = {}
    witness = None
    reason = ""
    for m in SIMPLY_LACED_MODES:
        ok = True
        for w in elems:
            why = _skew_test(R, w.act(shape.gamma), m)
            if why:
                ok = False
                if m == mode:
                    witness, reason = w, why
                break
        by_mode[m] = ok
    return SkewReport(by_mode[mode], not elems, witness, reason, by_mode)


def is_skew(shape: PlacedShape, mode: str = "regular", cap: int = DEFAULT_CAP) -> bool:
    return skew_report(shape, mode, cap).skew


# conjugation -----------------------------------------------------------------

def conjugation_element(shape: PlacedShape) -> WeylElement:
    return shape.system.minimal_coset_representative(shape.gamma)


def conjugate_shape(shape: PlacedShape) -> PlacedShape:
    """(gamma, J)' = (-u gamma, -u(P minus J))."""
    R = shape.system
    u = conjugation_element(shape)
    gamma = tuple(-c for c in u.act(shape.gamma))
    J = frozenset(neg(u.act(r)) for r in shape.P - shape.J)
    return placed_shape(R, gamma, J)


def conjugate_tableau(w: WeylElement, shape: PlacedShape) -> WeylElement:
    if not shape.contains(w):
        raise NotStandard(f"{w.oneline()} is not a standard tableau of {shape.describe()}")
    return w * conjugation_element(shape).inverse()


def axial_distance(w: WeylElement, alpha: Sequence, gamma: Sequence):
    return pair(w.act(gamma), alpha)


# weak order extremes -----------------------------------------------------------

def reading_tableaux(shape: PlacedShape, cap: int = DEFAULT_CAP) -> tuple[list[WeylElement], list[WeylElement]]:
    """Weak-order minimal and maximal standard tableaux (as lists)."""
    table = shape.system.group(cap)
    idx = tableau_indices(shape, cap)
    if not idx:
        raise InvalidShape(f"no standard tableaux for {shape.describe()}")
    return (
        [table.element(i) for i in table.minimal(idx)],
        [table.element(i) for i in table.maximal(idx)],
    )


@dataclass
class IntervalReport:
    shape: PlacedShape
    size: int
    minima: list
    maxima: list
    min_is_closure: bool
    max_is_coclosure: bool
    is_interval: bool
    integral: bool

    @property
    def ok(self) -> bool:
        return self.min_is_closure and self.max_is_coclosure and self.is_interval

    def as_dict(self) -> dict:
        R = self.shape.system
        return {
            "type": R.name,
            "gamma": [str(c) for c in self.shape.gamma],
            "J": sorted(fmt_root(r) for r in self.shape.J),
            "size": self.size,
            "minima": [w.oneline() for w in self.minima],
            "maxima": [w.oneline() for w in self.maxima],
            "min_is_closure": self.min_is_closure,
            "max_is_coclosure": self.max_is_coclosure,
            "is_interval": self.is_interval,
            "integral": self.integral,
        }


def interval_conjecture_check(shape: PlacedShape, cap: int = DEFAULT_CAP, indices: list[int] | None = None) -> IntervalReport:
    """Test R(w_min) = closure(J), R(w_max) = complement of closure((P-J)+Z), F = [w_min, w_max]."""
    R = shape.system
    table = R.group(cap)
    idx = tableau_indices(shape, cap) if indices is None else indices
    if not idx:
        raise InvalidShape(f"no standard tableaux for {shape.describe()}")
    lo, hi = table.minimal(idx), table.maximal(idx)
    pos_p = frozenset(r for r in shape.P if R.is_positive(r))
    closure_j = R.mask(R.closure(shape.J))
    coclosure = R.full_mask & ~R.mask(R.closure((pos_p - shape.J) | shape.Z))
    min_ok = len(lo) == 1 and table.masks[lo[0]] == closure_j
    max_ok = len(hi) == 1 and table.masks[hi[0]] == coclosure
    interval_ok = len(lo) == 1 and len(hi) == 1 and table.interval(lo[0], hi[0]) == sorted(idx)
    return IntervalReport(
        shape,
        len(idx),
        [table.element(i) for i in lo],
        [table.element(i) for i in hi],
        min_ok,
        max_ok,
        interval_ok,
        R.is_integral(shape.gamma),
    )


# grids and harnesses -------------------------------------------------------------

def dominant_grid(R: RootSystem, values: Sequence = (0, 1, 2)) -> Iterator[Weight]:
    """Dominant weights whose simple-root pairings run over ``values``."""
    for combo in itertools.product(values, repeat=R.rank):
        yield R.weight_from_pairings(combo)


def subsets_of(roots: Iterable) -> Iterator[frozenset]:
    roots = sorted(roots)
    for k in range(len(roots) + 1):
        for combo in itertools.combinations(roots, k):
            yield frozenset(combo)


def nonempty_labels(R: RootSystem, gamma: Sequence, cap: int = DEFAULT_CAP) -> dict[frozenset, list[int]]:
    """J -> table indices of its tableaux, for every J with a tableau."""
    table = R.group(cap)
    Z, P = zero_and_one_sets(R, gamma)
    buckets = table.group_by_label(R.mask(Z), R.mask(P))
    return {R.roots_of(m): idx for m, idx in buckets.items()}


def nonemptiness_harness(R: RootSystem, gammas: Iterable[Sequence], cap: int = DEFAULT_CAP) -> dict:
    """Compare the nonemptiness condition with actual nonemptiness over all J."""
    checked = 0
    forward, reverse = [], []
    for gamma in gammas:
        labels = nonempty_labels(R, gamma, cap)
        Z, P = zero_and_one_sets(R, gamma)
        for J in subsets_of(P):
            checked += 1
            shape = PlacedShape(R, R.check_weight(gamma), J)
            cond = nonemptiness_condition(shape)
            nonempty = J in labels
            if nonempty and not cond:
                forward.append(shape)
            elif cond and not nonempty:
                reverse.append(shape)
    return {
        "conjecture": "nonempty",
        "type": R.name,
        "shapes_checked": checked,
        "forward_violations": [s.describe() for s in forward],
        "reverse_violations": [s.describe() for s in reverse],
        "counterexample": bool(forward or reverse),
    }


def interval_harness(R: RootSystem, gammas: Iterable[Sequence], cap: int = DEFAULT_CAP) -> dict:
    """Run the weak-order interval test on every nonempty shape."""
    checked = 0
    failures = []
    for gamma in gammas:
        gamma = R.check_weight(gamma)
        for J, idx in sorted(nonempty_labels(R, gamma, cap).items(), key=lambda kv: sorted(kv[0])):
            checked += 1
            rep = interval_conjecture_check(PlacedShape(R, gamma, J), cap, idx)
            if not rep.ok:
                failures.append(rep.as_dict())
    return {
        "conjecture": "interval",
        "type": R.name,
        "shapes_checked": checked,
        "failures": failures,
        "counterexample": bool(failures),
    }


def same_pair_structure(R: RootSystem, gamma: Sequence, other: Sequence) -> bool:
    return zero_and_one_sets(R, gamma) == zero_and_one_sets(R, other)

