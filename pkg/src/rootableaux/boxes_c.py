"""Type C: books of signed box configurations and their standard fillings.

A weight is first moved by a signed permutation into blocks of one
Z-coset each. Page 0 and page 1/2 carry mirrored boxes box_{-i}; every
other page is an ordinary type A picture.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InvalidShape, NotStandard
from .placement import Constraint, solve_rows
from .roots import DEFAULT_CAP, RootSystem, WeylElement, build_root_system, fmt_rational
from .shapes import PlacedShape, enumerate_standard_tableaux, placed_shape

HALF = Fraction(1, 2)


def _frac(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


# rearrangement ----------------------------------------------------------------------

@dataclass(frozen=True)
class Group:
    kind: str  # "zero", "half" or "generic"
    label: Fraction  # coset representative in [0, 1)
    base: Fraction  # smallest entry of the block; entries are base + z with z >= 0
    start: int  # 0-based position of the block in the rearranged weight
    size: int

    @property
    def indices(self) -> range:
        """1-based positions in the rearranged weight."""
        return range(self.start + 1, self.start + self.size + 1)


def _group_rank(label: Fraction) -> tuple:
    return (0 if label == 0 else 1 if label == HALF else 2, label)


def normalize_gamma_c(gamma: Sequence) -> tuple[tuple[Fraction, ...], WeylElement, list[Group]]:
    """(gamma_vec, w, groups) with w.gamma == gamma_vec.

    Entries are made nonnegative, those with fractional part in (0, 1/2) are
    negated, then entries are grouped by coset (0 first, then 1/2, then the
    rest by representative) and sorted inside each group.
    """
    g = [Fraction(x) for x in gamma]
    n = len(g)
    R = build_root_system("C", n)
    signed = []
    for k, x in enumerate(g):
        s = -1 if x < 0 else 1
        y = abs(x)
        if 0 < _frac(y) < HALF:
            s, y = -s, -y
        signed.append((y, s, k))
    blocks: dict[Fraction, list] = {}
    for y, s, k in signed:
        blocks.setdefault(_frac(y), []).append((y, s, k))
    perm = [0] * n
    out: list[Fraction] = []
    groups = []
    for label in sorted(blocks, key=_group_rank):
        items = sorted(blocks[label], key=lambda t: (t[0], t[2]))
        kind = "zero" if label == 0 else "half" if label == HALF else "generic"
        groups.append(Group(kind, label, items[0][0] if kind == "generic" else label, len(out), len(items)))
        for y, s, k in items:
            out.append(y)
            perm[k] = s * len(out)
    w = WeylElement(R, tuple(perm))
    vec = tuple(out)
    if tuple(w.act(g)) != vec:
        raise InvalidShape("rearrangement does not reproduce the weight")
    return vec, w, groups


# signed boxes -------------------------------------------------------------------------

@dataclass(frozen=True)
class SignedBox:
    index: int  # signed, global in the rearranged weight
    row: int
    col: int
    content: Fraction  # diagonal label as printed on the page

    @property
    def cell(self) -> tuple[int, int]:
        return (self.row, self.col)


@dataclass(frozen=True)
class SignedBoxConfiguration:
    kind: str
    page_label: Fraction
    boxes: tuple[SignedBox, ...]  # sorted by (content, row)

    def __len__(self):
        return len(self.boxes)

    def by_index(self) -> dict[int, SignedBox]:
        return {b.index: b for b in self.boxes}

    @property
    def paired(self) -> dict[int, bool]:
        idx = {b.index for b in self.boxes}
        return {b.index: -b.index in idx for b in self.boxes}

    def contents(self) -> list[Fraction]:
        return [b.content for b in self.boxes]

    def is_mirror_symmetric(self) -> bool:
        """Rotation by a half turn sends each box_i to box_{-i}."""
        bx = self.by_index()
        if not all(-i in bx for i in bx):
            return False
        ks = {(b.row + bx[-b.index].row, b.col + bx[-b.index].col) for b in self.boxes}
        return len(ks) == 1

    def to_json(self) -> list[dict]:
        return [{"row": b.row, "col": b.col, "content": fmt_rational(b.content), "index": b.index,
                 "page": fmt_rational(self.page_label)} for b in self.boxes]


def _nw(a: SignedBox, b: SignedBox) -> bool:
    return a.row < b.row and a.col <= b.col


def _order_pairs(boxes: Sequence[SignedBox]) -> list[tuple[int, int]]:
    """Signed index pairs (a, b) that need t(box_a) < t(box_b)."""
    out = []
    for x, y in itertools.permutations(boxes, 2):
        if x.content == y.content and x.index < y.index:
            out.append((x.index, y.index))
        elif y.content == x.content + 1:
            out.append((y.index, x.index) if _nw(y, x) else (x.index, y.index))
    return out


# page construction --------------------------------------------------------------------

def _root(n: int, j: int, i: int, plus: bool) -> tuple[int, ...]:
    """epsilon_j -/+ epsilon_i (1-based); j == i with plus gives 2 epsilon_i."""
    v = [0] * n
    v[j - 1] += 1
    v[i - 1] += 1 if plus else -1
    return tuple(v)


def _place(kind: str, label: Fraction, contents: dict[int, Fraction], shift: Fraction,
           constraints: list[Constraint], symmetric: bool) -> SignedBoxConfiguration:
    diag = {k: int(c - shift) for k, c in contents.items()}
    for k, m in itertools.combinations(sorted(contents), 2):
        if contents[k] == contents[m]:
            constraints.append(Constraint(m, k, 1, (k, m)))
    rows = solve_rows(sorted(contents), constraints)
    if symmetric:
        # the constraint set is closed under (a, b) -> (-b, -a), so this keeps it satisfied
        raw = {k: rows[k] - rows[-k] for k in rows}
        ranks = {v: r for r, v in enumerate(sorted(set(raw.values())))}
        rows = {k: ranks[v] for k, v in raw.items()}
    boxes = sorted(
        (SignedBox(k, rows[k], rows[k] + diag[k], contents[k]) for k in contents),
        key=lambda b: (b.content, b.row),
    )
    cfg = SignedBoxConfiguration(kind, label, tuple(boxes))
    if len({b.cell for b in boxes}) != len(boxes):
        raise InvalidShape("two boxes share a cell")
    return cfg


def _adjacency(contents: dict[int, Fraction], related, constraints: list[Constraint]):
    """Fill in NW/SE constraints for every adjacent-diagonal pair via ``related``."""
    for y, x in itertools.permutations(contents, 2):
        if contents[y] != contents[x] + 1:
            continue
        north = related(y, x)
        if north is None:
            raise InvalidShape(f"no placement rule relates box {y} and box {x}")
        if north:
            constraints.append(Constraint(x, y, 1, (y, x)))  # box_y northwest of box_x
        else:
            constraints.append(Constraint(y, x, 0, (y, x)))  # box_y southeast of box_x


def build_page_generic(gvec: Sequence, group: Group, J: Iterable) -> SignedBoxConfiguration:
    """Boxes box_i on diagonal gvec_i - base for the indices of the group."""
    n = len(gvec)
    J = {tuple(r) for r in J}
    contents = {i: Fraction(gvec[i - 1]) - group.base for i in group.indices}

    def related(y, x):
        return _root(n, y, x, False) in J

    cons: list[Constraint] = []
    _adjacency(contents, related, cons)
    return _place("generic", group.label, contents, Fraction(0), cons, symmetric=False)


def build_page_half(gvec: Sequence, group: Group, J: Iterable) -> SignedBoxConfiguration:
    """box_i on diagonal gvec_i and box_{-i} on -gvec_i; placed symmetrically."""
    n = len(gvec)
    J = {tuple(r) for r in J}
    contents = {}
    for i in group.indices:
        contents[i] = Fraction(gvec[i - 1])
        contents[-i] = -Fraction(gvec[i - 1])

    def related(y, x):
        if y > 0 and x > 0:
            return _root(n, y, x, False) in J
        if y < 0 and x < 0:
            return _root(n, -x, -y, False) in J
        if y > 0 > x:
            return _root(n, max(y, -x), min(y, -x), True) in J
        return None

    cons: list[Constraint] = []
    _adjacency(contents, related, cons)
    return _place("half", HALF, contents, HALF, cons, symmetric=True)


def build_page_zero(gvec: Sequence, group: Group, J: Iterable) -> SignedBoxConfiguration:
    """Diagonal-0 boxes stand alone; the others come in pairs box_i, box_{-i}."""
    n = len(gvec)
    J = {tuple(r) for r in J}
    contents = {}
    for i in group.indices:
        contents[i] = Fraction(gvec[i - 1])
        if gvec[i - 1] != 0:
            contents[-i] = -Fraction(gvec[i - 1])

    def related(y, x):
        if y > 0 and x > 0:
            return _root(n, y, x, False) in J
        if y < 0 and x < 0:
            return _root(n, -x, -y, False) in J
        if y > 0 > x and contents[y] == 0:
            return _root(n, -x, y, True) in J
        return None

    cons: list[Constraint] = []
    _adjacency(contents, related, cons)
    return _place("zero", Fraction(0), contents, Fraction(0), cons, symmetric=False)


@dataclass(frozen=True)
class BookC:
    gamma: tuple[Fraction, ...]  # rearranged weight
    J: frozenset
    groups: tuple[Group, ...]
    pages: tuple[SignedBoxConfiguration, ...]

    @property
    def n(self) -> int:
        return len(self.gamma)

    def shape(self) -> PlacedShape:
        return placed_shape(build_root_system("C", self.n), self.gamma, self.J, dominant=False)

    def boxes(self) -> list[SignedBox]:
        return [b for p in self.pages for b in p.boxes]


def _split_J(gvec, groups, J) -> list[list]:
    out = [[] for _ in groups]
    where = {}
    for g_no, g in enumerate(groups):
        for i in g.indices:
            where[i] = g_no
    for r in J:
        nz = [k + 1 for k, x in enumerate(r) if x]
        pages = {where[k] for k in nz}
        if len(pages) != 1:
            raise InvalidShape(f"root {r} joins different pages")
        out[pages.pop()].append(r)
    return out


def build_book_c(gvec: Sequence, J: Iterable = ()) -> BookC:
    """Book for an already rearranged weight; J is in its coordinates."""
    gvec = tuple(Fraction(x) for x in gvec)
    vec, w, groups = normalize_gamma_c(gvec)
    if vec != gvec:
        raise InvalidShape("weight is not in rearranged form; apply normalize_gamma_c first")
    J = frozenset(tuple(r) for r in J)
    shape = placed_shape(build_root_system("C", len(gvec)), gvec, J, dominant=False)
    builders = {"generic": build_page_generic, "half": build_page_half, "zero": build_page_zero}
    pages = tuple(builders[g.kind](gvec, g, part) for g, part in zip(groups, _split_J(gvec, groups, shape.J)))
    return BookC(gvec, shape.J, tuple(groups), pages)


def book_from_shape(shape: PlacedShape) -> tuple[BookC, WeylElement]:
    """Rearrange (gamma, J) to (w gamma, w J) and build its book."""
    if shape.system.family != "C":
        raise InvalidShape("signed box books are type C")
    vec, w, _ = normalize_gamma_c(shape.gamma)
    return build_book_c(vec, [w.act(r) for r in shape.J]), w


# fillings ---------------------------------------------------------------------------------

def signed_values(book: BookC, word: Sequence[int]) -> dict[int, int]:
    """t(box_k) for every box, from t(box_i) = word[i-1] and t(box_-i) = -t(box_i)."""
    t = {}
    for b in book.boxes():
        t[b.index] = word[b.index - 1] if b.index > 0 else -word[-b.index - 1]
    return t


def filling_violations(book: BookC, word: Sequence[int]) -> list:
    n = book.n
    if sorted(abs(x) for x in word) != list(range(1, n + 1)):
        return [("not a signed permutation",)]
    t = signed_values(book, word)
    bad = []
    for p in book.pages:
        for a, b in _order_pairs(p.boxes):
            if t[a] > t[b]:
                bad.append((a, b))
        if p.kind == "zero":
            bad.extend(("sign", b.index) for b in p.boxes if b.content == 0 and t[b.index] < 0)
    return bad


def is_standard_filling(book: BookC, word: Sequence[int]) -> bool:
    return not filling_violations(book, word)


def enumerate_signed_fillings(book: BookC, limit: int = 6) -> list[tuple[int, ...]]:
    """All standard fillings, as words w with w(i) = t(box_i), by backtracking."""
    n = book.n
    if n > limit:
        raise InvalidShape(f"n={n} exceeds the limit of {limit}")
    checks: dict[int, list] = {i: [] for i in range(1, n + 1)}
    zero_diag = set()
    for p in book.pages:
        for a, b in _order_pairs(p.boxes):
            checks[max(abs(a), abs(b))].append((a, b))
        if p.kind == "zero":
            zero_diag |= {b.index for b in p.boxes if b.content == 0}
    word = [0] * n
    used = set()
    out = []

    def val(k):
        return word[k - 1] if k > 0 else -word[-k - 1]

    def rec(i):
        if i > n:
            out.append(tuple(word))
            return
        for v in range(1, n + 1):
            if v in used:
                continue
            for s in (v, -v):
                if s < 0 and i in zero_diag:
                    continue
                word[i - 1] = s
                if all(val(a) < val(b) for a, b in checks[i]):
                    used.add(v)
                    rec(i + 1)
                    used.discard(v)
        word[i - 1] = 0

    rec(1)
    return out


def tableau_word_c(book: BookC, word: Sequence[int]) -> WeylElement:
    if not is_standard_filling(book, word):
        raise NotStandard("filling breaks the ordering rules")
    return WeylElement(build_root_system("C", book.n), tuple(word))


def bijection_check_thm57(gvec: Sequence, J: Iterable = (), limit: int = 6, cap: int = DEFAULT_CAP) -> dict:
    """Fillings of the book versus F(gamma_vec, J) from the group."""
    gvec = tuple(Fraction(x) for x in gvec)
    J = frozenset(tuple(r) for r in J)
    shape = placed_shape(build_root_system("C", len(gvec)), gvec, J, dominant=False)
    F = {w.perm for w in enumerate_standard_tableaux(shape, cap)}
    report = {"gamma": tuple(fmt_rational(x) for x in gvec), "J": len(J), "F": len(F)}
    try:
        book = build_book_c(gvec, J)
    except InvalidShape as exc:  # PlacementError included
        report.update(fillings=0, placement=str(exc), bijective=not F, missing=sorted(F)[:1], extra=[])
        return report
    fills = enumerate_signed_fillings(book, limit)
    got = set(fills)
    report.update(
        fillings=len(fills),
        bijective=len(got) == len(fills) and got == F,
        missing=sorted(F - got)[:1],
        extra=sorted(got - F)[:1],
    )
    return report
