"""Type A: skew shapes and placed configurations of boxes on diagonals.

Rows grow downward as in a matrix and the content of the box at (row, col)
is col - row. Boxes are numbered by increasing content, and from northwest
to southeast inside one diagonal.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import InvalidShape, NotStandard
from .placement import Constraint, solve_rows
from .roots import DEFAULT_CAP, RootSystem, WeylElement, as_weight, build_root_system
from .shapes import PlacedShape, conjugate_shape, enumerate_standard_tableaux, placed_shape

Cell = tuple[int, int]


@dataclass(frozen=True, order=True)
class Box:
    row: int
    col: int
    content: int
    index: int = 0

    def __post_init__(self):
        if self.col - self.row != self.content:
            raise InvalidShape(f"box at ({self.row},{self.col}) cannot have content {self.content}")

    @property
    def cell(self) -> Cell:
        return (self.row, self.col)


def northwest(a: Box, b: Box) -> bool:
    """a strictly north and weakly west of b."""
    return a.row < b.row and a.col <= b.col


def southeast(a: Box, b: Box) -> bool:
    """a weakly south and strictly east of b."""
    return a.row >= b.row and a.col > b.col


@dataclass(frozen=True)
class BoxConfiguration:
    """Boxes numbered 1..n; ``boxes[i-1]`` is box_i."""

    boxes: tuple[Box, ...]
    page_label: Fraction = Fraction(0)

    def __post_init__(self):
        cells = [b.cell for b in self.boxes]
        if len(set(cells)) != len(cells):
            raise InvalidShape("two boxes share a cell")
        order = sorted(self.boxes, key=lambda b: (b.content, b.row))
        if list(order) != list(self.boxes) or [b.index for b in self.boxes] != list(range(1, len(cells) + 1)):
            raise InvalidShape("boxes are not numbered by (content, row)")

    def __len__(self):
        return len(self.boxes)

    def box(self, i: int) -> Box:
        return self.boxes[i - 1]

    @property
    def gamma(self) -> tuple[int, ...]:
        return tuple(b.content for b in self.boxes)

    @property
    def cells(self) -> frozenset:
        return frozenset(b.cell for b in self.boxes)

    def J(self) -> frozenset:
        """epsilon_j - epsilon_i for adjacent diagonals with box_j northwest of box_i."""
        n = len(self.boxes)
        out = set()
        for i, j in itertools.combinations(range(n), 2):
            a, b = self.boxes[i], self.boxes[j]
            if b.content == a.content + 1 and northwest(b, a):
                out.add(_eps_diff(n, j, i))
        return frozenset(out)

    def shape(self) -> PlacedShape:
        return placed_shape(build_root_system("A", len(self.boxes) - 1), self.gamma, self.J())

    def relative_data(self) -> tuple:
        """(gamma, J): the configuration up to sliding boxes along diagonals."""
        return (self.gamma, self.J())

    def same_up_to_sliding(self, other: "BoxConfiguration") -> bool:
        return self.relative_data() == other.relative_data()

    def translated(self, dr: int, dc: int) -> "BoxConfiguration":
        return configuration_from_cells(((b.row + dr, b.col + dc) for b in self.boxes), self.page_label)

    def normalized(self) -> "BoxConfiguration":
        """Slide along the main direction so the top row is 0; contents unchanged."""
        top = min((b.row for b in self.boxes), default=0)
        return BoxConfiguration(
            tuple(Box(b.row - top, b.col - top, b.content, b.index) for b in self.boxes),
            self.page_label,
        )

    def to_json(self) -> list[dict]:
        return [{"row": b.row, "col": b.col, "content": b.content, "index": b.index} for b in self.boxes]


def _eps_diff(n: int, j: int, i: int) -> tuple[int, ...]:
    """epsilon_{j+1} - epsilon_{i+1} for 0-based j, i."""
    v = [0] * n
    v[j] += 1
    v[i] -= 1
    return tuple(v)


def configuration_from_cells(cells: Iterable[Cell], page_label=0, content_shift: int = 0) -> BoxConfiguration:
    """Number the given cells; content is col - row + content_shift."""
    cells = [tuple(c) for c in cells]
    if content_shift:
        cells = [(r, c + content_shift) for r, c in cells]
    cells.sort(key=lambda rc: (rc[1] - rc[0], rc[0]))
    boxes = tuple(Box(r, c, c - r, k) for k, (r, c) in enumerate(cells, 1))
    return BoxConfiguration(boxes, Fraction(page_label))


# skew shapes --------------------------------------------------------------------------

def _check_partitions(lam: Sequence[int], mu: Sequence[int]) -> tuple[list[int], list[int]]:
    lam, mu = list(lam), list(mu)
    for p, name in ((lam, "lambda"), (mu, "mu")):
        if any(x < 0 for x in p) or any(p[k] < p[k + 1] for k in range(len(p) - 1)):
            raise InvalidShape(f"{name}={p} is not a partition")
    mu = mu + [0] * (len(lam) - len(mu))
    if len(mu) > len(lam) and any(mu[len(lam):]):
        raise InvalidShape("mu is not contained in lambda")
    if any(m > l for m, l in zip(mu, lam)):
        raise InvalidShape("mu is not contained in lambda")
    return lam, mu[: len(lam)]


def skew_cells(lam: Sequence[int], mu: Sequence[int] = ()) -> list[Cell]:
    """Matrix cells (1-based) of lambda/mu."""
    lam, mu = _check_partitions(lam, mu)
    return [(r, c) for r in range(1, len(lam) + 1) for c in range(mu[r - 1] + 1, lam[r - 1] + 1)]


def skew_configuration(lam: Sequence[int], mu: Sequence[int] = (), offset: int = 0) -> BoxConfiguration:
    """lambda/mu with the box in row r, column c on diagonal c - r + offset."""
    cells = skew_cells(lam, mu)
    if not cells:
        raise InvalidShape("empty skew shape")
    return configuration_from_cells(cells, content_shift=offset)


def skew_to_placed_shape(lam: Sequence[int], mu: Sequence[int] = (), offset: int = 0) -> tuple[tuple, frozenset]:
    cfg = skew_configuration(lam, mu, offset)
    return as_weight(cfg.gamma), cfg.J()


def partitions_in_box(rows: int, cols: int) -> Iterator[tuple[int, ...]]:
    """All partitions fitting in a rows x cols rectangle, trailing zeros dropped."""
    for p in itertools.combinations_with_replacement(range(cols, -1, -1), rows):
        yield tuple(x for x in p if x)


def skew_shapes(rows: int, cols: int, max_boxes: int) -> Iterator[tuple[tuple, tuple]]:
    for lam in partitions_in_box(rows, cols):
        for mu in partitions_in_box(rows, cols):
            if len(mu) > len(lam) or any(m > l for m, l in zip(mu, lam)):
                continue
            size = sum(lam) - sum(mu)
            if 1 <= size <= max_boxes:
                yield lam, mu


# fillings -----------------------------------------------------------------------------

@dataclass(frozen=True)
class Filling:
    """entries[i-1] = t(box_i)."""

    config: BoxConfiguration
    entries: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.entries) != list(range(1, len(self.config) + 1)):
            raise NotStandard("entries are not a permutation of 1..n")

    def at(self, cell: Cell) -> int | None:
        for b, e in zip(self.config.boxes, self.entries):
            if b.cell == cell:
                return e
        return None

    def is_standard(self) -> bool:
        return not standardness_violations(self.config, self.entries)


def _order_relations(config: BoxConfiguration) -> list[tuple[int, int]]:
    """Pairs (a, b) of 0-based box positions that need t(a) < t(b)."""
    rel = []
    bx = config.boxes
    for i, j in itertools.combinations(range(len(bx)), 2):
        a, b = bx[i], bx[j]
        if a.content == b.content:
            rel.append((i, j))
        elif b.content == a.content + 1:
            rel.append((j, i) if northwest(b, a) else (i, j))
    return rel


def standardness_violations(config: BoxConfiguration, entries: Sequence[int]) -> list[tuple[int, int]]:
    """1-based box pairs (i, j) whose entries break the ordering rules."""
    return [(a + 1, b + 1) for a, b in _order_relations(config) if entries[a] > entries[b]]


def tableau_word(t: Filling) -> WeylElement:
    """w_t(i) = t(box_i)."""
    bad = standardness_violations(t.config, t.entries)
    if bad:
        raise NotStandard(f"filling breaks the ordering at boxes {bad[0]}")
    return WeylElement(build_root_system("A", len(t.entries) - 1), tuple(t.entries))


def linear_extensions(n: int, relations: Iterable[tuple[int, int]], limit: int | None = None) -> Iterator[tuple[int, ...]]:
    """All labelings 1..n of 0..n-1 with label[a] < label[b] for each relation."""
    preds = [0] * n
    succ: list[list[int]] = [[] for _ in range(n)]
    for a, b in set(relations):
        preds[b] += 1
        succ[a].append(b)
    label = [0] * n
    count = 0

    def rec(k):
        nonlocal count
        if k > n:
            count += 1
            yield tuple(label)
            return
        for v in range(n):
            if preds[v] == 0 and label[v] == 0:
                label[v] = k
                for s in succ[v]:
                    preds[s] -= 1
                yield from rec(k + 1)
                for s in succ[v]:
                    preds[s] += 1
                label[v] = 0
                if limit is not None and count >= limit:
                    return

    yield from rec(1)


def enumerate_fillings(config: BoxConfiguration, limit: int | None = None) -> list[Filling]:
    rel = _order_relations(config)
    return [Filling(config, e) for e in linear_extensions(len(config), rel, limit)]


def classical_tableaux(lam: Sequence[int], mu: Sequence[int] = ()) -> list[dict[Cell, int]]:
    """Standard fillings of lambda/mu: rows increase rightward, columns downward."""
    cells = skew_cells(lam, mu)
    shape = set(cells)
    out: list[dict[Cell, int]] = []
    filled: dict[Cell, int] = {}

    def ready(rc):
        r, c = rc
        return rc not in filled and ((r, c - 1) not in shape or (r, c - 1) in filled) and (
            (r - 1, c) not in shape or (r - 1, c) in filled
        )

    def rec(k):
        if k > len(cells):
            out.append(dict(filled))
            return
        for rc in cells:
            if ready(rc):
                filled[rc] = k
                rec(k + 1)
                del filled[rc]

    rec(1)
    return out


def bijection_check_thm35(lam: Sequence[int], mu: Sequence[int] = (), offset: int = 0, limit: int = 8,
                          cap: int = DEFAULT_CAP) -> dict:
    """Compare classical tableaux of lambda/mu with F(gamma, J) through the word map."""
    cfg = skew_configuration(lam, mu, offset)
    n = len(cfg)
    if n > limit:
        raise InvalidShape(f"{n} boxes exceeds the limit of {limit}")
    classical = classical_tableaux(lam, mu)
    shift = offset
    words = []
    for t in classical:
        entries = tuple(t[(b.row, b.col - shift)] for b in cfg.boxes)
        words.append(entries)
    report = {"lambda": tuple(lam), "mu": tuple(mu), "offset": offset, "boxes": n,
              "classical": len(classical)}
    shape = cfg.shape()
    F = {w.perm for w in enumerate_standard_tableaux(shape, cap)}
    report["F"] = len(F)
    report["injective"] = len(set(words)) == len(words)
    report["bijective"] = report["injective"] and set(words) == F
    return report


# configurations from (gamma, J) -------------------------------------------------------------

def placement_constraints(gamma: Sequence[int], J: Iterable, index_of=lambda i: i) -> list[Constraint]:
    """Row constraints for boxes 0..n-1 with contents gamma (weakly increasing)."""
    J = {tuple(r) for r in J}
    n = len(gamma)
    out = []
    for i, j in itertools.combinations(range(n), 2):
        gi, gj = gamma[i], gamma[j]
        why = (index_of(i) + 1, index_of(j) + 1)
        if gi == gj:
            out.append(Constraint(j, i, 1, why))
        elif gj == gi + 1:
            if _eps_diff(n, j, i) in J:
                out.append(Constraint(i, j, 1, why))  # box_j northwest of box_i
            else:
                out.append(Constraint(j, i, 0, why))  # box_j southeast of box_i
    return out


def shape_to_configuration(gamma: Sequence, J: Iterable = (), page_label=0) -> BoxConfiguration:
    """Place boxes with contents gamma so that J records exactly the northwest pairs."""
    gamma = [Fraction(x) for x in gamma]
    if any(x.denominator != 1 for x in gamma):
        raise InvalidShape("contents must be integers; use build_book for other weights")
    gamma = [int(x) for x in gamma]
    if any(gamma[k] > gamma[k + 1] for k in range(len(gamma) - 1)):
        raise InvalidShape("contents must be weakly increasing")
    J = frozenset(tuple(r) for r in J)
    n = len(gamma)
    for r in J:
        nz = [k for k, x in enumerate(r) if x]
        if len(r) != n or len(nz) != 2 or r[nz[0]] != -1 or r[nz[1]] != 1 or gamma[nz[1]] != gamma[nz[0]] + 1:
            raise InvalidShape(f"{r} is not in P(gamma)")
    rows = solve_rows(range(n), placement_constraints(gamma, J))
    boxes = tuple(Box(rows[k], rows[k] + gamma[k], gamma[k], k + 1) for k in range(n))
    cfg = BoxConfiguration(boxes, Fraction(page_label))
    if cfg.J() != J:
        raise InvalidShape("placement does not reproduce J")
    return cfg


def shape_configuration(shape: PlacedShape) -> BoxConfiguration:
    if shape.system.family != "A":
        raise InvalidShape("box configurations are type A; use boxes_c for type C")
    return shape_to_configuration(shape.gamma, shape.J)


# recognition --------------------------------------------------------------------------

def _between(config: BoxConfiguration, a: Box, c: Box, diag: int) -> bool:
    """Is some box on ``diag`` wedged between consecutive same-diagonal boxes a, c?"""
    for x in config.boxes:
        if x.content != diag:
            continue
        if diag == a.content + 1 and southeast(x, a) and northwest(x, c):
            return True
        if diag == a.content - 1 and northwest(a, x) and southeast(c, x):
            return True
    return False


def skew_defects(config: BoxConfiguration) -> list[tuple[int, int, int]]:
    """(case, i, k) for consecutive boxes i, k on a diagonal with a hole beside them.

    Case 1: a box east of box_i but none south; case 2: the reverse; case 3:
    neither. Working on consecutive pairs makes the test independent of how
    far the boxes have been slid along their diagonals.
    """
    out = []
    bx = config.boxes
    for p in range(len(bx) - 1):
        a, c = bx[p], bx[p + 1]
        if a.content != c.content:
            continue
        east = _between(config, a, c, a.content + 1)
        south = _between(config, a, c, a.content - 1)
        if east and not south:
            out.append((1, a.index, c.index))
        elif south and not east:
            out.append((2, a.index, c.index))
        elif not east and not south:
            out.append((3, a.index, c.index))
    return out


def detect_skew(config: BoxConfiguration) -> bool:
    return not skew_defects(config)


def is_border_strip(config: BoxConfiguration) -> bool:
    contents = [b.content for b in config.boxes]
    return len(set(contents)) == len(contents)


def transpose_configuration(config: BoxConfiguration) -> BoxConfiguration:
    """Reflect across the content-0 diagonal: (row, col) -> (col, row)."""
    return configuration_from_cells(((b.col, b.row) for b in config.boxes), config.page_label)


def transpose_filling(t: Filling) -> Filling:
    tc = transpose_configuration(t.config)
    where = {(b.col, b.row): e for b, e in zip(t.config.boxes, t.entries)}
    return Filling(tc, tuple(where[b.cell] for b in tc.boxes))


# reading tableaux ---------------------------------------------------------------------

def _minimal_box(config: BoxConfiguration, unfilled: set[int], before: dict[int, set[int]]) -> int:
    """Lowest-content box whose required predecessors are all filled.

    Neighbours alone do not suffice: in a configuration that is not a skew
    shape a box can be forced after a non-adjacent box on the next diagonal.
    """
    best = None
    for k in unfilled:
        if before[k] & unfilled:
            continue
        b = config.boxes[k]
        if best is None or (b.content, b.row) < (config.boxes[best].content, config.boxes[best].row):
            best = k
    if best is None:
        raise InvalidShape("no minimal box")
    return best


def column_reading_filling(config: BoxConfiguration) -> Filling:
    """Fill 1, 2, ... into the successive minimal boxes."""
    entries = [0] * len(config)
    unfilled = set(range(len(config)))
    before: dict[int, set[int]] = {k: set() for k in unfilled}
    for a, b in _order_relations(config):
        before[b].add(a)
    for v in range(1, len(config) + 1):
        k = _minimal_box(config, unfilled, before)
        entries[k] = v
        unfilled.remove(k)
    return Filling(config, tuple(entries))


def reading_fillings(config: BoxConfiguration) -> tuple[Filling, Filling]:
    """(t_min, t_max); t_max is the transpose of the column reading filling of the transpose."""
    t_min = column_reading_filling(config)
    t_conj = column_reading_filling(transpose_configuration(config))
    t_max = transpose_filling(t_conj)
    back = {b.cell: e for b, e in zip(t_max.config.boxes, t_max.entries)}
    t_max = Filling(config, tuple(back[b.cell] for b in config.boxes))
    for t in (t_min, t_max):
        if not t.is_standard():
            raise NotStandard("reading filling is not standard")
    return t_min, t_max


# books ----------------------------------------------------------------------------------

@dataclass(frozen=True)
class Page:
    label: Fraction
    start: int  # 0-based position of the first box in the rearranged weight
    config: BoxConfiguration


@dataclass(frozen=True)
class Book:
    gamma: tuple  # the rearranged weight
    order: tuple[int, ...]  # gamma_vec[k] = original[order[k]]
    J: frozenset
    pages: tuple[Page, ...] = field(default_factory=tuple)

    def __len__(self):
        return len(self.gamma)

    def shape(self) -> PlacedShape:
        return placed_shape(build_root_system("A", len(self.gamma) - 1), self.gamma, self.J, dominant=False)

    def is_standard(self, word: Sequence[int]) -> bool:
        """Does the filling box_k -> word[k-1] satisfy the rules page by page?"""
        for p in self.pages:
            local = word[p.start: p.start + len(p.config)]
            if standardness_violations(p.config, local):
                return False
        return sorted(word) == list(range(1, len(self.gamma) + 1))


def rearrange_by_coset(gamma: Sequence) -> tuple[tuple, tuple[int, ...], list[tuple[Fraction, int, int]]]:
    """Group entries by Z-coset, ascending representative in [0, 1), each group sorted."""
    g = [Fraction(x) for x in gamma]
    groups: dict[Fraction, list[int]] = {}
    for k, x in enumerate(g):
        groups.setdefault(x - (x.numerator // x.denominator), []).append(k)
    order, spans = [], []
    for beta in sorted(groups):
        idx = sorted(groups[beta], key=lambda k: (g[k], k))
        spans.append((beta, len(order), len(idx)))
        order.extend(idx)
    return tuple(g[k] for k in order), tuple(order), spans


def build_book(gamma: Sequence, J: Iterable = ()) -> Book:
    """Pages of placed configurations; J is given in the indices of the rearranged weight."""
    gvec, order, spans = rearrange_by_coset(gamma)
    n = len(gvec)
    J = frozenset(tuple(r) for r in J)
    for r in J:
        if len(r) != n:
            raise InvalidShape(f"root {r} has the wrong length")
    pages = []
    used = set()
    for beta, start, size in spans:
        local = []
        for r in J:
            nz = [k for k, x in enumerate(r) if x]
            if all(start <= k < start + size for k in nz):
                local.append(r[start: start + size])
                used.add(r)
        C = [int(gvec[k] - beta) for k in range(start, start + size)]
        pages.append(Page(beta, start, shape_to_configuration(C, local, beta)))
    if used != J:
        raise InvalidShape("J has roots joining different pages")
    book = Book(gvec, order, J, tuple(pages))
    book.shape()  # validates J inside P
    return book


def book_for_shape(shape: PlacedShape) -> Book:
    """Book of a type A placed shape, with J carried into the rearranged coordinates."""
    if shape.system.family != "A":
        raise InvalidShape("box books here are type A; use boxes_c for type C")
    _, order, _ = rearrange_by_coset(shape.gamma)
    J = [tuple(r[k] for k in order) for r in shape.J]
    return build_book(shape.gamma, J)
