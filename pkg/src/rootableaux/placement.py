"""Integer placement by difference constraints row[a] >= row[b] + w."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable

from .errors import PlacementError


@dataclass(frozen=True)
class Constraint:
    above: Hashable  # the variable that must be at least ...
    below: Hashable  # ... this one plus gap
    gap: int
    why: tuple = ()


def solve_rows(nodes: Iterable[Hashable], constraints: list[Constraint]) -> dict:
    """Least nonnegative integer rows satisfying every constraint.

    Longest paths from a virtual source; a positive cycle means the
    constraints contradict each other, reported with one of its pairs.
    """
    nodes = list(nodes)
    row = {v: 0 for v in nodes}
    pred: dict = {}
    last = None
    for _ in range(len(nodes) + 1):
        last = None
        for c in constraints:
            want = row[c.below] + c.gap
            if row[c.above] < want:
                row[c.above] = want
                pred[c.above] = c
                last = c
        if last is None:
            break
    else:
        raise PlacementError(_cycle_message(pred, last), pair=_cycle_pair(pred, last))
    lo = min(row.values(), default=0)
    return {v: r - lo for v, r in row.items()}


def _walk_cycle(pred: dict, start: Constraint) -> list[Constraint]:
    v = start.above
    for _ in range(len(pred) + 1):
        v = pred[v].below if v in pred else v
    cycle, u = [], v
    while True:
        c = pred[u]
        cycle.append(c)
        u = c.below
        if u == v or len(cycle) > len(pred):
            break
    return cycle


def _cycle_pair(pred, last):
    cyc = _walk_cycle(pred, last)
    return cyc[0].why or (cyc[0].below, cyc[0].above)


def _cycle_message(pred, last) -> str:
    cyc = _walk_cycle(pred, last)
    parts = [str(c.why or (c.below, c.above)) for c in cyc]
    return "inconsistent placement constraints around " + " -> ".join(parts)
