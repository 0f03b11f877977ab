"""Calibration graphs: the orbit W.gamma with edges across walls not paired to +-1."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import CapExceeded, InvariantViolation
from .roots import DEFAULT_CAP, RootSystem, WeylElement, Weight, fmt_root, fmt_vector, pair
from .shapes import PlacedShape, enumerate_standard_tableaux, nonempty_labels, zero_and_one_sets


@dataclass
class CalibrationGraph:
    system: RootSystem
    gamma: Weight
    vertices: list[Weight]
    vertex_reps: list[WeylElement]
    edges: list[tuple[int, int]]
    components: list[list[int]] = field(default_factory=list)
    component_labels: list[frozenset | None] = field(default_factory=list)

    def __len__(self):
        return len(self.vertices)

    def degrees(self) -> list[int]:
        deg = [0] * len(self.vertices)
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg


def _orbit(R: RootSystem, gamma: Weight, cap: int) -> tuple[list[Weight], list[WeylElement]]:
    """Breadth-first orbit of gamma; each vertex keeps its first (shortest) w."""
    seen = {gamma: 0}
    verts, reps = [gamma], [R.identity()]
    k = 0
    while k < len(verts):
        x, w = verts[k], reps[k]
        for i, a in enumerate(R.simple_roots, 1):
            if pair(x, a) == 0:
                continue
            y = R.reflect(a, x)
            if y not in seen:
                seen[y] = len(verts)
                verts.append(y)
                reps.append(R.s(i) * w)
                if len(verts) > cap:
                    raise CapExceeded("orbit", len(verts), cap)
        k += 1
    return verts, reps


def build_calibration_graph(R: RootSystem, gamma: Sequence, cap: int = DEFAULT_CAP, *, dominant: bool = True) -> CalibrationGraph:
    """Vertices W.gamma; x -- s_i x whenever <x, alpha_i> is not +-1 and s_i x != x.

    Components are labelled by J = R(w) & P(gamma) for dominant gamma, where
    w is the shortest element carrying gamma to the vertex.
    """
    gamma = R.require_dominant(gamma) if dominant else R.check_weight(gamma)
    if R.order() > cap:
        raise CapExceeded(f"Weyl group {R.name}", R.order(), cap)
    verts, reps = _orbit(R, gamma, cap)
    where = {x: k for k, x in enumerate(verts)}
    edges = set()
    for k, x in enumerate(verts):
        for a in R.simple_roots:
            v = pair(x, a)
            if v in (1, -1) or v == 0:
                continue
            m = where[R.reflect(a, x)]
            edges.add((min(k, m), max(k, m)))
    graph = CalibrationGraph(R, gamma, verts, reps, sorted(edges))
    _label_components(graph, labelled=R.is_dominant(gamma))
    return graph


def _label_components(graph: CalibrationGraph, labelled: bool) -> None:
    parent = list(range(len(graph.vertices)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a, b in graph.edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    comps: dict[int, list[int]] = {}
    for k in range(len(graph.vertices)):
        comps.setdefault(find(k), []).append(k)
    graph.components = sorted(comps.values())
    graph.component_labels = []
    if not labelled:
        graph.component_labels = [None] * len(graph.components)
        return
    R = graph.system
    _, P = zero_and_one_sets(R, graph.gamma)
    pmask = R.mask(P)
    for comp in graph.components:
        labels = {graph.vertex_reps[k].inversion_mask() & pmask for k in comp}
        if len(labels) != 1:
            raise InvariantViolation(f"component {comp} carries several J labels")
        graph.component_labels.append(R.roots_of(labels.pop()))


def connected_components(graph: CalibrationGraph) -> list[tuple[frozenset | None, list[int]]]:
    return list(zip(graph.component_labels, graph.components))


def component_summary(graph: CalibrationGraph) -> list[dict]:
    out = []
    for J, comp in connected_components(graph):
        out.append({
            "J": None if J is None else sorted(fmt_root(r) for r in J),
            "size": len(comp),
            "vertices": [fmt_vector(graph.vertices[k]) for k in comp],
        })
    return out


def components_match_tableaux(R: RootSystem, gamma: Sequence, cap: int = DEFAULT_CAP) -> bool:
    """Do the components of the graph coincide with the nonempty tableau sets?"""
    graph = build_calibration_graph(R, gamma, cap)
    table = R.group(cap)
    from_graph = {
        J: frozenset(graph.vertex_reps[k].perm for k in comp)
        for J, comp in connected_components(graph)
    }
    if len(from_graph) != len(graph.components):
        return False
    from_tableaux = {
        J: frozenset(table.perms[i] for i in idx)
        for J, idx in nonempty_labels(R, gamma, cap).items()
    }
    return from_graph == from_tableaux


# chamber view ---------------------------------------------------------------------

def chamber_of(w: WeylElement) -> tuple[int, ...]:
    """Signs of <x, w alpha> over R+ for x = rho, i.e. the side of w^-1 C on each wall."""
    R = w.system
    x = R.rho()
    out = []
    for r in R.positive_roots:
        v = pair(x, w.act(r))
        out.append(1 if v > 0 else -1)
    return tuple(out)


def chamber_view_check(R: RootSystem, gamma: Sequence, cap: int = DEFAULT_CAP) -> dict:
    """Check the vertex/chamber bijection, the wall criterion for edges,
    and the sign description of each tableau set."""
    gamma = R.require_dominant(gamma)
    graph = build_calibration_graph(R, gamma, cap)
    Z, P = zero_and_one_sets(R, gamma)
    pos = list(R.positive_roots)
    zi = [k for k, r in enumerate(pos) if r in Z]
    table = R.group(cap)
    all_chambers = [chamber_of(table.element(i)) for i in range(len(table))]
    allowed = {c for c in all_chambers if all(c[k] > 0 for k in zi)}
    mine = [chamber_of(w) for w in graph.vertex_reps]
    bijective = len(set(mine)) == len(mine) and set(mine) == allowed

    edges = set(graph.edges)
    walls_ok = True
    for a in range(len(mine)):
        for b in range(a + 1, len(mine)):
            diff = [k for k in range(len(pos)) if mine[a][k] != mine[b][k]]
            joined = len(diff) == 1 and pos[diff[0]] not in P
            if joined != ((a, b) in edges):
                walls_ok = False

    signs_ok = True
    pi = [k for k, r in enumerate(pos) if r in P]
    for J in {graph.component_labels[c] for c in range(len(graph.components))}:
        shape = PlacedShape(R, gamma, J)
        got = {chamber_of(w) for w in enumerate_standard_tableaux(shape, cap)}
        want = {
            c for c in allowed
            if all((c[k] < 0) == (pos[k] in J) for k in pi)
        }
        signs_ok &= got == want
    return {"bijective": bijective, "walls": walls_ok, "signs": signs_ok}


def same_shape(a: PlacedShape, b: PlacedShape, cap: int = DEFAULT_CAP) -> bool:
    """Is there a w with Z(w gamma) = Z(eta), P(w gamma) = P(eta) and wJ = K?"""
    R = a.system
    if b.system != R:
        raise ValueError("shapes live in different root systems")
    if len(a.Z) != len(b.Z) or len(a.J) != len(b.J):
        return False
    found = False
    for w in R.elements(cap):
        x = w.act(a.gamma)
        if frozenset(w.act(r) for r in a.J) != b.J:
            continue
        if zero_and_one_sets(R, x) == (b.Z, b.P):
            found = True
            break
    if found:
        na = len(enumerate_standard_tableaux(a, cap))
        nb = len(enumerate_standard_tableaux(b, cap))
        if na != nb:
            raise InvariantViolation(f"equivalent shapes with {na} and {nb} tableaux")
    return found


def edge_set(graph: CalibrationGraph) -> frozenset:
    """Edges as unordered pairs of weights, independent of vertex numbering."""
    v = graph.vertices
    return frozenset(frozenset((v[a], v[b])) for a, b in graph.edges)


def graph_signature(graph: CalibrationGraph) -> tuple:
    """Sorted (component size, sorted degrees) pairs; an isomorphism invariant."""
    deg = graph.degrees()
    return tuple(sorted((len(c), tuple(sorted(deg[k] for k in c))) for c in graph.components))


def labelled_structure(graph: CalibrationGraph) -> frozenset:
    """Component labels with sizes; equal for weights sharing Z and P."""
    return frozenset((J, len(c)) for J, c in connected_components(graph))


def to_dot(graph: CalibrationGraph, name: str = "calibration") -> str:
    palette = ["lightblue", "lightpink", "palegreen", "khaki", "plum", "lightsalmon", "lightcyan", "wheat"]
    colour = {}
    for c, comp in enumerate(graph.components):
        for k in comp:
            colour[k] = palette[c % len(palette)]
    lines = [f"graph {name} {{", "  node [style=filled];"]
    for k, x in enumerate(graph.vertices):
        lines.append(f'  v{k} [label="{fmt_vector(x)}", fillcolor={colour[k]}];')
    for a, b in graph.edges:
        lines.append(f"  v{a} -- v{b};")
    lines.append("}")
    return "\n".join(lines)
