"""JSON forms of weights, roots, shapes and tableau sets; rationals travel as "p/q" strings."""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Sequence

from .errors import InvalidShape
from .roots import RootSystem, build_root_system, fmt_rational
from .shapes import PlacedShape, TableauSet, placed_shape


def parse_rational(s: Any) -> Fraction:
    try:
        return Fraction(str(s).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidShape(f"not a rational number: {s!r}") from exc


def parse_vector(text: str) -> tuple[Fraction, ...]:
    """'0,1/2,1' -> (0, 1/2, 1)."""
    parts = [p for p in text.replace(" ", "").split(",") if p]
    return tuple(parse_rational(p) for p in parts)


def parse_simple_coords(R: RootSystem, text: str) -> list[tuple]:
    """'0,1;1,1' -> roots given by coefficients on the simple roots."""
    out = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        coeffs = [int(parse_rational(c)) for c in chunk.split(",")]
        try:
            r = R.from_simple_coordinates(coeffs)
        except ValueError as exc:
            raise InvalidShape(str(exc)) from exc
        if not R.is_root(r):
            raise InvalidShape(f"{chunk} is not a root of {R.name}")
        out.append(r)
    return out


def weight_to_json(x: Sequence) -> list[str]:
    return [fmt_rational(Fraction(v)) for v in x]


def shape_to_json(shape: PlacedShape) -> dict:
    R = shape.system
    return {
        "type": R.family,
        "rank": R.rank,
        "gamma": weight_to_json(shape.gamma),
        "J": [list(r) for r in sorted(shape.J, key=lambda r: (R.height(r), r))],
    }


def shape_from_json(data: dict | str, *, dominant: bool = True) -> PlacedShape:
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise InvalidShape(f"invalid shape JSON: {exc}") from exc
    try:
        R = build_root_system(data["type"], int(data["rank"]))
        gamma = tuple(parse_rational(v) for v in data["gamma"])
        J = [tuple(int(c) for c in r) for r in data.get("J", [])]
    except (KeyError, TypeError) as exc:
        raise InvalidShape(f"invalid shape JSON: missing or malformed {exc}") from exc
    return placed_shape(R, gamma, J, dominant=dominant)


def tableau_set_to_json(ts: TableauSet) -> dict:
    return {"shape": shape_to_json(ts.shape), "count": len(ts), "elements": [w.oneline() for w in ts]}


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)
