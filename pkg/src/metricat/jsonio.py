"""JSON schemas shared by the command-line front end.

Category format:
    {"objects": [{"id": 0, "label": "x"}, ...],
     "arrows":  [{"id": 0, "dom": 0, "cod": 0, "label": "id_x"}, ...],
     "identities": {"0": 0},
     "compose": [[first, second, result], ...]}

A weighted category wraps that as {"category": ..., "weights": {"0": "3/2"}}.
Weights accept integers, decimals, rational strings like "3/2", and "inf".
Metric spaces: {"points": ["p", "q"], "d": [[0, "3/2"], ["3/2", 0]]}.
Sequences and series: {"preperiod": [ids], "period": [ids]}; cones add
{"apex": obj, "startIndex": m, "legs": {...}}.
Rationals are emitted as strings to keep round trips exact.
"""
from __future__ import annotations

import json
from fractions import Fraction

from .coarse import CoarseGenerators
from .errors import InputFormatError
from .fincat import Arrow, FiniteCategory, Functor, Obj
from .limits import BoundedDescription, EssentialCone, EventuallyPeriodic
from .metricspace import FiniteMetricSpace
from .weight import Weight
from .weights import Metric1Space


def _require(cond: bool, msg: str):
    if not cond:
        raise InputFormatError(msg)


def parse_fraction(value) -> Fraction:
    try:
        if isinstance(value, str):
            return Fraction(value)
        if isinstance(value, bool):
            raise ValueError
        if isinstance(value, (int, float)):
            return Fraction(value)
    except (ValueError, ZeroDivisionError):
        pass
    raise InputFormatError(f"not a rational value: {value!r}")


def category_from_json(data) -> FiniteCategory:
    _require(isinstance(data, dict), "category must be an object")
    for key in ("objects", "arrows", "identities", "compose"):
        _require(key in data, f"category is missing {key!r}")
    try:
        objects = tuple(
            Obj(int(o["id"]), o.get("label")) for o in data["objects"]
        )
        arrows = tuple(
            Arrow(int(a["id"]), int(a["dom"]), int(a["cod"]), a.get("label"))
            for a in data["arrows"]
        )
        identities = {int(k): int(v) for k, v in data["identities"].items()}
        compose = {
            (int(first), int(second)): int(result)
            for first, second, result in data["compose"]
        }
    except (KeyError, TypeError, ValueError) as exc:
        raise InputFormatError(f"malformed category tables: {exc}") from exc
    return FiniteCategory(objects, arrows, identities, compose)


def category_to_json(cat: FiniteCategory) -> dict:
    return {
        "objects": [
            {"id": o.index, **({"label": o.label} if o.label is not None else {})}
            for o in cat.objects
        ],
        "arrows": [
            {
                "id": a.id,
                "dom": a.dom,
                "cod": a.cod,
                **({"label": a.label} if a.label is not None else {}),
            }
            for a in cat.arrows
        ],
        "identities": {str(k): v for k, v in sorted(cat.identity.items())},
        "compose": [[f, g, h] for (f, g), h in sorted(cat.composition.items())],
    }


def space_from_json(data) -> Metric1Space:
    _require(isinstance(data, dict), "weighted category must be an object")
    _require("category" in data, "weighted category is missing 'category'")
    _require("weights" in data, "weighted category is missing 'weights'")
    cat = category_from_json(data["category"])
    try:
        weights = {int(k): Weight.parse(v) for k, v in data["weights"].items()}
    except ValueError as exc:
        raise InputFormatError(f"malformed weights: {exc}") from exc
    try:
        return Metric1Space.from_weights(cat, weights)
    except Exception as exc:
        raise InputFormatError(str(exc)) from exc


def space_to_json(space: Metric1Space) -> dict:
    return {
        "category": category_to_json(space.category),
        "weights": {str(i): w.to_json() for i, w in enumerate(space.w)},
    }


def metric_space_from_json(data) -> FiniteMetricSpace:
    _require(isinstance(data, dict), "metric space must be an object")
    _require("points" in data and "d" in data, "metric space needs 'points' and 'd'")
    points = [str(p) for p in data["points"]]
    matrix = [[parse_fraction(v) for v in row] for row in data["d"]]
    try:
        return FiniteMetricSpace.from_matrix(points, matrix)
    except ValueError as exc:
        raise InputFormatError(str(exc)) from exc


def metric_space_to_json(space: FiniteMetricSpace) -> dict:
    return {
        "points": list(space.points),
        "d": [[str(v) for v in row] for row in space.d],
    }


def functor_from_json(data, source: FiniteCategory, target: FiniteCategory) -> Functor:
    _require(isinstance(data, dict), "functor must be an object")
    _require("objMap" in data and "arrMap" in data, "functor needs 'objMap' and 'arrMap'")
    try:
        obj_map = {int(k): int(v) for k, v in data["objMap"].items()}
        arr_map = {int(k): int(v) for k, v in data["arrMap"].items()}
    except (TypeError, ValueError) as exc:
        raise InputFormatError(f"malformed functor tables: {exc}") from exc
    return Functor(source, target, obj_map, arr_map)


def description_from_json(data):
    _require(isinstance(data, dict), "sequence description must be an object")
    if "entries" in data:
        return BoundedDescription(tuple(int(v) for v in data["entries"]))
    _require("period" in data, "description needs 'period' (or bounded 'entries')")
    return EventuallyPeriodic(
        tuple(int(v) for v in data.get("preperiod", [])),
        tuple(int(v) for v in data["period"]),
    )


def cone_from_json(data) -> EssentialCone:
    _require(isinstance(data, dict), "cone must be an object")
    _require("apex" in data and "legs" in data, "cone needs 'apex' and 'legs'")
    return EssentialCone(
        int(data.get("startIndex", 0)),
        int(data["apex"]),
        description_from_json(data["legs"]),
    )


def generators_from_json(data, cat: FiniteCategory) -> CoarseGenerators:
    _require(isinstance(data, dict), "generators must be an object")
    _require("list" in data, "generators need 'list'")
    sets = [frozenset(int(a) for a in s) for s in data["list"]]
    constant_from = data.get("constantFrom")
    return CoarseGenerators.normalized(
        cat, sets, int(constant_from) if constant_from is not None else None
    )


def dumps(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"
