"""Command-line front end.

Every subcommand reads one JSON document (a file path or '-' for stdin) and
prints a deterministic report.  Exit codes: 0 success / property holds,
1 validation failure (report printed), 2 input error, 3 size guard.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import coarse, continuity, dagger, fixedpoint, geometry, jsonio, limits, mapping, weights
from .errors import InputFormatError, PreconditionError, SizeGuardError
from .fincat import validate_category, validate_functor

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_INPUT = 2
EXIT_GUARD = 3


def _load(path: str):
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputFormatError(
            f"malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        sys.stdout.write(jsonio.dumps(payload))
    else:
        for line in text_lines:
            print(line)


def cmd_validate(args) -> int:
    data = _load(args.input)
    if isinstance(data, dict) and "weights" in data:
        space = jsonio.space_from_json(data)
        cat_report = validate_category(space.category)
        met_report = weights.validate_metric1(space)
        ok = cat_report.ok and met_report.ok
        payload = {
            "category": cat_report.all_messages(),
            "metric": met_report.all_messages(),
            "ok": ok,
        }
        _emit(args, payload, [cat_report.summary(), met_report.summary()])
        return EXIT_OK if ok else EXIT_INVALID
    cat = jsonio.category_from_json(data if "category" not in data else data["category"])
    report = validate_category(cat)
    _emit(args, {"category": report.all_messages(), "ok": report.ok}, [report.summary()])
    return EXIT_OK if report.ok else EXIT_INVALID


def cmd_lawvere(args) -> int:
    space = jsonio.space_from_json(_load(args.input))
    report = weights.validate_metric1(space)
    if not report.ok:
        _emit(args, {"error": report.all_messages()}, [report.summary()])
        return EXIT_INVALID
    law = weights.lawvere(space)
    payload = {
        "points": list(law.points),
        "d": [[w.to_json() for w in row] for row in law.d],
        "symmetric": law.is_symmetric(),
    }
    lines = [f"points: {', '.join(law.points)}"]
    for i, row in enumerate(law.d):
        lines.append(f"d[{law.points[i]}] = [{', '.join(w.to_json() for w in row)}]")
    lines.append(f"symmetric: {law.is_symmetric()}")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_metrize(args) -> int:
    data = _load(args.input)
    if not isinstance(data, dict) or "category" not in data or "generators" not in data:
        raise InputFormatError("metrize input needs 'category' and 'generators'")
    cat = jsonio.category_from_json(data["category"])
    report = validate_category(cat)
    if not report.ok:
        _emit(args, {"error": report.all_messages()}, [report.summary()])
        return EXIT_INVALID
    gens = jsonio.generators_from_json(data["generators"], cat)
    space = coarse.metrize(gens)
    payload = jsonio.space_to_json(space)
    lines = [f"w({space.category.arrows[i]}) = {w.to_json()}" for i, w in enumerate(space.w)]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_map_space(args) -> int:
    data = _load(args.input)
    if not isinstance(data, dict) or "source" not in data or "target" not in data:
        raise InputFormatError("map-space input needs 'source' and 'target'")
    X = jsonio.space_from_json(data["source"])
    Y = jsonio.space_from_json(data["target"])
    for name, sp in (("source", X), ("target", Y)):
        rep = weights.validate_metric1(sp)
        if not rep.ok:
            _emit(args, {"error": {name: rep.all_messages()}}, [rep.summary()])
            return EXIT_INVALID
    ms = mapping.mapping_space(X, Y, guard=args.guard_functors)
    payload = jsonio.space_to_json(ms.space)
    payload["functors"] = [
        {"objMap": {str(k): v for k, v in f.obj_map.items()},
         "arrMap": {str(k): v for k, v in f.arr_map.items()}}
        for f in ms.functors
    ]
    lines = [
        f"continuous functors: {len(ms.functors)}",
        f"natural transformations: {len(ms.transformations)}",
    ]
    lines += [
        f"w({ms.space.category.arrows[i]}) = {w.to_json()}"
        for i, w in enumerate(ms.space.w)
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_dagger(args) -> int:
    space = jsonio.space_from_json(_load(args.input))
    report = weights.validate_metric1(space)
    if not report.ok:
        _emit(args, {"error": report.all_messages()}, [report.summary()])
        return EXIT_INVALID
    cls = dagger.symmetry_hierarchy(space, guard=args.guard_daggers)
    payload = {"class": str(cls)}
    lines = [f"symmetry class: {cls}"]
    if args.verbose:
        daggers = dagger.enumerate_daggers(space, guard=args.guard_daggers)
        payload["daggers"] = [list(d.mapping) for d in daggers]
        for i, d in enumerate(daggers):
            lines.append(f"dagger {i}: {list(d.mapping)} ({dagger.classify_dagger(space, d)})")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_continuity(args) -> int:
    data = _load(args.input)
    for key in ("source", "target", "functor"):
        if key not in data:
            raise InputFormatError(f"continuity input needs {key!r}")
    X = jsonio.space_from_json(data["source"])
    Y = jsonio.space_from_json(data["target"])
    fun = jsonio.functor_from_json(data["functor"], X.category, Y.category)
    rep = validate_functor(fun)
    if not rep.ok:
        _emit(args, {"error": rep.all_messages()}, [rep.summary()])
        return EXIT_INVALID
    verdicts = {"uniform": continuity.uniformly_continuous(fun, X, Y).holds}
    for o in range(len(X.category.objects)):
        verdicts[f"forward-at-object-{o}"] = continuity.object_continuity(
            fun, X, Y, o, continuity.FORWARD
        ).holds
        verdicts[f"backward-at-object-{o}"] = continuity.object_continuity(
            fun, X, Y, o, continuity.BACKWARD
        ).holds
    for a in range(len(X.category.arrows)):
        verdicts[f"forward-at-arrow-{a}"] = continuity.forward_continuous_at_arrow(
            fun, X, Y, a
        ).holds
        verdicts[f"backward-at-arrow-{a}"] = continuity.backward_continuous_at_arrow(
            fun, X, Y, a
        ).holds
    all_hold = all(verdicts.values())
    _emit(
        args,
        {"verdicts": verdicts, "ok": all_hold},
        [f"{k}: {'holds' if v else 'fails'}" for k, v in verdicts.items()],
    )
    return EXIT_OK if all_hold else EXIT_INVALID


def cmd_fixed_point(args) -> int:
    data = _load(args.input)
    for key in ("space", "functor", "start"):
        if key not in data:
            raise InputFormatError(f"fixed-point input needs {key!r}")
    space = jsonio.space_from_json(data["space"])
    fun = jsonio.functor_from_json(data["functor"], space.category, space.category)
    rep = validate_functor(fun)
    if not rep.ok:
        _emit(args, {"error": rep.all_messages()}, [rep.summary()])
        return EXIT_INVALID
    direction = data.get("direction", "forward")
    contractions = fixedpoint.find_natural_contractions(space, fun, direction)
    idx = int(data.get("contraction", 0))
    if not (0 <= idx < len(contractions)):
        _emit(
            args,
            {"error": f"no natural contraction with index {idx} ({len(contractions)} found)"},
            [f"no natural contraction with index {idx} ({len(contractions)} found)"],
        )
        return EXIT_INVALID
    try:
        outcome = fixedpoint.banach_iterate(space, fun, contractions[idx], int(data["start"]))
    except PreconditionError as exc:
        _emit(args, {"error": str(exc)}, [str(exc)])
        return EXIT_INVALID
    arrow = space.category.arrows[outcome.fixed.arrow]
    payload = {
        "fixedObject": outcome.fixed.fixed_object,
        "arrow": outcome.fixed.arrow,
        "weight": space.w[outcome.fixed.arrow].to_json(),
        "steps": outcome.steps_to_fixed,
    }
    lines = [
        f"fixed object: {space.category.objects[outcome.fixed.fixed_object]}",
        f"alpha-fixed arrow: {arrow} (weight {space.w[outcome.fixed.arrow].to_json()})",
        f"steps to fixed object: {outcome.steps_to_fixed}",
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_limits(args) -> int:
    data = _load(args.input)
    if "space" not in data:
        raise InputFormatError("limits input needs 'space'")
    space = jsonio.space_from_json(data["space"])
    direction = data.get("direction", "forward")
    backward = direction == "backward"
    results: dict[str, dict] = {}
    if "sequence" in data:
        desc = jsonio.description_from_json(data["sequence"])
        if "cone" not in data:
            raise InputFormatError("sequence checks need a 'cone'")
        cone = jsonio.cone_from_json(data["cone"])
        base = int(data.get("base", 0))
        if backward:
            cert = limits.check_backward_limiting_cone(
                space, limits.BackwardSequence(base, desc), cone
            )
        else:
            cert = limits.check_forward_limiting_cone(
                space, limits.ForwardSequence(base, desc), cone
            )
        results["sequence"] = _cert_json(cert)
    elif "series" in data:
        desc = jsonio.description_from_json(data["series"])
        series = limits.BackwardSeries(desc) if backward else limits.ForwardSeries(desc)
        cauchy = (
            limits.backward_check_cauchy(space, series)
            if backward
            else limits.check_cauchy(space, series)
        )
        results["cauchy"] = _cert_json(cauchy)
        if "cone" in data:
            cone = jsonio.cone_from_json(data["cone"])
            cert = (
                limits.backward_check_series_limit(space, series, cone)
                if backward
                else limits.check_series_limit(space, series, cone)
            )
            results["limit"] = _cert_json(cert)
    else:
        raise InputFormatError("limits input needs 'sequence' or 'series'")
    ok = all(r["verdict"] != limits.EXACT_NO for r in results.values())
    lines = [f"{k}: {r['verdict']}" + (f" ({r['detail']})" if r["detail"] else "") for k, r in results.items()]
    _emit(args, {"results": results, "ok": ok}, lines)
    return EXIT_OK if ok else EXIT_INVALID


def _cert_json(cert) -> dict:
    return {
        "verdict": cert.verdict,
        "limitingArrow": cert.limiting_arrow,
        "witnessIndex": cert.witness_index,
        "detail": cert.detail,
    }


def cmd_gh(args) -> int:
    data = _load(args.input)
    if "x" not in data or "y" not in data:
        raise InputFormatError("gh input needs 'x' and 'y'")
    x = jsonio.metric_space_from_json(data["x"])
    y = jsonio.metric_space_from_json(data["y"])
    value = geometry.gh_distance(x, y)
    _emit(args, {"ghDistance": str(value)}, [f"Gromov-Hausdorff distance: {value}"])
    return EXIT_OK


def cmd_lipschitz(args) -> int:
    data = _load(args.input)
    if "x" not in data or "y" not in data:
        raise InputFormatError("lipschitz input needs 'x' and 'y'")
    x = jsonio.metric_space_from_json(data["x"])
    y = jsonio.metric_space_from_json(data["y"])
    c = geometry.lipschitz_distance(x, y)
    _emit(
        args,
        {"bilipConstant": str(c), "logDistance": geometry.log_weight(c)},
        [f"Lipschitz distance: C = {c} (ln C = {geometry.log_weight(c)})"],
    )
    return EXIT_OK


def cmd_demo(args) -> int:
    if args.what != "bimetric":
        raise InputFormatError(f"unknown demo {args.what!r}")
    if args.input:
        data = _load(args.input)
        n = int(data["n"])
        a1 = {(int(k.split(",")[0]), int(k.split(",")[1])): jsonio.parse_fraction(v) for k, v in data["a1"].items()}
        a2 = {(int(k.split(",")[0]), int(k.split(",")[1])): jsonio.parse_fraction(v) for k, v in data["a2"].items()}
        h = jsonio.parse_fraction(data["h"])
    else:
        rng = random.Random(args.seed)
        n = 2
        base = Fraction(rng.randint(1, 6))
        delta = Fraction(rng.randint(0, 4))
        a1 = {(x, y): base for x in range(n) for y in range(n) if x != y}
        a2 = {(x, y): base + delta for x in range(n) for y in range(n) if x != y}
        h = delta + Fraction(rng.randint(0, 2))
    space, report = geometry.try_bimetric_space(n, a1, a2, h)
    if space is None:
        lines = ["bi-metric constraints violated:"] + report.all_messages()
        _emit(args, {"ok": False, "violations": report.all_messages()}, lines)
        return EXIT_INVALID
    payload = jsonio.space_to_json(space)
    payload["ok"] = True
    lines = ["bi-metric space constructed:"]
    lines += [f"w({space.category.arrows[i]}) = {w.to_json()}" for i, w in enumerate(space.w)]
    _emit(args, payload, lines)
    return EXIT_OK


_FLAG_DEFAULTS = {
    "format": "text",
    "seed": 0,
    "guard_functors": mapping.DEFAULT_GUARD,
    "guard_daggers": dagger.DEFAULT_GUARD,
    "verbose": False,
}


def _common_flags() -> argparse.ArgumentParser:
    # flags are accepted both before and after the subcommand; SUPPRESS keeps
    # a later parser from clobbering a value the earlier one already set
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--format", choices=("text", "json"))
    common.add_argument("--seed", type=int, help="seed for randomized demos")
    common.add_argument("--guard-functors", type=int)
    common.add_argument("--guard-daggers", type=int)
    common.add_argument("-v", "--verbose", action="store_true")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(
        prog="metricat",
        description="Weighted finite categories: validation, metrization, limits, "
        "mapping spaces, daggers, fixed points, and metric geometry.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, fn, needs_input=True):
        p = sub.add_parser(name, parents=[common])
        if needs_input:
            p.add_argument("input", help="JSON input path, or - for stdin")
        p.set_defaults(fn=fn)
        return p

    add("validate", cmd_validate)
    add("lawvere", cmd_lawvere)
    add("metrize", cmd_metrize)
    add("map-space", cmd_map_space)
    add("dagger", cmd_dagger)
    add("continuity", cmd_continuity)
    add("fixed-point", cmd_fixed_point)
    add("limits", cmd_limits)
    add("gh", cmd_gh)
    add("lipschitz", cmd_lipschitz)
    demo = sub.add_parser("demo", parents=[common])
    demo.add_argument("what", choices=("bimetric",))
    demo.add_argument("input", nargs="?", default=None, help="optional JSON parameters")
    demo.set_defaults(fn=cmd_demo)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name, value in _FLAG_DEFAULTS.items():
        if not hasattr(args, name):
            setattr(args, name, value)
    try:
        return args.fn(args)
    except InputFormatError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SizeGuardError as exc:
        print(f"size guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except PreconditionError as exc:
        print(f"precondition: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
