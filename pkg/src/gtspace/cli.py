"""Command-line driver: ``gtspace <command> ...``.

Exit codes: 0 success (valid / pass / witness found), 1 verification failure
or exhausted search, 2 usage, parse or validation error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import core, subspace
from .enumeration import EnumBounds, canonicalize, enumerate_strong_gts
from .errors import GtError, ParseError
from .mapping import CLASSES, classify, classify_full, mapping_from_doc
from .verify import (
    PRESETS,
    REGISTRY_BY_ID,
    Witness,
    check_witness,
    mine_counterexample,
    run_suite,
)


class UsageError(Exception):
    pass


def _dump(doc) -> str:
    return json.dumps(doc, sort_keys=True, ensure_ascii=False)


def _read_input(ref: str | None) -> tuple[dict, str | None]:
    """Inline JSON, ``-`` for stdin, or a file path; returns (doc, base_dir)."""
    if ref is None:
        raise UsageError("--input is required")
    base_dir = None
    if ref == "-":
        text = sys.stdin.read()
    elif ref.lstrip().startswith("{"):
        text = ref
    else:
        try:
            with open(ref, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read {ref}: {exc}") from exc
        base_dir = os.path.dirname(os.path.abspath(ref))
    try:
        return json.loads(text), base_dir
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc


def _parse_labels(text: str | None) -> list[str]:
    if text is None:
        raise UsageError("a --set is required")
    text = text.strip()
    if text.startswith("["):
        try:
            return [str(x) for x in json.loads(text)]
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid label list: {exc}") from exc
    return [part.strip() for part in text.split(",") if part.strip()]


def _parse_bounds(text: str) -> tuple[int, int]:
    try:
        dom, cod = text.lower().split("x")
        return int(dom), int(cod)
    except ValueError:
        raise UsageError(f"--bounds must look like NxM, got {text!r}") from None


def _bounds(args) -> EnumBounds:
    dom, cod = _parse_bounds(args.bounds)
    if getattr(args, "random", None):
        return EnumBounds(dom, cod, mode="random", seed=args.seed, count=args.random,
                          dedupe_iso=args.dedupe_iso)
    return EnumBounds(dom, cod, dedupe_iso=getattr(args, "dedupe_iso", False))


def _emit(args, doc, text: str | None = None) -> None:
    if args.format == "text" and text is not None:
        print(text)
    else:
        print(_dump(doc))


# -- commands ---------------------------------------------------------------


def cmd_validate(args) -> int:
    doc, _ = _read_input(args.input)
    space = core.space_from_doc(doc)
    out = {
        "valid": True,
        "strong": True,
        "is_topology": core.is_topology(space),
        "space": core.space_to_doc(space),
    }
    kind = "topology" if out["is_topology"] else "strong GT (not a topology)"
    _emit(args, out, f"valid {kind}: {_dump(out['space'])}")
    return 0


def cmd_compute(args) -> int:
    doc, _ = _read_input(args.input)
    space = core.space_from_doc(doc)
    if args.op == "nbhd":
        if args.point is None:
            raise UsageError("--op nbhd needs --point")
        result = core.neighborhood_core(space, space.point_index(args.point))
    else:
        b = space.mask_from_labels(_parse_labels(args.set))
        op = {"interior": core.interior, "closure": core.closure, "derived": core.derived_set}
        result = op[args.op](space, b)
    labels = space.label_set(result)
    _emit(args, labels, "{" + ",".join(labels) + "}")
    return 0


def cmd_classify(args) -> int:
    doc, base_dir = _read_input(args.input)
    f = mapping_from_doc(doc, base_dir)
    flags = classify(f)
    out = {"flags": flags}
    status = 0
    if args.full:
        vec = classify_full(f)
        out["conditions"] = {c: list(vec.conditions(c)) for c in CLASSES}
        out["hereditary"] = dict(vec.hereditary)
        out["disagreements"] = vec.disagreements()
        status = 1 if out["disagreements"] else 0
    text = "\n".join(f"{c:<12} {flags[c]}" for c in CLASSES)
    if args.full:
        text += "\n" + "\n".join(
            f"hereditarily {c:<12} {v}" for c, v in out["hereditary"].items()
        )
        if out["disagreements"]:
            text += "\nDISAGREEMENT in " + ", ".join(out["disagreements"])
    _emit(args, out, text)
    return status


def cmd_subspace(args) -> int:
    doc, _ = _read_input(args.input)
    space = core.space_from_doc(doc)
    carrier = space.mask_from_labels(_parse_labels(args.carrier))
    emb = subspace.induce_subspace(space, carrier)
    out = {"subspace": core.space_to_doc(emb.child)}
    if args.op:
        a = space.mask_from_labels(_parse_labels(args.set))
        if args.op == "closure":
            result = space.label_set(subspace.relative_closure(emb, a))
        elif args.op == "interior":
            result = space.label_set(subspace.relative_interior(emb, a))
        else:
            trace = subspace.closed_trace_witness(emb, a)
            result = None if trace is None else space.label_set(trace)
        out["op"] = args.op
        out["result"] = result
    _emit(args, out)
    return 0


def cmd_verify(args) -> int:
    bounds = _bounds(args)
    theorems = None
    if args.theorems:
        theorems = [t.strip() for t in args.theorems.split(",") if t.strip()]
        unknown = set(theorems) - REGISTRY_BY_ID.keys()
        if unknown:
            raise UsageError(f"unknown theorem ids {sorted(unknown)}")
    report = run_suite(bounds, theorems, workers=args.workers)
    if args.format == "text":
        print(report.render_text())
    else:
        print(report.to_json())
    return 0 if report.passed else 1


def cmd_mine(args) -> int:
    if args.preset:
        key = args.preset.replace("pseudo-open", "pseudo_open")
        if key not in PRESETS:
            raise UsageError(f"unknown preset {args.preset!r}; choose from {sorted(PRESETS)}")
        premise, conclusion = PRESETS[key]
    elif args.premise and args.conclusion:
        premise, conclusion = args.premise, args.conclusion
    else:
        raise UsageError("give a preset or both --premise and --conclusion")
    try:
        result = mine_counterexample(premise, conclusion, _bounds(args), workers=args.workers)
    except ValueError as exc:
        if isinstance(exc, GtError):
            raise
        raise UsageError(str(exc)) from None
    doc = result.to_doc()
    if isinstance(result, Witness):
        doc["verified"] = check_witness(result)
        _emit(args, doc)
        return 0
    _emit(args, doc)
    return 1


def cmd_enumerate(args) -> int:
    if args.count and args.stream:
        raise UsageError("--count and --stream are exclusive")
    spaces = enumerate_strong_gts(args.n, dedupe_iso=args.dedupe_iso)
    if args.stream:
        for space in spaces:
            line = core.space_to_doc(space)
            if args.dedupe_iso:
                line["canonical"] = list(canonicalize(space).opens)
            print(_dump(line))
    else:
        print(sum(1 for _ in spaces))
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    parser = argparse.ArgumentParser(prog="gtspace", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="validate a space document")
    p.add_argument("--input")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("compute", parents=[common], help="interior, closure, derived set, core")
    p.add_argument("--input")
    p.add_argument("--op", choices=("interior", "closure", "derived", "nbhd"), required=True)
    p.add_argument("--set", help="comma-separated labels or a JSON list; empty for ∅")
    p.add_argument("--point")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("classify", parents=[common], help="classify a mapping document")
    p.add_argument("--input")
    p.add_argument("--full", action="store_true", help="all characterizations + hereditary")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("subspace", parents=[common], help="induced subspace on a carrier")
    p.add_argument("--input")
    p.add_argument("--carrier", required=True)
    p.add_argument("--op", choices=("closure", "interior", "trace"))
    p.add_argument("--set")
    p.set_defaults(func=cmd_subspace)

    for name, func in (("verify", cmd_verify), ("mine", cmd_mine)):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("--bounds", default="3x3" if name == "verify" else "4x3")
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--dedupe-iso", action="store_true")
        p.set_defaults(func=func)
        if name == "verify":
            p.add_argument("--theorems", help="comma-separated case ids (default: all)")
            p.add_argument("--random", type=int, metavar="COUNT",
                           help="seeded random population of COUNT instances")
        else:
            p.add_argument("preset", nargs="?", help=", ".join(sorted(PRESETS)))
            p.add_argument("--premise")
            p.add_argument("--conclusion")

    p = sub.add_parser("enumerate", parents=[common], help="strong GTs on n points")
    p.add_argument("n", type=int)
    p.add_argument("--count", action="store_true")
    p.add_argument("--stream", action="store_true", help="JSON-lines, one space per line")
    p.add_argument("--dedupe-iso", action="store_true")
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(_dump({"error": "UsageError", "message": str(exc)}))
        return 2
    except GtError as exc:
        print(_dump(exc.to_doc()))
        return 2


if __name__ == "__main__":
    sys.exit(main())
