"""Command-line interface.

Exit codes: 0 when the requested property holds (or output was produced),
1 when a check fails (the report carries a witness), 2 for invalid input.
Reports are printed as canonical JSON by default; --format text renders the
same content as plain lines.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import io
from .checks import (
    covering_agreement,
    covering_check,
    kan_check,
    separability_agreement,
    separable_direct,
    separable_via_lifting,
)
from .components import pi0, trivial_covering_check
from .core import validate
from .groupoids import pi1_presentation
from .harness import GenConfig, evaluate_instance, gen_morphism, gen_sset, run_campaign
from .maps import validate_map
from .standard import build_standard, parse_spec, union_spec


def _emit(args, doc, text: str | None = None) -> None:
    if args.format == "json":
        sys.stdout.write(io.dumps_canonical(doc))
    else:
        sys.stdout.write(text if text is not None else _render_lines(doc))


def _render_lines(doc, prefix: str = "") -> str:
    out = []
    for k in sorted(doc) if isinstance(doc, dict) else []:
        v = doc[k]
        if isinstance(v, dict):
            out.append(f"{prefix}{k}:")
            out.append(_render_lines(v, prefix + "  "))
        else:
            out.append(f"{prefix}{k}: {v}")
    return "\n".join(out) + ("\n" if not prefix else "")


def _load_object(path: str):
    return io.object_from_doc(io.load_json(path))


def _load_map(path: str):
    doc = io.load_json(path)
    if not isinstance(doc, dict):
        raise io.InterchangeError(f"{path}: expected a JSON object")
    return io.map_from_doc(doc, base_dir=Path(path).resolve().parent)


def _load_valid_map(path: str):
    h = _load_map(path)
    for label, rep in (
        ("source", validate(h.source)),
        ("target", validate(h.target)),
        ("map", validate_map(h)),
    ):
        if not rep.ok:
            raise io.InterchangeError(f"{path}: invalid {label}: {rep.failure}")
    return h


def _cmd_validate(args) -> int:
    doc = io.load_json(args.path)
    if isinstance(doc, dict) and "level" in doc:
        f = io.map_from_doc(doc, base_dir=Path(args.path).resolve().parent)
        reports = [validate(f.source), validate(f.target), validate_map(f)]
        rep = next((r for r in reports if not r.ok), reports[-1])
        kind = "map"
    else:
        rep = validate(io.object_from_doc(doc))
        kind = "object"
    out = {"check": "validate", "subject": kind, "verdict": rep.ok}
    if kind == "object":
        out["has_buffer"] = rep.has_buffer
    if rep.failure is not None:
        out["witness"] = {
            "kind": rep.failure.kind,
            "degree": rep.failure.degree,
            **rep.failure.detail,
        }
    _emit(args, out)
    return 0 if rep.ok else 1


def _cmd_pi0(args) -> int:
    X = _load_object(args.path)
    rep = validate(X)
    if not rep.ok:
        raise io.InterchangeError(f"{args.path}: invalid object: {rep.failure}")
    part = pi0(X)
    _emit(
        args,
        {
            "components": part.count,
            "vertex_class": part.vertex_class,
            "class_of": part.class_of,
        },
    )
    return 0


def _cmd_pi1(args) -> int:
    X = _load_object(args.path)
    rep = validate(X)
    if not rep.ok:
        raise io.InterchangeError(f"{args.path}: invalid object: {rep.failure}")
    pres = pi1_presentation(X)
    _emit(args, pres.to_doc(), pres.format_text())
    return 0


_CHECKS = {
    "trivial-covering": lambda h, args: trivial_covering_check(h),
    "covering": lambda h, args: covering_check(h),
    "kan": lambda h, args: kan_check(h, bound=args.bound),
    "separable-direct": lambda h, args: separable_direct(h),
    "separable-lifting": lambda h, args: separable_via_lifting(h),
}


def _cmd_check(args) -> int:
    h = _load_valid_map(args.map)
    rep = _CHECKS[args.kind](h, args)
    _emit(args, rep.to_doc())
    return 0 if rep.verdict else 1


def _campaign_config(args) -> GenConfig:
    return GenConfig(
        seed=args.seed,
        max_nondegenerate_dim=args.max_dim,
        max_cells_per_degree=args.max_cells,
        trials=args.trials,
    )


def _cmd_verify(args) -> int:
    if args.map is not None:
        h = _load_valid_map(args.map)
        if args.kind == "theorem1":
            rep = separability_agreement(h)
            _emit(args, rep.to_doc())
            return 0 if rep.agree else 1
        if args.kind == "theorem2":
            rep = covering_agreement(h)
            _emit(args, rep.to_doc())
            ok = rep.out_of_hypothesis or (rep.agree and rep.ambiguous_only)
            return 0 if ok else 1
        v = evaluate_instance(h)
        failures = v.implication_failures() + v.injection_failures()
        _emit(args, {"equivalence": "chain", "failures": failures, "ok": not failures})
        return 0 if not failures else 1
    campaign = run_campaign(_campaign_config(args), jobs=args.jobs)
    doc = campaign.to_doc()
    if args.kind == "theorem1":
        ok = not campaign.separability_disagreements and not campaign.witness_failures
    elif args.kind == "theorem2":
        ok = not campaign.covering_disagreements and not campaign.missing_lift_violations
    else:
        ok = not campaign.implication_violations and not campaign.injection_violations
    doc["ok"] = ok
    _emit(args, doc, _campaign_text(doc))
    return 0 if ok else 1


def _campaign_text(doc: dict) -> str:
    lines = [
        f"scored: {doc['scored']} (skipped {doc['skipped']}, curated {doc['curated']})",
        f"separability agreements: {doc['separability_agreements']}"
        f" (disagreements {len(doc['separability_disagreements'])})",
        f"kan instances: {doc['kan_instances']}, covering agreements:"
        f" {doc['covering_agreements']} (disagreements {len(doc['covering_disagreements'])})",
        f"implication violations: {len(doc['implication_violations'])}",
        f"injection violations: {len(doc['injection_violations'])}",
        f"witness failures: {len(doc['witness_failures'])}",
        f"adequacy: {doc['adequacy']}",
        f"ok: {doc['ok']}",
    ]
    return "\n".join(lines) + "\n"


def _cmd_gen(args) -> int:
    cfg = _campaign_config(args)
    if args.what == "object":
        doc = io.object_to_doc(gen_sset(cfg, trial=args.trial))
    else:
        _, h = gen_morphism(cfg, trial=args.trial)
        doc = io.map_to_doc(h)
    payload = io.dumps_canonical(doc)
    if args.output:
        Path(args.output).write_text(payload)
    else:
        sys.stdout.write(payload)
    return 0


def _cmd_standard(args) -> int:
    specs = [parse_spec(s) for s in args.spec]
    spec = specs[0] if len(specs) == 1 else union_spec(*specs)
    truncation = args.truncation
    if truncation is None:
        truncation = spec.nondegenerate_dim() + 1
    doc = io.object_to_doc(build_standard(spec, truncation))
    payload = io.dumps_canonical(doc)
    if args.output:
        Path(args.output).write_text(payload)
    else:
        sys.stdout.write(payload)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ssetkit",
        description="Classify maps of finite truncated simplicial sets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("json", "text"), default="json")

    p = sub.add_parser("validate", help="validate an object or map file")
    p.add_argument("path")
    add_format(p)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("pi0", help="connected components of an object file")
    p.add_argument("path")
    add_format(p)
    p.set_defaults(func=_cmd_pi0)

    p = sub.add_parser("pi1", help="fundamental groupoid presentation")
    p.add_argument("path")
    add_format(p)
    p.set_defaults(func=_cmd_pi1)

    p = sub.add_parser("check", help="run one classifier on a map file")
    p.add_argument("kind", choices=sorted(_CHECKS))
    p.add_argument("map")
    p.add_argument("--bound", type=int, default=None, help="degree bound for kan")
    add_format(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("verify", help="verify an equivalence on a map or a campaign")
    p.add_argument("kind", choices=("theorem1", "theorem2", "chain"))
    p.add_argument("map", nargs="?", default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--max-dim", type=int, default=2)
    p.add_argument("--max-cells", type=int, default=6)
    p.add_argument("--jobs", type=int, default=1)
    add_format(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("gen", help="emit a generated object or map")
    p.add_argument("what", choices=("object", "map"))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trial", type=int, default=0)
    p.add_argument("--trials", type=int, default=100, help=argparse.SUPPRESS)
    p.add_argument("--max-dim", type=int, default=2)
    p.add_argument("--max-cells", type=int, default=6)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("standard", help="emit a standard object")
    p.add_argument(
        "spec",
        nargs="+",
        help="spec strings like simplex:2, boundary:2, horn:2:1, circle,"
        " cyclic-cover:3; several specs form a disjoint union",
    )
    p.add_argument("-N", "--truncation", type=int, default=None)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_standard)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (io.InterchangeError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
