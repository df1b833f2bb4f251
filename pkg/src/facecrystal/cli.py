"""Command-line entry point.

Exit status: 0 success, 1 verification failure, 2 usage error, 3 internal
integrity error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, Sequence

from . import canonical, verify
from .closedform import FaceParams, classify_face_mps, count_face_mps
from .crystal import CrystalGraph, FaceSpec, build_crystal, export, face
from .errors import DomainError, IntegrityError
from .fock import eval_path, format_path, parse_path
from .partitions import Multipartition
from .weights import DominantWeight, format_content, format_hub

CACHE_ENV = "FACECRYSTAL_CACHE_DIR"


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def _base(args) -> DominantWeight:
    if len(args.weight) != args.e:
        raise DomainError(f"--lambda needs {args.e} entries, got {len(args.weight)}")
    return DominantWeight(args.e, args.weight)


def _face_params(args) -> FaceParams:
    a = args.weight
    if len(a) != args.e or any(x for k, x in enumerate(a) if k not in (1, 2)):
        raise DomainError("this command needs --lambda of the form 0,a1,a2,0,...")
    return FaceParams(args.e, a[1], a[2], args.j1, args.j2)


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _summary(graph: CrystalGraph) -> str:
    hist = Counter(v.defect for v in graph.vertices.values())
    lines = [
        f"vertices {len(graph)}  edges {len(graph.edges)}  max degree {graph.max_degree()}",
        "defect histogram: " + ", ".join(f"{d}:{n}" for d, n in sorted(hist.items())),
        f"{'content':<20} {'hub':<24} {'defect':>6} {'count':>6}",
    ]
    for v in graph.ordered_vertices():
        lines.append(f"{format_content(v.content):<20} {format_hub(v.hub):<24} {v.defect:>6} {v.count:>6}")
    return "\n".join(lines)


def _graph_out(graph: CrystalGraph, args) -> int:
    if args.format == "table":
        _emit(_summary(graph), args.output)
    else:
        _emit(export(graph, args.format).decode(), args.output)
        if args.output:
            print(_summary(graph).split("\n")[0])
    return 0


def cmd_crystal(args) -> int:
    graph = build_crystal(_base(args), args.max_degree, keep_multipartitions=args.keep_multipartitions)
    return _graph_out(graph, args)


def cmd_face(args) -> int:
    graph = face(FaceSpec(_base(args), args.interval), keep_multipartitions=args.keep_multipartitions)
    return _graph_out(graph, args)


def _cache_dir(args) -> Optional[str]:
    return args.cache_dir or os.environ.get(CACHE_ENV) or None


def _with_cache(args, charge, fn):
    directory = _cache_dir(args)
    if directory:
        canonical.load_cache(directory, charge)
    out = fn()
    if directory:
        canonical.save_cache(directory, charge)
    return out


def cmd_cbe(args) -> int:
    charge = _base(args).charge()
    mu = Multipartition.parse(args.mu, charge)
    g = _with_cache(args, charge, lambda: canonical.canonical_basis(mu))
    s = g.shape
    if args.format == "json":
        _emit(json.dumps({"leader": mu.to_lists(), "vector": g.vector.to_json(), "shape": s.to_json()}), args.output)
    else:
        _emit(f"G({mu})={g.render()}\nshape: {s.render('z', ascending=True)}", args.output)
    return 0


def cmd_fock_path(args) -> int:
    charge = _base(args).charge()
    steps = parse_path(args.path)
    x = eval_path(steps, charge)
    parts = None
    if args.strip:
        parts = _with_cache(args, charge, lambda: canonical.strip(x))
    if args.format == "json":
        data = {"path": format_path(steps), "vector": x.to_json()}
        if parts is not None:
            data["strip"] = [{"coef": c.to_json(), "leader": g.leader.to_lists()} for c, g in parts]
        _emit(json.dumps(data), args.output)
    else:
        lines = [x.render()]
        if parts is not None:
            lines.append(" + ".join(f"({c.render('v')})*G({g.leader})" for c, g in parts))
        _emit("\n".join(lines), args.output)
    return 0


def cmd_shape(args) -> int:
    charge = _base(args).charge()
    if (args.mu is None) == (args.path is None):
        raise DomainError("give exactly one of --mu or --path")
    if args.mu is not None:
        mu = Multipartition.parse(args.mu, charge)
        s = _with_cache(args, charge, lambda: canonical.canonical_basis(mu)).shape
    else:
        s = canonical.shape(eval_path(parse_path(args.path), charge))
    if args.format == "json":
        _emit(json.dumps(s.to_json()), args.output)
    else:
        _emit(s.render("z", ascending=True), args.output)
    return 0


def cmd_enumerate(args) -> int:
    entries = classify_face_mps(_face_params(args))
    if args.format == "json":
        _emit(json.dumps([c.to_json() for c in entries]), args.output)
    else:
        _emit("\n".join(f"w={c.w}  {c.mu}  path {format_path(c.path)}" for c in entries), args.output)
    return 0


def cmd_count(args) -> int:
    n = count_face_mps(_face_params(args))
    _emit(json.dumps({"count": n}) if args.format == "json" else str(n), args.output)
    return 0


def _suite_kwargs(args) -> dict:
    name = args.suite
    kw: dict = {}
    if name in ("shapes", "counting", "closed-fock", "tau") and args.max_a is not None:
        kw["max_a"] = args.max_a
    if name == "tau" and args.weight is not None:
        if args.e is None or args.interval is None:
            raise DomainError("verify tau with --lambda also needs --e and --interval")
        kw.update(e=args.e, weight=args.weight, interval=args.interval)
    if name == "added-nodes":
        kw.update(samples=args.samples, seed=args.seed)
    return kw


def _run_suite(name: str, kw: dict) -> list[dict]:
    return [c.to_json() for c in verify.SUITES[name](**kw)]


def cmd_verify(args) -> int:
    if args.suite == "all":
        names = list(verify.SUITES)
        if args.jobs > 1:
            with ProcessPoolExecutor(args.jobs) as pool:
                results = list(pool.map(_run_suite, names, [{}] * len(names)))
        else:
            results = [_run_suite(n, {}) for n in names]
        report = [c for r in results for c in r]
    else:
        report = _run_suite(args.suite, _suite_kwargs(args))
    ok = all(c["passed"] for c in report)
    _emit(json.dumps({"suite": args.suite, "passed": ok, "criteria": report}, indent=2), args.output)
    return 0 if ok else 1


def cmd_export(args) -> int:
    base = _base(args)
    if args.interval:
        graph = face(FaceSpec(base, args.interval))
    else:
        if args.max_degree is None:
            raise DomainError("export of the full crystal needs --max-degree")
        graph = build_crystal(base, args.max_degree)
    _emit(export(graph, args.format).decode(), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="facecrystal", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt=("text", "json"), weight_required=True):
        p.add_argument("--e", type=int, required=weight_required, help="rank of the affine algebra")
        p.add_argument(
            "--lambda", dest="weight", type=_int_list, required=weight_required,
            help="highest weight as comma-separated a_0,...,a_(e-1)",
        )
        p.add_argument("--format", choices=fmt, default=fmt[0])
        p.add_argument("-o", "--output", help="write to this file instead of stdout")
        p.add_argument("--cache-dir", help=f"directory for the G(mu) cache (or set {CACHE_ENV})")

    p = sub.add_parser("crystal", help="block-reduced crystal up to a degree bound")
    common(p, ("table", "dot", "json"))
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--keep-multipartitions", action="store_true")
    p.set_defaults(fn=cmd_crystal)

    p = sub.add_parser("face", help="the face on a cyclic interval of residues")
    common(p, ("table", "dot", "json"))
    p.add_argument("--interval", type=_int_list, required=True)
    p.add_argument("--keep-multipartitions", action="store_true")
    p.set_defaults(fn=cmd_face)

    p = sub.add_parser("cbe", help="canonical basis element G(mu)")
    common(p)
    p.add_argument("--mu", required=True, help="multipartition such as '[[2],[1],[]]'")
    p.set_defaults(fn=cmd_cbe)

    p = sub.add_parser("fock-path", help="evaluate divided powers along a path")
    common(p)
    p.add_argument("--path", required=True, help="steps applied left to right, e.g. '2^1 1^2 2^2'")
    p.add_argument("--strip", action="store_true", help="also decompose into canonical basis elements")
    p.set_defaults(fn=cmd_fock_path)

    p = sub.add_parser("shape", help="shape polynomial of G(mu) or of a path vector")
    common(p)
    p.add_argument("--mu")
    p.add_argument("--path")
    p.set_defaults(fn=cmd_shape)

    for name, fn, text in (
        ("enumerate", cmd_enumerate, "e-regular multipartitions at a two-residue face vertex"),
        ("count", cmd_count, "number of e-regular multipartitions at a two-residue face vertex"),
    ):
        p = sub.add_parser(name, help=text)
        common(p)
        p.add_argument("--j1", type=int, required=True)
        p.add_argument("--j2", type=int, required=True)
        p.set_defaults(fn=fn)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=list(verify.SUITES) + ["all"])
    p.add_argument("--e", type=int)
    p.add_argument("--lambda", dest="weight", type=_int_list)
    p.add_argument("--interval", type=_int_list)
    p.add_argument("--max-a", type=int)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=20240611)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("-o", "--output")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("export", help="write a face or truncated crystal as DOT or JSON")
    common(p, ("dot", "json"))
    p.add_argument("--interval", type=_int_list)
    p.add_argument("--max-degree", type=int)
    p.set_defaults(fn=cmd_export)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except DomainError as exc:
        print(f"facecrystal: error: {exc}", file=sys.stderr)
        return 2
    except IntegrityError as exc:
        print(f"facecrystal: integrity error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
