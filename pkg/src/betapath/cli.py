"""Command-line front end: one subcommand per operation, JSON in and JSON out.

Hypergraph input is read from ``--input`` (default stdin). Options taking a
JSON value accept it inline or as ``@path``. Exit status is 0 on success,
1 when an operation fails and 2 on usage or parse errors; failures print an
error object on stdout.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Callable, TextIO

from . import beta, core, generators, pathsearch, properties, skeleton
from .beta import BetaSequence
from .core import Hypergraph
from .errors import BetapathError
from .pathsearch import Labeling
from .skeleton import GeneratorSet


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # type: ignore[override]
        raise UsageError(message)


def _json_arg(raw: str) -> Any:
    text = Path(raw[1:]).read_text() if raw.startswith("@") else raw
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON argument: {exc}") from exc


def _infer_k(H: Hypergraph, k: int | None) -> int:
    if k is not None:
        return k
    sizes = set(H.sizes())
    if len(sizes) != 1:
        raise UsageError("hypergraph is not uniform; pass --k")
    return sizes.pop()


def _seq(H: Hypergraph, raw: str) -> BetaSequence:
    return BetaSequence.from_json(_json_arg(raw), H)


def _generator(H: Hypergraph, raw: str) -> GeneratorSet:
    return GeneratorSet.from_json(_json_arg(raw), H)


def _roots(args) -> str | dict[str, str]:
    if args.root_rule == "least":
        return "least"
    if not args.roots:
        raise UsageError("--root-rule explicit needs --roots")
    return _json_arg(args.roots)


def cmd_validate(args, H):
    return core.validate(H, args.k, args.linear).to_json()


def cmd_dual(args, H):
    D, corr = core.dual(H)
    return {**D.to_json(), "correspondence": corr.to_json()}


def cmd_double_dual(args, H):
    return core.double_dual_correspondence(H).to_json()


def cmd_beta_check(args, H):
    s = _seq(H, args.seq)
    ok = beta.is_beta_path(H, s) if s.kind == "path" else beta.is_beta_cycle(H, s)
    return {"kind": s.kind, "valid": ok}


def cmd_beta_cycles(args, H):
    limit = args.limit if args.limit is not None else beta.default_limit()
    return beta.enumerate_beta_cycles(H, args.through, limit).to_json()


def cmd_reduce(args, H):
    return beta.reduce_paths_to_cycle(H, _seq(H, args.p1), _seq(H, args.p2)).to_json()


def cmd_splice(args, H):
    return beta.splice_reduce(H, _seq(H, args.p1), _seq(H, args.p2)).to_json()


def cmd_dual_transform(args, H):
    D, corr = core.dual(H)
    P = _seq(H, args.path)
    image = beta.dual_transform(P, corr)
    out: dict[str, Any] = {"path": image.to_json(), "dual": D.to_json()}
    if args.labeling:
        phi = Labeling.from_json(_json_arg(args.labeling), H)
        psi = beta.induced_labeling(phi, corr)
        out["induced_labeling"] = psi.to_json(D)
        out["increasing_in"] = beta.is_increasing_beta(P, phi)
        out["increasing_out"] = beta.is_increasing_beta(image, psi)
    return out


def cmd_peel(args, H):
    return properties.peel_P_ell(H, args.ell, args.d).to_json()


def cmd_peel_dual(args, H):
    return properties.peel_P2_star(H, args.d).to_json(H, edges=True)


def cmd_duality_check(args, H):
    return {"d": args.d, "holds": properties.p2_duality_check(H, args.d)}


def cmd_skeleton(args, H):
    return skeleton.build_skeleton(H, _generator(H, args.generator)).to_json()


def cmd_canonical_t(args, H):
    return skeleton.canonical_generator(H, _roots(args)).to_json(H)


def cmd_cycle_certs(args, H):
    if args.generator:
        T = _generator(H, args.generator)
    else:
        T = skeleton.canonical_generator(H, _roots(args))
    f = H.edge_index(args.f)
    certs = skeleton.generator_cycle_certificates(H, T, f)
    return {"edge": H.edge_names[f], "count": len(certs), "cycles": [c.to_json() for c in certs]}


def cmd_witness(args, H):
    T = _generator(H, args.generator)
    gp = [str(v) for v in _json_arg(args.gprime)]
    return skeleton.extract_witness(H, T, gp, args.m).to_json(H)


def _labeling_for(args, H, mode):
    if args.labeling:
        return Labeling.from_json(_json_arg(args.labeling), H)
    if mode == "edge":
        return Labeling.from_sequence("edges", range(H.num_edges))
    return Labeling.from_sequence("vertices", H.vertices)


def cmd_path_check(args, H):
    k = _infer_k(H, args.k)
    P = pathsearch.derive_edges(H, k, _json_arg(args.path))
    phi = _labeling_for(args, H, args.mode)
    return {"path": P.to_json(H), "mode": args.mode, "increasing": pathsearch.satisfies(P, phi, args.mode)}


def cmd_longest(args, H):
    k = _infer_k(H, args.k)
    phi = _labeling_for(args, H, args.mode)
    P = pathsearch.longest_increasing_path(H, k, phi, args.mode)
    return {"mode": args.mode, "path": P.to_json(H)}


def cmd_adversarial(args, H):
    k = _infer_k(H, args.k)
    value, phi = pathsearch.adversarial_min_max(H, k, args.mode, args.bound)
    return {"mode": args.mode, "value": value, "labeling": phi.to_json(H)}


def cmd_gen(args, H):
    if args.spec:
        spec = generators.FamilySpec.from_json(_json_arg(args.spec))
    else:
        if not args.family:
            raise UsageError("gen needs --family or --spec")
        spec = generators.FamilySpec(args.family, args.k, args.m, args.n, args.p, args.seed)
    return generators.make(spec).to_json()


Handler = Callable[[argparse.Namespace, Hypergraph], Any]


def build_parser() -> _Parser:
    common = _Parser(add_help=False)
    common.add_argument("-i", "--input", default="-", help="hypergraph JSON file (default: stdin)")
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--pretty", action="store_true", help="indent the JSON output")

    parser = _Parser(prog="betapath", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, fn: Handler, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=fn)
        return p

    def roots(p):
        p.add_argument("--root-rule", choices=["least", "explicit"], default="least")
        p.add_argument("--roots", help='JSON map {"component0": "v", ...}')

    p = add("validate", cmd_validate, "report uniformity and linearity violations")
    p.add_argument("--k", type=int)
    p.add_argument("--linear", action="store_true")
    add("dual", cmd_dual, "dual hypergraph with correspondence table")
    add("double-dual", cmd_double_dual, "bijection between dual(dual(H)) and H")
    p = add("beta-check", cmd_beta_check, "check a beta-path or beta-cycle")
    p.add_argument("--seq", required=True)
    p = add("beta-cycles", cmd_beta_cycles, "enumerate beta-cycles")
    p.add_argument("--through", default="all", help="all, v:<vertex> or e:<edge>")
    p.add_argument("--limit", type=int)
    for name, fn, doc in (
        ("reduce", cmd_reduce, "close two beta-paths into a beta-cycle"),
        ("splice", cmd_splice, "join and reduce two beta-paths"),
    ):
        p = add(name, fn, doc)
        p.add_argument("--p1", required=True)
        p.add_argument("--p2", required=True)
    p = add("dual-transform", cmd_dual_transform, "map a beta-path into the dual")
    p.add_argument("--path", required=True)
    p.add_argument("--labeling")
    p = add("peel", cmd_peel, "finite-threshold P_ell witness")
    p.add_argument("--ell", type=int, default=2)
    p.add_argument("--d", type=int, default=2)
    p = add("peel-dual", cmd_peel_dual, "finite-threshold P2* witness")
    p.add_argument("--d", type=int, default=2)
    p = add("duality-check", cmd_duality_check, "compare P_2 of H with P2* of its dual")
    p.add_argument("--d", type=int, default=2)
    p = add("skeleton", cmd_skeleton, "skeleton generated by a generator set")
    p.add_argument("--generator", required=True)
    p = add("canonical-t", cmd_canonical_t, "canonical generator from beta-path reachability")
    roots(p)
    p = add("cycle-certs", cmd_cycle_certs, "beta-cycle certificates for one edge")
    p.add_argument("--f", required=True, help="edge name or index")
    p.add_argument("--generator")
    roots(p)
    p = add("witness", cmd_witness, "extract the edge witness set")
    p.add_argument("--generator", required=True)
    p.add_argument("--gprime", required=True, help="JSON list of vertices")
    p.add_argument("--m", type=int, default=2)
    for name, fn, doc in (
        ("path-check", cmd_path_check, "check a loose path against a labeling"),
        ("longest", cmd_longest, "longest increasing loose path"),
        ("adversarial", cmd_adversarial, "labeling minimizing the longest increasing path"),
    ):
        p = add(name, fn, doc)
        p.add_argument("--k", type=int)
        p.add_argument("--mode", choices=pathsearch.MODES, default="full")
        if name == "adversarial":
            p.add_argument("--bound", type=int, default=pathsearch.DEFAULT_SEARCH_BOUND)
        else:
            p.add_argument("--labeling")
        if name == "path-check":
            p.add_argument("--path", required=True, help="JSON list of vertices")
    p = sub.add_parser("gen", help="generate an instance family")
    p.add_argument("--out")
    p.add_argument("--pretty", action="store_true")
    p.add_argument("--family", choices=generators.FAMILIES)
    p.add_argument("--spec", help="FamilySpec JSON")
    for flag in ("--k", "--m", "--n", "--p"):
        p.add_argument(flag, type=int)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_gen, input=None)
    return parser


def _dump(obj: Any, pretty: bool) -> str:
    return json.dumps(obj, indent=2 if pretty else None) + "\n"


def main(argv: list[str] | None = None, stdin: TextIO | None = None, stdout: TextIO | None = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    pretty = False
    try:
        args = build_parser().parse_args(argv)
        pretty = args.pretty
        H = None
        if args.input is not None:
            text = stdin.read() if args.input == "-" else Path(args.input).read_text()
            try:
                data = json.loads(text)
            except json.JSONDecodeError as exc:
                stdout.write(_dump({"error": "ParseError", "message": str(exc)}, pretty))
                return 2
            H = Hypergraph.from_json(data)
        result = args.func(args, H)
    except UsageError as exc:
        stdout.write(_dump({"error": "UsageError", "message": str(exc)}, pretty))
        return 2
    except BetapathError as exc:
        stdout.write(_dump(exc.to_json(), pretty))
        return 1
    except (KeyError, ValueError, OSError) as exc:
        stdout.write(_dump({"error": type(exc).__name__, "message": str(exc)}, pretty))
        return 1
    text = _dump(result, pretty)
    if args.out:
        Path(args.out).write_text(text)
    else:
        stdout.write(text)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
