"""Command-line front end.

Commands: info, wiring, pi1 boundary|complement, inclusion, simplify,
verify.  Inputs are arrangement or wiring-diagram JSON files; bare names
that don't exist on disk are looked up in the fixture directory (override
with the ARRPI_FIXTURES environment variable).  Exit codes: 0 success,
1 domain error, 2 parse/input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import arvola, boundary, inclusion, simplify, verifier, wiring
from .arrangement import (
    Arrangement,
    arrangement_from_dict,
    cycle_basis,
    incidence_graph,
    singular_points,
)
from .errors import ArrpiError, DomainError, InputError
from .words import Presentation, gen_str, parse_word


def fixture_dir() -> Path:
    env = os.environ.get("ARRPI_FIXTURES")
    if env:
        return Path(env)
    return Path(__file__).resolve().parent / "fixtures"


def resolve_input(name: str) -> Path:
    p = Path(name)
    if p.exists():
        return p
    candidate = fixture_dir() / name
    if candidate.exists():
        return candidate
    raise InputError(f"no such file: {name} (also tried {candidate})")


def load_any(name: str):
    """Returns ('arr', Arrangement) or ('wd', BraidedWiringDiagram)."""
    path = resolve_input(name)
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON at line {exc.lineno}") from exc
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    if "lines" in data:
        return "arr", arrangement_from_dict(data)
    if "events" in data:
        return "wd", wiring.wiring_from_dict(data)
    raise InputError(f"{path}: neither an arrangement nor a wiring diagram")


def need_diagram(kind, obj, shear):
    if kind == "wd":
        return obj, None
    lam = Fraction(shear) if shear is not None else None
    return wiring.compute_wiring(obj, lam), obj


def presentation_payload(p: Presentation) -> dict:
    return {
        "generators": [gen_str(g) for g in p.generators],
        "families": [[str(w) for w in fam] for fam in p.families],
        "relators": [str(r) for r in p.relators],
        "expanded_relators": [str(r) for r in p.expanded()],
    }


def emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text, end="" if text.endswith("\n") else "\n")


# -- commands -------------------------------------------------------------------


def cmd_info(args) -> int:
    kind, obj = load_any(args.input)
    if kind != "arr":
        raise DomainError("info expects an arrangement file")
    arr: Arrangement = obj
    pts = singular_points(arr)
    graph = incidence_graph(arr)
    basis = cycle_basis(graph)
    if args.dot:
        Path(args.dot).write_text(graph.to_dot())
    payload = {
        "lines": len(arr.lines),
        "infinity": arr.infinity,
        "field_d": arr.field.d,
        "singular_points": [
            {
                "incident": list(p.incident),
                "multiplicity": p.multiplicity,
                "at_infinity": p.at_infinity,
            }
            for p in pts
        ],
        "vertex_count": graph.vertex_count(),
        "edge_count": graph.edge_count(),
        "b1": graph.b1(),
        "cycle_pairs": [list(p) for p in basis.pairs],
    }
    lines = [
        f"lines: {len(arr.lines)} (infinity = L{arr.infinity}, field d = {arr.field.d})",
        f"singular points: {len(pts)}",
    ]
    for p in pts:
        inf = " (at infinity)" if p.at_infinity else ""
        lines.append(f"  {p.label()}  multiplicity {p.multiplicity}{inf}")
    lines.append(
        f"incidence graph: {graph.vertex_count()} vertices, {graph.edge_count()} edges, "
        f"b1 = {graph.b1()}"
    )
    lines.append(
        "cycle pairs: " + ", ".join(f"({s},{t})" for s, t in basis.pairs)
    )
    emit(args, payload, "\n".join(lines))
    return 0


def cmd_wiring(args) -> int:
    kind, obj = load_any(args.input)
    if kind == "arr":
        lam = Fraction(args.shear) if args.shear is not None else None
        bwd = wiring.compute_wiring(obj, lam)
    else:
        bwd = obj
    if args.svg:
        Path(args.svg).write_text(wiring.render_svg(bwd))
    out = wiring.dump_wiring(bwd)
    if args.output:
        Path(args.output).write_text(out)
        print(f"wrote {args.output}")
    else:
        print(out, end="")
    return 0


def _pick_rule(name: str) -> arvola.LabelRule:
    return arvola.LabelRule(name)


def cmd_pi1(args) -> int:
    kind, obj = load_any(args.input)
    if args.which == "boundary":
        if kind == "arr":
            pres = boundary.boundary_presentation(obj)
        else:
            pres = boundary.boundary_presentation_from_diagram(obj, args.infinity)
    else:
        bwd, _ = need_diagram(kind, obj, args.shear)
        if args.mode == "arvola":
            pres = arvola.complement_presentation_arvola(bwd, _pick_rule(args.convention))
        elif args.mode == "randell":
            pres = inclusion.randell_presentation(bwd)
        else:
            pres = inclusion.complement_presentation_inclusion(
                bwd, args.variant, _pick_rule(args.convention), args.infinity
            )
    emit(args, presentation_payload(pres), pres.describe())
    return 0


def cmd_inclusion(args) -> int:
    kind, obj = load_any(args.input)
    bwd, _ = need_diagram(kind, obj, args.shear)
    data = inclusion.inclusion_data(
        bwd, args.variant, _pick_rule(args.convention), args.infinity
    )
    kernel = inclusion.kernel_generators(bwd, _pick_rule(args.convention), args.infinity)
    payload = {
        "variant": data.variant,
        "pairs": [
            {
                "pair": list(pd.pair),
                "delta_l": str(pd.delta_l),
                "mu": str(pd.mu),
                "delta_r": str(pd.delta_r),
                "image": str(pd.image),
                "kernel_word": str(pd.kernel_word),
            }
            for pd in data.pairs
        ],
        "kernel_extra": str(kernel[-1]),
    }
    rows = [
        f"({pd.pair[0]},{pd.pair[1]}): delta_l = {pd.delta_l} | mu = {pd.mu} | "
        f"delta_r = {pd.delta_r} | image = {pd.image} | kernel = {pd.kernel_word}"
        for pd in data.pairs
    ]
    rows.append(f"kernel also contains: {kernel[-1]}")
    emit(args, payload, "\n".join(rows))
    return 0


def cmd_simplify(args) -> int:
    path = resolve_input(args.input)
    try:
        data = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read presentation {path}: {exc}") from exc
    try:
        gens = [parse_word(g) for g in data["generators"]]
        gen_list = []
        for g in gens:
            if len(g.letters) != 1 or g.letters[0][1] != 1:
                raise InputError("generators must be single symbols")
            gen_list.append(g.letters[0][0])
        families = tuple(
            tuple(parse_word(w) for w in fam) for fam in data.get("families", [])
        )
        relators = tuple(parse_word(r) for r in data.get("relators", []))
    except KeyError as exc:
        raise InputError(f"presentation file missing key {exc}") from exc
    pres = Presentation(tuple(gen_list), families, relators)
    if args.eliminate:
        g = parse_word(args.eliminate).letters[0][0]
        via = parse_word(args.via if args.via is not None else "")
        pres = simplify.eliminate_generator(pres, g, via)
    ab = simplify.abelianization(pres)
    payload = presentation_payload(pres)
    payload["abelianization"] = {"rank": ab.rank, "torsion": list(ab.torsion)}
    emit(args, payload, pres.describe() + f"\nabelianization: {ab}")
    return 0


def cmd_verify(args) -> int:
    kind, obj = load_any(args.input)
    if kind == "arr":
        checks = verifier.run_all(arr=obj, infinity_index=obj.infinity)
    else:
        checks = verifier.run_all(bwd=obj, infinity_index=args.infinity)
    failed = [c for c in checks if not c[1]]
    if args.format == "json":
        print(
            json.dumps(
                [{"check": n, "ok": ok, "detail": d} for n, ok, d in checks],
                indent=2,
                sort_keys=True,
            )
        )
    else:
        for name, ok, detail in checks:
            print(f"{'ok  ' if ok else 'FAIL'} {name}: {detail}")
    if failed:
        print(f"{len(failed)} check(s) failed", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="arrpi",
        description="Boundary-manifold and complement groups of complex line arrangements",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, shear=False):
        p.add_argument("input", help="arrangement or wiring file (or fixture name)")
        p.add_argument("--format", choices=["text", "json"], default="text")
        p.add_argument("--infinity", type=int, default=0, help="index of the infinity line")
        if shear:
            p.add_argument("--shear", default=None, help="override the shear parameter (rational)")

    p = sub.add_parser("info", help="combinatorics of an arrangement")
    common(p)
    p.add_argument("--dot", default=None, help="write the incidence graph in DOT format")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("wiring", help="compute or echo a braided wiring diagram")
    common(p, shear=True)
    p.add_argument("--svg", default=None, help="render the diagram to an SVG file")
    p.add_argument("-o", "--output", default=None, help="write the wiring JSON here")
    p.set_defaults(func=cmd_wiring)

    p = sub.add_parser("pi1", help="fundamental-group presentations")
    p.add_argument("which", choices=["boundary", "complement"])
    common(p, shear=True)
    p.add_argument("--mode", choices=["arvola", "inclusion", "randell"], default="arvola")
    p.add_argument("--variant", choices=["framed", "geometric"], default="framed")
    p.add_argument(
        "--convention",
        choices=[r.value for r in arvola.LabelRule],
        default=arvola.DEFAULT_RULE.value,
        help="strand-label convention at actual crossings",
    )
    p.set_defaults(func=cmd_pi1)

    p = sub.add_parser("inclusion", help="per-cycle delta/mu/image/kernel table")
    common(p, shear=True)
    p.add_argument("--variant", choices=["framed", "geometric"], default="framed")
    p.add_argument(
        "--convention",
        choices=[r.value for r in arvola.LabelRule],
        default=arvola.DEFAULT_RULE.value,
    )
    p.set_defaults(func=cmd_inclusion)

    p = sub.add_parser("simplify", help="eliminate a generator / abelianize a presentation")
    common(p)
    p.add_argument("--eliminate", default=None, help="generator to remove, e.g. a0 or e1,2")
    p.add_argument("--via", default=None, help="defining word for the removed generator")
    p.set_defaults(func=cmd_simplify)

    p = sub.add_parser("verify", help="run the cross-check suite on an input")
    common(p)
    p.set_defaults(func=cmd_verify)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ArrpiError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
