"""Command line entry point: ``symsextic <subcommand> [options]``."""
from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from . import checks, grouprep as gr, hilbert, invariants4d as inv, kmline, smoothcheck as sc, toric
from .exactnum import is_rational
from .report import emit_csv, emit_json, emit_text, render_value

_NEG_VALUE = re.compile(r"^-(\d+(/\d+)?|\d*\.\d+([eE][-+]?\d+)?|\d+[eE][-+]?\d+)$")


def _join_negative_values(argv: Sequence[str]) -> list[str]:
    """Turn ``--B -5/4`` into ``--B=-5/4`` so argparse does not read a flag."""
    out: list[str] = []
    for tok in argv:
        if out and _NEG_VALUE.match(tok) and out[-1].startswith("--") and "=" not in out[-1]:
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def _p_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..")
        return list(range(int(lo), int(hi) + 1))
    return _int_list(text)


def _global_options(parser: argparse.ArgumentParser, suppress: bool):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--json", metavar="PATH", default=d(None), help="write JSON ('-' for stdout)")
    parser.add_argument("--csv", metavar="PATH", default=d(None), help="write CSV ('-' for stdout)")
    parser.add_argument("--seed", type=int, default=d(0), help="random seed (default 0)")
    parser.add_argument("--filter", metavar="GLOB", default=d(None), help="check id pattern")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="symsextic", description=__doc__)
    _global_options(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_options(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("verify-paper", parents=[common], help="run every registered check")

    p = sub.add_parser("hilbert", parents=[common], help="Hilbert function of a weighted hypersurface")
    p.add_argument("--weights", type=_int_list, default=[1, 1, 1, 1, 2])
    p.add_argument("--hyp-degree", type=int, default=6)
    p.add_argument("--twist", type=int, default=2)
    p.add_argument("--p", type=_p_range, default=list(range(1, 11)))

    p = sub.add_parser("km", parents=[common], help="Knudsen-Mumford degrees on a covered line")
    p.add_argument("--alpha", type=_rational, default=Fraction(4))
    p.add_argument("--beta", type=_rational, default=Fraction(7))
    p.add_argument("--cover", type=int, default=6)

    p = sub.add_parser("toric", parents=[common], help="areas, edges, fan and intersections of a polygon")
    p.add_argument("--polygon", default="0,0;0,-6;-2,-6;-4,0")
    p.add_argument("--lattice", default="1,1;1,-1", help="generators of the sublattice, 'a,b;c,d'")

    p = sub.add_parser("index", parents=[common], help="self-dual index (29 sigma - 15 e)/2")
    p.add_argument("--sigma", type=int, required=True)
    p.add_argument("--e", type=int, required=True)

    p = sub.add_parser("mu", parents=[common], help="mu(a, b) = 20b - 4a")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)

    p = sub.add_parser("smooth", parents=[common], help="discriminant values and singular point search")
    p.add_argument("--A", type=_rational, required=True)
    p.add_argument("--B", type=_rational, required=True)
    p.add_argument("--attempts", type=int, default=1000)
    p.add_argument("--tol", type=float, default=1e-9)

    p = sub.add_parser("invariants", parents=[common], help="invariant subspace of a group on a graded space")
    p.add_argument("--group", default="G", help="G, H or a path to a group file")
    p.add_argument("--space", choices=["sym", "wedge2", "bidegree", "multidegree"], default="sym")
    p.add_argument("--degree", type=int, default=6)
    p.add_argument("--degrees", default="6,6", help="'a,b' or 'a,b;c,d' for multidegree sums")
    return parser


# -- subcommands --------------------------------------------------------------

def _cmd_hilbert(args):
    rows = [{"p": p, "H": hilbert.hypersurface_hilbert(args.weights, args.hyp_degree, args.twist, p)}
            for p in args.p]
    lines = ["p\tH(p)"] + [f"{r['p']}\t{r['H']}" for r in rows]
    result = {"rows": rows}
    pos = [(r["p"], r["H"]) for r in rows if r["p"] >= 1]
    if len(pos) >= 2:
        try:
            h = hilbert.fit_odd_cubic(hilbert.HilbertSamples.of(pos))
            result["fit"] = {"alpha": str(h.alpha), "beta": str(h.beta)}
            lines.append(f"H(p) = {h.alpha} p^3 + {h.beta} p")
        except hilbert.InconsistentSamplesError as exc:
            result["fit"] = None
            lines.append(f"no odd cubic fit: {exc}")
    return result, "\n".join(lines) + "\n", 0


def _cmd_km(args):
    h = hilbert.OddCubic(args.alpha, args.beta)
    d = kmline.km_pairings(h, args.cover)
    result = {"deg_L0": str(d.deg_L0), "deg_L2": str(d.deg_L2)}
    return result, f"deg L0 = {d.deg_L0}\ndeg L2 = {d.deg_L2}\n", 0


def _cmd_toric(args):
    gens = toric.parse_points(args.lattice)
    if len(gens) != 2:
        raise ValueError("lattice needs exactly two generators")
    lat = toric.SubLattice.from_generators(*gens)
    poly = toric.LatticePolygon(tuple(toric.parse_points(args.polygon)), lat)
    std, norm = toric.polygon_area(poly)
    lengths = toric.edge_lattice_lengths(poly)
    fan, mat = toric.fan_and_intersections(poly)
    result = {
        "vertices": [list(v) for v in poly.vertices],
        "area": str(std), "normalized_area": str(norm),
        "edge_lengths": lengths, "rays": [list(r) for r in fan.rays],
        "intersection_matrix": [[str(x) for x in row] for row in mat],
        "polarization_square": str(toric.polarization_square(poly)),
    }
    lines = [f"vertices (ccw): {list(poly.vertices)}",
             f"area: {std}  normalized: {norm}",
             f"edge lattice lengths: {lengths}",
             f"rays: {list(fan.rays)}",
             "intersection matrix:"]
    lines += ["  " + "  ".join(f"{str(x):>6}" for x in row) for row in mat]
    lines.append(f"polarization square: {result['polarization_square']}")
    return result, "\n".join(lines) + "\n", 0


def _cmd_index(args):
    v = inv.selfdual_index(args.sigma, args.e)
    return {"index": str(v)}, f"{v}\n", 0


def _cmd_mu(args):
    v = inv.mu_ab(args.a, args.b)
    return {"mu": v}, f"{v}\n", 0


def _cmd_smooth(args):
    params = sc.SurfaceParams(args.A, args.B)
    disc = {f"{e1:+d},{e2:+d}": str(sc.discriminant_eval(params, (e1, e2))) for e1, e2 in sc.SIGN_PAIRS}
    comps = {k: str(v) for k, v in sc.resultant_components(params).items()}
    hits = sc.singular_points_search(params, attempts=args.attempts, tol=args.tol, seed=args.seed)
    result = {
        "A": str(params.A), "B": str(params.B),
        "discriminant": disc, "resultant_components": comps,
        "hits": [{"point": [[z.real, z.imag] for z in h.point], "residual": h.residual} for h in hits],
    }
    lines = [f"A = {params.A}, B = {params.B}"]
    lines += [f"quartic discriminant {k}: {v}" for k, v in disc.items()]
    lines += [f"resultant factor {k}: {v}" for k, v in comps.items()]
    lines.append(f"singular points found: {len(hits)} (attempts {args.attempts}, seed {args.seed})")
    lines += [f"  {tuple(complex(round(z.real, 6), round(z.imag, 6)) for z in h.point)}  residual {h.residual:.2e}"
              for h in hits]
    return result, "\n".join(lines) + "\n", 0


def _cmd_invariants(args):
    group = gr.load_group(args.group)
    if args.space == "sym":
        space = gr.symmetric_power(group.nvars, args.degree)
    elif args.space == "wedge2":
        space = gr.exterior_square(group.nvars)
    else:
        degs = [tuple(_int_list(chunk)) for chunk in args.degrees.split(";")]
        if args.space == "bidegree" and len(degs) != 1:
            raise ValueError("bidegree takes a single pair")
        space = gr.multidegree_space([[0, 1], [2, 3]], degs)
    basis = gr.invariant_basis(group, space)
    avg = gr.character_average(group, space)
    if space.kind == "monomial":
        shown = [str(gr.vector_to_polynomial(space, v, ["x1", "y1", "x2", "y2"])) for v in basis]
    else:
        names = ("x1", "y1", "x2", "y2")
        shown = [" + ".join(_wedge_term(c, names[i], names[j]) for (i, j), c in zip(space.basis(), v) if c)
                 for v in basis]
    result = {"group_order": len(group), "dimension": len(basis), "character_average": avg, "basis": shown}
    lines = [f"|group| = {len(group)}", f"invariant dimension = {len(basis)} (character average {avg})"]
    lines += [f"  {b}" for b in shown]
    return result, "\n".join(lines) + "\n", 0


def _wedge_term(c, a: str, b: str) -> str:
    r = is_rational(c)
    coeff = "" if r == 1 else f"({c})*" if r is None else f"{render_value(r)}*"
    return f"{coeff}d{a}^d{b}"


def _write(path: Optional[str], text: str):
    if path is None:
        return
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(_join_negative_values(argv))
    to_stdout = "-" in (args.json, args.csv)
    if args.command == "verify-paper":
        reports, code = checks.verify_paper(args.filter, args.seed)
        if code == 2:
            sys.stderr.write(f"no checks match {args.filter!r}\n")
        _write(args.json, emit_json(reports))
        _write(args.csv, emit_csv(reports))
        if not to_stdout:
            sys.stdout.write(emit_text(reports))
        return code
    handler = {
        "hilbert": _cmd_hilbert, "km": _cmd_km, "toric": _cmd_toric, "index": _cmd_index,
        "mu": _cmd_mu, "smooth": _cmd_smooth, "invariants": _cmd_invariants,
    }[args.command]
    try:
        result, text, code = handler(args)
    except (ValueError, KeyError, FileNotFoundError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    _write(args.json, json.dumps(result, indent=2) + "\n")
    if args.csv is not None:
        sys.stderr.write("--csv applies to verify-paper only\n")
    if not to_stdout:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
