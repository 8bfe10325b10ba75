"""Command line front end: expand, verify, crystal, uncrowd, tableaux.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import lattice
from . import uncrowding
from .crystal import component_decomposition, crystal_graph, dot_export
from .poly import MultiPoly, canonical_string, map_vars, swap_x_vars
from .schur import (EdgeSchurParams, dual_schur, dual_schur_alpha,
                    edge_schur, edge_schur_brute, factorial_schur,
                    schur_expand, variation)
from .schur import schur as schur_fn
from .shapes import Partition, SkewShape, partitions_in_box
from .tableaux import EdgeLabeledTableau, enumerate_elt, enumerate_ssyt


def parse_partition(s: str | None, extent=None) -> Partition:
    if not s:
        return Partition.of((), extent=extent or 0)
    parts = [int(p) for p in s.split(",") if p != ""]
    return Partition.of(parts, extent=extent)


def parse_window(s: str) -> tuple[int, int]:
    lo, hi = s.split(":")
    return int(lo), int(hi)


def _params(args, lam: Partition) -> EdgeSchurParams:
    extent = args.extent if args.extent is not None else max(lam.extent, 1)
    if args.window:
        window = parse_window(args.window)
    else:
        window = (-extent, lam.first())
    return EdgeSchurParams(args.n, window, extent, args.trunc)


def cmd_expand(args) -> int:
    lam = parse_partition(getattr(args, "lam"), args.extent)
    mu = parse_partition(args.mu)
    shape = SkewShape.of(lam.parts, mu.parts, extent=args.extent or lam.extent)
    fam = args.family
    if fam == "schur":
        poly = schur_fn(shape, args.n)
    elif fam == "factorial":
        poly = factorial_schur(shape, args.n, sign=args.sign)
    elif fam == "edge":
        poly = edge_schur(shape, _params(args, lam))
    elif fam in ("ebar", "dualfact", "scripte", "hatscripte"):
        kind = {"ebar": "EBar", "dualfact": "DualFact",
                "scripte": "ScriptE", "hatscripte": "HatScriptE"}[fam]
        poly = variation(kind, shape, _params(args, lam), args.trunc)
    elif fam == "dualschur":
        if args.trunc is None:
            print("dualschur needs --trunc", file=sys.stderr)
            return 2
        if args.alpha:
            poly = dual_schur_alpha(shape, args.m, args.trunc)
        else:
            poly = dual_schur(shape, args.m, args.trunc)
    else:
        print(f"unknown family {fam}", file=sys.stderr)
        return 2
    if args.schur_expand is not None:
        coeffs, rem = schur_expand(poly, args.n, args.schur_expand)
        out = {str(nu): canonical_string(c) for nu, c in sorted(coeffs.items())}
        if args.format == "json":
            print(json.dumps({"coefficients": out,
                              "remainder": canonical_string(rem)}, indent=2))
        else:
            for nu, c in sorted(coeffs.items()):
                print(f"s{nu}: {canonical_string(c)}")
            if not rem.is_zero():
                print(f"remainder: {canonical_string(rem)}")
        return 0
    if args.format == "json":
        print(json.dumps({"family": fam, "value": canonical_string(poly)}))
    else:
        print(canonical_string(poly))
    return 0


def _verify_yb(args) -> tuple[bool, str]:
    kinds = [args.kind] if args.kind else ["RLL_L", "RLL_Lstar", "rll_Ell",
                                           "frakRLell"]
    for kind in kinds:
        ok, wit = lattice.yang_baxter_check(kind, perturb=args.perturb,
                                            perturb_mode=args.perturb_mode)
        expected = args.perturb is None
        if ok != expected:
            msg = f"{kind}: {'passed' if ok else 'failed'} unexpectedly"
            if wit and args.witness:
                msg += f"; witness boundary {wit[0]} -> {wit[1]}: {wit[2]} != {wit[3]}"
            return False, msg
    return True, "all Yang-Baxter checks behaved as expected"


def _verify_symmetry(args) -> tuple[bool, str]:
    r, c = (int(v) for v in args.box.split(":"))
    window = parse_window(args.window) if args.window else (-r, c)
    for lam in partitions_in_box(r, c):
        shape = SkewShape.of(lam.parts, (), extent=r)
        e = edge_schur(shape, EdgeSchurParams(args.n, window, r))
        for i in range(1, args.n):
            if swap_x_vars(e, i, i + 1) != e:
                return False, f"E^{lam} not symmetric under x{i} <-> x{i+1}"
    return True, f"edge Schur symmetric on the {r}x{c} box"


def _verify_equivalence(args) -> tuple[bool, str]:
    rng = random.Random(args.seed)
    for case in range(args.count):
        ext = rng.randint(1, 3)
        lam = Partition(tuple(sorted((rng.randint(0, 3)
                                      for _ in range(ext)), reverse=True)))
        mu_parts = tuple(sorted((rng.randint(0, lam.part(k))
                                 for k in range(1, ext + 1)), reverse=True))
        mu = Partition(mu_parts)
        if not lam.contains(mu):
            continue
        n = rng.randint(1, 3)
        window = (-ext - rng.randint(0, 1), lam.first() + rng.randint(0, 1))
        shape = SkewShape.of(lam.parts, mu.parts, extent=ext)
        p = EdgeSchurParams(n, window, ext)
        closed = edge_schur(shape, p)
        brute = edge_schur_brute(shape, p)
        lat = lattice.edge_schur_lattice(shape, p, "T")
        lat2 = lattice.edge_schur_lattice(shape, p, "Tstar")
        if not (closed == brute == lat == lat2):
            return False, f"case {case}: {lam}/{mu} n={n} window={window} disagree"
    return True, f"{args.count} random instances agree on all four routes"


def cmd_verify(args) -> int:
    suite = args.suite
    if suite == "yb":
        ok, msg = _verify_yb(args)
    elif suite == "commutation":
        r, c = (int(v) for v in args.box.split(":"))
        window = parse_window(args.window) if args.window else (-2, 5)
        ok, wit = lattice.commutation_check((r, c), window, args.trunc or 6)
        msg = "commutation relation holds" if ok else f"failed at {wit[:2]}"
    elif suite == "cauchy":
        mu = parse_partition(args.mu)
        eta = parse_partition(args.eta)
        window = parse_window(args.window) if args.window else (-2, 3)
        rep = lattice.cauchy_check(mu, eta, args.n, args.m, window,
                                   args.trunc or 4)
        ok = rep["ok"]
        msg = json.dumps({k: v for k, v in rep.items() if isinstance(v, bool)})
        if not ok and args.witness:
            msg += "\n" + json.dumps({k: v for k, v in rep.items()
                                      if isinstance(v, str)}, indent=2)
    elif suite == "freefermion":
        models = {"L": lattice.model_L(), "Lstar": lattice.model_Lstar(),
                  "Ell": lattice.model_Ell()}
        results = {name: lattice.free_fermion_check(m)
                   for name, m in models.items()}
        ok = all(results.values())
        msg = json.dumps(results)
    elif suite == "symmetry":
        ok, msg = _verify_symmetry(args)
    elif suite == "equivalence":
        ok, msg = _verify_equivalence(args)
    else:
        print(f"unknown suite {suite}", file=sys.stderr)
        return 2
    print(msg)
    return 0 if ok else 1


def cmd_crystal(args) -> int:
    lam = parse_partition(getattr(args, "lam"))
    extent = args.extent if args.extent is not None else max(lam.extent, 1)
    window = parse_window(args.window) if args.window else (-extent, lam.first())
    p = EdgeSchurParams(args.n, window, extent)
    g = crystal_graph(lam, p, args.n)
    comps = component_decomposition(g, args.n)
    summary = []
    for comp, hw in sorted(comps, key=lambda ch: (len(ch[0]),
                                                  g.vertices[ch[1]].key())):
        t = g.vertices[hw]
        summary.append({"size": len(comp),
                        "weight": list(t.content_vector(args.n)),
                        "a_monomial": canonical_string(_a_part(t))})
    print(json.dumps({"vertices": len(g.vertices),
                      "components": summary}, indent=2))
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(dot_export(g, args.n))
        print(f"wrote {args.dot}")
    return 0


def _a_part(t: EdgeLabeledTableau) -> MultiPoly:
    def keep_a(v):
        return MultiPoly.var(v) if v[0] == 3 else MultiPoly.one()
    return map_vars(t.weight(), keep_a)


def cmd_uncrowd(args) -> int:
    with open(args.infile) as fh:
        t = EdgeLabeledTableau.from_json(json.load(fh))
    pair = uncrowding.uncrowd(t)
    print(json.dumps({
        "P": [list(r) for r in pair.P],
        "Q": [[r, c, v] for (r, c), v in pair.Q],
    }, indent=2))
    if args.roundtrip:
        back = uncrowding.crowd(pair, t.shape.outer, t.window, t.extent)
        if back.key() != t.key():
            print("round trip FAILED", file=sys.stderr)
            return 1
        print("round trip ok")
    return 0


def cmd_tableaux(args) -> int:
    lam = parse_partition(getattr(args, "lam"), args.extent)
    mu = parse_partition(args.mu)
    shape = SkewShape.of(lam.parts, mu.parts, extent=args.extent or lam.extent)
    if args.edges:
        window = parse_window(args.window) if args.window else (-shape.extent,
                                                                lam.first())
        tabs = list(enumerate_elt(shape, args.n, window, shape.extent))
        print(f"{len(tabs)} edge labeled tableaux")
        if args.format == "json":
            print(json.dumps([t.to_json() for t in tabs], indent=1))
        else:
            for t in tabs[:args.limit]:
                print(t.render())
                print("weight:", canonical_string(t.weight()))
                print()
    else:
        tabs = enumerate_ssyt(shape, args.n)
        print(f"{len(tabs)} semistandard tableaux")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="edgeschur")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--lambda", dest="lam", default="", metavar="PARTS")
        p.add_argument("--mu", default="", metavar="PARTS")
        p.add_argument("--extent", type=int, default=None)
        p.add_argument("--n", type=int, default=2)
        p.add_argument("--m", type=int, default=1)
        p.add_argument("--window", default=None, metavar="M:N")
        p.add_argument("--trunc", type=int, default=None)

    pe = sub.add_parser("expand", help="print one symmetric function")
    common(pe)
    pe.add_argument("--family", required=True,
                    choices=["schur", "factorial", "edge", "ebar", "dualfact",
                             "scripte", "hatscripte", "dualschur"])
    pe.add_argument("--sign", type=int, default=1, choices=[1, -1])
    pe.add_argument("--alpha", action="store_true",
                    help="specialize every a_d to the single symbol alpha")
    pe.add_argument("--schur-expand", type=int, default=None, metavar="SIZE")
    pe.add_argument("--format", choices=["text", "json"], default="text")
    pe.set_defaults(fn=cmd_expand)

    pv = sub.add_parser("verify", help="run a verification suite")
    common(pv)
    pv.add_argument("suite", choices=["yb", "commutation", "cauchy",
                                      "freefermion", "symmetry", "equivalence"])
    pv.add_argument("--kind", default=None,
                    choices=["RLL_L", "RLL_Lstar", "rll_Ell", "frakRLell"])
    pv.add_argument("--perturb", default=None)
    pv.add_argument("--perturb-mode", default="one", choices=["one", "double"])
    pv.add_argument("--box", default="2:2", metavar="R:C")
    pv.add_argument("--eta", default="", metavar="PARTS")
    pv.add_argument("--count", type=int, default=30)
    pv.add_argument("--seed", type=int, default=20240805)
    pv.add_argument("--witness", action="store_true")
    pv.set_defaults(fn=cmd_verify)

    pc = sub.add_parser("crystal", help="crystal graph export")
    common(pc)
    pc.add_argument("--dot", default=None, metavar="FILE")
    pc.set_defaults(fn=cmd_crystal)

    pu = sub.add_parser("uncrowd", help="uncrowding of a JSON tableau")
    pu.add_argument("--in", dest="infile", required=True)
    pu.add_argument("--roundtrip", action="store_true")
    pu.set_defaults(fn=cmd_uncrowd)

    pt = sub.add_parser("tableaux", help="enumerate tableaux")
    common(pt)
    pt.add_argument("--edges", action="store_true",
                    help="edge labeled tableaux instead of plain SSYT")
    pt.add_argument("--format", choices=["text", "json"], default="text")
    pt.add_argument("--limit", type=int, default=20)
    pt.set_defaults(fn=cmd_tableaux)
    return ap



def _fuse_window(argv: list[str]) -> list[str]:
    """Let `--window -2:1` work: argparse treats `-2:1` as a flag."""
    out = []
    k = 0
    while k < len(argv):
        tok = argv[k]
        if tok in ("--window", "--box") and k + 1 < len(argv):
            out.append(f"{tok}={argv[k + 1]}")
            k += 2
        else:
            out.append(tok)
            k += 1
    return out


def main(argv=None) -> int:
    argv = _fuse_window(list(sys.argv[1:] if argv is None else argv))
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
