"""
Command-line front end.

    flatbldg roots --type A~2 --gem s0 --count
    flatbldg scale --type A~1 --q 2,3 --t "s0 s1"
    flatbldg tidy --type A~2 --q 2 --t auto --N 4

Exit status: 0 on success, 1 on usage errors, 2 when a verification check
fails (the report on stdout then names the offending witness).
"""

from __future__ import annotations

import argparse
import random
import sys
from typing import Sequence

from . import affine, chambers, flat
from .chambers import canonical_order
from .coxeter import CoxSystem, build_system
from .errors import FactorizationMismatch, FlatBldgError
from .report import Check, Report, cached_ball, rows_to_csv, rows_to_table, word_str

GRAMMAR = """\
system:    LETTER RANK ['~']   e.g. A~2, C~2, G~2, A~1, A3
           or JSON {"generators": [...], "m": [[...]]}  (use "inf" for m = oo)
thickness: --q 2 | --q 2,3 (one per generator) | --q s0=2,s1=3,s2=2
elements:  whitespace-separated generator words, e.g. "s0 s1"; "1" = identity
"""


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n\n{GRAMMAR}")
        sys.exit(1)


def _word(system: CoxSystem, text: str | None):
    if text is None or text.strip() in ("", "1", "e"):
        return system.identity()
    return system.element(text)


def _gem(system: CoxSystem, args) -> affine.Gem:
    vertex = args.gem or affine._require_affine(system).special_vertices[0]
    base = _word(system, getattr(args, "base", None))
    return affine.make_gem(system, vertex, base, limit=args.gem_limit)


def _apex(system, gem, args):
    c = _word(system, args.apex)
    if not gem.contains(c):
        raise UsageError(f"apex {word_str(c)} is not a chamber of {gem}")
    return c


def _translation(system, gem, c, args):
    spec = args.t.strip()
    if spec == "auto":
        return affine.sector_translation(affine.SectorRef(gem, c)).elem
    if spec == "random":
        rng = random.Random(args.seed)
        n = len(affine.lattice_basis(system))
        lam = [rng.randint(-2, 2) for _ in range(n)]
        return affine.translation(system, lam).elem
    return _word(system, spec)


def _root_rows(roots):
    return [{"vector": list(b.vec), "sign": b.sign, "type": chambers.root_type(b)}
            for b in canonical_order(roots)]


# --------------------------------------------------------------------------
# commands: each returns (report, rows for table/csv output)

def cmd_info(system, args):
    result = {"name": system.name, "generators": list(system.generators),
              "kind": system.kind,
              "coxeter_matrix": [[m if m else "inf" for m in r]
                                 for r in system.coxeter_matrix],
              "cartan": [list(r) for r in system.cartan]}
    if system.affine_data:
        result["null_vector"] = list(system.affine_data.null_vector)
        result["special_vertices"] = list(system.affine_data.special_vertices)
    rows = [{"key": k, "value": v} for k, v in result.items()]
    return Report("info", system.name, None, result), rows


def cmd_roots(system, args):
    if args.gem is not None or args.radius is None:
        gem = _gem(system, args)
        roots = affine.roots_cutting_gem(gem)
        source = {"gem": gem.vertex, "base": word_str(gem.base)}
    else:
        members = set(cached_ball(system, args.radius, args.cache))
        roots = set()
        for u in members:
            for s in system.generators:
                if u * system.gen(s) in members:
                    beta = chambers.act(u, chambers.simple_root(system, s))
                    roots |= {beta, -beta}
        source = {"radius": args.radius}
    rows = _root_rows(roots)
    result = {**source, "count": len(rows)}
    if not args.count:
        result["roots"] = [r["vector"] for r in rows]
    return Report("roots", system.name, None, result), rows


def cmd_hull(system, args):
    pts = [_word(system, w) for w in args.chambers.split(";")]
    modes = ["gallery-closure", "root-intersection"] if args.mode == "both" else [args.mode]
    hulls = {m: chambers.convex_hull(pts, m) for m in modes}
    first = hulls[modes[0]]
    ordered = sorted(first, key=chambers._canonical_key)
    checks = []
    if len(modes) == 2:
        diff = first ^ hulls[modes[1]]
        checks.append(Check("modes agree", not diff,
                            sorted(word_str(w) for w in diff) or None))
    result = {"input": [word_str(p) for p in pts], "size": len(first),
              "chambers": [word_str(w) for w in ordered]}
    rows = [{"chamber": word_str(w)} for w in ordered]
    return Report("hull", system.name, None, result, checks), rows


def cmd_sector(system, args):
    gem = _gem(system, args)
    sector = affine.SectorRef(gem, _apex(system, gem, args))
    members = cached_ball(system, args.radius, args.cache)
    inside, bad = [], []
    for d in members:
        a = affine.sector_membership(sector, d, "root-intersection")
        b = affine.sector_membership(sector, d, "projection")
        if a != b:
            bad.append(word_str(d))
        if a:
            inside.append(word_str(d))
    result = {"gem": gem.vertex, "apex": word_str(sector.apex), "radius": args.radius,
              "ball_size": len(members), "sector_size": len(inside),
              "sector": inside, "walls": [list(b.vec) for b in sector.roots]}
    checks = [Check("membership modes agree", not bad, bad or None)]
    rows = [{"chamber": w} for w in inside]
    return Report("sector", system.name, None, result, checks), rows


def _thickness(system, args):
    if args.q is None:
        raise UsageError("--q is required for this command")
    return flat.Thickness.parse(system, args.q)


def cmd_tidy(system, args):
    q = _thickness(system, args)
    gem = _gem(system, args)
    c = _apex(system, gem, args)
    t = _translation(system, gem, c, args)
    rep = flat.moller_tidiness_check(c, t, args.N, q)
    result = {"translation": word_str(t), "apex": word_str(c), **rep.as_dict()}
    checks = []
    if rep.is_translation:
        checks.append(Check("index(n) = index(1)^n", all(rep.holds),
                            None if all(rep.holds) else
                            {"element": word_str(t), "indices": rep.indices}))
    rows = [{"n": n + 1, "index": i, "holds": h}
            for n, (i, h) in enumerate(zip(rep.indices, rep.holds))]
    return Report("tidy", system.name, q.as_dict(), result, checks), rows


def cmd_flat_roots(system, args):
    q = _thickness(system, args)
    gem = _gem(system, args)
    c = _apex(system, gem, args)
    roots = flat.flat_root_system(gem, c, q)
    values = {fr.gamma: flat.value_on_basis(fr) for fr in roots}
    negation_ok = all(values[-fr.gamma] == tuple(-v for v in values[fr.gamma])
                      for fr in roots)
    distinct = len(set(values.values())) == len(roots)
    rows = [{**fr.as_dict(), "values": list(values[fr.gamma])} for fr in roots]
    result = {"gem": gem.vertex, "apex": word_str(c), "count": len(roots),
              "basis": [word_str(t.elem) for t in affine.lattice_basis(system)],
              "roots": rows}
    checks = [Check("rho pairwise distinct", distinct),
              Check("rho(-gamma) = -rho(gamma)", negation_ok)]
    return Report("flat-roots", system.name, q.as_dict(), result, checks), rows


def cmd_scale(system, args):
    q = _thickness(system, args)
    gem = _gem(system, args)
    c = _apex(system, gem, args)
    t = _translation(system, gem, c, args)
    if affine.translation_test(t) is None:
        raise UsageError(f"{word_str(t)} is not a translation")
    try:
        rep = flat.scale_with_factorization(t, gem, c, q)
    except FactorizationMismatch as exc:
        report = Report("scale", system.name, q.as_dict(),
                        {"translation": word_str(t), "error": str(exc)},
                        [Check("scale factorization", False, exc.witness)])
        return report, []
    result = {"translation": word_str(t), "apex": word_str(c), **rep.as_dict()}
    checks = [Check("scale factorization", rep.product == rep.scale)]
    return Report("scale", system.name, q.as_dict(), result, checks), result["factors"]


COMMANDS = {"info": cmd_info, "roots": cmd_roots, "hull": cmd_hull,
            "sector": cmd_sector, "tidy": cmd_tidy, "flat-roots": cmd_flat_roots,
            "scale": cmd_scale}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="flatbldg", description=__doc__.split("\n\n")[0],
                     formatter_class=argparse.RawDescriptionHelpFormatter,
                     epilog=GRAMMAR)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--type", required=True, help="system spec (see grammar)")
        p.add_argument("--format", choices=["table", "json", "csv"], default="table")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--cache", action="store_true",
                       help="cache ball enumerations under $FLATBLDG_CACHE_DIR")
        p.add_argument("--gem-limit", type=int, default=affine.DEFAULT_GEM_LIMIT)
        return p

    def gem_args(p, apex=True):
        p.add_argument("--gem", help="special vertex of the gem (default: first special)")
        p.add_argument("--base", help="base chamber of the gem (default: identity)")
        if apex:
            p.add_argument("--apex", default="1", help="apex chamber in the gem")

    add("info", "describe the Coxeter system")
    p = add("roots", "roots cutting a gem, or roots meeting a ball")
    gem_args(p, apex=False)
    p.add_argument("--radius", type=int)
    p.add_argument("--count", action="store_true")
    p = add("hull", "convex hull of chambers")
    p.add_argument("--chambers", required=True, help='";"-separated words')
    p.add_argument("--mode", default="both",
                   choices=["both", "gallery-closure", "root-intersection"])
    p = add("sector", "sector membership sweep over a ball")
    gem_args(p)
    p.add_argument("--radius", type=int, default=5)
    for name, help_ in (("tidy", "tidiness index sequence"),
                        ("scale", "scale and its flat-root factorization")):
        p = add(name, help_)
        gem_args(p)
        p.add_argument("--q", required=True)
        p.add_argument("--t", default="auto", help='word, "auto" (t_{R,c}) or "random"')
        if name == "tidy":
            p.add_argument("--N", type=int, default=4)
    p = add("flat-roots", "root system of the flat group")
    gem_args(p)
    p.add_argument("--q", required=True)
    return parser


def render(report: Report, rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return report.to_json() + "\n"
    if fmt == "csv":
        return rows_to_csv(rows)
    out = rows_to_table(rows)
    if report.command == "scale" and "scale" in (report.result or {}):
        out = f"scale {report.result['scale']}\n" + out
    for c in report.checks:
        out += f"[{'PASS' if c.passed else 'FAIL'}] {c.name}\n"
    return out


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        system = build_system(args.type)
        report, rows = COMMANDS[args.command](system, args)
    except (UsageError, FlatBldgError) as exc:
        sys.stderr.write(f"flatbldg {args.command}: {exc}\n\n{GRAMMAR}")
        return 1
    if args.command == "roots" and args.count and args.format == "table":
        sys.stdout.write(f"{report.result['count']}\n")
    else:
        sys.stdout.write(render(report, rows, args.format))
    return 0 if report.ok else 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
