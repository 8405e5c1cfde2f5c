"""Command-line front end.

Knots are given either as literal spec strings (`braid: 3 | 1 -2 1 -2`,
`pd: X(0,1,2,3) ...`, or a built-in name like `trefoil`) or as a path
to a file with one spec per line.  All polynomial output uses the
canonical ascending text form; `--format json` emits exponent and
coefficient lists; `--format table1` prints two-variable polynomials as
a coefficient grid (rows by the second variable's degree).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .colored import colored_jones
from .alexander import alexander_pd
from .bracket import jones
from .diagram import (BraidWord, PlanarDiagram, load_knot_file, mirror,
                      parse_knot_spec)
from .laurent import LaurentPoly, LaurentPoly2
from .permgroups import (PermGroup, alternating, cyclic, dihedral, psl2,
                         symmetric)
from .presentations import (GroupPresentation, branched_cover_from_meridians,
                            knot_group, low_index_subgroups,
                            subgroup_abelianization, tietze_simplify,
                            wirtinger_presentation)
from .quotients import epimorphisms, kernel_abelianization
from .report import ReportOptions, compare_pair, compute_report
from .satellites import cable, whitehead_double
from .skein2 import ResourceLimitExceeded, homfly, kauffman_f
from .tangles import AXES, TangleDecomposition, mutate, rational_tangle


def _load_specs(arg: str):
    if os.path.exists(arg):
        return load_knot_file(arg)
    return [parse_knot_spec(arg)]


def _poly_json(p):
    if isinstance(p, LaurentPoly):
        return {"variable": p.var,
                "terms": sorted([e, c] for e, c in p.coeffs.items())}
    if isinstance(p, LaurentPoly2):
        return {"variables": list(p.vars),
                "terms": sorted([e1, e2, c] for (e1, e2), c in p.coeffs.items())}
    return p


def format_table1(name: str, p: LaurentPoly2) -> str:
    """Coefficient grid: one row per degree of the second variable."""
    lines = [f"{name}:" if name else ":"]
    if not p.coeffs:
        return "\n".join(lines + ["0 0", ""])
    e2s = sorted({e2 for (_, e2) in p.coeffs})
    e1s = sorted({e1 for (e1, _) in p.coeffs})
    gmin = e1s[0]
    lines.append(f"{e2s[0]} {e2s[-1]}")
    for e2 in range(e2s[0], e2s[-1] + 1, 2):
        row = {e1: c for (e1, f2), c in p.coeffs.items() if f2 == e2}
        if not row:
            continue
        lmin, lmax = min(row), max(row)
        cells = []
        for e1 in range(gmin, lmax + 1, 2):
            if e1 < lmin:
                cells.append(" " * 7)
            else:
                cells.append(f"{row.get(e1, 0):7d}")
        lines.append(f"{lmin:4d} {lmax:4d}" + "".join(cells).rstrip())
    lines.append("")
    return "\n".join(lines)


def _emit_poly(name: str, p, fmt: str):
    label = f"{name}: " if name else ""
    if fmt == "json":
        print(json.dumps({"name": name, "polynomial": _poly_json(p)},
                         sort_keys=True))
    elif fmt == "table1" and isinstance(p, LaurentPoly2):
        print(format_table1(name, p))
    else:
        print(f"{label}{p}")


def _emit_pd(d: PlanarDiagram):
    body = " ".join(f"X({a},{b},{c},{e})" for a, b, c, e in d.crossings)
    prefix = f"name={d.name} " if d.name else ""
    print(f"{prefix}pd: {body}")


_TARGETS = {}


def _target_group(name: str) -> PermGroup:
    text = name.replace(" ", "")
    if text in _TARGETS:
        return _TARGETS[text]
    if text.startswith("C") and text[1:].isdigit():
        g = cyclic(int(text[1:]))
    elif text.startswith("D") and text[1:].isdigit():
        g = dihedral(int(text[1:]))
    elif text.startswith("Alt(") and text.endswith(")"):
        g = alternating(int(text[4:-1]))
    elif text.startswith("Sym(") and text.endswith(")"):
        g = symmetric(int(text[4:-1]))
    elif text.startswith("PSL(2,") and text.endswith(")"):
        g = psl2(int(text[6:-1]))
    else:
        raise ValueError(f"unknown target group {name!r}")
    _TARGETS[text] = g
    return g


def _print_presentation(g: GroupPresentation):
    print(f"generators: {g.ngens}")
    for i, r in enumerate(g.relators, start=1):
        print(f"{i}. {len(r)} [ " + ", ".join(str(x) for x in r) + " ]")


def _cover_presentation(d: PlanarDiagram, braid: BraidWord | None):
    base = knot_group(braid) if braid is not None else wirtinger_presentation(d)
    return tietze_simplify(branched_cover_from_meridians(base))


def _report_options(args) -> ReportOptions:
    return ReportOptions(
        colors=getattr(args, "colors", 2),
        quotients=getattr(args, "quotients", False),
        quotients_max_order=getattr(args, "quotients_max_order", 60),
        lowindex=getattr(args, "lowindex", 0),
        whitehead_homfly=getattr(args, "whitehead_p", False),
        cable_homfly=getattr(args, "cable_p", False),
        budget_seconds=args.budget_seconds,
        threads=args.threads,
    )


def main(argv=None) -> int:
    env_budget = os.environ.get("KNOTMUT_BUDGET_SECONDS")
    ap = argparse.ArgumentParser(prog="knotmut",
                                 description="exact knot invariants and "
                                             "mutation comparisons")
    ap.add_argument("--format", choices=("text", "json", "table1"),
                    default="text")
    ap.add_argument("--budget-seconds", type=float,
                    default=float(env_budget) if env_budget else None)
    ap.add_argument("--threads", type=int, default=1)
    sub = ap.add_subparsers(dest="cmd", required=True)

    for cmd in ("jones", "alexander", "homfly", "kauffman"):
        p = sub.add_parser(cmd)
        p.add_argument("knot")
    p = sub.add_parser("cjones")
    p.add_argument("--color", type=int, default=2)
    p.add_argument("knot")
    p = sub.add_parser("cable")
    p.add_argument("--strands", type=int, default=2)
    p.add_argument("--twists", type=int, default=0)
    p.add_argument("knot")
    p = sub.add_parser("double")
    p.add_argument("--framing", type=int, default=None,
                   help="full twists; default compensates the writhe")
    p.add_argument("--clasp", type=int, choices=(1, -1), default=1)
    p.add_argument("knot")
    p = sub.add_parser("mutate")
    p.add_argument("--inner", required=True,
                   help="comma-separated twist sequence of the inner tangle")
    p.add_argument("--outer", required=True,
                   help="comma-separated twist sequence of the outer tangle")
    p.add_argument("--axis", choices=AXES, default="horizontal")
    p = sub.add_parser("cover")
    p.add_argument("action", choices=("group", "abelian", "lowindex",
                                      "quotients", "kernel-abelian"))
    p.add_argument("--max", type=int, default=3, dest="max_index")
    p.add_argument("--target", default="D3")
    p.add_argument("knot")
    p = sub.add_parser("report")
    p.add_argument("--colors", type=int, default=2)
    p.add_argument("--quotients", action="store_true")
    p.add_argument("--quotients-max-order", type=int, default=60)
    p.add_argument("--lowindex", type=int, default=0)
    p.add_argument("--whitehead-p", action="store_true")
    p.add_argument("--cable-p", action="store_true")
    p.add_argument("knot")
    p = sub.add_parser("compare")
    p.add_argument("--colors", type=int, default=2)
    p.add_argument("--quotients", action="store_true")
    p.add_argument("--quotients-max-order", type=int, default=60)
    p.add_argument("--lowindex", type=int, default=0)
    p.add_argument("--whitehead-p", action="store_true")
    p.add_argument("--cable-p", action="store_true")
    p.add_argument("knot1")
    p.add_argument("knot2")

    args = ap.parse_args(argv)
    try:
        return _dispatch(args)
    except ResourceLimitExceeded as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _dispatch(args) -> int:
    fmt = args.format
    if args.cmd in ("jones", "alexander", "homfly", "kauffman", "cjones"):
        for name, d, _braid in _load_specs(args.knot):
            if args.cmd == "jones":
                val = jones(d)
            elif args.cmd == "alexander":
                val = alexander_pd(d) if d.crossings else LaurentPoly.one("t")
            elif args.cmd == "homfly":
                val = homfly(d, budget_seconds=args.budget_seconds)
            elif args.cmd == "kauffman":
                val = kauffman_f(d, budget_seconds=args.budget_seconds)
            else:
                val = colored_jones(d, args.color)
            _emit_poly(name or d.name, val, fmt)
        return 0

    if args.cmd == "cable":
        for name, d, _braid in _load_specs(args.knot):
            out = cable(d, args.strands, args.twists)
            out.name = f"{name}-cable{args.strands}" if name else out.name
            _emit_pd(out)
        return 0

    if args.cmd == "double":
        for name, d, _braid in _load_specs(args.knot):
            framing = args.framing if args.framing is not None else -d.writhe()
            out = whitehead_double(d, framing, args.clasp)
            _emit_pd(out)
        return 0

    if args.cmd == "mutate":
        inner = rational_tangle([int(x) for x in args.inner.split(",")])
        outer = rational_tangle([int(x) for x in args.outer.split(",")],
                                start=1000)
        td = TangleDecomposition(outer, inner)
        original = td.glue("original")
        mutant = mutate(td, args.axis)
        mutant.name = f"mutant-{args.axis}"
        _emit_pd(original)
        _emit_pd(mutant)
        return 0

    if args.cmd == "cover":
        for name, d, braid in _load_specs(args.knot):
            pres = _cover_presentation(d, braid)
            if args.action == "group":
                _print_presentation(pres)
            elif args.action == "abelian":
                print(f"{name or d.name}: {pres.abelian_invariants()}")
            elif args.action == "lowindex":
                for table in low_index_subgroups(pres, args.max_index):
                    inv = subgroup_abelianization(pres, table)
                    print(f"index {len(table)}: {inv}")
            elif args.action == "quotients":
                grp = _target_group(args.target)
                eps = epimorphisms(pres, grp, simplify=False)
                print(f"{name or d.name}: delta_{grp.name} = {len(eps)}")
            else:  # kernel-abelian
                grp = _target_group(args.target)
                eps = epimorphisms(pres, grp, simplify=False)
                if not eps:
                    print(f"{name or d.name}: no epimorphism onto {grp.name}")
                for i, hom in enumerate(eps, start=1):
                    inv = kernel_abelianization(pres, hom, grp)
                    print(f"{name or d.name}: kernel {i} abelianization {inv}")
        return 0

    if args.cmd == "report":
        opts = _report_options(args)
        for name, d, braid in _load_specs(args.knot):
            rep = compute_report(name, d, braid, opts)
            if fmt == "json":
                print(json.dumps(rep.as_dict(), sort_keys=True))
            else:
                print(f"== {rep.name or 'knot'} ==")
                for key, item in rep.items.items():
                    if fmt == "table1" and isinstance(item.value, LaurentPoly2):
                        print(format_table1(key, item.value))
                    else:
                        print(f"{key}: {item.text()}")
        return 0

    if args.cmd == "compare":
        opts = _report_options(args)
        (n1, d1, b1), = _load_specs(args.knot1)
        (n2, d2, b2), = _load_specs(args.knot2)
        r1 = compute_report(n1, d1, b1, opts)
        r2 = compute_report(n2, d2, b2, opts)
        res = compare_pair(r1, r2)
        if fmt == "json":
            print(json.dumps(res.as_dict(), sort_keys=True))
        else:
            for key, state in res.per_item.items():
                print(f"{key}: {state}")
            print(f"verdict: {res.verdict}")
        return 0

    raise ValueError(f"unhandled command {args.cmd}")


if __name__ == "__main__":
    sys.exit(main())
