"""Invariant reports and the pair-comparison pipeline.

A report computes a configurable set of invariants for one knot; the
comparison pipeline evaluates two reports item by item.  Equality of a
mutation invariant never proves mutation, so the strongest negative
verdict is "mutation excluded" (some mutation invariant differs) and
the positive case is always "consistent with mutation (inconclusive)".
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .alexander import alexander_pd
from .bracket import jones
from .colored import colored_jones
from .diagram import BraidWord, PlanarDiagram
from .laurent import LaurentPoly
from .presentations import (branched_cover_from_meridians, knot_group,
                            low_index_subgroups, subgroup_abelianization,
                            tietze_simplify, wirtinger_presentation)
from .permgroups import PermGroup, builtin_targets
from .quotients import epimorphisms
from .skein2 import (ResourceLimitExceeded, homfly, homfly_2cable, kauffman_f,
                     p_whitehead_plus)

DONE = "done"
SKIPPED = "skipped"
LIMITED = "resource-limited"

# items whose equality is forced by mutation; a difference in any of
# them excludes mutation
MUTATION_INVARIANTS = ("jones", "alexander", "homfly", "kauffman",
                       "cjones", "whitehead_homfly", "cable_homfly",
                       "h1_double_cover", "quotients", "lowindex_abelian")

VERDICT_EXCLUDED = "mutation excluded"
VERDICT_INCONCLUSIVE = "consistent with mutation (inconclusive)"


@dataclass
class ReportOptions:
    colors: int = 2               # colored Jones up to this N
    cover: bool = True            # H1 of the double branched cover
    quotients: bool = False       # delta over the built-in target list
    quotients_max_order: int = 60
    lowindex: int = 0             # subgroup abelianizations up to this index
    whitehead_homfly: bool = False
    cable_homfly: bool = False
    budget_seconds: float | None = None
    threads: int = 1


@dataclass
class ReportItem:
    name: str
    status: str
    value: object = None
    detail: str = ""

    def text(self) -> str:
        if self.status != DONE:
            return f"[{self.status}{': ' + self.detail if self.detail else ''}]"
        return str(self.value)


@dataclass
class InvariantReport:
    name: str
    items: dict[str, ReportItem] = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "items": {k: {"status": it.status, "value": _jsonable(it.value),
                          "detail": it.detail}
                      for k, it in self.items.items()},
        }


def _jsonable(v):
    if v is None or isinstance(v, (int, str, bool)):
        return v
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    return str(v)


def _presentation_for(d: PlanarDiagram, braid: BraidWord | None):
    if braid is not None:
        return knot_group(braid)
    return wirtinger_presentation(d)


def compute_report(name: str, d: PlanarDiagram,
                   braid: BraidWord | None = None,
                   options: ReportOptions | None = None) -> InvariantReport:
    opts = options or ReportOptions()
    is_knot = d.component_count() == 1
    report = InvariantReport(name or d.name)

    jobs: list[tuple[str, object]] = []

    def add(key, fn, need_knot=True):
        if need_knot and not is_knot:
            report.items[key] = ReportItem(key, SKIPPED, detail="not a knot")
            return
        jobs.append((key, fn))

    budget = opts.budget_seconds
    add("jones", lambda: jones(d))
    add("alexander", lambda: alexander_pd(d) if d.crossings
        else LaurentPoly.one("t"))
    add("homfly", lambda: homfly(d, budget_seconds=budget))
    add("kauffman", lambda: kauffman_f(d, budget_seconds=budget))
    for n in range(2, opts.colors + 1):
        add(f"cjones_{n}", lambda n=n: colored_jones(d, n))
    if opts.whitehead_homfly:
        add("whitehead_homfly", lambda: p_whitehead_plus(d, budget_seconds=budget))
    if opts.cable_homfly:
        add("cable_homfly", lambda: homfly_2cable(d, budget_seconds=budget))

    cover_pres = None
    if (opts.cover or opts.quotients or opts.lowindex) and is_knot:
        def get_pres():
            nonlocal cover_pres
            if cover_pres is None:
                cover_pres = tietze_simplify(
                    branched_cover_from_meridians(_presentation_for(d, braid)))
            return cover_pres
        if opts.cover:
            add("h1_double_cover", lambda: get_pres().abelian_invariants())
        if opts.quotients:
            def quots():
                pres = get_pres()
                targets = builtin_targets(opts.quotients_max_order)
                return {t.name: len(epimorphisms(pres, t, simplify=False))
                        for t in targets}
            add("quotients", quots)
        if opts.lowindex:
            def lowidx():
                pres = get_pres()
                tables = low_index_subgroups(pres, opts.lowindex)
                out = [(len(t), subgroup_abelianization(pres, t))
                       for t in tables]
                return sorted(out)
            add("lowindex_abelian", lowidx)
    else:
        for key, on in (("h1_double_cover", opts.cover),
                        ("quotients", opts.quotients),
                        ("lowindex_abelian", bool(opts.lowindex))):
            if on and not is_knot:
                report.items[key] = ReportItem(key, SKIPPED, detail="not a knot")

    def run(job):
        key, fn = job
        try:
            return key, ReportItem(key, DONE, fn())
        except ResourceLimitExceeded as exc:
            return key, ReportItem(key, LIMITED, detail=str(exc))
        except (ArithmeticError, ValueError) as exc:
            return key, ReportItem(key, SKIPPED, detail=str(exc))

    if opts.threads > 1:
        with ThreadPoolExecutor(max_workers=opts.threads) as pool:
            results = list(pool.map(run, jobs))
    else:
        results = [run(j) for j in jobs]
    for key, item in results:
        report.items[key] = item
    # deterministic ordering regardless of thread count
    report.items = {k: report.items[k] for k in sorted(report.items)}
    return report


EQUAL = "EQUAL"
DIFFERENT = "DIFFERENT"
UNKNOWN = "UNKNOWN"


@dataclass
class ComparisonResult:
    left: InvariantReport
    right: InvariantReport
    per_item: dict[str, str] = field(default_factory=dict)
    verdict: str = VERDICT_INCONCLUSIVE

    def as_dict(self) -> dict:
        return {"left": self.left.as_dict(), "right": self.right.as_dict(),
                "items": dict(self.per_item), "verdict": self.verdict}


def _is_mutation_invariant(key: str) -> bool:
    base = key.split("_")[0] if key.startswith("cjones") else key
    return base in MUTATION_INVARIANTS or key in MUTATION_INVARIANTS


def compare_pair(r1: InvariantReport, r2: InvariantReport) -> ComparisonResult:
    out = ComparisonResult(r1, r2)
    keys = sorted(set(r1.items) | set(r2.items))
    excluded = False
    for k in keys:
        i1, i2 = r1.items.get(k), r2.items.get(k)
        if i1 is None or i2 is None or i1.status != DONE or i2.status != DONE:
            out.per_item[k] = UNKNOWN
            continue
        same = i1.value == i2.value
        out.per_item[k] = EQUAL if same else DIFFERENT
        if not same and _is_mutation_invariant(k):
            excluded = True
    out.verdict = VERDICT_EXCLUDED if excluded else VERDICT_INCONCLUSIVE
    return out
