"""Invariant reports and pair comparison."""

import random

from knotmut.diagram import named_knot, parse_braid
from knotmut.report import (DONE, SKIPPED, VERDICT_EXCLUDED,
                            VERDICT_INCONCLUSIVE, ReportOptions, compare_pair,
                            compute_report)
from knotmut.tangles import AXES, mutate, random_decomposition

BASIC = ("alexander", "cjones_2", "h1_double_cover", "homfly", "jones",
         "kauffman")


class TestComputeReport:
    def test_basic_items(self):
        from knotmut.diagram import KNOT_BRAIDS
        d = named_knot("trefoil")
        braid = parse_braid(KNOT_BRAIDS["trefoil"])
        rep = compute_report("trefoil", d, braid)
        assert tuple(rep.items) == BASIC
        assert all(item.status == DONE for item in rep.items.values())
        assert rep.items["h1_double_cover"].value == [3]

    def test_link_skips_knot_only_items(self):
        d = named_knot("hopf_plus")
        rep = compute_report("hopf", d)
        assert rep.items["jones"].status == SKIPPED
        assert rep.items["h1_double_cover"].status == SKIPPED

    def test_threads_deterministic(self):
        d = named_knot("figure8")
        r1 = compute_report("f8", d, options=ReportOptions(threads=1))
        r2 = compute_report("f8", d, options=ReportOptions(threads=3))
        assert r1.as_dict() == r2.as_dict()

    def test_optional_items(self):
        d = named_knot("trefoil")
        opts = ReportOptions(colors=3, quotients=True, quotients_max_order=12,
                             lowindex=3, whitehead_homfly=True)
        rep = compute_report("trefoil", d, options=opts)
        for key in ("cjones_3", "quotients", "lowindex_abelian",
                    "whitehead_homfly"):
            assert rep.items[key].status == DONE
        # the cover group is Z/3: exactly the C3 quotient among small targets
        quots = rep.items["quotients"].value
        assert quots["C3"] == 1
        assert all(v == 0 for k, v in quots.items() if k != "C3")


class TestComparePair:
    def test_mirror_pair_excluded(self):
        r1 = compute_report("k", named_knot("trefoil"))
        r2 = compute_report("m", named_knot("trefoil_mirror"))
        res = compare_pair(r1, r2)
        assert res.per_item["jones"] == "DIFFERENT"
        assert res.verdict == VERDICT_EXCLUDED

    def test_self_pair_inconclusive(self):
        r = compute_report("k", named_knot("figure8"))
        res = compare_pair(r, r)
        assert set(res.per_item.values()) == {"EQUAL"}
        assert res.verdict == VERDICT_INCONCLUSIVE

    def test_mutant_pair_inconclusive(self):
        td = random_decomposition(random.Random(11), max_crossings=10)
        d1 = td.glue("a")
        d2 = mutate(td, AXES[0])
        res = compare_pair(compute_report("a", d1), compute_report("b", d2))
        assert res.verdict == VERDICT_INCONCLUSIVE
        assert all(v == "EQUAL" for v in res.per_item.values())
