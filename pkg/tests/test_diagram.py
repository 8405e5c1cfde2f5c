"""Planar diagrams, braid closures, and knot-spec parsing."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import random_braid
from knotmut.diagram import (KNOT_BRAIDS, BraidWord, add_kink, braid_closure,
                             connected_sum, mirror, named_knot, parse_braid,
                             parse_knot_spec, parse_pd, relabel,
                             successor_map, zero_framed)


class TestBraidWord:
    def test_parse(self):
        b = parse_braid("3 | 1 -2 1 -2")
        assert b.strands == 3
        assert b.letters == (1, -2, 1, -2)

    def test_writhe(self):
        assert parse_braid("3 | 1 -2 1 -2").writhe() == 0
        assert parse_braid("2 | 1 1 1").writhe() == 3

    def test_permutation_and_components(self):
        assert parse_braid("2 | 1").permutation() == [1, 0]
        assert parse_braid("2 | 1 1").permutation() == [0, 1]
        assert parse_braid("2 | 1 1").component_count() == 2
        assert parse_braid("2 | 1 1 1").component_count() == 1

    def test_inverse(self):
        b = parse_braid("3 | 1 -2 2")
        assert b.inverse().letters == (-2, 2, -1)


braids = st.integers(0, 2**30).map(lambda s: random_braid(random.Random(s)))


class TestBraidClosure:
    def test_trefoil(self):
        d = braid_closure(parse_braid("2 | 1 1 1"))
        d.validate()
        assert len(d.crossings) == 3
        assert d.writhe() == 3
        assert d.component_count() == 1

    @given(braids)
    @settings(max_examples=50)
    def test_closure_consistent(self, b):
        d = braid_closure(b)
        d.validate()
        assert d.writhe() == b.writhe()
        assert d.component_count() == b.component_count()


class TestDiagramOps:
    def test_mirror(self):
        d = braid_closure(parse_braid("2 | 1 1 1"))
        m = mirror(d)
        m.validate()
        assert m.writhe() == -d.writhe()
        assert mirror(m).writhe() == d.writhe()

    def test_connected_sum(self):
        t = braid_closure(parse_braid("2 | 1 1 1"))
        s = connected_sum(t, mirror(t))
        s.validate()
        assert len(s.crossings) == 6
        assert s.component_count() == 1
        assert s.writhe() == 0

    def test_add_kink(self):
        d = braid_closure(parse_braid("2 | 1 1 1"))
        for sign in (1, -1):
            k = add_kink(d, sign)
            k.validate()
            assert k.writhe() == d.writhe() + sign
            assert k.component_count() == d.component_count()

    def test_zero_framed(self):
        d = braid_closure(parse_braid("2 | 1 1 1"))
        z = zero_framed(d)
        z.validate()
        assert z.writhe() == 0

    def test_relabel(self):
        d = relabel(braid_closure(parse_braid("3 | 1 -2 1 -2")))
        d.validate()
        assert d.arcs == set(range(len(d.arcs)))

    def test_successor_map(self):
        d = braid_closure(parse_braid("2 | 1 1 1"))
        nxt = successor_map(d)
        assert set(nxt) == d.arcs
        # following successors visits each component cyclically
        a0 = min(d.arcs)
        seen, a = set(), a0
        while a not in seen:
            seen.add(a)
            a = nxt[a]
        assert a == a0
        assert seen == d.arcs  # a knot: one cycle through all arcs


class TestNamedKnots:
    @pytest.mark.parametrize("name", sorted(KNOT_BRAIDS))
    def test_valid(self, name):
        d = named_knot(name)
        d.validate()
        braid = parse_braid(KNOT_BRAIDS[name])
        assert d.component_count() == braid.component_count()

    def test_unknown(self):
        with pytest.raises(KeyError):
            named_knot("not-a-knot")


class TestKnotSpec:
    def test_bare_name(self):
        name, d, braid = parse_knot_spec("trefoil")
        assert name == "trefoil"
        assert braid is not None
        assert len(d.crossings) == len(braid.letters)

    def test_braid_spec(self):
        name, d, braid = parse_knot_spec("name=k braid: 2 | 1 1 1")
        assert name == "k"
        assert braid.strands == 2
        assert d.component_count() == 1

    def test_pd_spec(self):
        src = braid_closure(parse_braid("2 | 1 1 1"))
        body = " ".join(f"X({a},{b},{c},{e})" for a, b, c, e in src.crossings)
        name, d, braid = parse_knot_spec(f"name=t pd: {body}")
        assert name == "t"
        assert braid is None
        assert len(d.crossings) == 3
        d.validate()

    def test_pd_parse_direct(self):
        src = braid_closure(parse_braid("3 | 1 -2 1 -2"))
        body = " ".join(f"X({a},{b},{c},{e})" for a, b, c, e in src.crossings)
        d = parse_pd(body)
        d.validate()
        assert d.component_count() == 1
        assert len(d.crossings) == 4
