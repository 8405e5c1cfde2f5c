"""Colored Jones polynomials and the trivalent coefficient calculus."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import random_knot_diagram
from knotmut.bracket import jones
from knotmut.colored import (InadmissibleTerm, admissible, bracket_loop_color,
                             chebyshev_basis, colored_jones,
                             fusion_coefficients, gamma_coeff, vertex_weight)
from knotmut.diagram import (PlanarDiagram, connected_sum, named_knot,
                             parse_braid, braid_closure)
from knotmut.laurent import LaurentPoly, RatFunc, qint

UNKNOT = PlanarDiagram([], 1, "unknot")


class TestChebyshev:
    def test_small(self):
        assert chebyshev_basis(0) == {0: 1}
        assert chebyshev_basis(1) == {1: 1}
        assert chebyshev_basis(2) == {2: 1, 0: -1}
        assert chebyshev_basis(3) == {3: 1, 1: -2}

    def test_recursion(self):
        # e_n(2) = n+1 (Chebyshev at z = 2)
        for n in range(8):
            assert sum(c * 2**k for k, c in chebyshev_basis(n).items()) == n + 1


class TestVertexCalculus:
    def test_admissibility(self):
        assert admissible(1, 1, 2)
        assert admissible(1, 1, 0)
        assert not admissible(1, 1, 1)   # parity
        assert not admissible(1, 1, 4)   # triangle

    def test_loop_colors(self):
        assert bracket_loop_color(0).is_one()
        assert bracket_loop_color(1) == -qint(2)
        assert bracket_loop_color(2) == qint(3)

    def test_fusion_1_1(self):
        got = dict(fusion_coefficients(1, 1))
        assert set(got) == {0, 2}
        assert got[0] == RatFunc(-LaurentPoly.one("a"), qint(2))
        assert got[2] == RatFunc.from_poly(LaurentPoly.one("a"))

    @pytest.mark.parametrize("N", range(1, 7))
    def test_gamma_N00(self, N):
        assert gamma_coeff(N, 0, 0) == RatFunc(LaurentPoly.one("a"),
                                               qint(N + 1) ** 2)

    def test_gamma_inadmissible(self):
        with pytest.raises(InadmissibleTerm):
            gamma_coeff(1, 1, 3)

    def test_vertex_weight_nn0(self):
        # <N,N,0> = (-1)^N [N+1]
        for n in range(1, 5):
            expect = qint(n + 1)
            if n % 2:
                expect = -expect
            assert vertex_weight(n, n, 0) == expect


class TestColoredJones:
    def test_unknot_all_colors(self):
        for n in range(1, 5):
            assert colored_jones(UNKNOT, n).is_one()

    def test_color_one_trivial(self):
        for name in ("trefoil", "figure8", "5_2"):
            assert colored_jones(named_knot(name), 1).is_one()

    def test_color_two_is_jones(self):
        for name in ("trefoil", "trefoil_mirror", "figure8", "5_2"):
            d = named_knot(name)
            # J(2; q) recovers V under t = 1/q
            assert colored_jones(d, 2) == jones(d).invert_var("q")

    @given(st.integers(0, 2**30))
    @settings(max_examples=10, deadline=None)
    def test_color_two_random(self, seed):
        d = random_knot_diagram(random.Random(seed), max_letters=8)
        assert colored_jones(d, 2) == jones(d).invert_var("q")

    @pytest.mark.parametrize("N", (2, 3))
    def test_connected_sum_multiplicative(self, N):
        a = braid_closure(parse_braid("2 | 1 1 1"))
        b = named_knot("figure8")
        s = connected_sum(a, b)
        assert colored_jones(s, N) == \
            colored_jones(a, N) * colored_jones(b, N)

    def test_trefoil_color3_mirror(self):
        d = named_knot("trefoil")
        m = named_knot("trefoil_mirror")
        j3 = colored_jones(d, 3)
        assert colored_jones(m, 3) == j3.invert_var()
        assert not j3.is_one()
