"""Temperley-Lieb algebra and Jones-Wenzl projectors."""

import pytest

from knotmut.laurent import LaurentPoly, RatFunc, qint
from knotmut.tl import (TLElement, chebyshev_loop_value, compose_matchings,
                        cup_cap, identity_matching, jones_wenzl)

DELTA_A = LaurentPoly("A", {2: -1, -2: -1})


class TestMatchings:
    def test_identity_compose(self):
        ident = identity_matching(3)
        m, loops = compose_matchings(ident, ident, 3)
        assert m == ident
        assert loops == 0

    def test_generator_squares_to_loop(self):
        e = cup_cap(3, 0)
        m, loops = compose_matchings(e, e, 3)
        assert m == e
        assert loops == 1


class TestTLAlgebra:
    def test_tl_relations(self):
        # e_i^2 = delta e_i; e_i e_j e_i = e_i for |i-j| = 1
        n = 4
        for i in range(n - 1):
            e = TLElement.generator(n, i)
            assert e * e == e.scale(RatFunc.from_poly(DELTA_A))
        for i in range(n - 2):
            a, b = TLElement.generator(n, i), TLElement.generator(n, i + 1)
            assert a * b * a == a
            assert b * a * b == b

    def test_distant_generators_commute(self):
        a, b = TLElement.generator(4, 0), TLElement.generator(4, 2)
        assert a * b == b * a

    def test_tensor_identity(self):
        e = TLElement.generator(2, 0).tensor_identity(1)
        assert e == TLElement.generator(3, 0)


class TestJonesWenzl:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_idempotent(self, n):
        f = jones_wenzl(n)
        assert f * f == f

    @pytest.mark.parametrize("n", range(2, 7))
    def test_kills_generators(self, n):
        f = jones_wenzl(n)
        for i in range(n - 1):
            u = TLElement.generator(n, i)
            assert (u * f).is_zero()
            assert (f * u).is_zero()

    def test_f2_coefficients(self):
        # f_2 = 1 - e_0 / delta
        f = jones_wenzl(2)
        assert f.coefficient(identity_matching(2)) == \
            RatFunc.from_poly(LaurentPoly.one("A"))
        assert f.coefficient(cup_cap(2, 0)) == \
            RatFunc(-LaurentPoly.one("A"), DELTA_A)


class TestLoopValues:
    def test_small(self):
        assert chebyshev_loop_value(0).is_one()
        assert chebyshev_loop_value(1) == DELTA_A

    @pytest.mark.parametrize("n", range(0, 6))
    def test_sign_and_magnitude(self, n):
        # D_n = (-1)^n [n+1] with a = A^2
        expect = qint(n + 1).stretch(2, "A")
        if n % 2:
            expect = -expect
        assert chebyshev_loop_value(n) == expect
