"""Permutation groups and epimorphism search onto finite targets."""

import itertools

import pytest

from knotmut.diagram import parse_braid
from knotmut.permgroups import (PermGroup, alternating, closure, cyclic,
                                dihedral, identity, perm_inv, perm_mul, psl2,
                                symmetric, builtin_targets)
from knotmut.presentations import (GroupPresentation, branched_cover_group,
                                   knot_group, tietze_simplify)
from knotmut.quotients import (epimorphisms, evaluate_word,
                               kernel_abelianization)


class TestPermGroups:
    def test_mul_convention(self):
        # (p * q)(i) = q(p(i)): left-to-right composition
        p, q = (1, 0, 2), (0, 2, 1)
        assert perm_mul(p, q) == (2, 0, 1)
        assert perm_mul(p, perm_inv(p)) == identity(3)

    @pytest.mark.parametrize("group,order", [
        (cyclic(7), 7), (dihedral(5), 10), (symmetric(4), 24),
        (alternating(4), 12), (alternating(5), 60),
        (psl2(7), 168), (psl2(11), 660), (psl2(13), 1092),
    ])
    def test_orders(self, group, order):
        assert group.order == order

    def test_closure(self):
        gens = [(1, 0, 2), (0, 2, 1)]
        assert len(closure(gens, 3)) == 6

    def test_builtin_targets_sorted(self):
        targets = builtin_targets(60)
        orders = [t.order for t in targets]
        assert orders == sorted(orders)
        assert all(o <= 60 for o in orders)


def brute_force_epi_count(g: GroupPresentation, group: PermGroup) -> int:
    """Exhaustive surjection count up to kernel equality.

    Two surjections have the same kernel exactly when the pairs of
    generator images generate the graph of an automorphism, i.e. a
    subgroup of size |group| inside the direct square.
    """
    elems = sorted(group.elements())
    deg = group.degree
    full = frozenset(elems)
    valid = []
    for images in itertools.product(elems, repeat=g.ngens):
        if any(evaluate_word(r, list(images), deg) != identity(deg)
               for r in g.relators):
            continue
        if frozenset(closure(list(images), deg)) != full:
            continue
        valid.append(images)
    classes = []
    for hom in valid:
        matched = False
        for rep in classes:
            pairs = [tuple(a + tuple(x + deg for x in b))
                     for a, b in zip(hom, rep)]
            if len(closure(pairs, 2 * deg)) == group.order:
                matched = True
                break
        if not matched:
            classes.append(hom)
    return len(classes)


class TestEpimorphisms:
    def test_cyclic_targets(self):
        # Z/3 surjects onto C3 with a unique (trivial) kernel
        g = GroupPresentation(1, ((1, 1, 1),))
        assert len(epimorphisms(g, cyclic(3))) == 1
        assert len(epimorphisms(g, cyclic(2))) == 0

    @pytest.mark.parametrize("knot,target,expected", [
        ("2 | 1 1 1", "C3", 1),      # cover group Z/3
        ("2 | 1 1 1", "C5", 0),
        ("3 | 1 -2 1 -2", "C5", 1),  # cover group Z/5
        ("3 | 1 -2 1 -2", "D5", 0),  # abelian group, no nonabelian quotient
    ])
    def test_cover_quotients(self, knot, target, expected):
        g = tietze_simplify(branched_cover_group(parse_braid(knot)))
        grp = cyclic(int(target[1])) if target[0] == "C" else \
            dihedral(int(target[1]))
        assert len(epimorphisms(g, grp, simplify=False)) == expected

    @pytest.mark.parametrize("braid", ["2 | 1 1 1", "3 | 1 -2 1 -2"])
    @pytest.mark.parametrize("factory,n", [
        (cyclic, 3), (cyclic, 4), (dihedral, 3), (dihedral, 5),
        (alternating, 4), (symmetric, 3),
    ])
    def test_against_brute_force(self, braid, factory, n):
        g = tietze_simplify(knot_group(parse_braid(braid)))
        grp = factory(n)
        assert len(epimorphisms(g, grp, simplify=False)) == \
            brute_force_epi_count(g, grp)


class TestKernelAbelianization:
    def test_kernel_in_Z(self):
        # Z -> C3 has kernel Z
        g = GroupPresentation(1, ())
        grp = cyclic(3)
        hom = [(1, 2, 0)]
        assert kernel_abelianization(g, hom, grp) == [0]

    def test_kernel_in_Z6(self):
        # Z/6 -> C3 has kernel Z/2
        g = GroupPresentation(1, ((1,) * 6,))
        grp = cyclic(3)
        hom = [(1, 2, 0)]
        assert kernel_abelianization(g, hom, grp) == [2]

    def test_trefoil_group_onto_S3(self):
        # kernel = center x rank-2 free group (the center x^2 = y^3 dies
        # in S3, and central extensions of free groups split), so Z^3
        g = tietze_simplify(knot_group(parse_braid("2 | 1 1 1")))
        eps = epimorphisms(g, symmetric(3), simplify=False)
        assert len(eps) == 1
        assert kernel_abelianization(g, eps[0], symmetric(3)) == [0, 0, 0]
