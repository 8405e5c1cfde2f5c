"""Exact-arithmetic knot and link invariant toolkit.

Computes Jones, colored Jones, HOMFLY, Kauffman, and Alexander
polynomials of knots given by braid words or planar diagram codes,
builds satellite diagrams (cables, Whitehead doubles) and Conway
mutants, and derives invariants of the double branched cover from the
knot group (abelianizations of low-index subgroups, counts of
epimorphisms onto finite simple groups).
"""

__version__ = "0.1.0"
