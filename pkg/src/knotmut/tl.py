"""Temperley-Lieb algebra TL_n and Jones-Wenzl idempotents.

Elements are formal linear combinations of planar matchings of n bottom
points (0..n-1) and n top points (n..2n-1), with coefficients in the
field of rational functions of the bracket variable A.  Composition
stacks diagrams; each closed loop contributes delta = -A^2 - A^-2.

Coefficients are stored over a single common denominator so that all
inner-loop arithmetic happens in Z[A, A^-1]; the fraction is reduced
once per algebra operation.

The Jones-Wenzl idempotent f_n is computed by the Wenzl recursion
    f_{n+1} = f_n x 1 - (D_{n-1}/D_n) (f_n x 1) u_n (f_n x 1)
with D_n = (-1)^n [n+1] evaluated at a = A^2, which is the loop value of
the n-colored unknot in this sign convention (D_1 = delta).
"""

from __future__ import annotations

from .laurent import LaurentPoly, RatFunc, _poly_gcd

DELTA_A = LaurentPoly("A", {2: -1, -2: -1})

Matching = frozenset  # of frozenset pairs of point indices


def identity_matching(n: int) -> Matching:
    return frozenset(frozenset((i, n + i)) for i in range(n))


def cup_cap(n: int, i: int) -> Matching:
    """The generator u_i: cap joining bottom i, i+1; cup joining top i, i+1."""
    pairs = [frozenset((i, i + 1)), frozenset((n + i, n + i + 1))]
    for j in range(n):
        if j != i and j != i + 1:
            pairs.append(frozenset((j, n + j)))
    return frozenset(pairs)


def compose_matchings(m1: Matching, m2: Matching, n: int) -> tuple[Matching, int]:
    """Stack m2 on top of m1; return (resulting matching, closed loops).

    Bottom points of the result are the bottom of m1; top points are the
    top of m2.  Middle points (top of m1 = bottom of m2) are traced out.
    """
    adj: dict[int, list[int]] = {}

    def link(u, v):
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)

    # layers: bottom 0..n-1, top n..2n-1, middle 2n..3n-1
    for pair in m1:
        u, v = tuple(pair)
        link(u if u < n else n + u, v if v < n else n + v)
    for pair in m2:
        u, v = tuple(pair)
        link(2 * n + u if u < n else u, 2 * n + v if v < n else v)

    seen: set[int] = set()
    pairs = []
    for s in range(2 * n):
        if s in seen:
            continue
        prev, cur = None, s
        seen.add(s)
        while True:
            nbrs = adj[cur]
            nxt = nbrs[0] if nbrs[0] != prev else nbrs[1]
            prev, cur = cur, nxt
            seen.add(cur)
            if cur < 2 * n:
                pairs.append(frozenset((s, cur)))
                break
    loop_points = {p for p in adj if p >= 2 * n and p not in seen}
    loops = 0
    while loop_points:
        p = loop_points.pop()
        prev, cur = None, p
        while True:
            nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
            prev, cur = cur, nxt
            if cur == p:
                break
            loop_points.discard(cur)
        loops += 1
    return frozenset(pairs), loops


def _gcd_laurent(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Primitive gcd ignoring monomial factors; unit 1 if either is zero."""
    if p.is_zero() or q.is_zero():
        return LaurentPoly.one(p.var)
    a = {e - p.min_exp(): c for e, c in p.coeffs.items()}
    b = {e - q.min_exp(): c for e, c in q.coeffs.items()}
    return LaurentPoly(p.var, _poly_gcd(a, b))


class TLElement:
    """Linear combination of TL_n matchings over a common denominator."""

    __slots__ = ("n", "terms", "den")

    def __init__(self, n: int, terms: dict[Matching, LaurentPoly] | None = None,
                 den: LaurentPoly | None = None):
        self.n = n
        self.terms = {m: c for m, c in (terms or {}).items() if not c.is_zero()}
        self.den = den if den is not None else LaurentPoly.one("A")
        if not self.terms:
            self.den = LaurentPoly.one("A")

    @classmethod
    def zero(cls, n: int) -> "TLElement":
        return cls(n)

    @classmethod
    def identity(cls, n: int) -> "TLElement":
        return cls(n, {identity_matching(n): LaurentPoly.one("A")})

    @classmethod
    def generator(cls, n: int, i: int) -> "TLElement":
        return cls(n, {cup_cap(n, i): LaurentPoly.one("A")})

    def _normalized(self) -> "TLElement":
        if not self.terms:
            return TLElement.zero(self.n)
        g = self.den
        for t in self.terms.values():
            if len(g.coeffs) == 1 and abs(next(iter(g.coeffs.values()))) == 1:
                break
            g = _gcd_laurent(g, t)
        if len(g.coeffs) > 1 or next(iter(g.coeffs.values())) not in (1, -1):
            terms = {m: t.exact_div(g) for m, t in self.terms.items()}
            den = self.den.exact_div(g)
        else:
            terms, den = dict(self.terms), self.den
        # strip common monomial content and fix the denominator's sign
        shift = min(min(t.min_exp() for t in terms.values()), den.min_exp())
        if shift:
            terms = {m: LaurentPoly("A", {e - shift: c for e, c in t.coeffs.items()})
                     for m, t in terms.items()}
            den = LaurentPoly("A", {e - shift: c for e, c in den.coeffs.items()})
        if den.coeffs[den.max_exp()] < 0:
            terms = {m: -t for m, t in terms.items()}
            den = -den
        return TLElement(self.n, terms, den)

    def __add__(self, other: "TLElement") -> "TLElement":
        g = _gcd_laurent(self.den, other.den)
        f1 = other.den.exact_div(g) if not g.is_one() else other.den
        f2 = self.den.exact_div(g) if not g.is_one() else self.den
        den = self.den * f1
        out = {m: t * f1 for m, t in self.terms.items()}
        for m, t in other.terms.items():
            v = t * f2
            out[m] = out[m] + v if m in out else v
        return TLElement(self.n, out, den)._normalized()

    def __sub__(self, other: "TLElement") -> "TLElement":
        return self + TLElement(other.n, {m: -t for m, t in other.terms.items()},
                                other.den)

    def scale(self, c: RatFunc) -> "TLElement":
        return TLElement(self.n, {m: t * c.num for m, t in self.terms.items()},
                         self.den * c.den)._normalized()

    def __mul__(self, other: "TLElement") -> "TLElement":
        """Compose: self on the bottom, other stacked on top."""
        out: dict[Matching, LaurentPoly] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m, loops = compose_matchings(m1, m2, self.n)
                c = c1 * c2
                for _ in range(loops):
                    c = c * DELTA_A
                out[m] = out[m] + c if m in out else c
        return TLElement(self.n, out, self.den * other.den)._normalized()

    def __eq__(self, other):
        if not isinstance(other, TLElement):
            return NotImplemented
        if self.n != other.n:
            return False
        keys = set(self.terms) | set(other.terms)
        z = LaurentPoly.zero("A")
        return all(self.terms.get(k, z) * other.den == other.terms.get(k, z) * self.den
                   for k in keys)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, m: Matching) -> RatFunc:
        return RatFunc(self.terms.get(m, LaurentPoly.zero("A")), self.den)

    def tensor_identity(self, k: int = 1) -> "TLElement":
        """Embed TL_n into TL_{n+k} by adding k through-strands on the right."""
        n2 = self.n + k
        out = {}
        for m, c in self.terms.items():
            pairs = []
            for pair in m:
                u, v = tuple(pair)
                pairs.append(frozenset((u if u < self.n else u + k,
                                        v if v < self.n else v + k)))
            for j in range(k):
                pairs.append(frozenset((self.n + j, n2 + self.n + j)))
            out[frozenset(pairs)] = c
        return TLElement(n2, out, self.den)


def chebyshev_loop_value(n: int) -> LaurentPoly:
    """Loop value D_n = (-1)^n [n+1] at a = A^2 (D_0 = 1, D_1 = delta)."""
    from .laurent import qint

    p = qint(n + 1).stretch(2, "A")
    return p if n % 2 == 0 else -p


def jones_wenzl(n: int) -> TLElement:
    """The Jones-Wenzl idempotent f_n in TL_n, by the Wenzl recursion."""
    if n < 1:
        raise ValueError("n >= 1 required")
    f = TLElement.identity(1)
    for m in range(1, n):
        fe = f.tensor_identity(1)  # f_m x 1 in TL_{m+1}
        u = TLElement.generator(m + 1, m - 1)  # u_m acts on strands m-1, m
        ratio = RatFunc(chebyshev_loop_value(m - 1), chebyshev_loop_value(m))
        f = fe - (fe * u * fe).scale(ratio)
    return f
