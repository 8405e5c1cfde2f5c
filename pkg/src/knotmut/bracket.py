"""Kauffman bracket and Jones polynomial.

Conventions: bracket values live in Z[A, A^-1]; each crossing expands as
A * (join legs 0-1 and 2-3) + A^-1 * (join legs 0-3 and 1-2), a closed
loop contributes delta = -A^2 - A^-2, and the bracket of the empty
diagram is 1 (so an unknot diagram evaluates to delta).

The Jones polynomial of an oriented diagram D with writhe w is
(-A^3)^(-w) <D> / delta, rewritten in t = A^-4.
"""

from __future__ import annotations

from .diagram import PlanarDiagram
from .laurent import LaurentPoly

DELTA = LaurentPoly("A", {2: -1, -2: -1})


def _merge(pairing: dict[int, int], a: int, b: int) -> int:
    """Join endpoints a and b in an open-end pairing; return loops closed.

    `pairing` maps each open end to its partner along already-contracted
    strands.  Ends absent from the map are fresh.
    """
    pa = pairing.pop(a, None)
    pb = pairing.pop(b, None)
    if pa is None and pb is None:
        pairing[a] = b
        pairing[b] = a
        return 0
    if pa is None:
        pairing[a] = pb
        pairing[pb] = a
        return 0
    if pb is None:
        pairing[b] = pa
        pairing[pa] = b
        return 0
    if pa == b:
        # a and b were already partners: closing the loop
        return 1
    pairing[pa] = pb
    pairing[pb] = pa
    return 0


def kauffman_bracket(d: PlanarDiagram) -> LaurentPoly:
    """Bracket by crossing-at-a-time contraction with state merging.

    States are partial pairings of open arc-ends, keyed canonically so
    that equal boundary patterns share one accumulated coefficient.
    """
    crossings = list(d.crossings)
    # order crossings greedily to keep the open boundary small
    order = _contraction_order(crossings)

    # an arc-end is (arc, 0) for its first endpoint and (arc, 1) for its
    # second; track how many endpoints of each arc remain unprocessed
    remaining: dict[int, int] = {}
    for x in crossings:
        for a in x:
            remaining[a] = remaining.get(a, 0) + 1

    seen: dict[int, int] = {}

    def end_token(a: int) -> tuple[int, int]:
        k = seen.get(a, 0)
        seen[a] = k + 1
        return (a, k)

    # state: frozenset of frozenset pairs -> coefficient
    states: dict[frozenset, LaurentPoly] = {frozenset(): LaurentPoly.one("A")}
    A = LaurentPoly.monomial("A", 1)
    Ainv = LaurentPoly.monomial("A", -1)

    for idx in order:
        x = crossings[idx]
        toks = [end_token(a) for a in x]
        closing = {a for a in set(x) if seen[a] == remaining[a]}
        new_states: dict[frozenset, LaurentPoly] = {}
        for state, coeff in states.items():
            pairing: dict = {}
            for pair in state:
                u, v = tuple(pair)
                pairing[u] = v
                pairing[v] = u
            for weight, joins in ((A, ((0, 1), (2, 3))), (Ainv, ((0, 3), (1, 2)))):
                p = dict(pairing)
                loops = 0
                for i, j in joins:
                    loops += _merge(p, toks[i], toks[j])
                # close finished arcs: both endpoints of arc a now exist;
                # endpoint (a,0) connects to endpoint (a,1) through the arc
                for a in closing:
                    loops += _merge(p, (a, 0), (a, 1))
                c = coeff * weight
                for _ in range(loops):
                    c = c * DELTA
                key = frozenset(frozenset(e) for e in
                                {frozenset((u, v)) for u, v in p.items()})
                if key in new_states:
                    new_states[key] = new_states[key] + c
                else:
                    new_states[key] = c
        states = new_states
        # reset duplicate-endpoint bookkeeping consistently: tokens for a
        # closing arc are spent; nothing to do since `seen` tracks counts.

    total = LaurentPoly.zero("A")
    for state, coeff in states.items():
        if state:
            raise AssertionError("open ends remain after full contraction")
        total = total + coeff
    for _ in range(d.free_loops):
        total = total * DELTA
    return total


def _contraction_order(crossings: list) -> list[int]:
    """Greedy order keeping the set of open arcs small."""
    n = len(crossings)
    todo = set(range(n))
    open_arcs: set[int] = set()
    counts: dict[int, int] = {}
    for x in crossings:
        for a in x:
            counts[a] = counts.get(a, 0) + 1
    used: dict[int, int] = {a: 0 for a in counts}
    order = []
    while todo:
        best = None
        for i in todo:
            x = crossings[i]
            opens = 0
            closes = 0
            for a in set(x):
                mult = x.count(a)
                if used[a] + mult == counts[a]:
                    if a in open_arcs:
                        closes += 1
                else:
                    opens += 1
            score = opens - closes
            if best is None or score < best[0]:
                best = (score, i)
        _, i = best
        order.append(i)
        todo.discard(i)
        x = crossings[i]
        for a in set(x):
            used[a] += x.count(a)
            if used[a] == counts[a]:
                open_arcs.discard(a)
            else:
                open_arcs.add(a)
    return order


def bracket_state_sum(d: PlanarDiagram) -> LaurentPoly:
    """Independent 2^c state-sum bracket for cross-checking.

    Enumerates all smoothing states, counts loops with union-find, and
    sums A^(a-b) delta^loops.
    """
    crossings = list(d.crossings)
    n = len(crossings)
    total = LaurentPoly.zero("A")
    for mask in range(1 << n):
        parent: dict = {}

        def find(u):
            while parent.get(u, u) != u:
                parent[u] = parent.get(parent[u], parent[u])
                u = parent[u]
            return u

        def union(u, v):
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv

        ends = []
        seen: dict[int, int] = {}
        for x in crossings:
            toks = []
            for a in x:
                k = seen.get(a, 0)
                seen[a] = k + 1
                toks.append((a, k))
            ends.append(toks)
        # arc interiors connect endpoint 0 to endpoint 1
        for a, cnt in seen.items():
            if cnt == 2:
                union((a, 0), (a, 1))
            elif cnt != 2:
                raise ValueError(f"arc {a} has {cnt} endpoints")
        apow = 0
        for i in range(n):
            toks = ends[i]
            if mask & (1 << i):
                apow -= 1
                union(toks[0], toks[3])
                union(toks[1], toks[2])
            else:
                apow += 1
                union(toks[0], toks[1])
                union(toks[2], toks[3])
        roots = {find(t) for toks in ends for t in toks}
        loops = len(roots)
        term = LaurentPoly.monomial("A", apow)
        for _ in range(loops):
            term = term * DELTA
        total = total + term
    if n == 0:
        total = LaurentPoly.one("A")
    for _ in range(d.free_loops):
        total = total * DELTA
    return total


def jones(d: PlanarDiagram) -> LaurentPoly:
    """Jones polynomial in t (integer powers only for knots)."""
    w = d.writhe()
    br = kauffman_bracket(d).exact_div(DELTA)
    # multiply by (-A^3)^(-w)
    sign = 1 if w % 2 == 0 else -1
    shifted = LaurentPoly("A", {e - 3 * w: sign * c for e, c in br.coeffs.items()})
    # t = A^-4
    return shifted.invert_var().shrink(4, "t")
