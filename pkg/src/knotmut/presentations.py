"""Finitely presented groups from braids, covers, and coset machinery.

Generators are numbered 1..ngens; words are tuples of nonzero integers
(negative for inverses), as in `freegroup`.  The main constructions:

  * knot_group: the braid-closure presentation < x_i | beta(x_i) x_i^-1 >
  * meridian_square_quotient: adds x_1^2 (all meridians are conjugate)
  * branched_cover_group: the fundamental group of the double branched
    cover, computed by Reidemeister-Schreier along the index-2 subgroup
    of the meridian-square quotient
  * low_index_subgroups: coset-table backtracking, one representative
    per conjugacy class
  * subgroup presentations and abelianizations from any coset table
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import BraidWord
from .freegroup import abelian_exponent, artin_action, freely_reduce, inverse_word
from .matrices import abelian_invariants

Word = tuple[int, ...]


def _cyclic_reduce(word: Word) -> Word:
    w = freely_reduce(word)
    while len(w) >= 2 and w[0] == -w[-1]:
        w = w[1:-1]
    return w


@dataclass(frozen=True)
class GroupPresentation:
    ngens: int
    relators: tuple[Word, ...]

    def __post_init__(self):
        for r in self.relators:
            for g in r:
                if g == 0 or abs(g) > self.ngens:
                    raise ValueError(f"bad generator {g} in relator")

    def abelian_invariants(self) -> list[int]:
        rows = []
        for r in self.relators:
            row = [0] * self.ngens
            for g in r:
                row[abs(g) - 1] += 1 if g > 0 else -1
            rows.append(row)
        return abelian_invariants(rows, self.ngens)

    def simplified(self, max_relator_length: int = 2000) -> "GroupPresentation":
        return tietze_simplify(self, max_relator_length)

    def __str__(self):
        gens = ", ".join(f"x{i}" for i in range(1, self.ngens + 1))
        rels = ", ".join(format_word(r) for r in self.relators) or "1"
        return f"< {gens} | {rels} >"


def format_word(word: Word) -> str:
    if not word:
        return "1"
    parts = []
    i = 0
    while i < len(word):
        g = word[i]
        j = i
        while j < len(word) and word[j] == g:
            j += 1
        e = (j - i) * (1 if g > 0 else -1)
        parts.append(f"x{abs(g)}" + (f"^{e}" if e != 1 else ""))
        i = j
    return "*".join(parts)


def knot_group(braid: BraidWord) -> GroupPresentation:
    """Braid-closure presentation of the fundamental group of the complement."""
    images = artin_action(braid)
    rels = []
    for i, img in enumerate(images, start=1):
        r = _cyclic_reduce(img + (-i,))
        if r:
            rels.append(r)
    return GroupPresentation(braid.strands, tuple(rels))


def wirtinger_presentation(d) -> GroupPresentation:
    """Wirtinger presentation of a knot diagram's group.

    Generators are the overpass arcs; each crossing contributes the
    relation (outgoing under-arc) = o^e (incoming under-arc) o^-e with o
    the over-arc and e the crossing sign.  All generators are meridians.
    """
    from .alexander import _wirtinger_arcs
    from .diagram import _over_dir_cache

    if d.component_count() != 1:
        raise ValueError("diagram must be a knot")
    if not d.crossings:
        return GroupPresentation(1, ())
    arc_of = _wirtinger_arcs(d)
    labels = sorted(set(arc_of.values()))
    gen = {a: i + 1 for i, a in enumerate(labels)}
    dirs = _over_dir_cache(d)
    rels = []
    for x in d.crossings:
        a, c, o = gen[arc_of[x[0]]], gen[arc_of[x[2]]], gen[arc_of[x[3]]]
        e = 1 if dirs[x] else -1
        r = _cyclic_reduce((o * e, a, -o * e, -c))
        if r:
            rels.append(r)
    return GroupPresentation(len(labels), tuple(rels))


def meridian_square_quotient(g: GroupPresentation) -> GroupPresentation:
    """Quotient by the normal closure of the squared meridian x_1^2."""
    return GroupPresentation(g.ngens, g.relators + ((1, 1),))


# -- coset tables ---------------------------------------------------------
#
# A coset table is a list of rows, one per coset, with 2*ngens columns:
# column 2*(g-1) is the action of generator g, column 2*(g-1)+1 of its
# inverse.  Complete tables have no None entries.


def _col(g: int) -> int:
    return 2 * (abs(g) - 1) + (0 if g > 0 else 1)


def _inv_col(col: int) -> int:
    return col ^ 1


def table_apply(table, coset: int, word: Word) -> int:
    for g in word:
        coset = table[coset][_col(g)]
    return coset


def coset_table_from_images(ngens: int, images: list[dict[int, int]],
                            size: int) -> list[list[int]]:
    """Table of the action given each generator's permutation (as a dict)."""
    table = [[None] * (2 * ngens) for _ in range(size)]
    for g in range(1, ngens + 1):
        perm = images[g - 1]
        for c in range(size):
            table[c][_col(g)] = perm[c]
            table[perm[c]][_col(-g)] = c
    return table


def reidemeister_schreier(g: GroupPresentation,
                          table: list[list[int]]) -> GroupPresentation:
    """Presentation of the point stabilizer of coset 0.

    Schreier generators correspond to non-tree edges of the coset graph;
    relators are the rewrites of rep(c) r rep(c)^-1 for every relator r
    and coset c.
    """
    n = len(table)
    tree_edge = {}  # coset -> (from, col) discovered by BFS from 0
    order = [0]
    seen = {0}
    qi = 0
    while qi < len(order):
        c = order[qi]
        qi += 1
        for col in range(2 * g.ngens):
            d = table[c][col]
            if d not in seen:
                seen.add(d)
                tree_edge[d] = (c, col)
                order.append(d)
    if len(seen) != n:
        raise ValueError("coset table is not transitive")

    # non-tree directed edges (c, gen-col) get a Schreier generator; the
    # inverse column of the same edge is the inverse generator
    sgen: dict[tuple[int, int], int] = {}
    nsg = 0
    for c in range(n):
        for gidx in range(g.ngens):
            col = 2 * gidx
            d = table[c][col]
            if tree_edge.get(d) == (c, col) or tree_edge.get(c) == (d, col ^ 1):
                continue  # spanning-tree edge, trivial generator
            nsg += 1
            sgen[(c, col)] = nsg

    def edge_gen(c: int, col: int) -> int:
        """Signed Schreier generator of the directed edge (c, col)."""
        if col % 2 == 0:
            s = sgen.get((c, col))
            return s if s is not None else 0
        d = table[c][col]
        s = sgen.get((d, col ^ 1))
        return -s if s is not None else 0

    relators = []
    for r in g.relators:
        for c in range(n):
            cur = c
            out = []
            for letter in r:
                col = _col(letter)
                s = edge_gen(cur, col)
                if s:
                    out.append(s)
                cur = table[cur][col]
            if cur != c:
                raise ValueError("relator does not stabilize the coset")
            w = _cyclic_reduce(tuple(out))
            if w:
                relators.append(w)
    return GroupPresentation(nsg, tuple(dict.fromkeys(relators)))


def branched_cover_from_meridians(g: GroupPresentation) -> GroupPresentation:
    """Index-2 rewriting of a presentation whose generators are all meridians."""
    g = meridian_square_quotient(g)
    swap = {0: 1, 1: 0}
    table = coset_table_from_images(g.ngens, [swap] * g.ngens, 2)
    return reidemeister_schreier(g, table)


def branched_cover_group(braid: BraidWord) -> GroupPresentation:
    """pi_1 of the double cover of S^3 branched over the braid closure.

    This is the index-2 subgroup of G/(mu^2) where every meridian maps
    to the nontrivial element of Z/2.
    """
    if braid.component_count() != 1:
        raise ValueError("closure must be a knot")
    return branched_cover_from_meridians(knot_group(braid))


def branched_cover_group_pd(d) -> GroupPresentation:
    """Branched double cover group from a planar diagram (Wirtinger route)."""
    return branched_cover_from_meridians(wirtinger_presentation(d))


def subgroup_abelianization(g: GroupPresentation,
                            table: list[list[int]]) -> list[int]:
    """Abelian invariants of the coset-0 stabilizer, without Tietze steps."""
    sub = reidemeister_schreier(g, table)
    return sub.abelian_invariants()


# -- Tietze simplification ------------------------------------------------


def tietze_simplify(g: GroupPresentation,
                    max_relator_length: int = 2000) -> GroupPresentation:
    """Shorten a presentation by generator elimination and substitution."""
    ngens = g.ngens
    rels = [list(_cyclic_reduce(r)) for r in g.relators]
    rels = [r for r in rels if r]

    def substitute_all(gen: int, image: Word):
        nonlocal rels
        imap = {gen: tuple(image), -gen: inverse_word(image)}
        new = []
        for r in rels:
            out: list[int] = []
            for letter in r:
                for h in imap.get(letter, (letter,)):
                    if out and out[-1] == -h:
                        out.pop()
                    else:
                        out.append(h)
            w = list(_cyclic_reduce(tuple(out)))
            if w:
                new.append(w)
        rels = new

    changed = True
    while changed:
        changed = False
        # deduplicate (up to cyclic rotation and inversion)
        seen = set()
        uniq = []
        for r in rels:
            best = None
            for w in (tuple(r), inverse_word(r)):
                for i in range(len(w)):
                    rot = w[i:] + w[:i]
                    if best is None or rot < best:
                        best = rot
            if best not in seen:
                seen.add(best)
                uniq.append(r)
        if len(uniq) != len(rels):
            rels = uniq
            changed = True
        # eliminate a generator that appears exactly once in some relator
        best_pick = None
        occ: dict[int, int] = {}
        for r in rels:
            for letter in r:
                occ[abs(letter)] = occ.get(abs(letter), 0) + 1
        for ri, r in enumerate(rels):
            counts: dict[int, int] = {}
            for letter in r:
                counts[abs(letter)] = counts.get(abs(letter), 0) + 1
            for gen, c in counts.items():
                if c == 1:
                    cost = (len(r) - 1) * (occ[gen] - 1)
                    if cost <= max_relator_length:
                        if best_pick is None or len(r) < len(rels[best_pick[0]]):
                            best_pick = (ri, gen)
        if best_pick is not None:
            ri, gen = best_pick
            r = rels.pop(ri)
            pos = next(i for i, letter in enumerate(r) if abs(letter) == gen)
            # r = u g v  (or u g^-1 v)  =>  g = u^-1 v^-1 (or v u)
            u, v = tuple(r[:pos]), tuple(r[pos + 1:])
            if r[pos] > 0:
                image = inverse_word(u) + inverse_word(v)
            else:
                image = v + u
            substitute_all(gen, freely_reduce(image))
            changed = True

    # relabel surviving generators contiguously
    used = sorted({abs(letter) for r in rels for letter in r})
    remap = {old: i + 1 for i, old in enumerate(used)}
    out = tuple(tuple((1 if letter > 0 else -1) * remap[abs(letter)]
                      for letter in r)
                for r in sorted(rels, key=lambda r: (len(r), r)))
    return GroupPresentation(len(used), out)


# -- low-index subgroups ---------------------------------------------------


def low_index_subgroups(g: GroupPresentation, max_index: int,
                        max_tables: int = 200000) -> list[list[list[int]]]:
    """Complete coset tables of subgroups of index <= max_index.

    Returns one table per conjugacy class of subgroups (the class of the
    coset-0 stabilizer), including the whole group at index 1.
    """
    ncols = 2 * g.ngens
    rels = [_cyclic_reduce(r) for r in g.relators]
    rels = [r for r in rels if r]
    results: list[list[list[int]]] = []
    seen_classes: set = set()
    budget = [max_tables]

    def scan_relators(table) -> bool:
        """Propagate deductions; False on contradiction."""
        again = True
        while again:
            again = False
            for r in rels:
                cols = [_col(x) for x in r]
                for c in range(len(table)):
                    # scan forward then backward across the relator cycle
                    f, fi = c, 0
                    while fi < len(cols) and table[f][cols[fi]] is not None:
                        f = table[f][cols[fi]]
                        fi += 1
                    b, bi = c, len(cols)
                    while bi > fi and table[b][_inv_col(cols[bi - 1])] is not None:
                        b = table[b][_inv_col(cols[bi - 1])]
                        bi -= 1
                    if fi == bi:
                        if f != b:
                            return False
                    elif fi + 1 == bi:
                        col = cols[fi]
                        if table[f][col] is None and table[b][_inv_col(col)] is None:
                            table[f][col] = b
                            table[b][_inv_col(col)] = f
                            again = True
                        elif table[f][col] not in (None, b):
                            return False
                        elif table[b][_inv_col(col)] not in (None, f):
                            return False
                        else:
                            table[f][col] = b
                            table[b][_inv_col(col)] = f
        return True

    def first_hole(table):
        for c in range(len(table)):
            for col in range(ncols):
                if table[c][col] is None:
                    return c, col
        return None

    def recurse(table):
        budget[0] -= 1
        if budget[0] < 0:
            raise RuntimeError("low-index search budget exhausted")
        hole = first_hole(table)
        if hole is None:
            key = _class_signature(table, ncols)
            if key not in seen_classes:
                seen_classes.add(key)
                results.append([row[:] for row in table])
            return
        c, col = hole
        candidates = [d for d in range(len(table))
                      if table[d][_inv_col(col)] is None]
        if len(table) < max_index:
            candidates.append(len(table))
        for d in candidates:
            t2 = [row[:] for row in table]
            if d == len(table):
                t2.append([None] * ncols)
            t2[c][col] = d
            t2[d][_inv_col(col)] = c
            if scan_relators(t2):
                recurse(t2)

    recurse([[None] * ncols])
    results.sort(key=len)
    return results


def _normalized_table(table, ncols: int, base: int) -> tuple:
    """Relabel cosets by BFS from `base` in fixed column order."""
    relabel = {base: 0}
    order = [base]
    qi = 0
    while qi < len(order):
        c = order[qi]
        qi += 1
        for col in range(ncols):
            d = table[c][col]
            if d not in relabel:
                relabel[d] = len(relabel)
                order.append(d)
    return tuple(tuple(relabel[table[c][col]] for col in range(ncols))
                 for c in order)


def _class_signature(table, ncols: int) -> tuple:
    """Canonical form of a table up to conjugacy (basepoint change)."""
    return min(_normalized_table(table, ncols, b) for b in range(len(table)))
