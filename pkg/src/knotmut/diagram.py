"""Planar diagrams of knots and links, and braid closures.

A crossing is a 4-tuple of arc labels listed counterclockwise starting
from the incoming under-strand.  With crossing tuple (a, b, c, d):

  * a is the incoming under-arc, c the outgoing under-arc,
  * b and d form the over-strand,
  * the crossing is positive exactly when the over-strand runs d -> b.

Arcs are integers.  Every arc has exactly two endpoints among crossing
legs unless the component is a crossingless loop, which is tracked in
`free_loops`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field


Crossing = tuple[int, int, int, int]


@dataclass(frozen=True)
class BraidWord:
    """A braid word on `strands` strands; letter k means sigma_|k|^(sign k)."""

    strands: int
    letters: tuple[int, ...]

    def __post_init__(self):
        for k in self.letters:
            if k == 0 or abs(k) >= self.strands:
                raise ValueError(f"letter {k} invalid for {self.strands} strands")

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-k for k in reversed(self.letters)))

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.strands != other.strands:
            raise ValueError("strand counts differ")
        return BraidWord(self.strands, self.letters + other.letters)

    def writhe(self) -> int:
        return sum(1 if k > 0 else -1 for k in self.letters)

    def permutation(self) -> list[int]:
        """Image of each strand position under the braid (bottom to top)."""
        perm = list(range(self.strands))
        for k in self.letters:
            i = abs(k) - 1
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
        return perm

    def component_count(self) -> int:
        perm = self.permutation()
        seen = [False] * self.strands
        n = 0
        for s in range(self.strands):
            if not seen[s]:
                n += 1
                while not seen[s]:
                    seen[s] = True
                    s = perm[s]
        return n


def parse_braid(text: str) -> BraidWord:
    """Parse 'strands | letters', e.g. '2 | 1 1 1' for the trefoil braid."""
    head, _, tail = text.partition("|")
    strands = int(head.strip())
    letters = tuple(int(t) for t in tail.split())
    return BraidWord(strands, letters)


@dataclass
class PlanarDiagram:
    """An oriented link diagram as a list of crossing tuples."""

    crossings: list[Crossing]
    free_loops: int = 0
    name: str = ""

    def copy(self) -> "PlanarDiagram":
        return PlanarDiagram(list(self.crossings), self.free_loops, self.name)

    @property
    def arcs(self) -> set[int]:
        return {a for x in self.crossings for a in x}

    def fresh_arc_start(self) -> int:
        return max(self.arcs, default=-1) + 1

    def crossing_sign(self, x: Crossing) -> int:
        """+1 if the over-strand runs x[3] -> x[1], else -1."""
        return 1 if _over_runs_d_to_b(self, x) else -1

    def writhe(self) -> int:
        return sum(self.crossing_sign(x) for x in self.crossings)

    def validate(self):
        """Check every arc occurs exactly twice, once as head and once as tail."""
        heads: dict[int, int] = {}
        tails: dict[int, int] = {}
        for x in self.crossings:
            a, b, c, d = x
            tails[a] = tails.get(a, 0) + 1
            heads[c] = heads.get(c, 0) + 1
            if _over_runs_d_to_b(self, x):
                tails[d] = tails.get(d, 0) + 1
                heads[b] = heads.get(b, 0) + 1
            else:
                tails[b] = tails.get(b, 0) + 1
                heads[d] = heads.get(d, 0) + 1
        for a in self.arcs:
            if heads.get(a, 0) != 1 or tails.get(a, 0) != 1:
                raise ValueError(f"arc {a} has heads={heads.get(a,0)} tails={tails.get(a,0)}")

    def component_count(self) -> int:
        nxt = successor_map(self)
        seen: set[int] = set()
        n = 0
        for a in self.arcs:
            if a not in seen:
                n += 1
                while a not in seen:
                    seen.add(a)
                    a = nxt[a]
        return n + self.free_loops

    def __str__(self):
        xs = " ".join(f"X({a},{b},{c},{d})" for a, b, c, d in self.crossings)
        return xs if not self.free_loops else f"{xs} O*{self.free_loops}"


def _over_runs_d_to_b(d: PlanarDiagram, x: Crossing) -> bool:
    """True when the over-strand of crossing x runs x[3] -> x[1]."""
    return _over_dir_cache(d)[x]


_DIR_CACHE: dict[int, tuple[tuple[Crossing, ...], dict[Crossing, bool]]] = {}


def _over_dir_cache(d: PlanarDiagram) -> dict[Crossing, bool]:
    key = id(d)
    sig = tuple(d.crossings)
    cached = _DIR_CACHE.get(key)
    if cached and cached[0] == sig:
        return cached[1]
    m = _compute_over_dirs(d.crossings)
    _DIR_CACHE[key] = (sig, m)
    if len(_DIR_CACHE) > 256:
        _DIR_CACHE.pop(next(iter(_DIR_CACHE)))
    return m


def _compute_over_dirs(crossings: list[Crossing]) -> dict[Crossing, bool]:
    """Decide at each crossing whether the over-strand runs leg3 -> leg1.

    Every arc must be emitted (tail) at exactly one of its two leg
    occurrences and absorbed (head) at the other.  Under legs have fixed
    roles (leg0 absorbs, leg2 emits); an over leg (i, 1) emits exactly
    when dir[i] is True and (i, 3) emits exactly when dir[i] is False.
    Propagating one-emit-one-absorb across shared arcs fixes all dirs up
    to free choices on all-over cycles, which we set to True.
    """
    # occurrences: arc -> list of (crossing index, leg)
    occ: dict[int, list[tuple[int, int]]] = {}
    for i, x in enumerate(crossings):
        for leg in range(4):
            occ.setdefault(x[leg], []).append((i, leg))

    n = len(crossings)
    result: list[bool | None] = [None] * n
    pending: list[int] = []

    def emits(i: int, leg: int) -> bool | None:
        if leg == 0:
            return False
        if leg == 2:
            return True
        if result[i] is None:
            return None
        return result[i] == (leg == 1)

    def set_dir(i: int, val: bool):
        if result[i] is None:
            result[i] = val
            pending.append(i)
        elif result[i] != val:
            raise ValueError(f"inconsistent orientation at crossing {crossings[i]}")

    def apply_arc_constraints(legs: list[tuple[int, int]]):
        if len(legs) != 2:
            raise ValueError(f"arc appears {len(legs)} times, expected 2")
        (i1, l1), (i2, l2) = legs
        e1, e2 = emits(i1, l1), emits(i2, l2)
        if e1 is not None and e2 is None:
            set_dir(i2, (not e1) == (l2 == 1))
        elif e2 is not None and e1 is None:
            set_dir(i1, (not e2) == (l1 == 1))
        elif e1 is not None and e2 is not None and e1 == e2:
            raise ValueError("arc emitted or absorbed twice")

    for legs in occ.values():
        apply_arc_constraints(legs)
    while True:
        while pending:
            i = pending.pop()
            for leg in (1, 3):
                apply_arc_constraints(occ[crossings[i][leg]])
        rest = [i for i in range(n) if result[i] is None]
        if not rest:
            break
        set_dir(rest[0], True)
    return {crossings[i]: bool(result[i]) for i in range(n)}


def successor_map(d: PlanarDiagram) -> dict[int, int]:
    """Map each arc to the next arc along its oriented component."""
    nxt: dict[int, int] = {}
    for x in d.crossings:
        a, b, c, dd = x
        nxt[a] = c
        if _over_runs_d_to_b(d, x):
            nxt[dd] = b
        else:
            nxt[b] = dd
    return nxt


def braid_closure(braid: BraidWord, name: str = "") -> PlanarDiagram:
    """Trace closure of a braid, oriented upward on all strands."""
    n = braid.strands
    cur = list(range(n))  # arc currently at each strand position
    start = list(range(n))
    next_arc = n
    crossings: list[Crossing] = []
    for k in braid.letters:
        i = abs(k) - 1
        alpha, beta = next_arc, next_arc + 1
        next_arc += 2
        if k > 0:
            # positive: strand at position i crosses over to position i+1;
            # under runs SE -> NW, tuple is CCW from the incoming under leg
            crossings.append((cur[i + 1], alpha, beta, cur[i]))
            cur[i], cur[i + 1] = beta, alpha
        else:
            crossings.append((cur[i], cur[i + 1], alpha, beta))
            cur[i], cur[i + 1] = beta, alpha
    # identify top arcs with the bottom arcs they close onto
    ident = {cur[i]: start[i] for i in range(n) if cur[i] != start[i]}
    free_loops = sum(1 for i in range(n) if cur[i] == start[i])

    def res(a: int) -> int:
        while a in ident:
            a = ident[a]
        return a

    fixed = [tuple(res(a) for a in x) for x in crossings]
    d = PlanarDiagram([tuple(x) for x in fixed], free_loops, name)
    return relabel(d)


def relabel(d: PlanarDiagram) -> PlanarDiagram:
    """Relabel arcs to 0..n-1 preserving order of first appearance."""
    m: dict[int, int] = {}
    out = []
    for x in d.crossings:
        out.append(tuple(m.setdefault(a, len(m)) for a in x))
    return PlanarDiagram(out, d.free_loops, d.name)


def mirror(d: PlanarDiagram) -> PlanarDiagram:
    """Switch every crossing (reflect through the projection plane)."""
    out: list[Crossing] = []
    dirs = _over_dir_cache(d)
    for x in d.crossings:
        a, b, c, dd = x
        # the old over-strand becomes the under-strand; rotate the tuple so
        # the new incoming under-arc leads
        if dirs[x]:
            out.append((dd, a, b, c))  # over ran d->b, so d is new under-in
        else:
            out.append((b, c, dd, a))
    return PlanarDiagram(out, d.free_loops, f"{d.name}*" if d.name else "")


def connected_sum(d1: PlanarDiagram, d2: PlanarDiagram,
                  arc1: int | None = None, arc2: int | None = None) -> PlanarDiagram:
    """Join two diagrams by cutting one arc of each and splicing."""
    if d1.free_loops or d2.free_loops:
        raise ValueError("connected sum of diagrams with free loops unsupported")
    if arc1 is None:
        arc1 = min(d1.arcs)
    shift = max(d1.arcs) + 1
    c2 = [tuple(a + shift for a in x) for x in d2.crossings]
    if arc2 is None:
        arc2 = min(d2.arcs)
    arc2 += shift
    # cut arc1 (tail t1 -> head h1) and arc2 (t2 -> h2); reconnect
    # t1 -> h2 ... t2 -> h1.  Implement by renaming the head occurrence of
    # arc1 to a fresh label and swapping labels.
    out = list(d1.crossings) + c2
    union = PlanarDiagram(out)
    h1 = _head_position(union, arc1)
    h2 = _head_position(union, arc2)
    # cross-wire: tail(arc1) flows into old head(arc2) and vice versa
    rewired = []
    for i, x in enumerate(out):
        y = list(x)
        if i == h1[0]:
            y[h1[1]] = arc2
        if i == h2[0]:
            y[h2[1]] = arc1
        rewired.append(tuple(y))
    return relabel(PlanarDiagram(rewired, 0, f"{d1.name}#{d2.name}"))


def _head_position(d: PlanarDiagram, arc: int) -> tuple[int, int]:
    """Locate (crossing index, leg) where `arc` is absorbed."""
    dirs = _over_dir_cache(d)
    for i, x in enumerate(d.crossings):
        if x[0] == arc:
            return (i, 0)
        if dirs[x] and x[3] == arc:
            return (i, 3)
        if not dirs[x] and x[1] == arc:
            return (i, 1)
    raise ValueError(f"arc {arc} head not found")


def add_kink(d: PlanarDiagram, sign: int, arc: int | None = None) -> PlanarDiagram:
    """Insert a Reidemeister-1 kink of the given sign on an arc."""
    out = d.copy()
    if not out.crossings:
        raise ValueError("cannot kink a crossingless diagram")
    if arc is None:
        arc = min(out.arcs)
    y = out.fresh_arc_start()
    z = y + 1
    # reroute the head occurrence of `arc` to z
    hi, hleg = _head_position(out, arc)
    new = []
    for i, x in enumerate(out.crossings):
        t = list(x)
        if i == hi:
            t[hleg] = z
        new.append(tuple(t))
    if sign > 0:
        new.append((arc, z, y, y))
    else:
        new.append((arc, y, y, z))
    return PlanarDiagram(new, out.free_loops, out.name)


def zero_framed(d: PlanarDiagram) -> PlanarDiagram:
    """Add writhe-compensating kinks so the blackboard framing is zero."""
    w = d.writhe()
    out = d
    for _ in range(abs(w)):
        out = add_kink(out, -1 if w > 0 else 1)
    return out


_PD_RE = re.compile(r"X\(\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\)")


def parse_pd(text: str, name: str = "") -> PlanarDiagram:
    """Parse 'X(a,b,c,d) X(e,f,g,h) ...' planar diagram code."""
    crossings = [tuple(int(g) for g in m.groups()) for m in _PD_RE.finditer(text)]
    if not crossings:
        raise ValueError(f"no crossings found in {text!r}")
    d = relabel(PlanarDiagram(crossings, 0, name))
    d.validate()
    return d


def orient_raw(raw: list[Crossing], free_loops: int = 0,
               name: str = "") -> PlanarDiagram:
    """Orient a diagram given only its unoriented crossing structure.

    Each raw tuple lists legs counterclockwise with the under-strand on
    the (0, 2) diagonal, but neither strand's direction is known.  A
    consistent global orientation (one head and one tail per arc) is
    found by constraint propagation; free choices (whole components) are
    resolved arbitrarily.  Tuples are rotated by two when needed so that
    the incoming under-arc comes first.
    """
    occ: dict[int, list[tuple[int, int]]] = {}
    for i, x in enumerate(raw):
        for leg in range(4):
            occ.setdefault(x[leg], []).append((i, leg))

    n = len(raw)
    # two booleans per crossing: u[i] = under runs leg0 -> leg2,
    # o[i] = over runs leg3 -> leg1; variables numbered 2i and 2i+1
    val: list[bool | None] = [None] * (2 * n)
    pending: list[int] = []

    def emits(i: int, leg: int) -> bool | None:
        if leg in (0, 2):
            v = val[2 * i]
            return None if v is None else v == (leg == 2)
        v = val[2 * i + 1]
        return None if v is None else v == (leg == 1)

    def setvar(idx: int, v: bool):
        if val[idx] is None:
            val[idx] = v
            pending.append(idx // 2)
        elif val[idx] != v:
            raise ValueError("inconsistent orientation in raw diagram")

    def apply_arc(legs):
        if len(legs) != 2:
            raise ValueError(f"arc appears {len(legs)} times, expected 2")
        (i1, l1), (i2, l2) = legs
        e1, e2 = emits(i1, l1), emits(i2, l2)
        if e1 is not None and e2 is None:
            want = not e1
            if l2 in (0, 2):
                setvar(2 * i2, want == (l2 == 2))
            else:
                setvar(2 * i2 + 1, want == (l2 == 1))
        elif e2 is not None and e1 is None:
            want = not e2
            if l1 in (0, 2):
                setvar(2 * i1, want == (l1 == 2))
            else:
                setvar(2 * i1 + 1, want == (l1 == 1))
        elif e1 is not None and e2 is not None and e1 == e2:
            raise ValueError("arc emitted or absorbed twice")

    while True:
        for legs in occ.values():
            apply_arc(legs)
        while pending:
            i = pending.pop()
            for leg in range(4):
                apply_arc(occ[raw[i][leg]])
        rest = [k for k in range(2 * n) if val[k] is None]
        if not rest:
            break
        setvar(rest[0], True)

    out: list[Crossing] = []
    for i, x in enumerate(raw):
        if val[2 * i]:
            out.append(x)
        else:
            out.append((x[2], x[3], x[0], x[1]))
    d = PlanarDiagram(out, free_loops, name)
    d.validate()
    return d


# -- named small knots as braid closures --------------------------------

KNOT_BRAIDS = {
    "unknot": "1 |",
    "trefoil": "2 | 1 1 1",
    "trefoil_mirror": "2 | -1 -1 -1",
    "figure8": "3 | 1 -2 1 -2",
    "5_1": "2 | 1 1 1 1 1",
    "5_2": "3 | 1 1 1 2 -1 2",
    "6_1": "4 | 1 1 2 -1 -3 2 -3",
    "6_2": "3 | 1 1 1 -2 1 -2",
    "6_3": "3 | 1 1 -2 1 -2 -2",
    "hopf_plus": "2 | 1 1",
    "hopf_minus": "2 | -1 -1",
}


def named_knot(name: str) -> PlanarDiagram:
    if name not in KNOT_BRAIDS:
        raise KeyError(f"unknown knot {name!r}")
    return braid_closure(parse_braid(KNOT_BRAIDS[name]), name)


# -- knot-spec line format ------------------------------------------------
#
# One knot per line: `braid: <n> | <word>` or `pd: X(a,b,c,d) X(...) ...`,
# optionally prefixed with `name=<label>`.  Lines starting with # and
# blank lines are ignored by the file loader.


def parse_knot_spec(line: str) -> tuple[str, PlanarDiagram, "BraidWord | None"]:
    """Parse a single knot-spec line into (name, diagram, braid or None)."""
    text = line.strip()
    name = ""
    if text.startswith("name="):
        head, _, text = text.partition(" ")
        name = head[len("name="):]
        text = text.strip()
    if text.startswith("braid:"):
        body = text[len("braid:"):].strip()
        if body in KNOT_BRAIDS:
            body = KNOT_BRAIDS[body]
        braid = parse_braid(body)
        return name, braid_closure(braid, name), braid
    if text.startswith("pd:"):
        return name, parse_pd(text[len("pd:"):], name), None
    if text in KNOT_BRAIDS:
        braid = parse_braid(KNOT_BRAIDS[text])
        return text, braid_closure(braid, name or text), braid
    raise ValueError(f"unrecognized knot spec {line!r}")


def load_knot_file(path: str) -> list[tuple[str, PlanarDiagram, "BraidWord | None"]]:
    out = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            out.append(parse_knot_spec(line))
    return out
