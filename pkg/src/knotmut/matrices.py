"""Integer matrix normal forms for abelianization computations.

The Smith normal form runs in two phases: a sparse elimination pass that
only pivots on +-1 entries (cheap, no coefficient growth, and in practice
removes almost everything from Reidemeister-Schreier relation matrices),
followed by a dense gcd-based reduction of whatever remains.
"""

from __future__ import annotations

from math import gcd


def smith_diagonal(rows: list[list[int]], ncols: int) -> list[int]:
    """Diagonal of the Smith normal form of an integer matrix.

    `rows` is a list of dense rows of length `ncols`.  Returns the list of
    nonzero diagonal entries d1 | d2 | ... (all positive).
    """
    # sparse representation: list of dicts col -> value
    sparse = []
    for r in rows:
        d = {j: v for j, v in enumerate(r) if v}
        if d:
            sparse.append(d)
    diag: list[int] = []

    # phase 1: eliminate with unit pivots only
    col_count: dict[int, int] = {}
    for r in sparse:
        for j in r:
            col_count[j] = col_count.get(j, 0) + 1
    live = set(range(len(sparse)))
    while True:
        # pick a unit entry minimizing (row fill) * (col fill), Markowitz-style
        best = None
        for i in live:
            r = sparse[i]
            rl = len(r)
            for j, v in r.items():
                if v == 1 or v == -1:
                    cost = (rl - 1) * (col_count[j] - 1)
                    if best is None or cost < best[0]:
                        best = (cost, i, j)
                        if cost == 0:
                            break
            if best is not None and best[0] == 0:
                break
        if best is None:
            break
        _, pi, pj = best
        pr = sparse[pi]
        pv = pr[pj]
        diag.append(1)
        live.discard(pi)
        for j in pr:
            col_count[j] -= 1
        # clear column pj from the other live rows
        for i in list(live):
            r = sparse[i]
            v = r.get(pj)
            if not v:
                continue
            f = v * pv  # v / pv since pv is a unit
            for j, pvj in pr.items():
                nv = r.get(j, 0) - f * pvj
                had = j in r
                if nv:
                    r[j] = nv
                    if not had:
                        col_count[j] = col_count.get(j, 0) + 1
                else:
                    if had:
                        del r[j]
                        col_count[j] -= 1
            if not r:
                live.discard(i)

    # phase 2: dense SNF on the remainder
    rem_rows = [sparse[i] for i in live if sparse[i]]
    if rem_rows:
        cols = sorted({j for r in rem_rows for j in r})
        cmap = {j: k for k, j in enumerate(cols)}
        m = [[0] * len(cols) for _ in rem_rows]
        for i, r in enumerate(rem_rows):
            for j, v in r.items():
                m[i][cmap[j]] = v
        diag.extend(_dense_snf(m))

    # enforce divisibility chain
    diag = [abs(d) for d in diag if d]
    changed = True
    while changed:
        changed = False
        diag.sort()
        for i in range(len(diag) - 1):
            a, b = diag[i], diag[i + 1]
            if b % a != 0:
                g = gcd(a, b)
                diag[i], diag[i + 1] = g, a * b // g
                changed = True
    return diag


def _dense_snf(m: list[list[int]]) -> list[int]:
    """Diagonal entries of the SNF of a small dense matrix (destructive)."""
    nr = len(m)
    nc = len(m[0]) if nr else 0
    out = []
    t = 0
    while t < nr and t < nc:
        # find pivot with smallest absolute value
        piv = None
        for i in range(t, nr):
            for j in range(t, nc):
                v = m[i][j]
                if v and (piv is None or abs(v) < abs(m[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        i0, j0 = piv
        m[t], m[i0] = m[i0], m[t]
        for row in m:
            row[t], row[j0] = row[j0], row[t]
        p = m[t][t]
        done = True
        for i in range(t + 1, nr):
            if m[i][t]:
                q = m[i][t] // p
                for j in range(t, nc):
                    m[i][j] -= q * m[t][j]
                if m[i][t]:
                    done = False
        for j in range(t + 1, nc):
            if m[t][j]:
                q = m[t][j] // p
                for i in range(t, nr):
                    m[i][j] -= q * m[i][t]
                if m[t][j]:
                    done = False
        if not done:
            continue
        # ensure pivot divides the rest of the block
        bad = None
        for i in range(t + 1, nr):
            for j in range(t + 1, nc):
                if m[i][j] % p != 0:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            for j in range(t, nc):
                m[t][j] += m[bad][j]
            continue
        out.append(abs(p))
        t += 1
    return out


def abelian_invariants(rows: list[list[int]], ngens: int) -> list[int]:
    """Primary decomposition of Z^ngens modulo the row lattice.

    Returns zeros for each free factor followed by prime powers in
    increasing order, e.g. Z + Z/6 -> [0, 2, 3].
    """
    diag = smith_diagonal(rows, ngens)
    rank = ngens - len(diag)
    primary: list[int] = []
    for d in diag:
        if d == 1:
            continue
        primary.extend(_prime_power_factors(d))
    return [0] * rank + sorted(primary)


def _prime_power_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            pk = 1
            while n % p == 0:
                pk *= p
                n //= p
            out.append(pk)
        p += 1
    if n > 1:
        out.append(n)
    return out
