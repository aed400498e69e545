"""Exact Smith normal form over Z and rank over prime fields.

Matrices are kept sparse as ``{row: {col: value}}``.  Unit pivots are
eliminated first (boundary matrices are mostly +-1), then whatever is left is
diagonalised densely with minimal-absolute-value pivoting.  All arithmetic is
on Python integers.
"""

from __future__ import annotations

from typing import NamedTuple

from .abelian import canonicalize

Sparse = dict  # row -> {col: value}


class SmithForm(NamedTuple):
    diagonal: tuple
    rank: int


def to_sparse(matrix) -> Sparse:
    """Dense matrix (nested sequences or numpy array) to the sparse row form."""
    rows: Sparse = {}
    for i, row in enumerate(matrix):
        r = {j: int(v) for j, v in enumerate(row) if int(v) != 0}
        if r:
            rows[i] = r
    return rows


def _columns(rows: Sparse) -> dict:
    cols: dict = {}
    for r, row in rows.items():
        for c in row:
            cols.setdefault(c, set()).add(r)
    return cols


def _pivot(rows: Sparse, cols: dict, r: int, c: int, p: int | None):
    prow = rows.pop(r)
    for cc in prow:
        cols[cc].discard(r)
    u = prow[c]
    inv = u if p is None else pow(u, -1, p)  # u is +-1 over Z
    for s in list(cols[c]):
        srow = rows[s]
        f = srow[c] * inv
        if p is not None:
            f %= p
        for cc, v in prow.items():
            nv = srow.get(cc, 0) - f * v
            if p is not None:
                nv %= p
            if nv:
                if cc not in srow:
                    cols[cc].add(s)
                srow[cc] = nv
            elif cc in srow:
                del srow[cc]
                cols[cc].discard(s)
        if not srow:
            del rows[s]
    del cols[c]


def _eliminate(rows: Sparse, p: int | None) -> int:
    """Pivot out unit entries in place; returns how many pivots were taken."""
    cols = _columns(rows)
    taken = 0
    while True:
        progress = False
        for c in sorted(cols, key=lambda k: (len(cols[k]), k)):
            rs = cols.get(c)
            if rs is None:
                continue
            if not rs:
                del cols[c]
                continue
            best = None
            for r in rs:
                v = rows[r][c]
                if p is not None or v == 1 or v == -1:
                    if best is None or len(rows[r]) < len(rows[best]) or (
                            len(rows[r]) == len(rows[best]) and r < best):
                        best = r
            if best is None:
                continue
            _pivot(rows, cols, best, c, p)
            taken += 1
            progress = True
        if not progress or p is not None:
            return taken


def _dense_diagonal(rows: Sparse) -> list:
    """Diagonalise a (small) leftover block; returns nonzero diagonal entries."""
    if not rows:
        return []
    rkeys = sorted(rows)
    ckeys = sorted({c for row in rows.values() for c in row})
    a = [[rows[r].get(c, 0) for c in ckeys] for r in rkeys]
    m, n = len(a), len(ckeys)
    diag = []
    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        _swap(a, t, best[0], best[1])
        while True:
            piv = a[t][t]
            clean = True
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // piv
                    ri, rt = a[i], a[t]
                    for j in range(t, n):
                        ri[j] -= q * rt[j]
                    clean = clean and not a[i][t]
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // piv
                    for i in range(t, m):
                        a[i][j] -= q * a[i][t]
                    clean = clean and not a[t][j]
            if clean:
                break
            cand = [(abs(a[i][t]), i, t) for i in range(t + 1, m) if a[i][t]]
            cand += [(abs(a[t][j]), t, j) for j in range(t + 1, n) if a[t][j]]
            _, i, j = min(cand)
            _swap(a, t, i, j)
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def _swap(a, t, i, j):
    if i != t:
        a[t], a[i] = a[i], a[t]
    if j != t:
        for row in a:
            row[t], row[j] = row[j], row[t]


def snf_sparse(rows: Sparse) -> SmithForm:
    """Smith form of a sparse integer matrix.  ``rows`` is consumed."""
    ones = _eliminate(rows, None)
    rest = _dense_diagonal(rows)
    tors = canonicalize(0, rest).torsion
    rank = ones + len(rest)
    return SmithForm((1,) * (rank - len(tors)) + tors, rank)


def smith_normal_form(matrix) -> SmithForm:
    """Invariant factors ``d1 | d2 | ...`` (nonzero ones only) and the rank.

    >>> smith_normal_form([[2, 0], [0, 3]])
    SmithForm(diagonal=(1, 6), rank=2)
    """
    if isinstance(matrix, dict):
        rows = {r: dict(row) for r, row in matrix.items() if row}
    else:
        rows = to_sparse(matrix)
    return snf_sparse(rows)


def rank_mod_p(rows: Sparse, p: int) -> int:
    """Rank over ``Z_p``.  ``rows`` is consumed."""
    for r in list(rows):
        row = {c: v % p for c, v in rows[r].items() if v % p}
        if row:
            rows[r] = row
        else:
            del rows[r]
    return _eliminate(rows, p)
