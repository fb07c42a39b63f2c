"""Smith normal form over the integers with transforms."""

from __future__ import annotations


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(a):
    """Return ``(S, U, V, Uinv)`` with ``U @ A @ V == S`` diagonal.

    The diagonal entries are non-negative and each divides the next.  ``U``
    and ``V`` are unimodular; ``Uinv`` is the inverse of ``U``.
    """
    m = [list(map(int, row)) for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    U = _identity(rows)
    Uinv = _identity(rows)
    V = _identity(cols)

    def swap_rows(i, j):
        m[i], m[j] = m[j], m[i]
        U[i], U[j] = U[j], U[i]
        for row in Uinv:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, f):
        # row_dst += f * row_src
        m[dst] = [x + f * y for x, y in zip(m[dst], m[src])]
        U[dst] = [x + f * y for x, y in zip(U[dst], U[src])]
        for row in Uinv:
            row[src] -= f * row[dst]

    def negate_row(i):
        m[i] = [-x for x in m[i]]
        U[i] = [-x for x in U[i]]
        for row in Uinv:
            row[i] = -row[i]

    def swap_cols(i, j):
        for mat in (m, V):
            for row in mat:
                row[i], row[j] = row[j], row[i]

    def add_col(src, dst, f):
        for mat in (m, V):
            for row in mat:
                row[dst] += f * row[src]

    for t in range(min(rows, cols)):
        # pivot: smallest nonzero entry in the remaining block
        while True:
            nz = [(abs(m[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if m[i][j]]
            if not nz:
                return m, U, V, Uinv
            _, pi, pj = min(nz)
            if pi != t:
                swap_rows(t, pi)
            if pj != t:
                swap_cols(t, pj)
            p = m[t][t]
            done = True
            for i in range(t + 1, rows):
                if m[i][t]:
                    add_row(t, i, -(m[i][t] // p))
                    if m[i][t]:
                        done = False
            for j in range(t + 1, cols):
                if m[t][j]:
                    add_col(t, j, -(m[t][j] // p))
                    if m[t][j]:
                        done = False
            if not done:
                continue
            # divisibility of the rest of the block
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                        if m[i][j] % p), None)
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if m[t][t] < 0:
            negate_row(t)
    return m, U, V, Uinv


def invariant_factors(a) -> list[int]:
    s = smith_normal_form(a)[0]
    return [s[i][i] for i in range(min(len(s), len(s[0])))]
