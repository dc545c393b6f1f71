"""Smith normal form of small integer matrices, with unimodular transforms."""

from __future__ import annotations


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(A):
    """Return (U, D, V) with U @ A @ V == D, U and V unimodular, D diagonal.

    The diagonal entries d_1 | d_2 | ... are non-negative; zero rows and
    columns come last.  Matrices are lists of lists of Python ints.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    D = [list(map(int, row)) for row in A]
    U = _identity(m)
    V = _identity(n)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, c):  # row dst += c * row src
        D[dst] = [a + c * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + c * b for a, b in zip(U[dst], U[src])]

    def add_col(src, dst, c):
        for row in D:
            row[dst] += c * row[src]
        for row in V:
            row[dst] += c * row[src]

    t = 0
    while t < min(m, n):
        # pivot: smallest nonzero entry in the remaining block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if D[i][j] and (best is None or abs(D[i][j]) < abs(D[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            done = True
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(t, i, -(D[i][t] // D[t][t]))
                    if D[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(t, j, -(D[t][j] // D[t][t]))
                    if D[t][j]:
                        swap_cols(t, j)
                        done = False
            if done:
                # divisibility condition on the rest of the block
                bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                            if D[i][j] % D[t][t]), None)
                if bad is None:
                    break
                add_row(bad[0], t, 1)
        if D[t][t] < 0:
            D[t] = [-a for a in D[t]]
            U[t] = [-a for a in U[t]]
        t += 1
    return U, D, V


def rank(A) -> int:
    if not A:
        return 0
    _, D, _ = smith_normal_form(A)
    return sum(1 for i in range(min(len(D), len(D[0]))) if D[i][i])


def left_kernel(A) -> list[list[int]]:
    """Integer basis of {x : x @ A = 0}, from the trailing rows of U."""
    if not A:
        return []
    U, D, _ = smith_normal_form(A)
    r = sum(1 for i in range(min(len(D), len(D[0]))) if D[i][i])
    out = []
    for row in U[r:]:
        s = next((x for x in row if x), 0)
        out.append([-x for x in row] if s < 0 else list(row))
    return out
