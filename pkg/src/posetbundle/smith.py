"""Integer Smith normal form and lattice membership.

Used as the computable abelianization of finitely presented groups:
the cokernel of the relator-exponent matrix is the first homology, and
membership of a word's exponent vector in the relator lattice decides
equality in the abelianization.
"""

from __future__ import annotations


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _swap_rows(m, i, j):
    m[i], m[j] = m[j], m[i]


def _add_row(m, src, dst, factor):
    m[dst] = [a + factor * b for a, b in zip(m[dst], m[src])]


def _swap_cols(m, i, j):
    for row in m:
        row[i], row[j] = row[j], row[i]


def _add_col(m, src, dst, factor):
    for row in m:
        row[dst] += factor * row[src]


def smith_normal_form(matrix):
    """Return (D, U, V) with U A V = D, U and V unimodular, D diagonal
    with d1 | d2 | ... .  Accepts a list of rows (possibly empty)."""
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    D = [list(map(int, row)) for row in matrix]
    U = _identity(rows)
    V = _identity(cols)

    def pivot_search(t):
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if D[i][j] != 0 and (best is None or abs(D[i][j]) < abs(best[2])):
                    best = (i, j, D[i][j])
        return best

    t = 0
    while True:
        piv = pivot_search(t)
        if piv is None:
            break
        i, j, _ = piv
        _swap_rows(D, t, i)
        _swap_rows(U, t, i)
        _swap_cols(D, t, j)
        _swap_cols(V, t, j)
        dirty = False
        for i in range(t + 1, rows):
            if D[i][t] % D[t][t] != 0:
                dirty = True
            q = D[i][t] // D[t][t]
            if q:
                _add_row(D, t, i, -q)
                _add_row(U, t, i, -q)
        for j in range(t + 1, cols):
            if D[t][j] % D[t][t] != 0:
                dirty = True
            q = D[t][j] // D[t][t]
            if q:
                _add_col(D, t, j, -q)
                _add_col(V, t, j, -q)
        if dirty or any(D[i][t] for i in range(t + 1, rows)) or any(
            D[t][j] for j in range(t + 1, cols)
        ):
            continue
        # enforce the divisibility chain d_t | D[i][j]
        stuck = False
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if D[i][j] % D[t][t] != 0:
                    _add_row(D, i, t, 1)
                    _add_row(U, i, t, 1)
                    stuck = True
                    break
            if stuck:
                break
        if stuck:
            continue
        if D[t][t] < 0:
            _add_row(D, t, t, -2)
            _add_row(U, t, t, -2)
        t += 1
        if t == min(rows, cols):
            break
    return D, U, V


def elementary_divisors(matrix):
    D, _, _ = smith_normal_form(matrix)
    divisors = []
    for t in range(min(len(D), len(D[0]) if D else 0)):
        if D[t][t] != 0:
            divisors.append(abs(D[t][t]))
    return divisors


def abelian_invariants(matrix, n_generators):
    """Invariant factors of Z^n / rowspace(matrix): finite torsion factors
    (> 1) followed by zeros for free ranks."""
    if not matrix:
        return [0] * n_generators
    divisors = elementary_divisors(matrix)
    factors = [d for d in divisors if d > 1]
    free = n_generators - len(divisors)
    return factors + [0] * free


def in_row_lattice(matrix, vector):
    """True iff `vector` is an integer combination of the rows of `matrix`."""
    vector = list(map(int, vector))
    if not matrix:
        return all(x == 0 for x in vector)
    D, _, V = smith_normal_form(matrix)
    # x A = v  <=>  (x U^-1) D = v V;  solvable over Z iff each coordinate
    # of v V is divisible by the matching diagonal entry (0 where D is 0).
    cols = len(vector)
    w = [sum(vector[i] * V[i][j] for i in range(cols)) for j in range(cols)]
    rank = 0
    for t in range(min(len(D), cols)):
        if D[t][t] != 0:
            rank = t + 1
    for j in range(cols):
        if j < rank:
            if w[j] % D[j][j] != 0:
                return False
        elif w[j] != 0:
            return False
    return True
