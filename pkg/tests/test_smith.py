from fractions import Fraction

from hypothesis import given, strategies as st

from posetbundle.smith import (
    abelian_invariants,
    elementary_divisors,
    in_row_lattice,
    smith_normal_form,
)


def det(matrix):
    """Exact determinant by fraction-free Gaussian elimination."""
    n = len(matrix)
    m = [[Fraction(x) for x in row] for row in matrix]
    sign = 1
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            return 0
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            sign = -sign
        for r in range(col + 1, n):
            factor = m[r][col] / m[col][col]
            m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    out = Fraction(sign)
    for i in range(n):
        out *= m[i][i]
    return out


def matmul(A, B):
    return [
        [sum(a * b for a, b in zip(row, col)) for col in zip(*B)]
        for row in A
    ]


small_matrices = st.lists(
    st.lists(st.integers(-9, 9), min_size=1, max_size=4),
    min_size=1,
    max_size=4,
).filter(lambda rows: len({len(r) for r in rows}) == 1)


@given(small_matrices)
def test_smith_normal_form_properties(A):
    D, U, V = smith_normal_form(A)
    assert matmul(matmul(U, A), V) == D
    assert abs(det(U)) == 1
    assert abs(det(V)) == 1
    rows, cols = len(A), len(A[0])
    for i in range(rows):
        for j in range(cols):
            if i != j:
                assert D[i][j] == 0
    diag = [D[t][t] for t in range(min(rows, cols))]
    for d, d_next in zip(diag, diag[1:]):
        if d == 0:
            assert d_next == 0
        else:
            assert d_next % d == 0
    assert all(d >= 0 for d in diag)


def test_known_invariants():
    assert abelian_invariants([], 3) == [0, 0, 0]
    assert abelian_invariants([[2]], 1) == [2]
    assert abelian_invariants([[1, 0], [0, 2]], 3) == [2, 0]
    # Z^2 / <(2,0),(0,3)> = Z/6
    assert abelian_invariants([[2, 0], [0, 3]], 2) == [6]
    assert elementary_divisors([[2, 0], [0, 3]]) == [1, 6]
    assert elementary_divisors([[0, 0], [0, 0]]) == []


def test_row_lattice_membership():
    rows = [[2, 0], [0, 2]]
    assert in_row_lattice(rows, [2, 2])
    assert in_row_lattice(rows, [0, 0])
    assert in_row_lattice(rows, [-4, 2])
    assert not in_row_lattice(rows, [1, 0])
    assert not in_row_lattice(rows, [2, 1])
    assert in_row_lattice([], [0, 0])
    assert not in_row_lattice([], [1])
    assert in_row_lattice([[1, 1]], [3, 3])
    assert not in_row_lattice([[1, 1]], [1, 0])


@given(
    small_matrices,
    st.lists(st.integers(-3, 3), min_size=1, max_size=4),
)
def test_integer_row_combinations_are_members(A, coeffs):
    coeffs = (coeffs + [0] * len(A))[: len(A)]
    vector = [
        sum(c * row[j] for c, row in zip(coeffs, A))
        for j in range(len(A[0]))
    ]
    assert in_row_lattice(A, vector)
