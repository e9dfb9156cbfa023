import pytest
import sympy
from hypothesis import given, settings, strategies as st

from pseudofield.errors import NoIntegerSolution
from pseudofield.lattice import column_hnf, in_lattice, row_hnf, solve_integer

matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-12, 12), min_size=c, max_size=c), min_size=r, max_size=r)))


@given(matrices)
@settings(max_examples=80)
def test_column_hnf_is_a_unimodular_transform(A):
    H, U, pivots = column_hnf(A)
    assert (sympy.Matrix(A) * sympy.Matrix(U)).tolist() == H
    assert abs(sympy.Matrix(U).det()) == 1
    assert len(pivots) == sympy.Matrix(A).rank()
    for j, r in enumerate(pivots):
        assert H[r][j] > 0
        assert all(0 <= H[r][l] < H[r][j] for l in range(j))
        assert all(H[i][j] == 0 for i in range(r))


@given(matrices)
@settings(max_examples=60)
def test_hnf_is_canonical(A):
    """Adding a combination of existing columns leaves the form unchanged."""
    B = [row + [2 * row[0] - row[-1]] for row in A]
    assert row_hnf([list(c) for c in zip(*A)]) == row_hnf([list(c) for c in zip(*B)])


@given(matrices, st.data())
@settings(max_examples=80)
def test_solve_integer_roundtrip(A, data):
    z = [data.draw(st.integers(-5, 5)) for _ in A[0]]
    b = [sum(a * x for a, x in zip(row, z)) for row in A]
    w = solve_integer(A, b)
    assert [sum(a * x for a, x in zip(row, w)) for row in A] == b


def test_no_solution():
    with pytest.raises(NoIntegerSolution):
        solve_integer([[2, 4]], [3])
    with pytest.raises(NoIntegerSolution):
        solve_integer([[1], [1]], [1, 2])


def test_in_lattice():
    basis = [[2, 0], [0, 2]]
    assert in_lattice(basis, [4, -2]) and not in_lattice(basis, [1, 0])
    assert in_lattice([], [0, 0]) and not in_lattice([], [1, 0])
