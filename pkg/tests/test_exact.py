from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from e6wb import exact
from e6wb.lie import inertia

small = st.integers(min_value=-3, max_value=3)


def test_rref_and_rank():
    M = exact.matrix([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    R, piv = exact.rref(M)
    assert piv == [0, 1]
    assert exact.rank(M) == 2


def test_nullspace_is_annihilated():
    M = exact.matrix([[1, 2, 3], [2, 4, 6]])
    K = exact.nullspace(M)
    assert K.nrows() == 2
    assert exact.is_zero(M * K.transpose())


def test_left_nullspace():
    M = exact.matrix([[1, 0], [2, 0], [0, 1]])
    L = exact.left_nullspace(M)
    assert L.nrows() == 1
    assert exact.is_zero(L * M)


def test_integer_rows_scale_positively():
    M = exact.matrix([[Fraction(1, 2), Fraction(-1, 3)], [0, Fraction(4, 6)]])
    Z, scales = exact.integer_rows(M)
    assert [int(v) for v in Z.entries()] == [3, -2, 0, 1]
    assert all(s > 0 for s in scales)


def test_inertia_examples():
    assert inertia([[1, 0], [0, -1]]) == (1, 1, 0)
    assert inertia([[0, 1], [1, 0]]) == (1, 1, 0)
    assert inertia([[0, 0], [0, 0]]) == (0, 0, 2)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(small, min_size=4, max_size=4), min_size=4, max_size=4), st.lists(small, min_size=4, max_size=4))
def test_inertia_invariant_under_congruence(P, d):
    D = exact.matrix([[d[i] if i == j else 0 for j in range(4)] for i in range(4)])
    Pm = exact.matrix(P)
    if Pm.det() == 0:
        return
    G = Pm * D * Pm.transpose()
    expected = (sum(v < 0 for v in d), sum(v > 0 for v in d), sum(v == 0 for v in d))
    assert inertia(exact.rows_of(G)) == expected
