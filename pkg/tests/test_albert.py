import math
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from e6wb.albert import (
    DIM,
    AlbertElement,
    determinant,
    first_order_change,
    integer_determinant,
    jordan_product,
    quaternionic_coordinates,
    quaternionic_subspace,
    random_elements,
    trace_form,
)

elements = st.integers(min_value=0, max_value=10**9).map(lambda seed: random_elements(1, seed)[0])
I = AlbertElement.identity()


def test_coordinates_and_hermitian_matrix():
    X = random_elements(1, seed=4)[0]
    assert len(X.vector()) == 27
    assert AlbertElement.from_matrix(X.matrix()) == X


def test_jordan_identity_and_idempotents():
    X = random_elements(1, seed=1)[0]
    assert jordan_product(I, X) == X
    assert jordan_product(AlbertElement.diag(1, 0, 0), AlbertElement.diag(0, 1, 0)) == AlbertElement.diag(0, 0, 0)


@settings(max_examples=100, deadline=None)
@given(elements, elements)
def test_jordan_commutative(X, Y):
    assert jordan_product(X, Y) == jordan_product(Y, X)


def test_trace_form():
    assert trace_form(I, I) == 3
    assert trace_form(AlbertElement.diag(1, 0, 0), AlbertElement.diag(0, 1, 0)) == 0
    for n in range(DIM):
        E = AlbertElement.basis(n)
        assert trace_form(E, E) > 0


def test_determinant_examples():
    assert determinant(I) == 1
    assert determinant(AlbertElement.diag(2, Fraction(1, 3), -5)) == Fraction(-10, 3)


@settings(max_examples=60, deadline=None)
@given(elements)
def test_integer_determinant_matches(X):
    v = X.vector()
    d = math.lcm(*(c.denominator for c in v))
    assert integer_determinant([int(c * d) for c in v]) == determinant(X) * d**3


@settings(max_examples=30, deadline=None)
@given(elements)
def test_first_order_change_along_x_is_three_det(X):
    # det(X + eX) = (1 + e)^3 det X
    assert first_order_change(X, X) == 3 * determinant(X)


def test_first_order_change_along_identity_at_identity():
    assert first_order_change(I, I) == 3


def test_quaternionic_subspace():
    J = quaternionic_subspace()
    assert len(J) == 15 == len(quaternionic_coordinates())
    idx = set(quaternionic_coordinates())
    for X in J:
        for Y in J:
            Z = jordan_product(X, Y).vector()
            assert all(Z[n] == 0 for n in range(DIM) if n not in idx)


def test_random_elements_deterministic():
    assert random_elements(3, seed=7) == random_elements(3, seed=7)
