from fractions import Fraction

import pytest

from e6wb import exact
from e6wb.albert import AlbertElement, random_elements, trace_form
from e6wb.octonion import derivation_space
from e6wb.operators import (
    Operator,
    boost_gen,
    bracket,
    derivation_lift,
    determinant_defects,
    full_basis,
    rotation_gen,
)


@pytest.fixture(scope="module")
def basis():
    return full_basis()


def test_basis_counts(basis):
    assert len(basis) == 78
    assert sum(op.is_symmetric() for _, op in basis) == 26
    assert sum(op.is_antisymmetric() for _, op in basis) == 52
    names = [lab.name for lab, _ in basis]
    assert len(set(names)) == 78


def test_z_boosts_sum_to_zero():
    assert (boost_gen(1, "z") + boost_gen(2, "z") + boost_gen(3, "z")).is_zero()


def test_boost_on_diagonal():
    out = boost_gen(1, "z")(AlbertElement.diag(2, 3, 5))
    assert out == AlbertElement.diag(2, -3, 0)


def test_rotation_mixes_diagonal_with_real_part():
    out = rotation_gen(1, ("x", "z"))(AlbertElement.diag(1, 0, 0))
    v = out.vector()
    nonzero = [n for n, c in enumerate(v) if c]
    assert nonzero == [19]  # real part of x12 only
    assert out.x12.re != 0


def _quadratic(op: Operator, X: AlbertElement) -> Fraction:
    return trace_form(op(X), X)


def test_symmetry_against_trace_form():
    X, Y = random_elements(2, seed=11)
    for t in (1, 2, 3):
        B = boost_gen(t, "kl")
        R = rotation_gen(t, ("z", "i"))
        assert trace_form(B(X), Y) == trace_form(X, B(Y))
        assert trace_form(R(X), Y) == -trace_form(X, R(Y))


def test_rotation_square_is_nonpositive():
    R = rotation_gen(1, ("x", "z"))
    for X in random_elements(10, seed=3):
        assert _quadratic(R @ R, X) <= 0


def test_derivation_lifts():
    D = [derivation_lift(d) for d in derivation_space()]
    diag = AlbertElement.diag(Fraction(1, 2), 3, -7)
    X, Y = random_elements(2, seed=5)
    for op in D:
        assert op(diag) == AlbertElement.diag(0, 0, 0)
        assert trace_form(op(X), Y) == -trace_form(X, op(Y))
    labels = [(type("L", (), {"name": f"D{n}"})(), op) for n, op in enumerate(D)]
    assert determinant_defects(labels) == []


def test_determinant_oracle_accepts_the_basis(basis):
    assert determinant_defects(basis) == []


def test_determinant_oracle_rejects_a_scaling(basis):
    label, op = basis[0]
    assert determinant_defects([(label, op + Operator(exact.identity(27)))]) == [label.name]


def test_transverse_rotations_are_in_the_span(ctx):
    ctx.coords(bracket(rotation_gen(1, ("x", "i")), rotation_gen(1, ("x", "j"))))


@pytest.mark.parametrize("t", [1, 2, 3])
@pytest.mark.parametrize("plane", ["x", "z"])
def test_rotation_turns_its_plane(t, plane):
    # the (plane, q) rotation carries the plane boost into the q boost
    for q in ("i", "kl", "l"):
        image = bracket(rotation_gen(t, (plane, q)), boost_gen(t, plane)).mat
        target = boost_gen(t, q).mat
        ratio = {image[a, b] / target[a, b] for a in range(27) for b in range(27) if target[a, b] != 0}
        assert len(ratio) == 1 and 0 not in ratio
        assert all(image[a, b] == 0 for a in range(27) for b in range(27) if target[a, b] == 0)
