from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from e6wb.octonion import (
    IMAGINARY,
    UNITS,
    Octonion,
    associative_triples,
    associator,
    conj,
    derivation_space,
    derivations_vanishing_on,
    is_derivation,
    multiply,
    norm_sq,
)

U = Octonion.unit


def _octonion(seed: int) -> Octonion:
    import random

    rng = random.Random(seed)
    return Octonion(tuple(Fraction(rng.randint(-5, 5), rng.randint(1, 6)) for _ in range(8)))


octonions = st.integers(min_value=0, max_value=10**9).map(_octonion)


def test_unit_is_identity():
    x = Octonion(tuple(Fraction(n + 1, 3) for n in range(8)))
    assert U("1") * x == x and x * U("1") == x


def test_quaternion_triple():
    assert U("i") * U("j") == U("k")
    assert U("j") * U("i") == -U("k")


def test_nonassociative_example():
    assert U("i") * U("jl") == -U("kl")
    assert (U("i") * U("j")) * U("l") == U("kl")


def test_imaginary_units_square_to_minus_one():
    for q in IMAGINARY:
        assert U(q) * U(q) == -U("1")


def test_conj_norm_associator_examples():
    assert conj(U("i")) == -U("i")
    assert norm_sq(U("k") + U("l")) == 2
    assert associator(U("i"), U("j"), U("k")).is_zero()


def test_seven_associative_lines():
    assert len(associative_triples()) == 7


@settings(max_examples=200, deadline=None)
@given(octonions, octonions)
def test_alternative(x, y):
    assert associator(x, x, y).is_zero()
    assert associator(x, y, y).is_zero()


@settings(max_examples=200, deadline=None)
@given(octonions, octonions)
def test_norm_composes(x, y):
    assert norm_sq(multiply(x, y)) == norm_sq(x) * norm_sq(y)


@settings(max_examples=100, deadline=None)
@given(octonions, octonions)
def test_conjugation_reverses_products(x, y):
    assert conj(x * y) == conj(y) * conj(x)


def test_derivations():
    ders = derivation_space()
    assert len(ders) == 14
    for D in ders:
        assert is_derivation(D)
        assert D(U("1")).is_zero()
        assert (D + D.transpose()).is_zero()


def test_derivations_fixing_a_quaternion_subalgebra():
    fixed = [U(u) for u in ("1", "k", "kl", "l")]
    ders = derivations_vanishing_on(fixed)
    assert len(ders) == 3
    moved = {"i", "j", "jl", "il"}
    for D in ders:
        for u in moved:
            image = D(U(u))
            assert all(image[n] == 0 for n, name in enumerate(UNITS) if name not in moved)


def test_only_zero_derivation_fixes_everything():
    assert derivations_vanishing_on([U(u) for u in UNITS]) == []
