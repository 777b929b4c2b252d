import pytest

from e6wb import exact
from e6wb.gradings import block_generators, z_boost_difference
from e6wb.lie import N, NotInAlgebra, StructureContext, Subspace
from e6wb.operators import Operator, boost_gen, rotation_gen


def test_coordinates(ctx):
    assert ctx.coords(ctx.operators[5]) == ctx.unit(5).entries()
    assert all(v == 0 for v in ctx.coords(Operator.zero()))
    with pytest.raises(NotInAlgebra):
        ctx.coords(Operator(exact.identity(27)))


def test_bracket_matches_operators(ctx):
    i, j = ctx.index("B1_tz"), ctx.index("R2_xi")
    direct = ctx.operators[i] @ ctx.operators[j] - ctx.operators[j] @ ctx.operators[i]
    assert ctx.operator(ctx.bracket(ctx.unit(i), ctx.unit(j))) == direct


def test_span_brackets_agree_with_exact_up_to_scale(ctx):
    S = Subspace(exact.stack([ctx.unit(0), ctx.unit(30), ctx.unit(70)]))
    T = Subspace(exact.stack([ctx.unit(3), ctx.unit(44)]))
    assert Subspace(ctx.span_brackets(S.basis, T.basis)) == Subspace(ctx.brackets(S.basis, T.basis))


def test_structure_identities(ctx):
    assert ctx.antisymmetry_defects() == []
    assert ctx.jacobi_defects() == []
    assert ctx.killing_invariance_defects() == []
    G = ctx.killing_gram
    assert G == G.transpose()


def test_fault_injection_breaks_jacobi():
    fresh = StructureContext()
    fresh.inject_fault(0, 1, 2)
    assert fresh.jacobi_defects()
    assert fresh.antisymmetry_defects() == []


def test_signatures(ctx, base):
    s, t, h = base.involutions
    assert ctx.signature(ctx.whole) == (52, 26)
    assert ctx.signature(s.plus) == (52, 0)
    assert ctx.signature(t.plus) == (36, 10)


def test_closure_examples(ctx):
    assert ctx.closure(block_generators(ctx, 1)).dim == 45
    one = Subspace(ctx.unit(7))
    assert ctx.closure(one) == one
    assert ctx.closure(ctx.whole).dim == N


def test_intersections_and_complements(ctx, base):
    s, t, h = base.involutions
    hi = ctx.intersect(h.plus, t.plus)
    assert (hi.dim, ctx.signature(hi)) == (22, (16, 6))
    comp = ctx.orthogonal_complement(t.plus)
    assert comp.dim == 32
    assert (ctx.intersect(comp, s.plus).dim, ctx.intersect(comp, s.minus).dim) == (16, 16)
    assert ctx.centralizer(ctx.whole).dim == 0


def test_rank_examples(ctx):
    assert ctx.rank(ctx.whole) == 6
    t1 = ctx.closure(block_generators(ctx, 1)) + Subspace(z_boost_difference(ctx))
    assert ctx.rank(t1) == 6
    assert ctx.rank(Subspace(ctx.unit(0))) == 1


def test_ideal_decomposition_examples(atlas, base):
    s, t, h = base.involutions
    assert sorted(I.space.dim for I in atlas.ideals(h.plus)) == [3, 35]
    ideals = atlas.ideals(t.plus)
    assert sorted((I.space.dim, I.kind) for I in ideals) == [(1, "center"), (45, "simple")]


def test_ideal_decomposition_of_abelian(ctx):
    S = Subspace(exact.stack([ctx.coords_many([boost_gen(1, "z")]), z_boost_difference(ctx)]))
    assert [I.kind for I in ctx.ideal_decomposition(S)] == ["center"]


def test_subspace_algebra():
    a = Subspace.from_vectors([[1, 0, 0], [0, 1, 0]], ncols=3)
    b = Subspace.from_vectors([[0, 1, 0], [0, 0, 1]], ncols=3)
    assert (a + b).dim == 3
    assert Subspace.from_vectors([[0, 1, 0]], ncols=3) <= a
    assert not (b <= a)
    assert a == Subspace.from_vectors([[1, 1, 0], [1, -1, 0]], ncols=3)
