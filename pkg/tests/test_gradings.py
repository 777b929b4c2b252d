import pytest

from e6wb import exact, golden
from e6wb.gradings import (
    InconsistentRefinement,
    Involution,
    NotGraded,
    atom_name,
    boost_rotation_counts,
    comm_table,
    grading_violations,
    refine,
    table_isomorphism,
    unsigned_unit_table,
)
from e6wb.lie import Subspace


def test_involution_sizes(ctx, base):
    s, t, h = base.involutions
    for inv in (s, t, h):
        dim_p, sig_p, dim_m, counts = golden.INVOLUTIONS[inv.name]
        assert inv.plus.dim == dim_p and inv.minus.dim == dim_m
        assert ctx.signature(inv.plus) == sig_p
        assert boost_rotation_counts(ctx, inv.minus, s) == counts


def test_grading_laws(ctx, base):
    for inv in base.involutions:
        assert grading_violations(ctx, inv) == []


def test_non_grading_is_reported(ctx, base):
    s, t, h = base.involutions
    # swapping the parts of phi_t breaks [-,-] into +
    swapped = Involution("swap", t.minus, t.plus)
    assert grading_violations(ctx, swapped)


def test_atoms(base):
    for name, dim in golden.ATOMS.items():
        assert base.atoms[name].dim == dim
    assert sum(S.dim for S in base.atoms.atoms.values()) == 78


def test_pairwise_refinements_commute(ctx, base):
    s, t, h = base.involutions
    for pair in ((s, t), (s, h), (t, h)):
        dec = refine(ctx, pair)
        assert sum(S.dim for S in dec.atoms.values()) == 78


def test_noncommuting_refinement_is_rejected(ctx, base):
    s, t, h = base.involutions
    # rotations with one of them tilted towards a boost: not compatible with phi_s
    rotations = [ctx.unit(n) for n in range(26, 78) if n != 30]
    tilted = Subspace(exact.stack(rotations + [ctx.unit(0) + ctx.unit(30)]))
    fake = Involution("x", tilted, ctx.orthogonal_complement(tilted))
    with pytest.raises(InconsistentRefinement):
        refine(ctx, (s, fake))


def test_table3_entries(ctx, base):
    s, t, h = base.involutions
    parts = [ctx.intersect(h.part(a), t.part(b)) for a, b in ((1, 1), (1, -1), (-1, 1), (-1, -1))]
    table = comm_table(ctx, parts)
    assert table[1][1] == 0  # [h23, h23] in h1
    assert table[2][3] == 1  # [h⊥1, h⊥23] in h23


def test_comm_table_rejects_ungraded_parts(ctx):
    halves = [Subspace(ctx.unit(0) + ctx.unit(30)), Subspace(ctx.unit(1))]
    with pytest.raises(NotGraded):
        comm_table(ctx, halves)


def test_atom_squares_and_fano(ctx, base):
    keys = base.atoms.keys()
    table = comm_table(ctx, [base.atoms[k] for k in keys])
    names = [base.atoms.label(k) for k in keys]
    assert {names[table[n][n]] for n in range(8)} == {golden.ATOM_SQUARE}
    assert table_isomorphism(table, unsigned_unit_table()) is not None


def test_table_isomorphism_rejects_cyclic_group():
    z8 = [[(a + b) % 8 for b in range(8)] for a in range(8)]
    assert table_isomorphism(z8, unsigned_unit_table()) is None


def test_atom_names():
    assert atom_name((1, 1, 1)) == "r1,H"
    assert atom_name((-1, -1, -1)) == "b23,⊥"
