from e6wb import exact, golden
from e6wb.atlas import atom_records, cartan_basis, g2_lift, inclusion_edges, to_dot
from e6wb.lie import Subspace


def test_catalog_rows(ctx, atlas):
    for name, atoms, sig, ideal_sigs in golden.CATALOG:
        rec = atlas.records[name]
        assert ctx.is_closed(rec.space)
        assert rec.dim == sum(sig) and rec.signature == sig
        assert sorted(i.signature for i in rec.ideals) == sorted(ideal_sigs)
        assert rec.classification == golden.CATALOG_TYPES[name]


def test_two_quaternionic_c4_forms_differ(atlas):
    a, b = atlas.records["su(3,1,H)_1"], atlas.records["su(3,1,H)_2"]
    assert a.signature == b.signature == (24, 12)
    assert a.space != b.space
    assert not (a.space <= b.space) and not (b.space <= a.space)


def test_atom_counting(atlas):
    counts = {}
    for rec in atom_records(atlas):
        counts[len(rec.recipe)] = counts.get(len(rec.recipe), 0) + 1
    assert counts == golden.ATOM_COUNTS


def test_classify_examples(atlas, base):
    s = base.involutions[0]
    assert atlas.classify(s.plus) == "f4"
    assert atlas.records["su(2,1,O)"].classification == "f4"
    assert atlas.records["sl(3,O)"].classification == "e6"


def test_c3_resolved_by_c4_containment(ctx, atlas, base):
    s, _, h = base.involutions
    rH = ctx.intersect(s.plus, h.plus)
    c21 = [i for i in atlas.describe_ideals(rH) if i.dim == 21]
    assert len(c21) == 1
    assert atlas._resolve(c21[0])[0] == "c3"


def test_classify_ignores_the_spanning_set(ctx, atlas):
    rec = atlas.records["so(5)⊕so(4,1)"]
    n = rec.dim
    mix = exact.matrix([[1 if j <= i else 0 for j in range(n)] for i in range(n)])
    assert atlas.classify(Subspace(mix * rec.space.basis)) == rec.classification


def test_distinguished_pieces(ctx, atlas):
    g2 = g2_lift(ctx)
    su2h, su22, u1 = (atlas.records[n] for n in ("su(2)_H", "su(2)_2", "u(-1)"))
    assert su2h.signature == (3, 0) and su2h.space <= g2
    assert su22.signature == (3, 0) and ctx.intersect(su22.space, g2).dim == 0
    assert u1.signature == (0, 1)


def test_cartan_basis(ctx):
    A = cartan_basis(ctx)
    assert A.dim == 6
    assert ctx.is_abelian(A) and ctx.centralizer(A) == A
    assert ctx.signature(A) == (4, 2)


def test_edges(atlas):
    full = set(inclusion_edges(atlas, reduced=False))
    for e in golden.REQUIRED_EDGES:
        assert e in full
    for e in golden.FORBIDDEN_EDGES:
        assert e not in full
    reduced = set(inclusion_edges(atlas))
    assert reduced <= full
    c3 = {"su(3,H)_1", "su(3,H)_2", "su(2,1,H)_1", "su(2,1,H)_2"}
    assert c3 == {b for a, b in reduced if a == "su(2,H)"} & c3


def test_dot_output(atlas):
    text = to_dot(atlas)
    assert text.startswith("digraph chains {") and text.rstrip().endswith("}")
    assert '"su(2,H)"' in text
    assert text.count("->") == len(inclusion_edges(atlas))


def test_omissions_are_reported(atlas):
    assert any("omitted" in n for n in atlas.notes)


def test_which_su2_sits_beside_each_c3(atlas):
    pieces = {"H": atlas.records["su(2)_H"].space, "2": atlas.records["su(2)_2"].space}

    def summand(name):
        (S,) = [i.space for i in atlas.ideals(atlas.records[name].space) if i.space.dim == 3]
        return next(k for k, P in pieces.items() if P == S)

    assert summand("su(3,H)⊕su(2)_H") == "H"
    assert summand("su(2,1,H)_2⊕su(2)_H") == "H"
    assert summand("sl(3,H)⊕su(2)_H") == "H"
    # these two names are display metadata; the computed a1 summand is su(2)_2
    assert summand("su(3,H)_2⊕su(2)_H") == "2"
    assert summand("su(2,1,H)_1⊕su(2)_H") == "2"
