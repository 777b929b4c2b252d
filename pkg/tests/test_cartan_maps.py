import itertools

import pytest

from e6wb import golden
from e6wb.cartan_maps import (
    CartanMap,
    RealFormRecord,
    fixed_subalgebra,
    generated_group,
    group_elements,
    image_signature,
    max_compact_preimage,
    orbit_report,
    star,
    star_table,
)

S, T, H = (CartanMap.of(g) for g in "stH")


def test_names_follow_table_order():
    assert [m.name for m in group_elements()] == list(golden.MAPS)


def test_star_is_an_elementary_abelian_group():
    elems = group_elements()
    for a, b in itertools.product(elems, repeat=2):
        assert star(a, b) == star(b, a)
    for a in elems:
        assert star(a, a) == CartanMap.identity()
    assert len(generated_group([S, T, H])) == 8
    table = star_table(elems)
    assert all(sorted(row) == list(range(8)) for row in table)


def test_star_flips_symmetric_difference(base):
    th = star(T, H)
    for k in base.atoms.keys():
        assert th.flips(k) == (T.flips(k) != H.flips(k))


def test_image_signatures(base):
    assert image_signature(S, base.atoms) == (78, 0)
    assert image_signature(H, base.atoms) == (36, 42)
    assert image_signature(CartanMap.of("s", "t", "H"), base.atoms) == (38, 40)
    assert image_signature(CartanMap.identity(), base.atoms) == (52, 26)


def test_fixed_and_preimage(ctx, base):
    F = fixed_subalgebra(ctx, T, base.atoms)
    assert (F.dim, ctx.signature(F)) == (46, (36, 10))
    P = max_compact_preimage(ctx, T, base.atoms)
    assert (P.dim, ctx.signature(P)) == (52, (36, 16))
    P = max_compact_preimage(ctx, H, base.atoms)
    assert (P.dim, ctx.signature(P)) == (36, (24, 12))


def test_table4(ctx, base):
    for entry in orbit_report(ctx, base.atoms):
        image, fixed, pre = golden.MAPS[entry.map.name]
        assert entry.image.signature == image
        assert entry.fixed_signature == fixed
        assert entry.preimage_signature == pre


def test_orbit(ctx, base):
    report = orbit_report(ctx, base.atoms)
    sigs = [e.image.signature for e in report]
    assert sorted(sigs) == golden.ORBIT_SIGNATURES
    assert len(set(sigs)) == golden.REAL_FORMS_OF_E6
    assert sorted(e.image.signature[0] for e in report) == sorted(golden.ORBIT_COMPACT_DIMS)


def test_real_form_record_checks_dimension():
    assert RealFormRecord((46, 32)).label == "e6(46,32)"
    with pytest.raises(ValueError):
        RealFormRecord((10, 10))


def test_unknown_generator():
    with pytest.raises(ValueError):
        CartanMap.of("q")
