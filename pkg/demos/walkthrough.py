"""From octonions to the eight atoms of sl(3,O), printed step by step.

Run with ``python3 demos/walkthrough.py``; it takes about half a minute.
"""

from e6wb.atlas import atom_records, build_catalog
from e6wb.cartan_maps import group_elements, orbit_report
from e6wb.lie import StructureContext

ctx = StructureContext()
print(f"78 operators on the Albert algebra; Killing signature {ctx.signature(ctx.whole)}, rank {ctx.rank(ctx.whole)}")

atlas = build_catalog(ctx)
for inv in atlas.involutions:
    print(f"phi_{inv.name}: plus part {inv.plus.dim}-dim {ctx.signature(inv.plus)}, minus part {inv.minus.dim}-dim")

print("\natoms (rotations above, boosts below):")
for row in ("r", "b"):
    cells = [f"{atlas.atoms.label(k)}={S.dim}" for k, S in atlas.atoms.atoms.items() if atlas.atoms.label(k)[0] == row]
    print("  " + "  ".join(cells))

print("\nassociated Cartan maps:")
for entry in orbit_report(ctx, atlas.atoms):
    print(f"  {entry.map.name:>3}  image {entry.image.label:<10} fixed {entry.fixed_signature}  compact preimage {entry.preimage_signature}")
print(f"  {len(group_elements())} maps, {len({e.image.signature for e in orbit_report(ctx, atlas.atoms)})} distinct real forms")

print("\nsubalgebras built from atoms:")
for rec in atom_records(atlas):
    print(f"  {' + '.join(rec.recipe):<30} {rec.name:<30} {rec.signature}  {rec.classification}")
