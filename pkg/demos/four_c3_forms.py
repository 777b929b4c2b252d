"""The four 21-dimensional c3 subalgebras and what contains them."""

from e6wb.atlas import build_catalog, inclusion_edges

atlas = build_catalog()
c3 = [r for r in atlas.records.values() if r.classification == "c3"]
edges = inclusion_edges(atlas, reduced=False)
for rec in c3:
    above = sorted(b for a, b in edges if a == rec.name)
    below = sorted(a for a, b in edges if b == rec.name)
    print(f"{rec.name:<14} {rec.signature}  contains {', '.join(below) or '-'}")
    print(f"{'':<14} inside {', '.join(above)}")
for note in atlas.notes:
    print("note:", note)
