"""Associated Cartan maps as sign bookkeeping over the eight atoms.

A map is a triple of flags over the involutions ``(s, t, H)``.  An atom is
flipped (multiplied by the imaginary unit) when it lies in the minus part of an
odd number of flagged involutions.  Flipping swaps compact and noncompact
directions, which is all that is needed to read off signatures of the image
real form, the fixed subalgebra and the preimage of its maximal compact part.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .gradings import AtomDecomposition, NotGraded
from .lie import StructureContext, Subspace, direct_sum

GENERATORS = ("s", "t", "H")
# composites are written with s last: "ts", "tH", "tHs"
NAME_ORDER = ("t", "H", "s")

# real forms of e6 keyed by (compact, noncompact)
REAL_FORM_ANNOTATIONS = {
    (78, 0): "compact",
    (52, 26): "sl(3,O)",
    (46, 32): "su(2,1,O)-type",
    (38, 40): "quaternionic",
    (36, 42): "split",
}


@dataclass(frozen=True, order=True)
class CartanMap:
    """Flags ``(s, t, H)``; ``True`` means the involution takes part in the composite."""

    flags: tuple[bool, bool, bool] = (False, False, False)

    @classmethod
    def identity(cls) -> "CartanMap":
        return cls()

    @classmethod
    def of(cls, *names: str) -> "CartanMap":
        unknown = set(names) - set(GENERATORS)
        if unknown:
            raise ValueError(f"unknown involutions {sorted(unknown)}")
        return cls(tuple(g in names for g in GENERATORS))

    @property
    def signs(self) -> tuple[int, int, int]:
        return tuple(-1 if f else 1 for f in self.flags)

    @property
    def name(self) -> str:
        used = {g for g, f in zip(GENERATORS, self.flags) if f}
        return "".join(g for g in NAME_ORDER if g in used) or "1"

    def flips(self, atom: tuple[int, ...]) -> bool:
        odd = sum(1 for f, s in zip(self.flags, atom) if f and s < 0)
        return odd % 2 == 1

    def flipped_atoms(self, dec: AtomDecomposition) -> frozenset:
        return frozenset(k for k in dec.keys() if self.flips(k))

    def __str__(self):
        return self.name


def star(a: CartanMap, b: CartanMap) -> CartanMap:
    return CartanMap(tuple(x != y for x, y in zip(a.flags, b.flags)))


def group_elements() -> list[CartanMap]:
    """The eight maps in the order 1, s, t, H, ts, Hs, tH, tHs."""
    order = [(), ("s",), ("t",), ("H",), ("t", "s"), ("H", "s"), ("t", "H"), ("t", "H", "s")]
    return [CartanMap.of(*names) for names in order]


def generated_group(gens) -> set[CartanMap]:
    group = {CartanMap.identity()}
    frontier = set(gens)
    while frontier:
        group |= frontier
        frontier = {star(a, b) for a in group for b in group} - group
    return group


def star_table(elements) -> list[list[int]]:
    idx = {m: n for n, m in enumerate(elements)}
    return [[idx[star(a, b)] for b in elements] for a in elements]


def is_rotation_atom(atom: tuple[int, ...]) -> bool:
    # the first involution is phi_s, whose plus part is the rotations
    return atom[0] > 0


def image_signature(m: CartanMap, dec: AtomDecomposition) -> tuple[int, int]:
    compact = noncompact = 0
    for k, S in dec.atoms.items():
        rot = is_rotation_atom(k)
        if m.flips(k):
            rot = not rot
        if rot:
            compact += S.dim
        else:
            noncompact += S.dim
    return compact, noncompact


def _checked(ctx: StructureContext, S: Subspace, what: str) -> Subspace:
    if not ctx.is_closed(S):
        raise NotGraded(f"{what} is not closed under the bracket")
    return S


def fixed_subalgebra(ctx: StructureContext, m: CartanMap, dec: AtomDecomposition) -> Subspace:
    keys = [k for k in dec.keys() if not m.flips(k)]
    return _checked(ctx, direct_sum([dec[k] for k in keys], f"fixed[{m.name}]"), f"fixed part of {m.name}")


def max_compact_preimage(ctx: StructureContext, m: CartanMap, dec: AtomDecomposition) -> Subspace:
    keys = [k for k in dec.keys() if is_rotation_atom(k) != m.flips(k)]
    return _checked(ctx, direct_sum([dec[k] for k in keys], f"compact[{m.name}]"), f"compact preimage of {m.name}")


@dataclass(frozen=True)
class RealFormRecord:
    signature: tuple[int, int]

    def __post_init__(self):
        if sum(self.signature) != 78:
            raise ValueError("a real form of e6 has dimension 78")

    @property
    def label(self) -> str:
        return "e6({},{})".format(*self.signature)

    @property
    def annotation(self) -> str:
        return REAL_FORM_ANNOTATIONS.get(self.signature, "")


@dataclass(frozen=True)
class OrbitEntry:
    map: CartanMap
    image: RealFormRecord
    fixed_signature: tuple[int, int]
    preimage_signature: tuple[int, int]
    compact_dim: int


def orbit_report(ctx: StructureContext, dec: AtomDecomposition) -> list[OrbitEntry]:
    out = []
    for m in group_elements():
        fixed = fixed_subalgebra(ctx, m, dec)
        pre = max_compact_preimage(ctx, m, dec)
        out.append(
            OrbitEntry(
                m,
                RealFormRecord(image_signature(m, dec)),
                ctx.signature(fixed),
                ctx.signature(pre),
                pre.dim,
            )
        )
    return out


def all_flip_sets(dec: AtomDecomposition) -> dict[CartanMap, frozenset]:
    return {CartanMap(f): CartanMap(f).flipped_atoms(dec) for f in itertools.product((False, True), repeat=3)}
