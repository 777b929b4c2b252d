"""The subalgebra catalog: atom recipes, identifications and inclusions.

Simple ideals are identified by ``(dimension, rank, signature)`` against a
lookup of real forms.  Two keys are ambiguous and get resolved by containment:
a compact 21-dimensional ideal is ``c3`` exactly when it sits inside a ``c4``
record, and a compact 36-dimensional ideal inside the compact ``f4`` is ``b4``
because ``f4`` has no ``c4`` subalgebra.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import exact, golden
from .cartan_maps import CartanMap, fixed_subalgebra, max_compact_preimage
from .gradings import AtomDecomposition, Involution, refine, standard_involutions, z_boost_difference
from .lie import Ideal, N, StructureContext, Subspace, direct_sum
from .octonion import Octonion, derivation_space, derivations_vanishing_on
from .operators import boost_gen, derivation_lift, rotation_gen


class Unclassified(ValueError):
    pass


class CompletionFailed(RuntimeError):
    pass


# (dim, rank, (compact, noncompact)) -> [(complex type, real form)]
REAL_FORMS: dict[tuple[int, int, tuple[int, int]], list[tuple[str, str]]] = {}


def _add(kind: str, dim: int, rank: int, forms: dict[str, tuple[int, int]]):
    for name, sig in forms.items():
        REAL_FORMS.setdefault((dim, rank, sig), []).append((kind, name))


_add("a1", 3, 1, {"su(2)": (3, 0), "sl(2,R)": (1, 2)})
_add("a2", 8, 2, {"su(3)": (8, 0), "su(2,1)": (4, 4), "sl(3,R)": (3, 5)})
_add("c2", 10, 2, {"sp(2)": (10, 0), "sp(1,1)": (6, 4), "sp(4,R)": (4, 6)})
_add("g2", 14, 2, {"g2": (14, 0), "g2(2)": (6, 8)})
_add("a3", 15, 3, {"su(4)": (15, 0), "sl(2,H)": (10, 5), "su(3,1)": (9, 6), "su(2,2)": (7, 8), "sl(4,R)": (6, 9)})
_add("b3", 21, 3, {"so(7)": (21, 0), "so(6,1)": (15, 6), "so(5,2)": (11, 10), "so(4,3)": (9, 12)})
_add("c3", 21, 3, {"sp(3)": (21, 0), "sp(2,1)": (13, 8), "sp(6,R)": (9, 12)})
_add("d4", 28, 4, {"so(8)": (28, 0), "so(7,1)": (21, 7), "so(6,2)": (16, 12), "so(5,3)": (13, 15), "so(4,4)": (12, 16)})
_add("a5", 35, 5, {
    "su(6)": (35, 0), "su(5,1)": (25, 10), "sl(3,H)": (21, 14), "su(4,2)": (19, 16),
    "su(3,3)": (17, 18), "sl(6,R)": (15, 20),
})
_add("b4", 36, 4, {"so(9)": (36, 0), "so(8,1)": (28, 8), "so(7,2)": (22, 14), "so(6,3)": (18, 18), "so(5,4)": (16, 20)})
_add("c4", 36, 4, {"sp(4)": (36, 0), "sp(3,1)": (24, 12), "sp(2,2)": (20, 16), "sp(8,R)": (16, 20)})
_add("d5", 45, 5, {
    "so(10)": (45, 0), "so(9,1)": (36, 9), "so(8,2)": (29, 16), "so*(10)": (25, 20),
    "so(7,3)": (24, 21), "so(6,4)": (21, 24), "so(5,5)": (20, 25),
})
_add("f4", 52, 4, {"f4": (52, 0), "f4(4)": (24, 28), "f4(-20)": (36, 16)})
_add("e6", 78, 6, {
    "e6(78,0)": (78, 0), "e6(52,26)": (52, 26), "e6(46,32)": (46, 32),
    "e6(38,40)": (38, 40), "e6(36,42)": (36, 42),
})
# complex simple algebras seen as real ones
_add("a1(C)", 6, 2, {"sl(2,C)": (3, 3)})
_add("a2(C)", 16, 4, {"sl(3,C)": (8, 8)})


@dataclass
class IdealInfo:
    space: Subspace
    kind: str
    dim: int
    rank: int
    signature: tuple[int, int]
    label: str = "?"
    real_form: str = "?"


@dataclass
class SubalgebraRecord:
    name: str
    recipe: list[str]
    space: Subspace
    dim: int
    rank: int
    signature: tuple[int, int]
    ideals: list[IdealInfo] = field(default_factory=list)
    classification: str = "?"
    parents: list[str] = field(default_factory=list)
    expected_signature: tuple[int, int] | None = None

    @property
    def boosts(self) -> int:
        return self.signature[1]


class Atlas:
    """Everything derived from the context: involutions, atoms, records."""

    def __init__(self, ctx: StructureContext):
        self.ctx = ctx
        self.involutions: tuple[Involution, Involution, Involution] = standard_involutions(ctx)
        self.atoms: AtomDecomposition = refine(ctx, self.involutions)
        self.records: dict[str, SubalgebraRecord] = {}
        self.notes: list[str] = []
        self._ideal_cache: dict[Subspace, list[Ideal]] = {}

    # -- helpers --------------------------------------------------------------------------------
    def ideals(self, S: Subspace) -> list[Ideal]:
        if S not in self._ideal_cache:
            self._ideal_cache[S] = self.ctx.ideal_decomposition(S)
        return self._ideal_cache[S]

    def ideal_of_dim(self, S: Subspace, dim: int, kind: str = "simple") -> Subspace:
        hits = [I.space for I in self.ideals(S) if I.space.dim == dim and I.kind == kind]
        if len(hits) != 1:
            raise Unclassified(f"expected one {kind} ideal of dimension {dim} in {S!r}, found {len(hits)}")
        return hits[0]

    def atom_span(self, names, name: str | None = None) -> Subspace:
        return direct_sum([self.atoms[n] for n in names], name)

    def add(self, name: str, recipe: list[str], space: Subspace, expected=None, classify_now=True) -> SubalgebraRecord:
        ctx = self.ctx
        if not ctx.is_closed(space):
            raise ValueError(f"{name}: recipe {recipe} is not closed under the bracket")
        sig = ctx.signature(space)
        rec = SubalgebraRecord(name, list(recipe), space.named(name), space.dim, 0, sig, expected_signature=expected)
        self.records[name] = rec
        if classify_now:
            self.classify_record(rec)
        return rec

    # -- identification ---------------------------------------------------------------------------
    def describe_ideals(self, S: Subspace) -> list[IdealInfo]:
        out = []
        for I in self.ideals(S):
            sig = self.ctx.signature(I.space)
            if I.kind == "center":
                info = IdealInfo(I.space, "center", I.space.dim, I.space.dim, sig)
                info.label = "u1" if I.space.dim == 1 else f"u1^{I.space.dim}"
                info.real_form = "u(1)" if sig == (1, 0) else "u(-1)" if sig == (0, 1) else f"R^{sig}"
            else:
                info = IdealInfo(I.space, "simple", I.space.dim, self.ctx.rank(I.space), sig)
            out.append(info)
        return out

    def _resolve(self, info: IdealInfo) -> tuple[str, str]:
        key = (info.dim, info.rank, info.signature)
        options = REAL_FORMS.get(key)
        if not options:
            raise Unclassified(f"no real form with dimension {info.dim}, rank {info.rank}, signature {info.signature}")
        kinds = {k for k, _ in options}
        if len(kinds) == 1:
            return options[0]
        if kinds == {"b3", "c3"}:
            # c4 contains c3 but not b3
            inside_c4 = any(
                info.space <= rec.space for rec in self.records.values() if rec.classification == "c4"
            )
            want = "c3" if inside_c4 else "b3"
            if not inside_c4:
                self.notes.append(f"{info.dim}-dim ideal {info.signature} not inside a c4 record; taken as b3")
            return next(o for o in options if o[0] == want)
        if kinds == {"b4", "c4"} and info.signature == (36, 0):
            r = self.involutions[0].plus
            if info.space <= r:
                # the compact f4 has no c4 subalgebra
                return next(o for o in options if o[0] == "b4")
        raise Unclassified(f"ambiguous identification {sorted(kinds)} for {key}")

    def classify_record(self, rec: SubalgebraRecord) -> SubalgebraRecord:
        rec.rank = self.ctx.rank(rec.space)
        rec.ideals = self.describe_ideals(rec.space)
        for info in rec.ideals:
            if info.kind == "simple":
                info.label, info.real_form = self._resolve(info)
        rec.classification = "⊕".join(i.label for i in rec.ideals)
        return rec

    def classify(self, S: Subspace) -> str:
        infos = self.describe_ideals(S)
        for info in infos:
            if info.kind == "simple":
                info.label, _ = self._resolve(info)
        return "⊕".join(i.label for i in infos)


def _maybe_ideal(atlas: Atlas, parent: str, dim: int) -> Subspace:
    return atlas.ideal_of_dim(atlas.records[parent].space, dim)


def distinguished_pieces(atlas: Atlas) -> dict[str, Subspace]:
    ctx = atlas.ctx
    quaternions = [Octonion.unit(u) for u in ("1", "k", "kl", "l")]
    su2h = Subspace(ctx.coords_many([derivation_lift(D) for D in derivations_vanishing_on(quaternions)]), "su(2)_H")
    row10 = atlas.records["sl(2,1,H)_1⊕su(2)_2"].space
    su22 = atlas.ideal_of_dim(row10, 3).named("su(2)_2")
    u1m = Subspace(z_boost_difference(ctx), "u(-1)")
    return {"su(2)_H": su2h, "su(2)_2": su22, "u(-1)": u1m}


def g2_lift(ctx: StructureContext) -> Subspace:
    return Subspace(ctx.coords_many([derivation_lift(D) for D in derivation_space()]), "g2")


def cartan_basis(ctx: StructureContext) -> Subspace:
    """A Cartan subalgebra through ``B1_tz``, ``B2_tz - B3_tz`` and ``R1_xl``.

    The seeds are extended one vector at a time by the first reduced basis
    vector of their centralizer that is not yet in the span.
    """
    seeds = exact.stack([
        ctx.coords_many([boost_gen(1, "z")]),
        z_boost_difference(ctx),
        ctx.coords_many([rotation_gen(1, ("x", "l"))]),
    ])
    A = Subspace(seeds)
    if A.dim != 3 or not ctx.is_abelian(A):
        raise CompletionFailed("seed elements are not independent and commuting")
    while True:
        C = ctx.centralizer(A)
        if C == A:
            break
        new = next((exact.matrix([exact.row(C.basis, i)]) for i in range(C.dim)
                    if not A.contains(exact.matrix([exact.row(C.basis, i)]))), None)
        A = A + Subspace(new)
        if A.dim > 6 or not ctx.is_abelian(A):
            raise CompletionFailed(f"completion left the abelian range at dimension {A.dim}")
    if A.dim != 6:
        raise CompletionFailed(f"self-centralizing at dimension {A.dim}, expected 6")
    return A.named("cartan")


def build_catalog(ctx: StructureContext | None = None, atlas: Atlas | None = None) -> Atlas:
    """All atom-recipe records, the whole algebra, and the chain nodes reachable from them."""
    if atlas is None:
        atlas = Atlas(ctx if ctx is not None else StructureContext())
    ctx = atlas.ctx
    for name, atoms, expected, _ in golden.CATALOG:
        atlas.add(name, atoms, atlas.atom_span(atoms), expected, classify_now=False)
    # largest first, so that c4 records exist before any c3 candidate is resolved
    for name in sorted(atlas.records, key=lambda n: -atlas.records[n].dim):
        atlas.classify_record(atlas.records[name])
    atlas.add("sl(3,O)", ["whole"], ctx.whole, golden.WHOLE[1])

    def ideal_node(name, parent, dim):
        atlas.add(name, [f"ideal of {parent}"], _maybe_ideal(atlas, parent, dim))

    ideal_node("sl(3,H)", "sl(3,H)⊕su(2)_H", 35)
    ideal_node("sl(2,1,H)_1", "sl(2,1,H)_1⊕su(2)_2", 35)
    ideal_node("sl(2,O)", "sl(2,O)⊕u(-1)", 45)
    ideal_node("su(3,H)_1", "su(3,H)⊕su(2)_H", 21)
    ideal_node("su(3,H)_2", "su(3,H)_2⊕su(2)_H", 21)
    ideal_node("su(2,1,H)_1", "su(2,1,H)_1⊕su(2)_H", 21)
    ideal_node("su(2,1,H)_2", "su(2,1,H)_2⊕su(2)_H", 21)
    ideal_node("su(2,H)", "su(2,H)⊕su(2)_H⊕su(2)", 10)
    ideal_node("sl(2,H)", "sl(2,H)⊕su(2)_H⊕su(2)⊕u(-1)", 15)

    for name, S in distinguished_pieces(atlas).items():
        atlas.add(name, ["distinguished"], S, golden.PIECES[name])

    r = atlas.involutions[0].plus
    so8 = ctx.centralizer(Subspace(exact.stack([ctx.coords_many([boost_gen(1, "z")]), z_boost_difference(ctx)])), r)
    atlas.add("so(8)", ["centralizer of B1_tz, B2_tz-B3_tz in su(3,O)"], so8)
    r1 = atlas.records["so(9)"].space
    c = ctx.centralizer(Subspace(ctx.coords_many([rotation_gen(1, ("x", "z"))])), r1)
    atlas.add("so(7)", ["ideal of the centralizer of R1_xz in so(9)"], atlas.ideal_of_dim(c, 21))
    atlas.add("g2", ["lifted derivations"], g2_lift(ctx))

    type1 = [rotation_gen(1, p) for p in (("x", "z"), ("x", "l"), ("z", "l"))]
    type2 = [rotation_gen(2, p) for p in (("x", "z"), ("x", "l"), ("z", "l"))]
    boosts1 = [boost_gen(1, d) for d in ("z", "x", "l")]
    atlas.add("u(1)_s", ["R1_xl"], Subspace(ctx.coords_many([type1[1]])))
    atlas.add("su(2,C)_s", ["closure of type-1 rotations in x, z, l"], ctx.closure(Subspace(ctx.coords_many(type1))))
    atlas.add("sl(2,C)_s", ["closure of type-1 rotations and boosts in x, z, l"],
              ctx.closure(Subspace(ctx.coords_many(type1 + boosts1))))
    atlas.add("su(3,C)_s", ["closure of type-1 and type-2 rotations in x, z, l"],
              ctx.closure(Subspace(ctx.coords_many(type1 + type2))))
    atlas.notes.append("u(1) = <G_l - S1_l> and su(1,H) need named generators that are not reconstructed; omitted")
    _link_parents(atlas)
    return atlas


def _link_parents(atlas: Atlas):
    recs = list(atlas.records.values())
    for a in recs:
        a.parents = [b.name for b in recs if b is not a and b.dim > a.dim and a.space <= b.space]


def atom_records(atlas: Atlas) -> list[SubalgebraRecord]:
    names = [row[0] for row in golden.CATALOG]
    return [atlas.records[n] for n in names]


def map_subalgebras(atlas: Atlas, m: CartanMap) -> tuple[Subspace, Subspace]:
    return fixed_subalgebra(atlas.ctx, m, atlas.atoms), max_compact_preimage(atlas.ctx, m, atlas.atoms)


def inclusion_edges(atlas: Atlas, reduced: bool = True) -> list[tuple[str, str]]:
    """Containment edges ``(small, large)``; transitively reduced unless asked otherwise."""
    recs = atlas.records
    edges = {(a.name, p) for a in recs.values() for p in a.parents}
    if reduced:
        edges = {
            (a, b) for a, b in edges
            if not any((a, c) in edges and (c, b) in edges for c in recs)
        }
    order = {n: i for i, n in enumerate(recs)}
    return sorted(edges, key=lambda e: (order[e[0]], order[e[1]]))


def to_dot(atlas: Atlas) -> str:
    lines = ["digraph chains {", "  rankdir=BT;", "  node [shape=box];"]
    for rec in atlas.records.values():
        label = f"{rec.name}\\n{rec.dim},({rec.signature[0]},{rec.signature[1]})"
        lines.append(f'  "{rec.name}" [label="{label}"];')
    for a, b in inclusion_edges(atlas):
        lines.append(f'  "{a}" -> "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"

