"""The three involutions of the e6 context and the atoms they cut out.

An involution is stored as its two eigenspaces.  ``phi_s`` separates
rotations from boosts, ``phi_t`` isolates the type-1 block, ``phi_h``
isolates the transformations preserving the quaternionic Albert subalgebra.
Intersecting all three gives eight atoms indexed by sign triples.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from . import exact
from .albert import DIM as ALBERT_DIM
from .albert import quaternionic_coordinates
from .exact import fmpq_mat
from .lie import N, StructureContext, Subspace, direct_sum
from .octonion import UNIT_TABLE
from .operators import DIRECTIONS, ROTATION_PAIRS, boost_gen, rotation_gen


class InconsistentRefinement(ValueError):
    pass


class NotGraded(ValueError):
    pass


@dataclass(frozen=True)
class Involution:
    name: str
    plus: Subspace
    minus: Subspace

    def part(self, sign: int) -> Subspace:
        return self.plus if sign > 0 else self.minus


def grading_violations(ctx: StructureContext, inv: Involution) -> list[str]:
    """Everything that stops ``inv`` from being a Z2-grading; empty when it is one."""
    out = []
    P, M = inv.plus, inv.minus
    if P.dim + M.dim != N or ctx.intersect(P, M).dim:
        out.append(f"{inv.name}: parts do not split the algebra ({P.dim} + {M.dim})")
    rules = (("[+,+]", P, P, P), ("[-,-]", M, M, P), ("[+,-]", P, M, M))
    for tag, A, B, target in rules:
        if not target.contains(ctx.span_brackets(A.basis, B.basis)):
            out.append(f"{inv.name}: {tag} leaves its part")
    for tag, S in (("+", P), ("-", M)):
        if S.dim and exact.rank(ctx.gram(S)) != S.dim:
            out.append(f"{inv.name}: Killing form degenerate on the {tag} part")
    if P.dim and M.dim and not exact.is_zero(ctx.gram(P, M)):
        out.append(f"{inv.name}: parts are not Killing-orthogonal")
    return out


def _split(ctx: StructureContext, name: str, plus: Subspace) -> Involution:
    minus = ctx.orthogonal_complement(plus)
    return Involution(name, plus.named(f"{name}+"), minus.named(f"{name}-"))


def phi_s(ctx: StructureContext) -> Involution:
    """Rotations (trace-form antisymmetric) against boosts (symmetric)."""
    rot, boost = [], []
    for n, op in enumerate(ctx.operators):
        if op.is_antisymmetric():
            rot.append(n)
        elif op.is_symmetric():
            boost.append(n)
        else:
            raise ValueError(f"basis element {ctx.labels[n].name} is neither symmetric nor antisymmetric")
    r = Subspace(exact.stack([ctx.unit(n) for n in rot], ncols=N), "r")
    b = Subspace(exact.stack([ctx.unit(n) for n in boost], ncols=N), "b")
    return Involution("s", r, b)


def block_generators(ctx: StructureContext, t: int) -> Subspace:
    ops = [boost_gen(t, d) for d in DIRECTIONS] + [rotation_gen(t, p) for p in ROTATION_PAIRS]
    return Subspace(ctx.coords_many(ops))


def z_boost_difference(ctx: StructureContext) -> fmpq_mat:
    """Coordinates of B2_tz - B3_tz."""
    return ctx.coords_many([boost_gen(2, "z") - boost_gen(3, "z")])


def phi_t(ctx: StructureContext) -> Involution:
    t1 = ctx.closure(block_generators(ctx, 1)) + Subspace(z_boost_difference(ctx))
    if not ctx.is_closed(t1):
        raise NotGraded("t1 is not a subalgebra")
    return _split(ctx, "t", t1.named("t1"))


def quaternionic_stabilizer(ctx: StructureContext) -> Subspace:
    """All elements mapping the quaternionic Albert subalgebra into itself."""
    inside = quaternionic_coordinates()
    outside = [n for n in range(ALBERT_DIM) if n not in set(inside)]
    rows = []
    for op in ctx.operators:
        m = op.mat
        rows.append([m[o, e] for e in inside for o in outside])
    coeffs = exact.left_nullspace(exact.matrix(rows))
    return Subspace(coeffs, "h")


def phi_h(ctx: StructureContext) -> Involution:
    return _split(ctx, "H", quaternionic_stabilizer(ctx))


def standard_involutions(ctx: StructureContext) -> tuple[Involution, Involution, Involution]:
    return phi_s(ctx), phi_t(ctx), phi_h(ctx)


# display names of the two parts of each standard involution
PART_NAMES = {"s": ("r", "b"), "t": ("1", "23"), "H": ("H", "⊥")}


def atom_name(signs: Sequence[int], names: Sequence[str] = ("s", "t", "H")) -> str:
    parts = [PART_NAMES.get(n, (f"{n}+", f"{n}-"))[0 if s > 0 else 1] for n, s in zip(names, signs)]
    if tuple(names) == ("s", "t", "H"):
        return f"{parts[0]}{parts[1]},{parts[2]}"
    return "".join(parts)


@dataclass
class AtomDecomposition:
    involutions: tuple[Involution, ...]
    atoms: dict[tuple[int, ...], Subspace] = field(default_factory=dict)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(inv.name for inv in self.involutions)

    def keys(self) -> list[tuple[int, ...]]:
        return list(self.atoms)

    def __getitem__(self, key) -> Subspace:
        if isinstance(key, str):
            for k, S in self.atoms.items():
                if atom_name(k, self.names) == key:
                    return S
            raise KeyError(key)
        return self.atoms[tuple(key)]

    def combine(self, keys, name: str | None = None) -> Subspace:
        return direct_sum([self[k] for k in keys], name)

    def label(self, key) -> str:
        return atom_name(key, self.names)


def refine(ctx: StructureContext, invs: Sequence[Involution]) -> AtomDecomposition:
    """All joint eigenspaces of the given involutions, keyed by sign tuples (+1 first)."""
    dec = AtomDecomposition(tuple(invs))
    for signs in itertools.product((1, -1), repeat=len(invs)):
        S = ctx.whole
        for inv, s in zip(invs, signs):
            S = ctx.intersect(S, inv.part(s))
        dec.atoms[signs] = S.named(atom_name(signs, dec.names))
    total = sum(S.dim for S in dec.atoms.values())
    if total != N or direct_sum(list(dec.atoms.values())).dim != N:
        raise InconsistentRefinement(f"atoms span {total} of {N} dimensions; the involutions do not commute")
    return dec


def comm_table(ctx: StructureContext, parts: Sequence[Subspace]) -> list[list[int | None]]:
    """Index of the part containing ``[parts[a], parts[b]]``; ``None`` when the bracket vanishes."""
    table = []
    for A in parts:
        row = []
        for B in parts:
            P = ctx.span_brackets(A.basis, B.basis)
            if exact.is_zero(P):
                row.append(None)
                continue
            hits = [n for n, T in enumerate(parts) if T.contains(P)]
            if len(hits) != 1:
                raise NotGraded(f"[{A.name}, {B.name}] is not contained in a single part")
            row.append(hits[0])
        table.append(row)
    return table


def unsigned_unit_table() -> list[list[int]]:
    """Octonion unit products with signs dropped: ``e_p e_q = ± e_table[p][q]``."""
    return [[UNIT_TABLE[p][q][1] for q in range(8)] for p in range(8)]


def table_isomorphism(table: Sequence[Sequence[int]], reference: Sequence[Sequence[int]]) -> tuple[int, ...] | None:
    """A bijection ``f`` with ``f(table[a][b]) == reference[f(a)][f(b)]``, or ``None``."""
    n = len(table)
    for perm in itertools.permutations(range(n)):
        if all(perm[table[a][b]] == reference[perm[a]][perm[b]] for a in range(n) for b in range(n)):
            return perm
    return None


def boost_rotation_counts(ctx: StructureContext, S: Subspace, s: Involution) -> tuple[int, int]:
    """(rotations, boosts): dimensions of ``S`` meeting each eigenspace of ``phi_s``.

    For subspaces compatible with ``phi_s`` the two counts add up to ``dim S``.
    """
    return ctx.intersect(S, s.plus).dim, ctx.intersect(S, s.minus).dim
