"""Named verification sections comparing computed values with the embedded reference data.

Every check is a ``(key, expected, computed)`` triple and passes exactly when
the two values agree after conversion to plain JSON-able data, so a saved
report can be re-checked without rebuilding anything.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from . import exact, golden
from .atlas import Atlas, atom_records, build_catalog, cartan_basis, inclusion_edges, map_subalgebras
from .cartan_maps import (
    CartanMap,
    generated_group,
    group_elements,
    image_signature,
    orbit_report,
    star,
    star_table,
)
from .gradings import comm_table, grading_violations, table_isomorphism, unsigned_unit_table, z_boost_difference
from .lie import StructureContext, Subspace, direct_sum
from .operators import boost_gen, determinant_defects, rotation_gen

# Table 4 writes the a5 summand of this record without its subscript
RECORD_ALIASES = {"sl(2,1,H)⊕su(2)_2": "sl(2,1,H)_1⊕su(2)_2"}


def plain(value):
    """JSON-ready form: tuples become lists, non-integer rationals become strings."""
    if isinstance(value, (list, tuple)):
        return [plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): plain(v) for k, v in value.items()}
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return value
    q = Fraction(str(value)) if not isinstance(value, Fraction) else value
    return int(q) if q.denominator == 1 else str(q)


@dataclass(frozen=True)
class Check:
    key: str
    expected: object
    computed: object

    @property
    def passed(self) -> bool:
        return plain(self.expected) == plain(self.computed)

    def as_dict(self) -> dict:
        return {
            "key": self.key,
            "expected": plain(self.expected),
            "computed": plain(self.computed),
            "status": "pass" if self.passed else "fail",
        }


class Workbench:
    """Lazily built shared state; everything is deterministic."""

    def __init__(self, ctx: StructureContext | None = None):
        self._ctx = ctx

    @cached_property
    def ctx(self) -> StructureContext:
        return self._ctx if self._ctx is not None else StructureContext()

    @cached_property
    def base(self) -> Atlas:
        """Involutions and atoms only."""
        return Atlas(self.ctx)

    @cached_property
    def atlas(self) -> Atlas:
        """The full catalog of subalgebra records."""
        return build_catalog(self.ctx, self.base)

    @property
    def involutions(self):
        return self.base.involutions

    @property
    def atoms(self):
        return self.base.atoms

    def part(self, inv: str, sign: int) -> Subspace:
        s, t, h = self.involutions
        return {"s": s, "t": t, "H": h}[inv].part(sign)

    def record(self, name: str):
        return self.atlas.records[RECORD_ALIASES.get(name, name)]


# -- sections ---------------------------------------------------------------------------------


def section_basis(wb: Workbench) -> list[Check]:
    ctx = wb.ctx
    rot = sum(op.is_antisymmetric() for op in ctx.operators)
    boost = sum(op.is_symmetric() for op in ctx.operators)
    return [
        Check("dimension", golden.BASIS["dimension"], exact.rank(ctx._flat)),
        Check("rotations", golden.BASIS["rotations"], rot),
        Check("boosts", golden.BASIS["boosts"], boost),
        Check("closed under bracket", True, ctx.is_closed(ctx.whole)),
        Check("signature of sl(3,O)", golden.WHOLE[1], ctx.signature(ctx.whole)),
    ]


def section_jacobi(wb: Workbench) -> list[Check]:
    ctx = wb.ctx
    jac = ctx.jacobi_defects()
    return [
        Check("antisymmetry defects", 0, len(ctx.antisymmetry_defects())),
        Check("jacobi identity defects (basis pairs)", 0, len(jac)),
        Check("first jacobi defects", [], [[ctx.labels[i].name, ctx.labels[j].name] for i, j in jac[:3]]),
        Check("killing form invariance defects", 0, len(ctx.killing_invariance_defects())),
    ]


def section_determinant(wb: Workbench) -> list[Check]:
    basis = list(zip(wb.ctx.labels, wb.ctx.operators))
    return [Check("operators changing det to first order (50 points)", [], determinant_defects(basis))]


def section_grading(wb: Workbench) -> list[Check]:
    ctx = wb.ctx
    s = wb.involutions[0]
    out = []
    for inv in wb.involutions:
        dim_p, sig_p, dim_m, counts_m = golden.INVOLUTIONS[inv.name]
        out += [
            Check(f"{inv.name}: grading violations", [], grading_violations(ctx, inv)),
            Check(f"{inv.name}: plus dimension", dim_p, inv.plus.dim),
            Check(f"{inv.name}: plus signature", sig_p, ctx.signature(inv.plus)),
            Check(f"{inv.name}: minus dimension", dim_m, inv.minus.dim),
            Check(f"{inv.name}: minus (rotations, boosts)", counts_m,
                  (ctx.intersect(inv.minus, s.plus).dim, ctx.intersect(inv.minus, s.minus).dim)),
        ]
    out.append(Check("atoms span the algebra", 78, direct_sum(list(wb.atoms.atoms.values())).dim))
    return out


_TH_PARTS = {"h1": (1, 1), "h23": (1, -1), "h⊥1": (-1, 1), "h⊥23": (-1, -1)}


def _th_part(wb: Workbench, name: str) -> Subspace:
    h, t = _TH_PARTS[name]
    return wb.ctx.intersect(wb.part("H", h), wb.part("t", t)).named(name)


def section_intersections(wb: Workbench) -> list[Check]:
    out = []
    for name, (dim, sig) in golden.INTERSECTIONS.items():
        S = _th_part(wb, name)
        out.append(Check(f"{name}: dimension", dim, S.dim))
        out.append(Check(f"{name}: signature", sig, wb.ctx.signature(S)))
    return out


def section_comm(wb: Workbench) -> list[Check]:
    names = list(_TH_PARTS)
    parts = [_th_part(wb, n) for n in names]
    table = comm_table(wb.ctx, parts)
    return [
        Check(f"[{a}, -]", golden.COMM_TH[i], [names[j] if j is not None else "0" for j in table[i]])
        for i, a in enumerate(names)
    ]


def _map(name: str) -> CartanMap:
    return CartanMap.of(*([] if name == "1" else list(name)))


def section_maximal(wb: Workbench) -> list[Check]:
    ctx = wb.ctx
    out = []
    for name, (image, fixed, pre) in golden.MAPS.items():
        m = _map(name)
        F, P = map_subalgebras(wb.atlas, m)
        fixed_name, pre_name = golden.MAP_NAMES[name]
        out += [
            Check(f"{name}: image signature", image, image_signature(m, wb.atoms)),
            Check(f"{name}: fixed subalgebra signature", fixed, ctx.signature(F)),
            Check(f"{name}: compact preimage signature", pre, ctx.signature(P)),
            Check(f"{name}: fixed subalgebra is {fixed_name}", True, F == wb.record(fixed_name).space),
            Check(f"{name}: compact preimage is {pre_name}", True, P == wb.record(pre_name).space),
        ]
    return out


def _split(wb: Workbench, first: str, second: str, names, table) -> list[Check]:
    out = []
    for (a, b), key in zip(((1, 1), (1, -1), (-1, 1), (-1, -1)), names):
        S = wb.ctx.intersect(wb.part(first, a), wb.part(second, b))
        out.append(Check(f"|{key}|", table[key], S.dim))
    return out


def section_subht(wb: Workbench) -> list[Check]:
    return _split(wb, "s", "H", ("rH", "r⊥", "bH", "b⊥"), golden.SPLIT_HS)


def section_subt(wb: Workbench) -> list[Check]:
    return _split(wb, "s", "t", ("r1", "r23", "b1", "b23"), golden.SPLIT_TS)


def section_subh(wb: Workbench) -> list[Check]:
    return [Check(f"|{name}|", dim, wb.atoms[name].dim) for name, dim in golden.ATOMS.items()]


def section_refine(wb: Workbench) -> list[Check]:
    ctx = wb.ctx
    out = []
    for name, atoms, sig, ideal_sigs in golden.CATALOG:
        S = wb.atlas.atom_span(atoms)
        rec = wb.atlas.records[name]
        out += [
            Check(f"{name}: closed", True, ctx.is_closed(S)),
            Check(f"{name}: dimension", sum(sig), S.dim),
            Check(f"{name}: signature", sig, ctx.signature(S)),
            Check(f"{name}: ideal signatures", sorted(ideal_sigs), sorted(i.signature for i in rec.ideals)),
            Check(f"{name}: type", golden.CATALOG_TYPES[name], rec.classification),
        ]
    counts: dict[int, int] = {}
    for _, atoms, _, _ in golden.CATALOG:
        counts[len(atoms)] = counts.get(len(atoms), 0) + 1
    out.append(Check("records by number of atoms", golden.ATOM_COUNTS, counts))
    out.append(Check("su(3,1,H)_1 and su(3,1,H)_2 differ", True,
                     wb.atlas.records["su(3,1,H)_1"].space != wb.atlas.records["su(3,1,H)_2"].space))
    return out


def _atom_table(wb: Workbench):
    keys = wb.atoms.keys()
    parts = [wb.atoms[k] for k in keys]
    return [wb.atoms.label(k) for k in keys], comm_table(wb.ctx, parts)


def section_fano(wb: Workbench) -> list[Check]:
    names, table = _atom_table(wb)
    out = [Check(f"[{a}, {a}]", golden.ATOM_SQUARE, names[table[n][n]]) for n, a in enumerate(names)]
    complete = all(j is not None for row in table for j in row)
    out.append(Check("every atom bracket is nonzero", True, complete))
    iso = table_isomorphism(table, unsigned_unit_table()) if complete else None
    out.append(Check("isomorphic to the unsigned octonion unit table", True, iso is not None))
    return out


def fano_grid(wb: Workbench) -> tuple[list[str], list[list[str]]]:
    names, table = _atom_table(wb)
    return names, [[names[j] if j is not None else "0" for j in row] for row in table]


def section_star(wb: Workbench) -> list[Check]:
    elems = group_elements()
    table = star_table(elems)
    n = len(elems)
    identity = elems.index(CartanMap.identity())
    return [
        Check("order of the generated group", 8, len(generated_group([CartanMap.of(g) for g in "stH"]))),
        Check("commutative", True, all(table[a][b] == table[b][a] for a in range(n) for b in range(n))),
        Check("every element squares to 1", True, all(table[a][a] == identity for a in range(n))),
        Check("closed", True, all(0 <= table[a][b] < n for a in range(n) for b in range(n))),
        Check("associative", True, all(star(star(a, b), c) == star(a, star(b, c)) for a in elems for b in elems for c in elems)),
    ]


def section_orbit(wb: Workbench) -> list[Check]:
    report = orbit_report(wb.ctx, wb.atoms)
    sigs = [e.image.signature for e in report]
    return [
        Check("image signatures", golden.ORBIT_SIGNATURES, sorted(sigs)),
        Check("distinct real forms", golden.REAL_FORMS_OF_E6, len(set(sigs))),
        Check("compact part dimensions", sorted(golden.ORBIT_COMPACT_DIMS), sorted(e.image.signature[0] for e in report)),
    ]


def section_classification(wb: Workbench) -> list[Check]:
    ctx, atlas = wb.ctx, wb.atlas
    h, t1 = wb.part("H", 1), wb.part("t", 1)
    ideals_h = atlas.ideals(h)
    ideals_t = atlas.ideals(t1)
    rH = ctx.intersect(wb.part("s", 1), h)
    c21 = [i for i in atlas.describe_ideals(rH) if i.dim == 21]
    return [
        Check("rank of sl(3,O)", golden.RANK_WHOLE, ctx.rank(ctx.whole)),
        Check("type of sl(3,O)", golden.WHOLE[3], atlas.records["sl(3,O)"].classification),
        Check("ideal dimensions of h", golden.IDEALS_H, sorted((i.space.dim for i in ideals_h), reverse=True)),
        Check("ideal dimensions of t1", golden.IDEALS_T1, sorted((i.space.dim for i in ideals_t), reverse=True)),
        Check("t1 has a 1-dim center", ["center"], [i.kind for i in ideals_t if i.space.dim == 1]),
        Check("21-dim compact ideal of r_H", ["c3"], [atlas._resolve(i)[0] for i in c21]),
    ]


def section_cartan(wb: Workbench) -> list[Check]:
    ctx = wb.ctx
    A = cartan_basis(ctx)
    seeds = exact.stack([ctx.coords_many([boost_gen(1, "z")]), z_boost_difference(ctx),
                         ctx.coords_many([rotation_gen(1, ("x", "l"))])])
    return [
        Check("dimension", golden.CARTAN["dimension"], A.dim),
        Check("abelian", True, ctx.is_abelian(A)),
        Check("self-centralizing", True, ctx.centralizer(A) == A),
        Check("contains the seeds", True, A.contains(seeds)),
        Check("signature", golden.CARTAN["signature"], ctx.signature(A)),
    ]


def section_edges(wb: Workbench) -> list[Check]:
    atlas = wb.atlas
    full = set(inclusion_edges(atlas, reduced=False))
    out = [Check(f"{a} -> {b}", True, (a, b) in full) for a, b in golden.REQUIRED_EDGES]
    out += [Check(f"no {a} -> {b}", False, (a, b) in full) for a, b in golden.FORBIDDEN_EDGES]
    out.append(Check("acyclic", True, _acyclic(full)))
    names = {r.name for r in atom_records(atlas)}
    out.append(Check("every table row is a node", True, names <= set(atlas.records)))
    return out


def _acyclic(edges) -> bool:
    graph: dict[str, list[str]] = {}
    for a, b in edges:
        graph.setdefault(a, []).append(b)
    state: dict[str, int] = {}

    def visit(n) -> bool:
        if state.get(n) == 1:
            return False
        if state.get(n) == 2:
            return True
        state[n] = 1
        ok = all(visit(m) for m in graph.get(n, []))
        state[n] = 2
        return ok

    return all(visit(n) for n in list(graph))


SECTIONS = {
    "basis": section_basis,
    "jacobi": section_jacobi,
    "determinant": section_determinant,
    "grading": section_grading,
    "intersections": section_intersections,
    "comm": section_comm,
    "maximal": section_maximal,
    "subht": section_subht,
    "subt": section_subt,
    "subh": section_subh,
    "refine": section_refine,
    "fano": section_fano,
    "star": section_star,
    "orbit": section_orbit,
    "classification": section_classification,
    "cartan": section_cartan,
    "edges": section_edges,
}

# sections that read catalog records
_NEEDS_CATALOG = {"maximal", "refine", "classification", "edges"}


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("E6WB_THREADS", "1")))
    except ValueError:
        return 1


def _guarded(name: str, wb: Workbench) -> list[Check]:
    try:
        return SECTIONS[name](wb)
    except Exception as exc:  # a broken context shows up as a failed section, not a crash
        return [Check("section completed", "ok", f"{type(exc).__name__}: {exc}")]


def run_sections(names=None, wb: Workbench | None = None, threads: int | None = None) -> dict[str, list[Check]]:
    """Run the named sections (all by default); results come back in registry order."""
    names = list(SECTIONS) if names is None else [n for n in SECTIONS if n in set(names)]
    wb = wb or Workbench()
    wb.ctx
    # shared state is built up front so worker threads only read it
    for attr, wanted in (("base", names), ("atlas", _NEEDS_CATALOG.intersection(names))):
        if wanted:
            try:
                getattr(wb, attr)
            except Exception:
                pass  # reported by each section that needs it
    threads = threads or worker_count()
    if threads > 1 and len(names) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda n: _guarded(n, wb), names))
    else:
        results = [_guarded(n, wb) for n in names]
    return dict(zip(names, results))


def failures(results: dict[str, list[Check]]) -> list[tuple[str, Check]]:
    return [(name, c) for name, checks in results.items() for c in checks if not c.passed]


def to_json(results: dict[str, list[Check]]) -> dict:
    return {"sections": {name: [c.as_dict() for c in checks] for name, checks in results.items()}}


def recheck(dump: dict) -> dict[str, list[str]]:
    """Pass/fail states recomputed from the expected/computed values stored in a dump."""
    return {
        name: ["pass" if row["expected"] == row["computed"] else "fail" for row in rows]
        for name, rows in dump["sections"].items()
    }
