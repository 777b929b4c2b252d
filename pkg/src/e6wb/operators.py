"""sl(3,O) as explicit 27x27 rational operators on the Albert algebra.

Block generators come from differentiating ``X -> M X M^dagger`` with ``M``
supported in one of the three 2x2 blocks:

* type 1 uses rows/columns (1, 2), type 2 uses (2, 3), type 3 uses (3, 1);
* boosts are ``X -> A X + X A`` with Hermitian ``A``;
* rotations are ``X -> A X - X A`` with anti-Hermitian ``A``.

Every block matrix carries a factor 1/2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import exact
from .albert import DIM, AlbertElement, trace_form_gram
from .octonion import IMAGINARY, Octonion, OctonionMap, derivation_space, is_derivation

BLOCKS = {1: (0, 1), 2: (1, 2), 3: (2, 0)}
DIRECTIONS = ("z", "x") + IMAGINARY
ROTATION_PAIRS = (("x", "z"),) + tuple(("x", q) for q in IMAGINARY) + tuple(("z", q) for q in IMAGINARY)

HALF = Fraction(1, 2)


class ConventionError(RuntimeError):
    """The assembled generators do not span a 78-dimensional algebra."""


@dataclass(frozen=True)
class GeneratorLabel:
    kind: str  # "boost" | "rotation" | "derivation" | "bracket"
    type_index: int | None = None
    direction: str | None = None
    pair: tuple[str, str] | None = None
    index: int | None = None  # derivation number, or position of a synthesized bracket
    parts: tuple["GeneratorLabel", "GeneratorLabel"] | None = None

    @property
    def name(self) -> str:
        if self.kind == "boost":
            return f"B{self.type_index}_t{self.direction}"
        if self.kind == "rotation":
            return f"R{self.type_index}_{self.pair[0]}{self.pair[1]}"
        if self.kind == "derivation":
            return f"D{self.index}"
        a, b = self.parts
        return f"[{a.name},{b.name}]"

    def __str__(self):
        return self.name


class Operator:
    """A rational linear endomorphism of the 27 Albert coordinates (column n = image of e_n)."""

    __slots__ = ("mat",)

    def __init__(self, mat: exact.fmpq_mat):
        if mat.nrows() != DIM or mat.ncols() != DIM:
            raise ValueError("operators are 27x27")
        self.mat = mat

    @classmethod
    def from_action(cls, f: Callable[[AlbertElement], AlbertElement]) -> "Operator":
        cols = [f(AlbertElement.basis(n)).vector() for n in range(DIM)]
        return cls(exact.matrix([[cols[n][m] for n in range(DIM)] for m in range(DIM)]))

    @classmethod
    def from_flat(cls, flat) -> "Operator":
        return cls(exact.fmpq_mat(DIM, DIM, [exact.to_fmpq(v) for v in flat]))

    @classmethod
    def zero(cls) -> "Operator":
        return cls(exact.zeros(DIM, DIM))

    def __call__(self, X: AlbertElement) -> AlbertElement:
        v = exact.fmpq_mat(DIM, 1, [exact.to_fmpq(c) for c in X.vector()])
        w = self.mat * v
        return AlbertElement.from_vector([exact.to_fraction(c) for c in w.entries()])

    def __add__(self, other: "Operator") -> "Operator":
        return Operator(self.mat + other.mat)

    def __sub__(self, other: "Operator") -> "Operator":
        return Operator(self.mat - other.mat)

    def __neg__(self) -> "Operator":
        return Operator(-self.mat)

    def __mul__(self, s) -> "Operator":
        return Operator(self.mat * exact.to_fmpq(s))

    __rmul__ = __mul__

    def __matmul__(self, other: "Operator") -> "Operator":
        return Operator(self.mat * other.mat)

    def __eq__(self, other):
        return isinstance(other, Operator) and self.mat == other.mat

    def __hash__(self):
        return hash(tuple(self.mat.entries()))

    def flat(self) -> list:
        return self.mat.entries()

    def is_zero(self) -> bool:
        return exact.is_zero(self.mat)

    def trace(self):
        return sum((self.mat[i, i] for i in range(DIM)), exact.fmpq(0))

    def adjoint(self) -> "Operator":
        """Adjoint with respect to the trace form ``<X, Y> = tr(X o Y)``."""
        g = trace_form_gram()
        out = exact.fmpq_mat(DIM, DIM)
        for i in range(DIM):
            for j in range(DIM):
                v = self.mat[j, i]
                if v != 0:
                    out[i, j] = v * exact.to_fmpq(g[j] / g[i])
        return Operator(out)

    def is_symmetric(self) -> bool:
        return self.adjoint() == self

    def is_antisymmetric(self) -> bool:
        return self.adjoint() == -self


def bracket(a: Operator, b: Operator) -> Operator:
    return Operator(a.mat * b.mat - b.mat * a.mat)


def _block_matrix(t: int, sigma) -> list[list[Octonion]]:
    if t not in BLOCKS:
        raise ValueError(f"type index must be 1, 2 or 3, got {t!r}")
    a, b = BLOCKS[t]
    A = [[Octonion.zero() for _ in range(3)] for _ in range(3)]
    A[a][a], A[a][b] = sigma[0][0] * HALF, sigma[0][1] * HALF
    A[b][a], A[b][b] = sigma[1][0] * HALF, sigma[1][1] * HALF
    return A


def _sparse(A) -> list[tuple[int, int, list[tuple[int, Fraction]]]]:
    out = []
    for r in range(3):
        for c in range(3):
            terms = [(n, v) for n, v in enumerate(A[r][c].coefficients) if v]
            if terms:
                out.append((r, c, terms))
    return out


def _basis_entries(n: int) -> dict[tuple[int, int], list[tuple[int, Fraction]]]:
    """Nonzero entries of the n-th coordinate basis matrix as sparse octonions."""
    one = Fraction(1)
    if n < 3:
        return {(n, n): [(0, one)]}
    slot, unit = divmod(n - 3, 8)
    r, c = ((1, 2), (0, 2), (0, 1))[slot]
    return {(r, c): [(unit, one)], (c, r): [(unit, one if unit == 0 else -one)]}


def _action(A, sign: int) -> Operator:
    from .octonion import UNIT_TABLE

    sparse_a = _sparse(A)
    cols = []
    for n in range(DIM):
        X = _basis_entries(n)
        acc = [[[Fraction(0)] * 8 for _ in range(3)] for _ in range(3)]
        for r, m, a_terms in sparse_a:
            for (xr, xc), x_terms in X.items():
                # (A X)[r][xc] gets A[r][m] X[m][xc]
                if xr == m:
                    out = acc[r][xc]
                    for p, a in a_terms:
                        for q, x in x_terms:
                            s, k = UNIT_TABLE[p][q]
                            out[k] += s * a * x
                # (X A)[xr][m] gets X[xr][r] A[r][m]
                if xc == r:
                    out = acc[xr][m]
                    for p, a in a_terms:
                        for q, x in x_terms:
                            s, k = UNIT_TABLE[q][p]
                            out[k] += sign * s * x * a
        M = [[Octonion(tuple(acc[r][c])) for c in range(3)] for r in range(3)]
        cols.append(AlbertElement.from_matrix(M).vector())
    return Operator(exact.matrix([[cols[n][m] for n in range(DIM)] for m in range(DIM)]))


def _unit(q: str) -> Octonion:
    return Octonion.unit(q)


def boost_gen(t: int, d: str) -> Operator:
    """Generator of a boost in the ``t``-``d`` plane of the type-``t`` block."""
    one, zero = Octonion.real(1), Octonion.zero()
    if d == "z":
        sigma = [[one, zero], [zero, -one]]
    elif d == "x":
        sigma = [[zero, one], [one, zero]]
    elif d in IMAGINARY:
        q = _unit(d)
        sigma = [[zero, q], [-q, zero]]
    else:
        raise ValueError(f"invalid boost direction {d!r}")
    return _action(_block_matrix(t, sigma), +1)


def rotation_gen(t: int, pair: tuple[str, str]) -> Operator:
    """Generator of the rotation in the plane ``pair`` of the type-``t`` block.

    ``(x, q)`` uses ``diag(q, -q)`` and ``(z, q)`` uses ``[[0, q], [q, 0]]``:
    those are the matrices whose action turns the named coordinates into each other.
    """
    one, zero = Octonion.real(1), Octonion.zero()
    pair = tuple(pair)
    if pair == ("x", "z"):
        sigma = [[zero, one], [-one, zero]]
    elif len(pair) == 2 and pair[1] in IMAGINARY and pair[0] == "x":
        q = _unit(pair[1])
        sigma = [[q, zero], [zero, -q]]
    elif len(pair) == 2 and pair[1] in IMAGINARY and pair[0] == "z":
        q = _unit(pair[1])
        sigma = [[zero, q], [q, zero]]
    else:
        raise ValueError(f"invalid rotation plane {pair!r}")
    return _action(_block_matrix(t, sigma), -1)


def derivation_lift(D: OctonionMap) -> Operator:
    """Apply a derivation of O entrywise to the off-diagonal octonions."""
    if not is_derivation(D):
        raise ValueError("not a derivation of O")

    def f(X: AlbertElement) -> AlbertElement:
        z = Fraction(0)
        return AlbertElement(z, z, z, D(X.x23), D(X.x13), D(X.x12))

    return Operator.from_action(f)


def spanning_set() -> list[tuple[GeneratorLabel, Operator]]:
    """All candidate generators, in the order used for basis extraction."""
    out: list[tuple[GeneratorLabel, Operator]] = []
    for t in (1, 2, 3):
        for d in DIRECTIONS:
            out.append((GeneratorLabel("boost", t, direction=d), boost_gen(t, d)))
    for t in (1, 2, 3):
        for pair in ROTATION_PAIRS:
            out.append((GeneratorLabel("rotation", t, pair=pair), rotation_gen(t, pair)))
    for n, D in enumerate(derivation_space()):
        out.append((GeneratorLabel("derivation", index=n), derivation_lift(D)))
    simple = {lab.pair: op for lab, op in out if lab.kind == "rotation" and lab.type_index == 1}
    labels = {lab.pair: lab for lab, op in out if lab.kind == "rotation" and lab.type_index == 1}
    n = 0
    for a, q in enumerate(IMAGINARY):
        for r in IMAGINARY[a + 1:]:
            pa, pb = ("x", q), ("x", r)
            lab = GeneratorLabel("bracket", index=n, parts=(labels[pa], labels[pb]))
            out.append((lab, bracket(simple[pa], simple[pb])))
            n += 1
    return out


def full_basis() -> list[tuple[GeneratorLabel, Operator]]:
    """Greedy independent selection of 78 generators from :func:`spanning_set`."""
    candidates = spanning_set()
    # pivot columns of the column-stacked candidates are exactly the greedy picks
    cols = exact.fmpq_mat(len(candidates), DIM * DIM, [v for _, op in candidates for v in op.flat()])
    _, pivots = exact.rref(cols.transpose())
    chosen = [candidates[k] for k in pivots]
    if len(chosen) != 78:
        raise ConventionError(f"generators span {len(chosen)} dimensions, expected 78")
    return chosen


def determinant_defects(basis, points: int = 50, seed: int = 0) -> list[str]:
    """Names of operators that change the determinant to first order at some test point.

    The change along ``T`` at ``X`` is ``grad det(X) . T X``, so one exact
    gradient per point serves every operator.
    """
    from .albert import determinant_gradient, random_elements

    xs = random_elements(points, seed)
    G = exact.matrix([determinant_gradient(X) for X in xs])
    P = exact.matrix([list(X.vector()) for X in xs]).transpose()
    bad = []
    for label, op in basis:
        D = G * op.mat * P
        if any(D[n, n] for n in range(points)):
            bad.append(label.name)
    return bad
