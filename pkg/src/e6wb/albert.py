"""The Albert algebra H3(O) of 3x3 octonionic Hermitian matrices.

An element is stored by its three real diagonal entries and three
off-diagonal octonions ``x23 = X[1][2]``, ``x13 = X[0][2]``, ``x12 = X[0][1]``;
the lower triangle is the conjugate.  The global 27-coordinate order is
``(p1, p2, p3, x23[0..7], x13[0..7], x12[0..7])``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .octonion import INDEX, UNIT_TABLE, UNITS, Octonion, conj, norm_sq

DIM = 27

# off-diagonal slot -> (row, col) of the upper-triangle entry
OFF_DIAGONAL = {"x23": (1, 2), "x13": (0, 2), "x12": (0, 1)}
_OFFSET = {"x23": 3, "x13": 11, "x12": 19}


def coordinate_labels() -> list[str]:
    labels = ["p1", "p2", "p3"]
    for slot in ("x23", "x13", "x12"):
        labels.extend(f"{slot}:{u}" for u in UNITS)
    return labels


def coordinate_index(slot: str, unit: str | None = None) -> int:
    if slot in ("p1", "p2", "p3"):
        return int(slot[1]) - 1
    return _OFFSET[slot] + INDEX[unit]


@dataclass(frozen=True)
class AlbertElement:
    p1: Fraction
    p2: Fraction
    p3: Fraction
    x23: Octonion
    x13: Octonion
    x12: Octonion

    def __post_init__(self):
        for name in ("p1", "p2", "p3"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @classmethod
    def from_vector(cls, v: Sequence) -> "AlbertElement":
        if len(v) != DIM:
            raise ValueError("an Albert element has 27 coordinates")
        return cls(v[0], v[1], v[2], Octonion(tuple(v[3:11])), Octonion(tuple(v[11:19])), Octonion(tuple(v[19:27])))

    @classmethod
    def from_matrix(cls, M) -> "AlbertElement":
        """Read an element off a 3x3 octonion matrix, checking it is Hermitian."""
        for a in range(3):
            if any(M[a][a].coefficients[1:]):
                raise ValueError("diagonal entries of a Hermitian matrix are real")
            for b in range(a + 1, 3):
                if M[b][a] != conj(M[a][b]):
                    raise ValueError("matrix is not Hermitian")
        return cls(M[0][0].re, M[1][1].re, M[2][2].re, M[1][2], M[0][2], M[0][1])

    @classmethod
    def basis(cls, n: int) -> "AlbertElement":
        v = [0] * DIM
        v[n] = 1
        return cls.from_vector(v)

    @classmethod
    def diag(cls, p1, p2, p3) -> "AlbertElement":
        z = Octonion.zero()
        return cls(p1, p2, p3, z, z, z)

    @classmethod
    def identity(cls) -> "AlbertElement":
        return cls.diag(1, 1, 1)

    def vector(self) -> tuple[Fraction, ...]:
        return (self.p1, self.p2, self.p3) + self.x23.coefficients + self.x13.coefficients + self.x12.coefficients

    def matrix(self) -> list[list[Octonion]]:
        R = Octonion.real
        return [
            [R(self.p1), self.x12, self.x13],
            [conj(self.x12), R(self.p2), self.x23],
            [conj(self.x13), conj(self.x23), R(self.p3)],
        ]

    def __add__(self, other: "AlbertElement") -> "AlbertElement":
        return AlbertElement.from_vector([a + b for a, b in zip(self.vector(), other.vector())])

    def __sub__(self, other: "AlbertElement") -> "AlbertElement":
        return AlbertElement.from_vector([a - b for a, b in zip(self.vector(), other.vector())])

    def __mul__(self, s) -> "AlbertElement":
        return AlbertElement.from_vector([a * s for a in self.vector()])

    __rmul__ = __mul__

    def trace(self) -> Fraction:
        return self.p1 + self.p2 + self.p3


def matmul(A, B) -> list[list[Octonion]]:
    """Product of 3x3 octonion matrices (single products only, so no bracketing issue)."""
    out = []
    for a in range(3):
        r = []
        for c in range(3):
            acc = Octonion.zero()
            for b in range(3):
                acc = acc + A[a][b] * B[b][c]
            r.append(acc)
        out.append(r)
    return out


def jordan_product(X: AlbertElement, Y: AlbertElement) -> AlbertElement:
    MX, MY = X.matrix(), Y.matrix()
    P, Q = matmul(MX, MY), matmul(MY, MX)
    half = Fraction(1, 2)
    return AlbertElement.from_matrix([[(P[a][b] + Q[a][b]) * half for b in range(3)] for a in range(3)])


def trace_form(X: AlbertElement, Y: AlbertElement) -> Fraction:
    return jordan_product(X, Y).trace()


def trace_form_gram() -> list[Fraction]:
    """Diagonal of the trace-form Gram matrix in the coordinate basis (it is diagonal)."""
    return [Fraction(1)] * 3 + [Fraction(2)] * 24


def determinant(X: AlbertElement) -> Fraction:
    cubic = ((X.x12 * X.x23) * conj(X.x13)).re
    return (
        X.p1 * X.p2 * X.p3
        - X.p1 * norm_sq(X.x23)
        - X.p2 * norm_sq(X.x13)
        - X.p3 * norm_sq(X.x12)
        + 2 * cubic
    )


QUATERNION_UNITS = ("1", "k", "kl", "l")


def quaternionic_coordinates() -> list[int]:
    idx = [0, 1, 2]
    for slot in ("x23", "x13", "x12"):
        idx.extend(coordinate_index(slot, u) for u in QUATERNION_UNITS)
    return sorted(idx)


def quaternionic_subspace() -> list[AlbertElement]:
    """Coordinate basis of J_H, the matrices with every entry in <1, k, kl, l>."""
    return [AlbertElement.basis(n) for n in quaternionic_coordinates()]


def _oct_product(x, y) -> list[int]:
    out = [0] * 8
    for p in range(8):
        a = x[p]
        if a:
            row = UNIT_TABLE[p]
            for q in range(8):
                if y[q]:
                    s, r = row[q]
                    out[r] += s * a * y[q]
    return out


def integer_determinant(v: Sequence[int]) -> int:
    """:func:`determinant` of an integer coordinate vector, in plain integer arithmetic."""
    p1, p2, p3 = v[0], v[1], v[2]
    x23, x13, x12 = v[3:11], v[11:19], v[19:27]
    prod = _oct_product(x12, x23)
    # Re(w conj(z)) is the Euclidean inner product of coordinates
    cubic = sum(a * b for a, b in zip(prod, x13))
    n23, n13, n12 = (sum(c * c for c in x) for x in (x23, x13, x12))
    return p1 * p2 * p3 - p1 * n23 - p2 * n13 - p3 * n12 + 2 * cubic


def first_order_change(X: AlbertElement, Y: AlbertElement) -> Fraction:
    """Coefficient of ``e`` in ``det(X + e Y)``, exactly.

    ``det(X + eY)`` is a cubic in ``e``; the combination below cancels the
    constant, quadratic and cubic terms.  Coordinates are cleared of
    denominators first, since the determinant is homogeneous of degree 3.
    """
    xv, yv = X.vector(), Y.vector()
    d = math.lcm(*(c.denominator for c in xv + yv))
    xi = [int(c * d) for c in xv]
    yi = [int(c * d) for c in yv]

    def f(e):
        return integer_determinant([a + e * b for a, b in zip(xi, yi)])

    return Fraction(8 * (f(1) - f(-1)) - (f(2) - f(-2)), 12 * d**3)


def determinant_gradient(X: AlbertElement) -> list[Fraction]:
    """Coordinates ``g`` with ``first_order_change(X, Y) == sum(g[n] * Y[n])``."""
    return [first_order_change(X, AlbertElement.basis(n)) for n in range(DIM)]


def random_elements(count: int, seed: int = 0, height: int = 5) -> list[AlbertElement]:
    """Deterministic pseudo-random elements with small rational coordinates."""
    import random

    rng = random.Random(seed)
    out = []
    for _ in range(count):
        out.append(AlbertElement.from_vector([Fraction(rng.randint(-height, height), rng.randint(1, height)) for _ in range(DIM)]))
    return out
