"""Exact octonions and their derivation algebra g2.

The algebra is built by Cayley-Dickson doubling of the quaternions
``<1, i, j, k>`` with doubling unit ``l``::

    (a + b l)(c + d l) = (a c - conj(d) b) + (d a + b conj(c)) l

Coefficients are stored over the fixed basis order
``(1, i, j, k, kl, jl, il, l)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import exact

UNITS = ("1", "i", "j", "k", "kl", "jl", "il", "l")
IMAGINARY = UNITS[1:]
INDEX = {u: n for n, u in enumerate(UNITS)}

# basis slot -> (quaternion half, quaternion component); half 0 is ``a``, 1 is ``b`` in a + b l
_CD_SLOT = {0: (0, 0), 1: (0, 1), 2: (0, 2), 3: (0, 3), 4: (1, 3), 5: (1, 2), 6: (1, 1), 7: (1, 0)}
_SLOT_OF = {v: k for k, v in _CD_SLOT.items()}


def _qmul(a, b):
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return (
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


def _qconj(a):
    return (a[0], -a[1], -a[2], -a[3])


def _split(c):
    a = [0, 0, 0, 0]
    b = [0, 0, 0, 0]
    for slot, v in enumerate(c):
        half, comp = _CD_SLOT[slot]
        (a if half == 0 else b)[comp] = v
    return tuple(a), tuple(b)


def _join(a, b):
    out = [0] * 8
    for comp in range(4):
        out[_SLOT_OF[(0, comp)]] = a[comp]
        out[_SLOT_OF[(1, comp)]] = b[comp]
    return out


def cayley_dickson_product(x: Sequence, y: Sequence) -> list:
    """Product of two coefficient 8-tuples straight from the doubling formula."""
    a, b = _split(x)
    c, d = _split(y)
    lhs = tuple(p - q for p, q in zip(_qmul(a, c), _qmul(_qconj(d), b)))
    rhs = tuple(p + q for p, q in zip(_qmul(d, a), _qmul(b, _qconj(c))))
    return _join(lhs, rhs)


def _unit_table():
    table = []
    for p in range(8):
        row = []
        for q in range(8):
            ep = [0] * 8
            eq = [0] * 8
            ep[p] = 1
            eq[q] = 1
            prod = cayley_dickson_product(ep, eq)
            (r,) = [n for n, v in enumerate(prod) if v != 0]
            row.append((prod[r], r))
        table.append(tuple(row))
    return tuple(table)


#: ``UNIT_TABLE[p][q] == (sign, r)`` meaning ``e_p e_q = sign * e_r``.
UNIT_TABLE = _unit_table()


@dataclass(frozen=True)
class Octonion:
    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        c = tuple(Fraction(v) for v in self.coefficients)
        if len(c) != 8:
            raise ValueError("an octonion has 8 coefficients")
        object.__setattr__(self, "coefficients", c)

    @classmethod
    def unit(cls, name: str | int, scale=1) -> "Octonion":
        n = INDEX[name] if isinstance(name, str) else name
        c = [0] * 8
        c[n] = scale
        return cls(tuple(c))

    @classmethod
    def zero(cls) -> "Octonion":
        return cls((0,) * 8)

    @classmethod
    def real(cls, v) -> "Octonion":
        return cls((v,) + (0,) * 7)

    def __getitem__(self, n: int) -> Fraction:
        return self.coefficients[n]

    def __iter__(self):
        return iter(self.coefficients)

    def __add__(self, other: "Octonion") -> "Octonion":
        return Octonion(tuple(a + b for a, b in zip(self, other)))

    def __sub__(self, other: "Octonion") -> "Octonion":
        return Octonion(tuple(a - b for a, b in zip(self, other)))

    def __neg__(self) -> "Octonion":
        return Octonion(tuple(-a for a in self))

    def __mul__(self, other):
        if isinstance(other, Octonion):
            return multiply(self, other)
        return Octonion(tuple(a * other for a in self))

    def __rmul__(self, other):
        return Octonion(tuple(other * a for a in self))

    def conj(self) -> "Octonion":
        return conj(self)

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    @property
    def re(self) -> Fraction:
        return self.coefficients[0]

    def __repr__(self):
        terms = [f"{v}*{u}" for v, u in zip(self.coefficients, UNITS) if v]
        return "Octonion(" + (" + ".join(terms) or "0") + ")"


def multiply(x: Octonion, y: Octonion) -> Octonion:
    out = [Fraction(0)] * 8
    xc, yc = x.coefficients, y.coefficients
    for p in range(8):
        a = xc[p]
        if not a:
            continue
        row = UNIT_TABLE[p]
        for q in range(8):
            b = yc[q]
            if b:
                s, r = row[q]
                out[r] += s * a * b
    return Octonion(tuple(out))


def conj(x: Octonion) -> Octonion:
    c = x.coefficients
    return Octonion((c[0],) + tuple(-v for v in c[1:]))


def norm_sq(x: Octonion) -> Fraction:
    return sum((v * v for v in x.coefficients), Fraction(0))


def associator(x: Octonion, y: Octonion, z: Octonion) -> Octonion:
    return (x * y) * z - x * (y * z)


def associative_triples() -> list[tuple[str, str, str]]:
    """The seven quaternionic triples ``(a, b, c)`` of imaginary units with ``ab = +c``."""
    seen = set()
    out = []
    for p in range(1, 8):
        for q in range(p + 1, 8):
            s, r = UNIT_TABLE[p][q]
            key = frozenset((p, q, r))
            if key in seen:
                continue
            seen.add(key)
            # orient the triple cyclically so that the product is positive
            a, b, c = (p, q, r) if s > 0 else (q, p, r)
            out.append((UNITS[a], UNITS[b], UNITS[c]))
    return out


class OctonionMap:
    """A rational linear map on octonion coefficient vectors (8x8, column = image of a unit)."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        rows = tuple(tuple(Fraction(v) for v in r) for r in entries)
        if len(rows) != 8 or any(len(r) != 8 for r in rows):
            raise ValueError("an octonion map is 8x8")
        self.entries = rows

    def __call__(self, x: Octonion) -> Octonion:
        c = x.coefficients
        return Octonion(tuple(sum((r[q] * c[q] for q in range(8)), Fraction(0)) for r in self.entries))

    def __matmul__(self, other: "OctonionMap") -> "OctonionMap":
        A, B = self.entries, other.entries
        return OctonionMap(
            [[sum((A[i][k] * B[k][j] for k in range(8)), Fraction(0)) for j in range(8)] for i in range(8)]
        )

    def __sub__(self, other: "OctonionMap") -> "OctonionMap":
        return OctonionMap([[a - b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def __add__(self, other: "OctonionMap") -> "OctonionMap":
        return OctonionMap([[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def scaled(self, s) -> "OctonionMap":
        return OctonionMap([[a * s for a in r] for r in self.entries])

    def transpose(self) -> "OctonionMap":
        return OctonionMap(list(zip(*self.entries)))

    def flat(self) -> list[Fraction]:
        return [v for r in self.entries for v in r]

    def is_zero(self) -> bool:
        return not any(v for r in self.entries for v in r)

    def __eq__(self, other):
        return isinstance(other, OctonionMap) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"OctonionMap({[list(map(str, r)) for r in self.entries]})"


def bracket(a: OctonionMap, b: OctonionMap) -> OctonionMap:
    return a @ b - b @ a


def is_derivation(D: OctonionMap) -> bool:
    units = [Octonion.unit(n) for n in range(8)]
    for x in units:
        for y in units:
            if D(x * y) != D(x) * y + x * D(y):
                return False
    return True


def _leibniz_system() -> exact.fmpq_mat:
    # unknown D[m][n] sits at column 8*m + n; one equation per (p, q, output slot)
    rows = []
    for p in range(8):
        for q in range(8):
            s, r = UNIT_TABLE[p][q]
            eqs = [[0] * 64 for _ in range(8)]
            # D(e_p e_q) = s * D e_r  -> coefficient of e_m is s * D[m][r]
            for m in range(8):
                eqs[m][8 * m + r] += s
            # D(e_p) e_q = sum_m D[m][p] e_m e_q
            for m in range(8):
                s2, r2 = UNIT_TABLE[m][q]
                eqs[r2][8 * m + p] -= s2
            # e_p D(e_q) = sum_m D[m][q] e_p e_m
            for m in range(8):
                s3, r3 = UNIT_TABLE[p][m]
                eqs[r3][8 * m + q] -= s3
            rows.extend(eqs)
    return exact.matrix(rows)


def _maps_from_rows(M: exact.fmpq_mat) -> list[OctonionMap]:
    out = []
    for r in exact.rows_of(M):
        ints = exact.primitive(r)
        out.append(OctonionMap([ints[8 * m:8 * m + 8] for m in range(8)]))
    return out


_DER_CACHE: list[OctonionMap] | None = None


def derivation_space() -> list[OctonionMap]:
    """Exact basis of der(O), the solution space of the Leibniz rule on unit pairs."""
    global _DER_CACHE
    if _DER_CACHE is None:
        _DER_CACHE = _maps_from_rows(exact.nullspace(_leibniz_system()))
    return list(_DER_CACHE)


def span_closes(elements: Iterable[Octonion]) -> bool:
    elems = list(elements)
    if not elems:
        return True
    base = exact.matrix([list(e.coefficients) for e in elems])
    r = exact.rank(base)
    prods = [list((a * b).coefficients) for a in elems for b in elems]
    return exact.rank(exact.stack([base, exact.matrix(prods)])) == r


def derivations_vanishing_on(H: Sequence[Octonion]) -> list[OctonionMap]:
    """Basis of the derivations killing every element of the subalgebra spanned by ``H``."""
    H = list(H)
    if not span_closes(H):
        raise ValueError("the given elements do not span a subalgebra of O")
    ders = derivation_space()
    # columns: coefficient of each basis derivation; rows: components of D(h)
    rows = []
    for h in H:
        images = [D(h).coefficients for D in ders]
        for m in range(8):
            rows.append([img[m] for img in images])
    coeffs = exact.nullspace(exact.matrix(rows, ncols=len(ders)))
    out = []
    for c in exact.rows_of(coeffs):
        ints = exact.primitive(c)
        acc = OctonionMap([[0] * 8 for _ in range(8)])
        for w, D in zip(ints, ders):
            if w:
                acc = acc + D.scaled(w)
        out.append(acc)
    return out
