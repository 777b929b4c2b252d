"""Exact rational matrix helpers on top of ``flint.fmpq_mat``.

Everything here works on row-major rational matrices.  Subspaces are kept as
reduced row echelon bases so that coordinates can be read off pivot columns.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

import flint

fmpq = flint.fmpq
fmpq_mat = flint.fmpq_mat

__all__ = [
    "fmpq",
    "fmpq_mat",
    "to_fmpq",
    "to_fraction",
    "matrix",
    "zeros",
    "identity",
    "rows_of",
    "row",
    "stack",
    "take_cols",
    "take_rows",
    "rref",
    "row_basis",
    "nullspace",
    "left_nullspace",
    "rank",
    "is_zero",
    "primitive",
]


def to_fmpq(x) -> fmpq:
    if isinstance(x, fmpq):
        return x
    if isinstance(x, Fraction):
        return fmpq(x.numerator, x.denominator)
    if isinstance(x, int):
        return fmpq(x)
    raise TypeError(f"not an exact rational: {x!r}")


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    return Fraction(int(x.p), int(x.q))


def matrix(rows: Sequence[Sequence], ncols: int | None = None) -> fmpq_mat:
    """Build an ``fmpq_mat`` from nested sequences of ints/Fractions/fmpq."""
    rows = list(rows)
    if not rows:
        return fmpq_mat(0, ncols or 0)
    n = len(rows[0]) if ncols is None else ncols
    flat = []
    for r in rows:
        if len(r) != n:
            raise ValueError("ragged rows")
        flat.extend(to_fmpq(v) for v in r)
    return fmpq_mat(len(rows), n, flat)


def zeros(m: int, n: int) -> fmpq_mat:
    return fmpq_mat(m, n)


def identity(n: int) -> fmpq_mat:
    M = fmpq_mat(n, n)
    for i in range(n):
        M[i, i] = 1
    return M


def rows_of(M: fmpq_mat) -> list[list[fmpq]]:
    n = M.ncols()
    e = M.entries()
    return [e[i * n:(i + 1) * n] for i in range(M.nrows())]


def row(M: fmpq_mat, i: int) -> list[fmpq]:
    n = M.ncols()
    return [M[i, j] for j in range(n)]


def stack(mats: Iterable[fmpq_mat], ncols: int | None = None) -> fmpq_mat:
    mats = [m for m in mats]
    if not mats:
        return fmpq_mat(0, ncols or 0)
    n = mats[0].ncols()
    flat: list = []
    m = 0
    for A in mats:
        if A.ncols() != n:
            raise ValueError("column mismatch in stack")
        flat.extend(A.entries())
        m += A.nrows()
    return fmpq_mat(m, n, flat)


def take_cols(M: fmpq_mat, cols: Sequence[int]) -> fmpq_mat:
    n = M.ncols()
    e = M.entries()
    flat = [e[i * n + c] for i in range(M.nrows()) for c in cols]
    return fmpq_mat(M.nrows(), len(cols), flat)


def take_rows(M: fmpq_mat, idx: Sequence[int]) -> fmpq_mat:
    n = M.ncols()
    e = M.entries()
    flat = []
    for i in idx:
        flat.extend(e[i * n:(i + 1) * n])
    return fmpq_mat(len(idx), n, flat)


def rref(M: fmpq_mat) -> tuple[fmpq_mat, list[int]]:
    """Reduced row echelon form with zero rows dropped, plus pivot columns."""
    if M.nrows() == 0:
        return fmpq_mat(0, M.ncols()), []
    R, r = M.rref()
    n = M.ncols()
    e = R.entries()
    pivots = []
    for i in range(r):
        base = i * n
        start = pivots[-1] + 1 if pivots else 0
        for j in range(start, n):
            if e[base + j] != 0:
                pivots.append(j)
                break
    return fmpq_mat(r, n, e[: r * n]), pivots


def row_basis(M: fmpq_mat) -> fmpq_mat:
    return rref(M)[0]


def nullspace(M: fmpq_mat) -> fmpq_mat:
    """Rows spanning ``{x : M x = 0}``, in the canonical free-variable basis."""
    n = M.ncols()
    R, pivots = rref(M)
    free = [j for j in range(n) if j not in set(pivots)]
    e = R.entries()
    out = fmpq_mat(len(free), n)
    for k, f in enumerate(free):
        out[k, f] = 1
        for i, p in enumerate(pivots):
            v = e[i * n + f]
            if v != 0:
                out[k, p] = -v
    return out


def left_nullspace(M: fmpq_mat) -> fmpq_mat:
    """Rows ``y`` with ``y M = 0``."""
    return nullspace(M.transpose())


def rank(M: fmpq_mat) -> int:
    if M.nrows() == 0 or M.ncols() == 0:
        return 0
    return M.rank()


def is_zero(M: fmpq_mat) -> bool:
    return all(v == 0 for v in M.entries())


def primitive(vec: Sequence) -> list[int]:
    """Scale a rational vector to coprime integers with a positive leading entry."""
    from math import gcd, lcm

    fr = [to_fraction(v) for v in vec]
    den = 1
    for f in fr:
        den = lcm(den, f.denominator)
    ints = [int(f * den) for f in fr]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g == 0:
        return ints
    ints = [v // g for v in ints]
    lead = next(v for v in ints if v != 0)
    if lead < 0:
        ints = [-v for v in ints]
    return ints


def integer_rows(M: fmpq_mat) -> tuple[flint.fmpz_mat, list]:
    """Rows of ``M`` rescaled to coprime integers, with the positive factor used for each row."""
    from math import gcd, lcm

    n = M.ncols()
    e = M.entries()
    out = []
    scales = []
    for i in range(M.nrows()):
        r = e[i * n:(i + 1) * n]
        den = lcm(*(int(v.q) for v in r)) if r else 1
        ints = [int(v.p) * (den // int(v.q)) for v in r]
        g = 0
        for v in ints:
            g = gcd(g, v)
        g = g or 1
        out.extend(v // g for v in ints)
        scales.append(flint.fmpq(den, g))
    return flint.fmpz_mat(M.nrows(), n, out), scales
