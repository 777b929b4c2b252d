"""Exact Lie algebra computations over the 78-dimensional operator context.

Vectors are rows of rational coordinates in the basis returned by
:func:`e6wb.operators.full_basis`.  A :class:`Subspace` keeps a reduced row
echelon basis, so membership and coordinates reduce to reading pivot columns.
"""

from __future__ import annotations

import math
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

import flint

from . import exact
from .exact import fmpq, fmpq_mat
from .operators import DIM as ALBERT_DIM
from .operators import GeneratorLabel, Operator, bracket, full_basis

N = 78


class NotInAlgebra(ValueError):
    pass


class DegenerateRestriction(ValueError):
    pass


class NonReductive(ValueError):
    pass


class Subspace:
    """A linear subspace of coordinate space, stored as an RREF basis."""

    __slots__ = ("basis", "pivots", "name", "__dict__")

    def __init__(self, rows: fmpq_mat, name: str | None = None):
        self.basis, self.pivots = exact.rref(rows)
        self.name = name

    @classmethod
    def from_vectors(cls, vectors: Iterable[Sequence], ncols: int = N, name: str | None = None) -> "Subspace":
        return cls(exact.matrix(list(vectors), ncols=ncols), name)

    @classmethod
    def zero(cls, ncols: int = N) -> "Subspace":
        return cls(fmpq_mat(0, ncols))

    @classmethod
    def whole(cls, ncols: int = N) -> "Subspace":
        return cls(exact.identity(ncols), "whole")

    @property
    def dim(self) -> int:
        return self.basis.nrows()

    @property
    def ambient(self) -> int:
        return self.basis.ncols()

    def __len__(self):
        return self.dim

    def named(self, name: str) -> "Subspace":
        out = Subspace.__new__(Subspace)
        out.basis, out.pivots, out.name = self.basis, self.pivots, name
        return out

    def coordinates(self, M: fmpq_mat) -> fmpq_mat:
        """Coordinates of the rows of ``M`` in this RREF basis; raises if a row is outside."""
        if self.dim == 0:
            if not exact.is_zero(M):
                raise NotInAlgebra("nonzero vector in the zero subspace")
            return fmpq_mat(M.nrows(), 0)
        C = exact.take_cols(M, self.pivots)
        if C * self.basis != M:
            raise NotInAlgebra("vector not in subspace")
        return C

    def contains(self, M: fmpq_mat) -> bool:
        if M.nrows() == 0:
            return True
        if self.dim == 0:
            return exact.is_zero(M)
        return exact.take_cols(M, self.pivots) * self.basis == M

    def __contains__(self, vec) -> bool:
        if not isinstance(vec, fmpq_mat):
            vec = exact.matrix([list(vec)], ncols=self.ambient)
        return self.contains(vec)

    def __le__(self, other: "Subspace") -> bool:
        return other.contains(self.basis)

    def __eq__(self, other) -> bool:
        return isinstance(other, Subspace) and self.basis == other.basis

    def __hash__(self):
        h = self.__dict__.get("_hash")
        if h is None:
            h = self.__dict__["_hash"] = hash(tuple(self.basis.entries()))
        return h

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace(exact.stack([self.basis, other.basis]))

    def __repr__(self):
        tag = f" {self.name!r}" if self.name else ""
        return f"<Subspace{tag} dim={self.dim}>"


def span(vectors: fmpq_mat, name: str | None = None) -> Subspace:
    return Subspace(vectors, name)


def direct_sum(parts: Sequence[Subspace], name: str | None = None) -> Subspace:
    return Subspace(exact.stack([p.basis for p in parts], ncols=N), name)


class Ideal(NamedTuple):
    space: Subspace
    kind: str  # "simple" or "center"
    field_degree: int  # 1 for real type, 2 when the ideal is a complex Lie algebra viewed as real


_PRIMES: list[int] = [2]


def _first_primes(count: int, skip: int = 0) -> list[int]:
    n = _PRIMES[-1]
    while len(_PRIMES) < count + skip:
        n += 1
        if all(n % p for p in _PRIMES if p * p <= n):
            _PRIMES.append(n)
    return _PRIMES[skip:skip + count]


def inertia(G: Sequence[Sequence]) -> tuple[int, int, int]:
    """(negative, positive, zero) counts of a symmetric rational matrix by exact congruence."""
    A = [[exact.to_fmpq(v) for v in r] for r in G]
    n = len(A)
    neg = pos = 0
    active = list(range(n))
    while active:
        piv = next((i for i in active if A[i][i] != 0), None)
        if piv is None:
            hit = next(((i, j) for i in active for j in active if i < j and A[i][j] != 0), None)
            if hit is None:
                break
            i, j = hit
            # row/col i += row/col j turns the zero diagonal into 2*A[i][j]
            for k in range(n):
                A[i][k] += A[j][k]
            for k in range(n):
                A[k][i] += A[k][j]
            piv = i
        d = A[piv][piv]
        if d < 0:
            neg += 1
        else:
            pos += 1
        active.remove(piv)
        col = [A[k][piv] for k in range(n)]
        for a in active:
            ca = col[a]
            if ca == 0:
                continue
            f = ca / d
            Ra = A[a]
            for b in active:
                cb = col[b]
                if cb != 0:
                    Ra[b] -= f * cb
    return neg, pos, len(active)


class StructureContext:
    """The 78 basis operators with structure constants and Killing form."""

    def __init__(self, basis: Sequence[tuple[GeneratorLabel, Operator]] | None = None):
        basis = list(full_basis() if basis is None else basis)
        if len(basis) != N:
            raise ValueError("a structure context needs exactly 78 operators")
        self.labels = [lab for lab, _ in basis]
        self.operators = [op for _, op in basis]
        flat = exact.fmpq_mat(N, ALBERT_DIM * ALBERT_DIM, [v for op in self.operators for v in op.flat()])
        self._flat = flat
        _, self._pivots = exact.rref(flat)
        if len(self._pivots) != N:
            raise ValueError("basis operators are not independent")
        self._pinv = exact.take_cols(flat, self._pivots).inv()
        self._self_cache: dict[Subspace, fmpq_mat] = {}
        self._build_structure()

    # -- coordinates -------------------------------------------------------------------------
    def coords_many(self, ops: Sequence[Operator]) -> fmpq_mat:
        V = exact.fmpq_mat(len(ops), ALBERT_DIM * ALBERT_DIM, [v for op in ops for v in op.flat()])
        return self._coords_flat(V)

    def _coords_flat(self, V: fmpq_mat) -> fmpq_mat:
        C = exact.take_cols(V, self._pivots) * self._pinv
        if C * self._flat != V:
            raise NotInAlgebra("operator is outside the span of the basis")
        return C

    def coords(self, op: Operator) -> list[fmpq]:
        return self.coords_many([op]).entries()

    def operator(self, vec) -> Operator:
        if not isinstance(vec, fmpq_mat):
            vec = exact.matrix([list(vec)], ncols=N)
        return Operator.from_flat((vec * self._flat).entries())

    def members(self, S: Subspace) -> list[Operator]:
        F = S.basis * self._flat
        return [Operator.from_flat(r) for r in exact.rows_of(F)]

    def index(self, name: str) -> int:
        for n, lab in enumerate(self.labels):
            if lab.name == name:
                return n
        raise KeyError(name)

    def unit(self, n: int) -> fmpq_mat:
        v = fmpq_mat(1, N)
        v[0, n] = 1
        return v

    # -- structure constants -----------------------------------------------------------------
    def _build_structure(self):
        ops = self.operators
        pairs = [(i, j) for i in range(N) for j in range(i + 1, N)]
        flat: list = []
        for i, j in pairs:
            flat.extend(bracket(ops[i], ops[j]).flat())
        V = exact.fmpq_mat(len(pairs), ALBERT_DIM * ALBERT_DIM, flat)
        C = self._coords_flat(V)
        rows = exact.rows_of(C)
        zero = fmpq(0)
        # c[i][j] is the coordinate vector of [e_i, e_j]
        c = [[[zero] * N for _ in range(N)] for _ in range(N)]
        for (i, j), r in zip(pairs, rows):
            c[i][j] = r
            c[j][i] = [-v for v in r]
        self.structure_constants = c
        self._index_constants()

    def _index_constants(self):
        c = self.structure_constants
        cflat = []
        cflat_t = []
        for i in range(N):
            # ad_i[k][j] = c[i][j][k]
            cflat.extend(c[i][j][k] for k in range(N) for j in range(N))
            cflat_t.extend(c[i][k][j] for k in range(N) for j in range(N))
        self._cflat = fmpq_mat(N, N * N, cflat)
        # one common positive factor keeps ad linear in the integer copy
        scale = math.lcm(*(int(v.q) for v in cflat))
        self._scale = scale
        self._cflat_int = flint.fmpz_mat(N, N * N, [int(v * scale) for v in cflat])
        import numpy as np

        self._cflat_float = np.array([int(v) for v in self._cflat_int.entries()], dtype=np.float64).reshape(N, N * N)
        self._cflat_max = int(np.abs(self._cflat_float).max())
        cflat_t_mat = fmpq_mat(N, N * N, cflat_t)
        self.killing_gram = self._cflat * cflat_t_mat.transpose()
        self._self_cache.clear()

    def inject_fault(self, i: int, j: int, k: int, delta=1) -> None:
        """Test hook: shift ``c_ij^k`` (and ``c_ji^k`` to match) by ``delta``."""
        c = self.structure_constants
        c[i][j] = list(c[i][j])
        c[j][i] = list(c[j][i])
        c[i][j][k] += delta
        c[j][i][k] -= delta
        self._index_constants()

    # -- identities --------------------------------------------------------------------------
    def _ad_tensor(self):
        """Integer array ``A[i, k, j] = scale * c_ij^k`` and the scale."""
        import numpy as np

        A = np.array([int(v) for v in self._cflat_int.entries()], dtype=np.int64)
        return A.reshape(N, N, N), self._scale

    def antisymmetry_defects(self) -> list[tuple[int, int]]:
        c = self.structure_constants
        return [(i, j) for i in range(N) for j in range(i, N) if any(x + y for x, y in zip(c[i][j], c[j][i]))]

    def jacobi_defects(self) -> list[tuple[int, int]]:
        """Pairs ``(i, j)`` with ``ad [e_i, e_j] != [ad e_i, ad e_j]``.

        The identity for every pair is the Jacobi identity for every basis triple.
        The products run in float64 for speed; they stay exact because every
        entry is an integer and each sum is bounded by ``N * max|A|**2 < 2**52``.
        """
        import numpy as np

        A, _ = self._ad_tensor()
        if 2 * int(np.abs(A).max()) ** 2 * N >= 2**52:
            raise OverflowError("structure constants too large for an exact float check")
        A = A.astype(np.float64)
        T = A.transpose(0, 2, 1)  # T[i, j, k] = scale * c_ij^k
        flat = A.reshape(N, N * N)
        bad = []
        for i in range(N):
            lhs = (T[i] @ flat).reshape(N, N, N)  # scale**2 * ad [e_i, e_j]
            rhs = np.matmul(A[i], A) - np.matmul(A, A[i])
            for j in np.nonzero((lhs != rhs).any(axis=(1, 2)))[0]:
                bad.append((i, int(j)))
        return bad

    def killing_invariance_defects(self) -> list[int]:
        """Indices ``i`` with ``ad e_i`` not skew for the Killing form."""
        bad = []
        G = self.killing_gram
        for i in range(N):
            ad = self.ad_basis(i)
            # B([x, y], z) + B(y, [x, z]) = 0  <=>  ad^T G + G ad = 0
            M = ad.transpose() * G
            if M + M.transpose() != fmpq_mat(N, N):
                bad.append(i)
        return bad

    def ad_matrix(self, vec: fmpq_mat) -> fmpq_mat:
        """78x78 matrix of ``ad x`` for a single coordinate row ``x``."""
        return fmpq_mat(N, N, (vec * self._cflat).entries())

    def ad_basis(self, n: int) -> fmpq_mat:
        return self.ad_matrix(self.unit(n))

    def brackets(self, A: fmpq_mat, B: fmpq_mat) -> fmpq_mat:
        """Rows ``[a_i, b_l]`` for every row pair, ordered ``i * len(B) + l``."""
        a, b = A.nrows(), B.nrows()
        if a == 0 or b == 0:
            return fmpq_mat(0, N)
        # rows (l, k) of ad_{b_l}; row i of the product holds [b_l, a_i] for every l
        stacked = fmpq_mat(b * N, N, (B * self._cflat).entries())
        P = A * stacked.transpose()
        return -fmpq_mat(a * b, N, P.entries())

    def span_brackets(self, A: fmpq_mat, B: fmpq_mat) -> fmpq_mat:
        """Like :meth:`brackets` but each row only up to a positive factor.

        Rows of ``A`` and ``B`` are rescaled to integers first, which keeps the
        products in integer arithmetic; use it wherever only spans or kernels matter.
        """
        a, b = A.nrows(), B.nrows()
        if a == 0 or b == 0:
            return fmpq_mat(0, N)
        Ai, _ = exact.integer_rows(A)
        Bi, _ = exact.integer_rows(B)
        fast = self._float_brackets(Ai, Bi)
        if fast is not None:
            return fast
        stacked = flint.fmpz_mat(b * N, N, (Bi * self._cflat_int).entries())
        P = Ai * stacked.transpose()
        return fmpq_mat(flint.fmpz_mat(a * b, N, (-P).entries()))

    def _float_brackets(self, Ai, Bi) -> fmpq_mat | None:
        """The integer product of :meth:`span_brackets` through BLAS.

        Exact whenever every partial sum stays below 2**53, which the bound
        checks; otherwise ``None`` and the caller falls back to flint.
        """
        import numpy as np

        a, b = Ai.nrows(), Bi.nrows()
        A = np.array([int(v) for v in Ai.entries()], dtype=object).reshape(a, N)
        B = np.array([int(v) for v in Bi.entries()], dtype=object).reshape(b, N)
        C = self._cflat_float
        bound = int(np.abs(A).sum(axis=1).max()) * int(np.abs(B).sum(axis=1).max()) * self._cflat_max
        if bound >= 2**53:
            return None
        X = (B.astype(np.float64) @ C).reshape(b * N, N)  # rows (l, k): scale * ad_{b_l}[k]
        P = -(A.astype(np.float64) @ X.T)  # [a_i, b_l]_k at (i, l * N + k)
        return fmpq_mat(flint.fmpz_mat(P.reshape(a * b, N).astype(np.int64).tolist()))

    def self_brackets(self, S: Subspace) -> fmpq_mat:
        """:meth:`span_brackets` of ``S`` with itself, cached per subspace."""
        P = self._self_cache.get(S)
        if P is None:
            P = self.span_brackets(S.basis, S.basis)
            if len(self._self_cache) > 256:
                self._self_cache.clear()
            self._self_cache[S] = P
        return P

    def bracket(self, x: fmpq_mat, y: fmpq_mat) -> fmpq_mat:
        return self.brackets(x, y)

    # -- Killing form ---------------------------------------------------------------------------
    def killing(self, x, y) -> fmpq:
        if not isinstance(x, fmpq_mat):
            x = exact.matrix([list(x)], ncols=N)
        if not isinstance(y, fmpq_mat):
            y = exact.matrix([list(y)], ncols=N)
        return (x * self.killing_gram * y.transpose())[0, 0]

    def gram(self, S: Subspace, T: Subspace | None = None) -> fmpq_mat:
        T = S if T is None else T
        return S.basis * self.killing_gram * T.basis.transpose()

    def signature(self, S: Subspace) -> tuple[int, int]:
        """(compact, noncompact) = (negative, positive) counts of the Killing form on ``S``."""
        neg, pos, zero = inertia(exact.rows_of(self.gram(S)))
        if zero:
            raise DegenerateRestriction(f"Killing form is degenerate on {S!r} ({zero} null directions)")
        return neg, pos

    # -- subspace constructions ----------------------------------------------------------------
    @cached_property
    def whole(self) -> Subspace:
        return Subspace.whole(N)

    def span_of(self, names: Iterable[str], name: str | None = None) -> Subspace:
        return Subspace(exact.stack([self.unit(self.index(n)) for n in names], ncols=N), name)

    def is_closed(self, S: Subspace) -> bool:
        return S.contains(self.self_brackets(S))

    def closure(self, seed: Subspace, name: str | None = None) -> Subspace:
        S = seed
        new = S.basis
        while True:
            if new.nrows() == 0:
                break
            grown = Subspace(exact.stack([S.basis, self.span_brackets(new, S.basis)]))
            if grown.dim == S.dim:
                break
            # only directions that are new need to be bracketed again
            new = Subspace(grown.basis).basis
            S = grown
        return S.named(name) if name else S

    def centralizer(self, S: Subspace, within: Subspace | None = None, name: str | None = None) -> Subspace:
        W = self.whole if within is None else within
        if S.dim == 0 or W.dim == 0:
            return W.named(name) if name else W
        # scale rows of W to integers; the solution then combines the scaled rows
        Wi = fmpq_mat(exact.integer_rows(W.basis)[0])
        # row m * s + l is [w_m, s_l], s_l up to scale
        P = self.self_brackets(S) if W == S else self.span_brackets(Wi, S.basis)
        M = fmpq_mat(W.dim, S.dim * N, P.entries())
        coeffs = exact.left_nullspace(M)
        return Subspace(coeffs * Wi if coeffs.nrows() else fmpq_mat(0, N), name)

    def orthogonal_complement(self, S: Subspace, within: Subspace | None = None, name: str | None = None) -> Subspace:
        W = self.whole if within is None else within
        if S.dim:
            neg, pos, zero = inertia(exact.rows_of(self.gram(S)))
            if zero:
                raise DegenerateRestriction(f"Killing form is degenerate on {S!r}")
        M = W.basis * self.killing_gram * S.basis.transpose()
        coeffs = exact.left_nullspace(M) if S.dim else exact.identity(W.dim)
        out = Subspace(coeffs * W.basis if coeffs.nrows() else fmpq_mat(0, N), name)
        return out

    def intersect(self, A: Subspace, B: Subspace, name: str | None = None) -> Subspace:
        if A.dim == 0 or B.dim == 0:
            return Subspace(fmpq_mat(0, N), name)
        M = exact.stack([A.basis, B.basis])
        coeffs = exact.left_nullspace(M)
        if coeffs.nrows() == 0:
            return Subspace(fmpq_mat(0, N), name)
        a = exact.take_cols(coeffs, range(A.dim))
        return Subspace(a * A.basis, name)

    def derived(self, S: Subspace) -> Subspace:
        return Subspace(self.self_brackets(S)) if S.dim else S

    def is_abelian(self, S: Subspace) -> bool:
        return exact.is_zero(self.self_brackets(S))

    # -- rank ----------------------------------------------------------------------------------
    def generic_element(self, S: Subspace, attempt: int = 0) -> fmpq_mat:
        weights = _first_primes(S.dim, skip=attempt * S.dim)
        return exact.matrix([weights]) * S.basis

    def rank(self, S: Subspace, retries: int = 8) -> int:
        if S.dim == 0:
            return 0
        for attempt in range(retries):
            g = Subspace(self.generic_element(S, attempt))
            C = self.centralizer(g, S)
            if self.is_abelian(C):
                return C.dim
        raise NonReductive(f"no regular element found in {S!r}")

    # -- ideals --------------------------------------------------------------------------------
    def ideal_decomposition(self, S: Subspace, retries: int = 8) -> list[Ideal]:
        Z = self.centralizer(S, S)
        D = self.derived(S)
        if Z.dim + D.dim != S.dim or self.intersect(Z, D).dim:
            raise NonReductive(f"{S!r} is not the direct sum of its center and derived algebra")
        out: list[Ideal] = []
        if D.dim:
            if inertia(exact.rows_of(self.gram(D)))[2]:
                raise NonReductive(f"Killing form is degenerate on the derived algebra of {S!r}")
            out.extend(self._simple_ideals(D, retries))
        if Z.dim:
            out.append(Ideal(Z, "center", 1))
        return out

    def _local_ad(self, D: Subspace) -> tuple[fmpq_mat, list[fmpq_mat]]:
        """An integer basis of ``D`` and the adjoint matrices of its members in that basis.

        The matrices share one positive factor, which does not matter for the centroid.
        """
        n = D.dim
        Di, scales = exact.integer_rows(D.basis)
        Dq = fmpq_mat(Di)
        C = exact.take_cols(self.self_brackets(D), D.pivots)  # RREF coordinates
        inv = [1 / a for a in scales]
        e = C.entries()
        mats = []
        for i in range(n):
            # column j of ad_i holds the coordinates of [d_i, d_j] in the integer basis
            mats.append(fmpq_mat(n, n, [e[(i * n + j) * n + k] * inv[k] for k in range(n) for j in range(n)]))
        return Dq, mats

    def _simple_ideals(self, D: Subspace, retries: int) -> list[Ideal]:
        n = D.dim
        basis, ad = self._local_ad(D)

        AD = fmpq_mat(n, n * n, [v for A in ad for v in A.entries()])

        def combo(weights) -> fmpq_mat:
            return fmpq_mat(n, n, (exact.matrix([list(weights)], ncols=n) * AD).entries())

        for attempt in range(retries):
            weights = _first_primes(n, skip=attempt * n)
            centroid = self._centroid(ad, combo, weights)
            if centroid is None:
                continue
            parts = self._split_by_centroid(centroid, n, weights)
            if parts is None:
                continue
            ideals = []
            for vecs, degree in parts:
                ideals.append(Ideal(Subspace(vecs * basis), "simple", degree))
            ideals.sort(key=lambda I: (-I.space.dim, I.space.basis.entries()))
            return ideals
        raise NonReductive("could not split the derived algebra into simple ideals")

    def _centroid(self, ad, combo, weights) -> list[fmpq_mat] | None:
        """Basis of the maps commuting with every ``ad``; ``None`` if the test element is not regular.

        A centroid element is determined by its restriction ``psi`` to the
        Cartan subalgebra ``H = ker ad x`` through ``phi(ad_x a) = ad_{psi x} a``,
        so only ``dim(H)**2`` unknowns remain.
        """
        n = len(ad)
        X = combo(weights)
        H = exact.nullspace(X)
        r = H.nrows()
        img_rows, _ = exact.rref(X.transpose())
        if r == 0 or r + img_rows.nrows() != n:
            return None
        Q = exact.stack([H, img_rows]).transpose()  # columns: kernel basis, then image basis
        if exact.rank(Q) != n:
            return None
        had = [combo(exact.row(H, a)) for a in range(r)]
        if any(not exact.is_zero(A * H.transpose()) for A in had):
            return None
        # x in the kernel basis
        sol = exact.left_nullspace(exact.stack([H, -exact.matrix([weights])]))
        if sol.nrows() != 1 or sol[0, r] == 0:
            return None
        xi = [sol[0, c] / sol[0, r] for c in range(r)]
        PRE = _solve_right(X, img_rows.transpose())  # n x m preimages
        if PRE is None:
            return None
        Qinv = Q.inv()
        hcols = [exact.matrix([exact.row(H, a)]).transpose() for a in range(r)]
        K = [had[a] * PRE for a in range(r)]
        # Phi_ab M = h_a (Qinv M)[b] + xi_b K_a (Qinv M)[r:], so commutation with a test
        # element T can be imposed on a handful of vectors V without forming Phi_ab
        V = exact.matrix([_first_primes(4, skip=3 * n + i) for i in range(n)])
        rows = []
        for k in range(2):
            T = combo(_first_primes(n, skip=(5 + k) * n))
            Y, Z = Qinv * (T * V), Qinv * V
            Ylo, Zlo = exact.take_rows(Y, range(r, n)), exact.take_rows(Z, range(r, n))
            blocks = []
            for a in range(r):
                KY, TKZ, Th = K[a] * Ylo, T * (K[a] * Zlo), T * hcols[a]
                for b in range(r):
                    D = hcols[a] * exact.take_rows(Y, [b]) - Th * exact.take_rows(Z, [b])
                    if xi[b] != 0:
                        D += (KY - TKZ) * xi[b]
                    blocks.append(D.entries())
            rows.extend([blk[e] for blk in blocks] for e in range(len(blocks[0])))
        lam = exact.nullspace(exact.matrix(rows, ncols=r * r))
        Ht = H.transpose()
        basis = []
        for lrow in exact.rows_of(lam):
            # column b on the kernel part: sum_a w_ab h_a; image part: sum_a (sum_b w_ab xi_b) K_a
            W = fmpq_mat(r, r, lrow)
            c = [sum((W[a, b] * xi[b] for b in range(r)), fmpq(0)) for a in range(r)]
            right = fmpq_mat(n, n - r)
            for a in range(r):
                if c[a] != 0:
                    right += K[a] * c[a]
            cols = exact.stack([(Ht * W).transpose(), right.transpose()]).transpose()
            basis.append(cols * Qinv)
        if any(P * A != A * P for P in basis for A in ad):
            return None
        return basis

    def _split_by_centroid(self, centroid, n, weights):
        if len(centroid) == 1:
            return [(exact.identity(n), 1)]
        gamma = fmpq_mat(n, n)
        for w, P in zip(_first_primes(len(centroid), skip=len(weights)), centroid):
            gamma += P * w
        _, factors = gamma.minpoly().factor()
        parts = []
        for f, mult in factors:
            if mult != 1:
                return None
            K = exact.nullspace(_poly_at(f, gamma))
            deg = f.degree()
            # on a simple ideal the centroid is a field of degree ``deg``
            restricted = exact.matrix([(K * P.transpose()).entries() for P in centroid])
            if exact.rank(restricted) != deg:
                return None
            parts.append((K, deg))
        if sum(K.nrows() for K, _ in parts) != n:
            return None
        return parts


def _poly_at(f, M: fmpq_mat) -> fmpq_mat:
    coeffs = f.coeffs()
    n = M.nrows()
    acc = fmpq_mat(n, n)
    for c in reversed(coeffs):
        acc = acc * M
        if c != 0:
            acc += exact.identity(n) * c
    return acc


def _solve_right(A: fmpq_mat, Y: fmpq_mat) -> fmpq_mat | None:
    """Some ``X`` with ``A X = Y``, all columns at once, or ``None``."""
    n, m = A.ncols(), Y.ncols()
    aug = exact.stack([A.transpose(), Y.transpose()]).transpose()
    R, piv = exact.rref(aug)
    if any(p >= n for p in piv):
        return None
    X = fmpq_mat(n, m)
    for i, p in enumerate(piv):
        for c in range(m):
            X[p, c] = R[i, n + c]
    return X
