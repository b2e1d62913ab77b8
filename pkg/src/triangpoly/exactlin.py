"""Exact linear algebra over the rationals.

Matrices are stored sparsely as ``{(row, col): Fraction}`` with no stored
zeros.  Every routine works with exact ``Fraction`` arithmetic, so ranks,
kernels and signatures are exact; there is no tolerance anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Vector = list  # list[Fraction]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


class SparseMatrix:
    """Immutable sparse matrix with exact rational entries."""

    __slots__ = ("rows", "cols", "_entries", "_hash")

    def __init__(self, rows: int, cols: int, entries=None):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        store = {}
        if entries:
            items = entries.items() if isinstance(entries, dict) else entries
            for (i, j), v in items:
                if not (0 <= i < rows and 0 <= j < cols):
                    raise IndexError(f"entry ({i}, {j}) outside {rows}x{cols} matrix")
                v = _frac(v)
                if v:
                    store[(i, j)] = store.get((i, j), 0) + v
                    if not store[(i, j)]:
                        del store[(i, j)]
        self.rows = rows
        self.cols = cols
        self._entries = store
        self._hash = None

    # construction helpers
    @classmethod
    def zeros(cls, rows: int, cols: int) -> "SparseMatrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, size: int) -> "SparseMatrix":
        return cls(size, size, {(i, i): 1 for i in range(size)})

    @classmethod
    def from_dense(cls, data: Sequence[Sequence], cols: int | None = None) -> "SparseMatrix":
        rows = len(data)
        if cols is None:
            cols = len(data[0]) if rows else 0
        ent = {}
        for i, row in enumerate(data):
            if len(row) != cols:
                raise ValueError("ragged dense matrix")
            for j, v in enumerate(row):
                if v:
                    ent[(i, j)] = v
        return cls(rows, cols, ent)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "SparseMatrix":
        ent = {}
        for j, col in enumerate(columns):
            if len(col) != rows:
                raise ValueError("column length does not match row count")
            for i, v in enumerate(col):
                if v:
                    ent[(i, j)] = v
        return cls(rows, len(columns), ent)

    # access
    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def entries(self) -> dict:
        return dict(self._entries)

    def nnz(self) -> int:
        return len(self._entries)

    def __getitem__(self, key) -> Fraction:
        return self._entries.get(key, Fraction(0))

    def to_dense(self) -> list[list[Fraction]]:
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (i, j), v in self._entries.items():
            out[i][j] = v
        return out

    def column(self, j: int) -> list[Fraction]:
        col = [Fraction(0)] * self.rows
        for (i, jj), v in self._entries.items():
            if jj == j:
                col[i] = v
        return col

    def columns(self) -> list[list[Fraction]]:
        cols = [[Fraction(0)] * self.rows for _ in range(self.cols)]
        for (i, j), v in self._entries.items():
            cols[j][i] = v
        return cols

    def select_columns(self, idx: Sequence[int]) -> "SparseMatrix":
        pos = {j: k for k, j in enumerate(idx)}
        ent = {(i, pos[j]): v for (i, j), v in self._entries.items() if j in pos}
        return SparseMatrix(self.rows, len(idx), ent)

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.cols, self.rows, {(j, i): v for (i, j), v in self._entries.items()})

    T = property(transpose)

    def __matmul__(self, other):
        if isinstance(other, SparseMatrix):
            if self.cols != other.rows:
                raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
            by_row = {}
            for (k, j), v in other._entries.items():
                by_row.setdefault(k, []).append((j, v))
            acc = {}
            for (i, k), a in self._entries.items():
                for j, b in by_row.get(k, ()):
                    acc[(i, j)] = acc.get((i, j), 0) + a * b
            return SparseMatrix(self.rows, other.cols, acc)
        vec = list(other)
        if len(vec) != self.cols:
            raise ValueError("vector length does not match column count")
        out = [Fraction(0)] * self.rows
        for (i, j), v in self._entries.items():
            if vec[j]:
                out[i] += v * vec[j]
        return out

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        acc = dict(self._entries)
        for k, v in other._entries.items():
            acc[k] = acc.get(k, 0) + v
        return SparseMatrix(self.rows, self.cols, acc)

    def __neg__(self) -> "SparseMatrix":
        return SparseMatrix(self.rows, self.cols, {k: -v for k, v in self._entries.items()})

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self + (-other)

    def scale(self, c) -> "SparseMatrix":
        c = _frac(c)
        return SparseMatrix(self.rows, self.cols, {k: c * v for k, v in self._entries.items()})

    def is_zero(self) -> bool:
        return not self._entries

    def is_symmetric(self) -> bool:
        if self.rows != self.cols:
            return False
        return all(self._entries.get((j, i), 0) == v for (i, j), v in self._entries.items())

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self._entries == other._entries

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, frozenset(self._entries.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"SparseMatrix({self.rows}x{self.cols}, nnz={len(self._entries)})"


def _as_rows(m) -> list[list[Fraction]]:
    if isinstance(m, SparseMatrix):
        return m.to_dense()
    return [[_frac(x) for x in row] for row in m]


def _rref(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form in place; returns (rows, pivot columns)."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        if piv != 1:
            rows[r] = [x / piv for x in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return rows, pivots


def rref(m) -> tuple[list[list[Fraction]], list[int]]:
    """Return the reduced row echelon form (nonzero rows only) and pivot columns."""
    rows = _as_rows(m)
    ncols = m.cols if isinstance(m, SparseMatrix) else (len(rows[0]) if rows else 0)
    rows, piv = _rref(rows, ncols)
    return rows[: len(piv)], piv


def rank(m) -> int:
    """Dimension of the column space."""
    if isinstance(m, SparseMatrix):
        if m.is_zero():
            return 0
        # eliminate along the shorter side
        rows = m.to_dense() if m.rows <= m.cols else m.transpose().to_dense()
        return len(_rref(rows, len(rows[0]) if rows else 0)[1])
    rows = _as_rows(m)
    return len(_rref(rows, len(rows[0]) if rows else 0)[1])


def kernel_basis(m) -> list[list[Fraction]]:
    """Exact basis of the null space, one vector per free column."""
    if isinstance(m, SparseMatrix):
        ncols = m.cols
    else:
        ncols = len(m[0]) if len(m) else 0
    rows, piv = rref(m)
    pivset = set(piv)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, p in enumerate(piv):
            v[p] = -rows[r][f]
        basis.append(v)
    return basis


def image_basis(m) -> list[list[Fraction]]:
    """Basis of the column space, chosen among the original columns."""
    if isinstance(m, SparseMatrix):
        cols = m.columns()
        _, piv = rref(m)
    else:
        dense = _as_rows(m)
        cols = [list(c) for c in zip(*dense)] if dense else []
        _, piv = rref(dense)
    return [cols[p] for p in piv]


def solve(m, b: Sequence) -> list[Fraction] | None:
    """Return one exact solution of ``m x = b`` or ``None`` when inconsistent."""
    rows = _as_rows(m)
    ncols = m.cols if isinstance(m, SparseMatrix) else (len(rows[0]) if rows else 0)
    b = [_frac(x) for x in b]
    if len(b) != len(rows):
        raise ValueError("right-hand side length does not match row count")
    aug = [row + [bi] for row, bi in zip(rows, b)]
    aug, piv = _rref(aug, ncols + 1)
    if ncols in piv:
        return None
    x = [Fraction(0)] * ncols
    for r, p in enumerate(piv):
        x[p] = aug[r][ncols]
    return x


def span_rank(vectors: Iterable[Sequence]) -> int:
    vecs = [[_frac(x) for x in v] for v in vectors]
    if not vecs:
        return 0
    return len(_rref(vecs, len(vecs[0]))[1])


def canonical_span(vectors: Iterable[Sequence], dim: int) -> tuple:
    """Hashable canonical form (RREF rows) of the span of ``vectors`` in Q^dim."""
    vecs = [[_frac(x) for x in v] for v in vectors]
    if not vecs:
        return ()
    rows, piv = _rref(vecs, dim)
    return tuple(tuple(r) for r in rows[: len(piv)])


def extend_basis(base: Sequence[Sequence], candidates: Sequence[Sequence]) -> list[list[Fraction]]:
    """Greedily pick candidates that are independent modulo ``base``."""
    chosen = []
    current = [list(map(_frac, v)) for v in base]
    r = span_rank(current) if current else 0
    for c in candidates:
        trial = current + [list(map(_frac, c))]
        if span_rank(trial) > r:
            current = trial
            r += 1
            chosen.append(list(map(_frac, c)))
    return chosen


def primitive_integer(v: Sequence) -> list[int]:
    """Scale a rational vector to a primitive integer vector (first nonzero positive)."""
    v = [_frac(x) for x in v]
    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return ints
    lead = next(x for x in ints if x)
    if lead < 0:
        g = -g
    return [x // g for x in ints]


def congruence_signature(s) -> tuple[int, int, int]:
    """Inertia ``(positive, negative, zero)`` of a symmetric rational matrix.

    Diagonalizes by simultaneous row/column operations.  A zero pivot with a
    nonzero off-diagonal partner ``(i, j)`` is repaired by adding row/column
    ``j`` to ``i`` (or subtracting, if that cancels), which turns the
    hyperbolic pair into a nonzero diagonal entry.
    """
    a = _as_rows(s)
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("congruence_signature requires a square matrix")
    for i in range(n):
        for j in range(i + 1, n):
            if a[i][j] != a[j][i]:
                raise ValueError("congruence_signature requires a symmetric matrix")
    pos = neg = zero = 0
    k = 0
    while k < n:
        if a[k][k] == 0:
            j = next((j for j in range(k + 1, n) if a[k][j]), None)
            if j is None:
                zero += 1
                k += 1
                continue
            # (e_k + t e_j) has self-pairing 2 t a_kj + t^2 a_jj; t=1 or t=-1 is nonzero
            t = 1 if 2 * a[k][j] + a[j][j] != 0 else -1
            for c in range(n):
                a[k][c] += t * a[j][c]
            for r in range(n):
                a[r][k] += t * a[r][j]
        piv = a[k][k]
        for r in range(k + 1, n):
            f = a[r][k] / piv
            if f:
                for c in range(n):
                    a[r][c] -= f * a[k][c]
                for c in range(n):
                    a[c][r] -= f * a[c][k]
        if piv > 0:
            pos += 1
        else:
            neg += 1
        k += 1
    return pos, neg, zero


def gram(vectors: Sequence[Sequence], form: SparseMatrix) -> list[list[Fraction]]:
    """Gram matrix ``[u^T Q w]`` of a list of vectors under a bilinear form."""
    qv = [form @ list(map(_frac, w)) for w in vectors]
    return [[sum((x * y for x, y in zip(u, qw)), Fraction(0)) for qw in qv] for u in vectors]
