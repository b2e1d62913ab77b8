"""Rank-function matroids, simplicial matroids, their Tutte polynomials and duals."""

from __future__ import annotations

from typing import Callable

import numpy as np

from .complexes import ChainComplex
from .exactlin import SparseMatrix, rank
from .poly import MultiPoly
from .statesum import DEFAULT_CAP_BITS, check_cap, enumerate_states, popcounts

MATROID_EQ_MAX = 24


class RankMatroid:
    """Matroid on ground set ``0..size-1`` given by a rank oracle on bitmasks.

    Ranks are memoized.  ``table`` optionally supplies a rank for every mask
    at once (a numpy array indexed by mask) for exhaustive comparisons.
    """

    def __init__(self, size: int, rank_fn: Callable[[int], int], *,
                 table_fn: Callable[[], np.ndarray] | None = None):
        self.size = size
        self._rank_fn = rank_fn
        self._memo: dict = {}
        self._table_fn = table_fn
        self._table = None

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    def rank(self, mask: int) -> int:
        r = self._memo.get(mask)
        if r is None:
            r = self._memo[mask] = self._rank_fn(mask)
        return r

    def full_rank(self) -> int:
        return self.rank(self.full_mask)

    def is_independent(self, mask: int) -> bool:
        return self.rank(mask) == bin(mask).count("1")

    def rank_table(self) -> np.ndarray:
        """Ranks of all ``2^size`` subsets, indexed by mask."""
        if self._table is None:
            if self._table_fn is not None:
                self._table = np.asarray(self._table_fn(), dtype=np.int64)
            else:
                self._table = np.array([self.rank(m) for m in range(1 << self.size)], dtype=np.int64)
        return self._table


def simplicial_matroid(c: ChainComplex, n: int) -> RankMatroid:
    """Matroid of the columns of ``D_n``: ``r(A) = rank D_n[:, A]``."""
    if n < 1 or n > c.top:
        raise ValueError(f"need 1 <= n <= {c.top}")
    d = c.boundary(n)
    return column_matroid(d)


def column_matroid(d: SparseMatrix) -> RankMatroid:
    m = d.cols

    def rank_fn(mask):
        return rank(d.select_columns([j for j in range(m) if mask >> j & 1]))

    def table_fn():
        return enumerate_states(d, cap_bits=None, per_mask=True).ranks

    return RankMatroid(m, rank_fn, table_fn=table_fn)


def free_matroid(k: int) -> RankMatroid:
    return RankMatroid(k, lambda mask: bin(mask).count("1"))


def zero_matroid(k: int) -> RankMatroid:
    return RankMatroid(k, lambda mask: 0)


def matroid_tutte(m: RankMatroid, *, cap_bits: int | None = DEFAULT_CAP_BITS) -> MultiPoly:
    """``sum_A X^(r(E)-r(A)) Y^(|A|-r(A))`` by querying the rank oracle on every subset."""
    check_cap(m.size, cap_bits)
    rE = m.full_rank()
    terms: dict = {}
    for mask in range(1 << m.size):
        r = m.rank(mask)
        e = (rE - r, bin(mask).count("1") - r)
        terms[e] = terms.get(e, 0) + 1
    return MultiPoly(("X", "Y"), terms)


def dual_matroid(m: RankMatroid) -> RankMatroid:
    """Dual with ``r*(A) = |A| - r(E) + r(E \\ A)``."""
    full = m.full_mask

    def rank_fn(mask):
        return bin(mask).count("1") - m.full_rank() + m.rank(full ^ mask)

    def table_fn():
        t = m.rank_table()
        idx = np.arange(1 << m.size)
        return popcounts(m.size).astype(np.int64) - t[full] + t[full ^ idx]

    return RankMatroid(m.size, rank_fn, table_fn=table_fn)


def matroids_equal(a: RankMatroid, b: RankMatroid) -> bool:
    """True iff the rank functions agree on every subset of the shared ground set."""
    if a.size != b.size:
        return False
    if a.size > MATROID_EQ_MAX:
        raise ValueError(f"exhaustive comparison limited to {MATROID_EQ_MAX} elements")
    return bool(np.array_equal(a.rank_table(), b.rank_table()))


def first_rank_mismatch(a: RankMatroid, b: RankMatroid) -> int | None:
    diff = np.nonzero(a.rank_table() != b.rank_table())[0]
    return int(diff[0]) if len(diff) else None


def check_rank_axioms(m: RankMatroid, pairs) -> list:
    """Return the subset pairs violating boundedness, monotonicity or submodularity."""
    bad = []
    if m.rank(0) != 0:
        bad.append((0, 0))
    for a, b in pairs:
        ra, rb = m.rank(a), m.rank(b)
        if ra > bin(a).count("1") or rb > bin(b).count("1"):
            bad.append((a, b))
        elif m.rank(a | b) + m.rank(a & b) > ra + rb:
            bad.append((a, b))
        elif (a & b) == a and ra > rb:
            bad.append((a, b))
    return bad
