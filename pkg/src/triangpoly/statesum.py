"""Enumeration of spanning selectors with incremental exact elimination.

Every invariant in this package is a state sum over the ``2^m`` subsets of
the n-cells.  For each subset ``A`` we need

* ``rank``: the rank of the boundary columns ``D_n[:, A]``;
* ``V``: the image under a class map ``Psi`` of the cycle space ``ker D_n[:, A]``.

Both are obtained together by eliminating augmented columns ``(D_n c, Psi c)``
with pivots restricted to the ``D_n`` rows.  A column that reduces to zero in
the ``D_n`` part closes a new cycle, and its leftover ``Psi`` part is the image
of that cycle.  Subsets are visited depth first (column ``j`` excluded, then
included), so each tree edge costs one column reduction and backtracking is
a ``pop``.  Arithmetic is fraction-free over Python integers.
"""

from __future__ import annotations

import os
from array import array
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

import numpy as np

from .exactlin import SparseMatrix, canonical_span, kernel_basis, rank

DEFAULT_CAP_BITS = 24


class CapExceeded(RuntimeError):
    """The subset enumeration would exceed the configured cap."""


def check_cap(m: int, cap_bits: int | None) -> None:
    if cap_bits is not None and m > cap_bits:
        raise CapExceeded(
            f"{m} cells means 2^{m} subsets, above the cap of 2^{cap_bits}; raise the cap to proceed")


def default_jobs() -> int:
    try:
        return max(1, len(os.sched_getaffinity(0)))
    except AttributeError:  # pragma: no cover - non-Linux
        return max(1, os.cpu_count() or 1)


def _integer_columns(d: SparseMatrix, psi: SparseMatrix | None) -> list[list[int]]:
    """Augmented columns (D c, Psi c), each scaled to integers.

    Scaling a whole augmented column leaves both the column rank and the
    Psi-image of the cycle space unchanged.
    """
    dc = d.columns()
    pc = psi.columns() if psi is not None else [[] for _ in range(d.cols)]
    out = []
    for a, b in zip(dc, pc):
        col = list(a) + list(b)
        den = 1
        for x in col:
            den = den * x.denominator // gcd(den, x.denominator)
        out.append([int(x * den) for x in col])
    return out


def _walk(cols, nrows, forced, per_mask, shift):
    """Depth-first walk; ``forced[j]`` pins the choice for column ``j``."""
    m = len(cols)
    counts: dict = {}
    first: dict = {}
    vspaces: list = [()]  # local vid -> tuple of echelon residual vectors
    vindex: dict = {(): 0}
    basis: list = []
    vbasis: list = []
    if per_mask:
        size_out = 1 << (m - shift)
        ranks = bytearray(size_out)
        vids = array("i", bytes(4 * size_out))
    else:
        ranks = vids = None

    def rec(j, mask, size, vid):
        if j == m:
            key = (size, len(basis), vid)
            c = counts.get(key)
            if c is None:
                counts[key] = 1
                first[key] = mask
            else:
                counts[key] = c + 1
            if per_mask:
                i = mask >> shift
                ranks[i] = len(basis)
                vids[i] = vid
            return
        choice = forced.get(j)
        if choice != 1:
            rec(j + 1, mask, size, vid)
        if choice == 0:
            return
        v = cols[j]
        for piv, b in basis:
            c = v[piv]
            if c:
                bp = b[piv]
                v = [bp * x - c * y for x, y in zip(v, b)]
        p = -1
        for i in range(nrows):
            if v[i]:
                p = i
                break
        bit = 1 << j
        if p >= 0:
            g = gcd(*v)
            if g > 1:
                v = [x // g for x in v]
            basis.append((p, v))
            rec(j + 1, mask | bit, size + 1, vid)
            basis.pop()
            return
        w = v[nrows:]
        for piv, b in vbasis:
            c = w[piv]
            if c:
                bp = b[piv]
                w = [bp * x - c * y for x, y in zip(w, b)]
        q = -1
        for i in range(len(w)):
            if w[i]:
                q = i
                break
        if q < 0:
            rec(j + 1, mask | bit, size + 1, vid)
            return
        g = gcd(*w)
        if g > 1:
            w = [x // g for x in w]
        vbasis.append((q, w))
        key = tuple(tuple(b) for _, b in vbasis)
        nvid = vindex.get(key)
        if nvid is None:
            nvid = vindex[key] = len(vspaces)
            vspaces.append(key)
        rec(j + 1, mask | bit, size + 1, nvid)
        vbasis.pop()

    rec(0, 0, 0, 0)
    return counts, first, vspaces, ranks, vids


def _run_chunk(args):
    cols, nrows, forced, per_mask, shift = args
    return _walk(cols, nrows, forced, per_mask, shift)


@dataclass
class StateTable:
    """Aggregated states of all ``2^m`` selectors.

    ``counts[(size, rank, vid)]`` is the number of selectors with that many
    cells, that boundary rank and image space ``spaces[vid]`` (canonical RREF
    rows in Q^r).  ``first`` holds the smallest such selector mask.  With
    ``per_mask`` the arrays ``ranks[mask]`` and ``vids[mask]`` are filled too.
    """

    m: int
    r: int
    full_rank: int
    counts: dict
    first: dict
    spaces: list
    ranks: np.ndarray | None = None
    vids: np.ndarray | None = None

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def items(self):
        for key in sorted(self.counts):
            yield key, self.counts[key]


def enumerate_states(d: SparseMatrix, psi: SparseMatrix | None = None, *,
                     cap_bits: int | None = DEFAULT_CAP_BITS, jobs: int = 1,
                     per_mask: bool = False) -> StateTable:
    """Walk all subsets of the columns of ``d`` (optionally tracking ``Psi``-images)."""
    m = d.cols
    check_cap(m, cap_bits)
    if psi is not None and psi.cols != m:
        raise ValueError("class map and boundary matrix disagree on the number of cells")
    r = psi.rows if psi is not None else 0
    cols = _integer_columns(d, psi)
    nrows = d.rows
    jobs = max(1, int(jobs or 1))
    split = 0
    if jobs > 1 and m >= 8:
        while (1 << split) < 4 * jobs and split < m - 4:
            split += 1
    if split == 0:
        results = [(0, _walk(cols, nrows, {}, per_mask, 0))]
    else:
        tasks = []
        for prefix in range(1 << split):
            forced = {j: (prefix >> j) & 1 for j in range(split)}
            tasks.append((cols, nrows, forced, per_mask, split))
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(enumerate(ex.map(_run_chunk, tasks)))

    # merge: local vids -> canonical spans -> global ids (ordered by first appearance)
    spaces: list = []
    gindex: dict = {}
    counts: dict = {}
    first: dict = {}
    ranks = np.zeros(1 << m, dtype=np.uint8) if per_mask else None
    vids = np.zeros(1 << m, dtype=np.int32) if per_mask else None
    for prefix, (lc, lf, lspaces, lranks, lvids) in results:
        remap = []
        for vecs in lspaces:
            canon = canonical_span(vecs, r)
            g = gindex.get(canon)
            if g is None:
                g = gindex[canon] = len(spaces)
                spaces.append(canon)
            remap.append(g)
        for (size, rk, vid), c in lc.items():
            key = (size, rk, remap[vid])
            counts[key] = counts.get(key, 0) + c
            mask = lf[(size, rk, vid)]
            if key not in first or mask < first[key]:
                first[key] = mask
        if per_mask:
            step = 1 << split
            ranks[prefix::step] = np.frombuffer(lranks, dtype=np.uint8)
            local = np.frombuffer(lvids, dtype=np.int32)
            vids[prefix::step] = np.asarray(remap, dtype=np.int32)[local]
    return StateTable(m=m, r=r, full_rank=rank(d), counts=counts, first=first,
                      spaces=spaces, ranks=ranks, vids=vids)


def enumerate_states_naive(d: SparseMatrix, psi: SparseMatrix | None = None, *,
                           cap_bits: int | None = DEFAULT_CAP_BITS) -> StateTable:
    """Reference path: recompute rank and cycle image from scratch for every subset."""
    m = d.cols
    check_cap(m, cap_bits)
    r = psi.rows if psi is not None else 0
    spaces: list = []
    gindex: dict = {}
    counts: dict = {}
    first: dict = {}
    for mask in range(1 << m):
        idx = [j for j in range(m) if mask >> j & 1]
        sub = d.select_columns(idx)
        rk = rank(sub)
        if psi is not None and idx:
            cyc = kernel_basis(sub)
            psub = psi.select_columns(idx)
            canon = canonical_span([psub @ z for z in cyc], r)
        else:
            canon = ()
        g = gindex.get(canon)
        if g is None:
            g = gindex[canon] = len(spaces)
            spaces.append(canon)
        key = (len(idx), rk, g)
        counts[key] = counts.get(key, 0) + 1
        first.setdefault(key, mask)
    return StateTable(m=m, r=r, full_rank=rank(d), counts=counts, first=first, spaces=spaces)


def popcounts(m: int) -> np.ndarray:
    """``popcounts(m)[mask]`` is the number of set bits of ``mask``."""
    out = np.zeros(1 << m, dtype=np.uint8)
    for j in range(m):
        out[1 << j: 2 << j] = out[: 1 << j] + 1
    return out


def span_as_fractions(span: tuple) -> list[list[Fraction]]:
    return [list(row) for row in span]
