"""Exhaustive checks of the duality theorems and identities on concrete inputs.

Each check returns :class:`CheckResult` objects; a failing check carries the
first offending selector mask when the statement is per-selector.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .complexes import ChainComplex, algebraic_dual
from .embedding import (EmbeddingDatum, collapse_Pbar, dual_embedding, iter_states, poly_P,
                        poly_Pbar, space_invariants, specialize_to_T, state_table)
from .exactlin import canonical_span
from .matroid import (dual_matroid, first_rank_mismatch, matroid_tutte, matroids_equal,
                      simplicial_matroid)
from .poly import MultiPoly, canonical_string
from .statesum import DEFAULT_CAP_BITS, enumerate_states, popcounts
from .tutte import tutte_homological

SWAP_XY = {"X": "Y", "Y": "X"}
SWAP_P = {"X": "Y", "Y": "X", "A": "B", "B": "A"}
SWAP_PBAR_DUAL = {"X": "Y", "Y": "X", "A+": "B+", "B+": "A+", "A-": "B-", "B-": "A-"}
SWAP_PBAR_ORIENT = {"A+": "A-", "A-": "A+", "B+": "B-", "B-": "B+"}


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    counterexample: int | None = None
    selectors: int = 0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" (counterexample selector {self.counterexample:#x})" if self.counterexample is not None else ""
        return f"[{status}] {self.name}: {self.detail}{extra}"

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail,
                "counterexample": None if self.counterexample is None else hex(self.counterexample),
                "selectors": self.selectors}


def _first_true(flags: np.ndarray) -> int | None:
    idx = np.nonzero(flags)[0]
    return int(idx[0]) if len(idx) else None


def _poly_check(name, lhs: MultiPoly, rhs: MultiPoly, selectors=0) -> CheckResult:
    ok = lhs == rhs
    detail = "coefficient-exact" if ok else f"{canonical_string(lhs)}  !=  {canonical_string(rhs)}"
    return CheckResult(name, ok, detail, selectors=selectors)


def graded_sphere_duality(c: ChainComplex, j: int, *, cap_bits=DEFAULT_CAP_BITS,
                          jobs: int = 1) -> list[CheckResult]:
    """``T^j_K(X,Y) = T^{N-j}_{K*}(Y,X)`` plus its per-selector refinement.

    Per selector ``A``: the X-exponent of ``L_A`` equals the Y-exponent of the
    dual subcomplex built from the complementary cells, and vice versa.
    """
    top = c.top
    dual = algebraic_dual(c)
    jd = top - j
    prim = enumerate_states(c.boundary(j), cap_bits=cap_bits, jobs=jobs, per_mask=True)
    dualt = enumerate_states(dual.boundary(jd), cap_bits=cap_bits, jobs=jobs, per_mask=True)
    m = prim.m
    t_k = _t_from_table(prim)
    t_d = _t_from_table(dualt)
    name = f"T^{j}_K(X,Y) = T^{jd}_K*(Y,X)"
    out = [_poly_check(name, t_k, t_d.permute(SWAP_XY), selectors=1 << m)]
    pc = popcounts(m).astype(np.int64)
    full = (1 << m) - 1
    comp = full ^ np.arange(1 << m)
    x_k = prim.full_rank - prim.ranks.astype(np.int64)
    y_k = pc - prim.ranks
    x_d = dualt.full_rank - dualt.ranks.astype(np.int64)
    y_d = pc - dualt.ranks
    bad = (x_k != y_d[comp]) | (y_k != x_d[comp])
    cex = _first_true(bad)
    out.append(CheckResult(f"per-selector exponents of L and its dual (T^{j}, T^{jd})", cex is None,
                           f"{int(bad.sum())} mismatches over {1 << m} selectors", cex, 1 << m))
    return out


def _t_from_table(tab) -> MultiPoly:
    terms: dict = {}
    for (size, rk, _), cnt in tab.counts.items():
        e = (tab.full_rank - rk, size - rk)
        terms[e] = terms.get(e, 0) + cnt
    return MultiPoly(("X", "Y"), terms)


def sphere_suite(c: ChainComplex, *, cap_bits=DEFAULT_CAP_BITS, jobs: int = 1) -> list[CheckResult]:
    """Graded duality for every ``1 <= j <= N-1`` (the middle one is the even-sphere theorem)."""
    out = []
    for j in range(1, c.top):
        out.extend(graded_sphere_duality(c, j, cap_bits=cap_bits, jobs=jobs))
    return out


def matroid_suite(c: ChainComplex, n: int, *, cap_bits=DEFAULT_CAP_BITS, jobs: int = 1,
                  oracle_limit: int = 16) -> list[CheckResult]:
    """Simplicial matroid equals homological Tutte; matroid duality; dual matroid = M(K*)."""
    out = []
    mat = simplicial_matroid(c, n)
    if mat.size <= oracle_limit:
        tm = matroid_tutte(mat, cap_bits=cap_bits)
        th = tutte_homological(c, n, cap_bits=cap_bits, jobs=jobs)
        out.append(_poly_check("T_M(K) = T_K", tm, th, 1 << mat.size))
        td = matroid_tutte(dual_matroid(mat), cap_bits=cap_bits)
        out.append(_poly_check("T_M*(X,Y) = T_M(Y,X)", td, tm.permute(SWAP_XY), 1 << mat.size))
    if c.top == 2 * n:
        dual = algebraic_dual(c)
        a, b = dual_matroid(mat), simplicial_matroid(dual, n)
        ok = matroids_equal(a, b)
        cex = None if ok else first_rank_mismatch(a, b)
        out.append(CheckResult("M(K)* = M(K*) on every subset", ok,
                               f"rank functions compared on {1 << mat.size} subsets", cex, 1 << mat.size))
    return out


def identity_suite(e: EmbeddingDatum, *, cap_bits=DEFAULT_CAP_BITS, jobs: int = 1,
                   table=None) -> list[CheckResult]:
    """``k + l + s = dim H_n(L)`` and ``s + s_perp + 2l = r`` on every selector."""
    table = table or state_table(e, cap_bits=cap_bits, jobs=jobs)
    r = e.r
    fail8 = fail_rank = fail_sig = None
    n8 = nrank = nsig = 0
    total = 0
    for _, dim_z, inv, count, mask in iter_states(e, table):
        total += count
        if inv.k + inv.l + inv.s != dim_z:
            n8 += count
            fail8 = mask if fail8 is None else min(fail8, mask)
        if inv.s + inv.s_perp + 2 * inv.l != r:
            nrank += count
            fail_rank = mask if fail_rank is None else min(fail_rank, mask)
        if e.n % 2 == 0 and (inv.s_plus + inv.s_minus != inv.s
                             or inv.s_perp_plus + inv.s_perp_minus != inv.s_perp):
            nsig += count
            fail_sig = mask if fail_sig is None else min(fail_sig, mask)
    out = [
        CheckResult("k + l + s = dim H_n(L)", fail8 is None,
                    f"{n8} failures over {total} selectors", fail8, total),
        CheckResult("s + s_perp + 2l = rank H_n(M)", fail_rank is None,
                    f"{nrank} failures over {total} selectors", fail_rank, total),
    ]
    if e.n % 2 == 0:
        out.append(CheckResult("s = s+ + s-, s_perp = s_perp+ + s_perp-", fail_sig is None,
                               f"{nsig} failures over {total} selectors", fail_sig, total))
    return out


def specialize_suite(e: EmbeddingDatum, *, cap_bits=DEFAULT_CAP_BITS, jobs: int = 1,
                     table=None) -> list[CheckResult]:
    table = table or state_table(e, cap_bits=cap_bits, jobs=jobs)
    lhs = specialize_to_T(e, table=table)
    rhs = tutte_homological(e.complex, e.n, cap_bits=cap_bits, jobs=jobs)
    return [_poly_check("Y^(r/2) P(X,Y,Y^(1/2),Y^(-1/2)) = T_K", lhs, rhs, table.total)]


def p_duality_suite(e: EmbeddingDatum, *, cap_bits=DEFAULT_CAP_BITS, jobs: int = 1) -> list[CheckResult]:
    """``P_K(X,Y,A,B) = P_K*(Y,X,B,A)`` with per-selector exponent and subspace checks."""
    d = dual_embedding(e)
    tk = state_table(e, cap_bits=cap_bits, jobs=jobs, per_mask=True)
    td = state_table(d, cap_bits=cap_bits, jobs=jobs, per_mask=True)
    m = tk.m
    n_sel = 1 << m
    pk, pd = poly_P(e, table=tk), poly_P(d, table=td)
    out = [_poly_check("P_K(X,Y,A,B) = P_K*(Y,X,B,A)", pk, pd.permute(SWAP_P), n_sel)]
    if e.n % 2 == 0:
        out.append(_poly_check("Pbar_K(X,Y,A+,A-,B+,B-) = Pbar_K*(Y,X,B+,B-,A+,A-)",
                               poly_Pbar(e, table=tk), poly_Pbar(d, table=td).permute(SWAP_PBAR_DUAL),
                               n_sel))

    pc = popcounts(m).astype(np.int64)
    comp = ((1 << m) - 1) ^ np.arange(1 << m)

    def k_and_x(tab, datum):
        dim_v = np.array([len(s) for s in tab.spaces], dtype=np.int64)
        k = pc - tab.ranks - dim_v[tab.vids]
        x = tab.full_rank - tab.ranks.astype(np.int64)
        return k, x

    kk, xk = k_and_x(tk, e)
    kd, xd = k_and_x(td, d)
    bad = (xd[comp] != kk) | (xk != kd[comp])
    cex = _first_true(bad)
    out.append(CheckResult("X-exponent of dual subcomplex = k(L) (both directions)", cex is None,
                           f"{int(bad.sum())} mismatches over {n_sel} selectors", cex, n_sel))

    # V(dual L) = V-perp(L): compare once per distinct (vid, dual vid) pair
    pairs = tk.vids.astype(np.int64) * len(td.spaces) + td.vids[comp]
    uniq, where = np.unique(pairs, return_index=True)
    bad_mask = None
    nbad = 0
    for code, pos in zip(uniq, where):
        vid, dvid = divmod(int(code), len(td.spaces))
        perp = space_invariants(tk.spaces[vid], e.Q, e.n).perp
        if perp != canonical_span(td.spaces[dvid], e.r):
            nbad += 1
            bad_mask = int(pos) if bad_mask is None else min(bad_mask, int(pos))
    out.append(CheckResult("V(dual L) = V-perp(L)", bad_mask is None,
                           f"{len(uniq)} distinct subspace pairs, {nbad} mismatched", bad_mask, n_sel))
    return out


def pbar_laws(e: EmbeddingDatum, *, cap_bits=DEFAULT_CAP_BITS, jobs: int = 1) -> list[CheckResult]:
    """Collapse to P and the orientation-reversal subscript swap."""
    table = state_table(e, cap_bits=cap_bits, jobs=jobs)
    pb = poly_Pbar(e, table=table)
    out = [_poly_check("Pbar(X,Y,A,A,B,B) = P", collapse_Pbar(pb), poly_P(e, table=table), table.total)]
    flipped = poly_Pbar(e.flipped(), table=table)
    out.append(_poly_check("Pbar on reversed orientation = Pbar with A+<->A-, B+<->B-",
                           flipped, pb.permute(SWAP_PBAR_ORIENT), table.total))
    return out


SUITES = ("sphere-t", "matroid", "p-duality", "identities", "specialize")
