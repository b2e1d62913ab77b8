"""Invariants of a complex embedded in a closed oriented 2n-manifold and the polynomials P, Pbar.

An embedding is described on middle homology only, by an
:class:`EmbeddingDatum` ``(Q, Psi, R)``:

* ``Q`` is the intersection form on ``H_n(M)`` in some basis;
* ``Psi`` sends an n-cycle of the complex to its coordinates in that basis;
* the columns of ``R`` are n-cycles representing the basis.

This covers triangulations (see :mod:`triangpoly.pairing`) and hand-written
handle decompositions alike.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .complexes import (ChainComplex, SpanningSelector, algebraic_dual, chain_from_json,
                        chain_to_json, matrix_from_json, matrix_to_json)
from .exactlin import (SparseMatrix, canonical_span, congruence_signature, extend_basis,
                       gram, kernel_basis, rank, solve, span_rank)
from .poly import MultiPoly, evaluate
from .statesum import DEFAULT_CAP_BITS, StateTable, enumerate_states

P_VARS = ("X", "Y", "A", "B")
PBAR_VARS = ("X", "Y", "A+", "A-", "B+", "B-")


class EmbeddingError(ValueError):
    """An embedding datum violates one of its defining invariants."""


class OddDimensionError(ValueError):
    """The signed refinement needs a symmetric form, i.e. even middle dimension."""


@dataclass(frozen=True)
class EmbeddingDatum:
    n: int
    Q: SparseMatrix
    Psi: SparseMatrix
    R: SparseMatrix
    complex: ChainComplex

    def __post_init__(self):
        validate_datum(self)

    @property
    def r(self) -> int:
        return self.Q.rows

    @property
    def num_cells(self) -> int:
        return self.complex.dims[self.n]

    def boundary(self) -> SparseMatrix:
        return self.complex.boundary(self.n)

    def flipped(self) -> "EmbeddingDatum":
        """Same datum for the oppositely oriented manifold (``Q -> -Q``)."""
        return EmbeddingDatum(self.n, -self.Q, self.Psi, self.R, self.complex)


def validate_datum(e: EmbeddingDatum) -> None:
    c, n = e.complex, e.n
    if not 1 <= n <= c.top:
        raise EmbeddingError(f"middle dimension n={n} outside 1..{c.top}")
    m = c.dims[n]
    r = e.Q.rows
    if e.Q.shape != (r, r):
        raise EmbeddingError(f"Q must be square, got {e.Q.shape}")
    if rank(e.Q) != r:
        raise EmbeddingError(f"Q is degenerate: rank {rank(e.Q)} < {r}")
    sign = -1 if n % 2 else 1
    if e.Q.transpose() != e.Q.scale(sign):
        kind = "antisymmetric" if sign < 0 else "symmetric"
        raise EmbeddingError(f"Q must be {kind} for n={n}")
    if e.Psi.shape != (r, m):
        raise EmbeddingError(f"Psi must be {r}x{m}, got {e.Psi.rows}x{e.Psi.cols}")
    if e.R.shape != (m, r):
        raise EmbeddingError(f"R must be {m}x{r}, got {e.R.rows}x{e.R.cols}")
    if not (e.Psi @ c.boundary(n + 1)).is_zero():
        raise EmbeddingError("Psi does not vanish on boundaries: Psi * D_{n+1} != 0")
    if not (c.boundary(n) @ e.R).is_zero():
        raise EmbeddingError("columns of R are not cycles: D_n * R != 0")
    if e.Psi @ e.R != SparseMatrix.identity(r):
        raise EmbeddingError("Psi * R is not the identity")


@dataclass(frozen=True)
class SubcomplexInvariants:
    k: int
    s: int
    s_perp: int
    l: int
    s_plus: int | None = None
    s_minus: int | None = None
    s_perp_plus: int | None = None
    s_perp_minus: int | None = None


@dataclass(frozen=True)
class SpaceInvariants:
    """Invariants of a subspace V of H_n(M) under the intersection form."""

    dim_v: int
    dim_perp: int
    l: int
    s: int
    s_perp: int
    s_plus: int | None
    s_minus: int | None
    s_perp_plus: int | None
    s_perp_minus: int | None
    perp: tuple  # canonical span of V-perp


def perp_basis(vectors, Q: SparseMatrix) -> list:
    """Basis of ``{u : v^T Q u = 0 for all v}``."""
    r = Q.rows
    if not vectors:
        return [[Fraction(int(i == j)) for j in range(r)] for i in range(r)]
    qt = Q.transpose()
    rows = [qt @ list(v) for v in vectors]
    return kernel_basis(rows)


def _radical_and_complement(vectors, Q, reverse=False):
    """Split a basis of V into a basis of V ∩ V-perp and a complement of it in V."""
    g = gram(vectors, Q)
    rad = []
    for c in kernel_basis(g):
        rad.append([sum((ci * v[t] for ci, v in zip(c, vectors)), Fraction(0))
                    for t in range(len(vectors[0]))])
    cands = list(reversed(vectors)) if reverse else list(vectors)
    return rad, extend_basis(rad, cands)


def _signature_on(vectors, Q, reverse):
    if not vectors:
        return 0, 0, 0
    _, comp = _radical_and_complement(vectors, Q, reverse)
    if not comp:
        return 0, 0, 0
    p, q, z = congruence_signature(gram(comp, Q))
    if z:
        raise ArithmeticError("form is degenerate on V/(V ∩ V-perp)")
    return p, q, z


def space_invariants(span: tuple, Q: SparseMatrix, n: int, *, reverse: bool = False) -> SpaceInvariants:
    """Compute l, s, s-perp (and the signed splits for even n) for V = span."""
    return _space_invariants(tuple(span), Q, n, reverse)


@lru_cache(maxsize=4096)
def _space_invariants(span, Q, n, reverse):
    r = Q.rows
    vbasis = [list(v) for v in span]
    pbasis = perp_basis(vbasis, Q)
    dim_v, dim_p = len(vbasis), len(pbasis)
    l = dim_v + dim_p - span_rank(vbasis + pbasis) if (vbasis and pbasis) else 0
    s, s_perp = dim_v - l, dim_p - l
    if n % 2 == 0:
        sp, sm, _ = _signature_on(vbasis, Q, reverse)
        pp, pm, _ = _signature_on(pbasis, Q, reverse)
        if sp + sm != s or pp + pm != s_perp:
            raise ArithmeticError("signature split does not add up to s / s-perp")
    else:
        sp = sm = pp = pm = None
    return SpaceInvariants(dim_v, dim_p, l, s, s_perp, sp, sm, pp, pm,
                           canonical_span(pbasis, r))


def cycle_image(e: EmbeddingDatum, sel: SpanningSelector) -> tuple[int, tuple]:
    """``(dim H_n(L), canonical span of V(L))`` computed from scratch for one selector."""
    if sel.n != e.n or sel.size != e.num_cells:
        raise ValueError("selector does not match the datum's n-cells")
    idx = sel.indices()
    if not idx:
        return 0, ()
    sub = e.boundary().select_columns(idx)
    cyc = kernel_basis(sub)
    psub = e.Psi.select_columns(idx)
    return len(cyc), canonical_span([psub @ z for z in cyc], e.r)


def subcomplex_invariants(e: EmbeddingDatum, sel: SpanningSelector) -> SubcomplexInvariants:
    """k, s, s-perp, l (and s-plus/minus for even n) of one spanning subcomplex."""
    dim_z, span = cycle_image(e, sel)
    inv = space_invariants(span, e.Q, e.n)
    return _subcomplex(dim_z, inv)


def _subcomplex(dim_z: int, inv: SpaceInvariants) -> SubcomplexInvariants:
    return SubcomplexInvariants(k=dim_z - inv.dim_v, s=inv.s, s_perp=inv.s_perp, l=inv.l,
                                s_plus=inv.s_plus, s_minus=inv.s_minus,
                                s_perp_plus=inv.s_perp_plus, s_perp_minus=inv.s_perp_minus)


def state_table(e: EmbeddingDatum, *, cap_bits: int | None = DEFAULT_CAP_BITS, jobs: int = 1,
                per_mask: bool = False) -> StateTable:
    return enumerate_states(e.boundary(), e.Psi, cap_bits=cap_bits, jobs=jobs, per_mask=per_mask)


def iter_states(e: EmbeddingDatum, table: StateTable):
    """Yield ``(x_exponent, dim H_n(L), SubcomplexInvariants, count, first_mask)`` per state."""
    for key, count in table.items():
        size, rk, vid = key
        inv = space_invariants(table.spaces[vid], e.Q, e.n)
        yield table.full_rank - rk, size - rk, _subcomplex(size - rk, inv), count, table.first[key]


def poly_P(e: EmbeddingDatum, *, cap_bits: int | None = DEFAULT_CAP_BITS, jobs: int = 1,
           table: StateTable | None = None) -> MultiPoly:
    """``sum_L X^(b_{n-1}(L) - b_{n-1}(K^(n))) Y^k(L) A^s(L) B^s-perp(L)``."""
    table = table or state_table(e, cap_bits=cap_bits, jobs=jobs)
    terms: dict = {}
    for xe, _, inv, count, _ in iter_states(e, table):
        key = (xe, inv.k, inv.s, inv.s_perp)
        terms[key] = terms.get(key, 0) + count
    return MultiPoly(P_VARS, terms)


def poly_Pbar(e: EmbeddingDatum, *, cap_bits: int | None = DEFAULT_CAP_BITS, jobs: int = 1,
              table: StateTable | None = None) -> MultiPoly:
    """Signed refinement in ``X, Y, A+, A-, B+, B-``; needs even n."""
    if e.n % 2:
        raise OddDimensionError(f"the signed polynomial needs even n, got n={e.n}")
    table = table or state_table(e, cap_bits=cap_bits, jobs=jobs)
    terms: dict = {}
    for xe, _, inv, count, _ in iter_states(e, table):
        key = (xe, inv.k, inv.s_plus, inv.s_minus, inv.s_perp_plus, inv.s_perp_minus)
        terms[key] = terms.get(key, 0) + count
    return MultiPoly(PBAR_VARS, terms)


def collapse_Pbar(p: MultiPoly) -> MultiPoly:
    """Set ``A+ = A- = A`` and ``B+ = B- = B``."""
    terms: dict = {}
    for (x, y, ap, am, bp, bm), c in p.terms.items():
        key = (x, y, ap + am, bp + bm)
        terms[key] = terms.get(key, 0) + c
    return MultiPoly(P_VARS, terms)


def specialize_to_T(e: EmbeddingDatum, *, cap_bits: int | None = DEFAULT_CAP_BITS, jobs: int = 1,
                    table: StateTable | None = None) -> MultiPoly:
    """``Y^(r/2) P(X, Y, Y^(1/2), Y^(-1/2))`` computed term by term."""
    table = table or state_table(e, cap_bits=cap_bits, jobs=jobs)
    r = e.r
    terms: dict = {}
    for xe, _, inv, count, mask in iter_states(e, table):
        twice = inv.s - inv.s_perp + r
        if twice % 2 or twice < 0:
            raise ArithmeticError(f"half-integral Y exponent for selector {mask:#x}")
        key = (xe, inv.k + twice // 2)
        terms[key] = terms.get(key, 0) + count
    return MultiPoly(("X", "Y"), terms)


def count_flat_subcomplexes(e: EmbeddingDatum, *, cap_bits: int | None = DEFAULT_CAP_BITS,
                            jobs: int = 1) -> int:
    """``P(1, 1, 0, 1)``: the number of spanning selectors with ``s(L) = 0``."""
    return int(evaluate(poly_P(e, cap_bits=cap_bits, jobs=jobs), (1, 1, 0, 1)))


def dual_embedding(e: EmbeddingDatum) -> EmbeddingDatum:
    """Datum for the dual complex in the same homology coordinates.

    A dual n-cycle is a cocycle ``phi`` on the n-cells; its class ``v`` is the
    unique solution of ``Q v = R^T phi``, hence ``Psi* = Q^-1 R^T``.  The new
    representatives ``R*`` solve ``D_{n+1}^T phi = 0`` and ``R^T phi = Q e_j``.
    """
    n, r = e.n, e.r
    c = e.complex
    if c.top != 2 * n:
        raise EmbeddingError(f"dualizing needs a 2n-dimensional complex (top {c.top}, n={n})")
    dual = algebraic_dual(c)
    m = e.num_cells
    qinv_cols = [solve(e.Q, [int(i == j) for i in range(r)]) for j in range(r)]
    qinv = SparseMatrix.from_columns(qinv_cols, r)
    psi_star = qinv @ e.R.transpose()
    d_up_t = c.boundary(n + 1).transpose()
    system = SparseMatrix(d_up_t.rows + r, m,
                          {**d_up_t.entries(),
                           **{(d_up_t.rows + i, j): v for (j, i), v in e.R.entries().items()}})
    cols = []
    for j in range(r):
        rhs = [0] * d_up_t.rows + [e.Q[(i, j)] for i in range(r)]
        phi = solve(system, rhs)
        if phi is None:
            raise EmbeddingError("no dual cycle representatives: input is not a closed-manifold datum")
        cols.append(phi)
    r_star = SparseMatrix.from_columns(cols, m)
    return EmbeddingDatum(n, e.Q, psi_star, r_star, dual)


# JSON schema C

def datum_to_json(e: EmbeddingDatum) -> dict:
    return {"n": e.n, "r": e.r, "Q": matrix_to_json(e.Q), "Psi": matrix_to_json(e.Psi),
            "R": matrix_to_json(e.R), "complex": chain_to_json(e.complex)}


def datum_from_json(obj) -> EmbeddingDatum:
    for key in ("n", "Q", "Psi", "R", "complex"):
        if key not in obj:
            raise EmbeddingError(f"embedding JSON is missing field {key!r}")
    e = EmbeddingDatum(int(obj["n"]), matrix_from_json(obj["Q"]), matrix_from_json(obj["Psi"]),
                       matrix_from_json(obj["R"]), chain_from_json(obj["complex"]))
    if "r" in obj and int(obj["r"]) != e.r:
        raise EmbeddingError(f"field r={obj['r']} disagrees with Q of size {e.r}")
    return e
