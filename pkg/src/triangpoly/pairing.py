"""Intersection form of a triangulated closed orientable 2n-manifold via cup products."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .complexes import SimplicialComplex, chain_complex, fundamental_cycle, ChainComplex
from .embedding import EmbeddingDatum, EmbeddingError
from .exactlin import SparseMatrix, extend_basis, image_basis, kernel_basis, primitive_integer, solve


@dataclass(frozen=True)
class CochainBasis:
    """Cocycles ``cochains[i]`` (functionals on n-cells) and their values on the cycles R."""

    n: int
    cochains: tuple
    evaluation: SparseMatrix

    def as_matrix(self) -> SparseMatrix:
        """Rows are the cocycles; usable directly as a class map Psi."""
        m = len(self.cochains[0]) if self.cochains else 0
        return SparseMatrix(len(self.cochains), m,
                            {(i, j): v for i, b in enumerate(self.cochains) for j, v in enumerate(b) if v})


def homology_basis(c: ChainComplex, n: int) -> SparseMatrix:
    """Integer n-cycles completing a basis of the boundaries to a basis of the cycles."""
    cycles = kernel_basis(c.boundary(n))
    bounds = image_basis(c.boundary(n + 1))
    chosen = [primitive_integer(z) for z in extend_basis(bounds, cycles)]
    return SparseMatrix.from_columns(chosen, c.dims[n]) if chosen else SparseMatrix(c.dims[n], 0)


def cohomology_basis(c: ChainComplex, n: int, r_cols: SparseMatrix) -> CochainBasis:
    """Cocycles ``beta_i`` with ``<beta_i, R_j> = delta_ij``."""
    m = c.dims[n]
    r = r_cols.cols
    cob = c.boundary(n + 1).transpose()  # coboundary on n-cochains
    ent = dict(cob.entries())
    for (j, i), v in r_cols.entries().items():
        ent[(cob.rows + i, j)] = v
    system = SparseMatrix(cob.rows + r, m, ent)
    out = []
    for i in range(r):
        rhs = [0] * cob.rows + [int(t == i) for t in range(r)]
        beta = solve(system, rhs)
        if beta is None:
            raise EmbeddingError("cycle matrix does not represent a homology basis")
        out.append(tuple(beta))
    basis = CochainBasis(n, tuple(out), SparseMatrix(r, r))
    evaluation = basis.as_matrix() @ r_cols if r else SparseMatrix(0, 0)
    return CochainBasis(n, tuple(out), evaluation)


def cup_evaluate(k: SimplicialComplex, alpha, beta, mu) -> Fraction:
    """``<alpha ∪ beta, mu>`` with the front-face/back-face rule on sorted simplices."""
    top = k.dimension
    if top % 2:
        raise ValueError("cup pairing of middle cochains needs an even-dimensional complex")
    n = top // 2
    idx = k._index[n]
    total = Fraction(0)
    for t, simplex in enumerate(k.cells[top]):
        if not mu[t]:
            continue
        a = alpha[idx[simplex[: n + 1]]]
        if not a:
            continue
        b = beta[idx[simplex[n:]]]
        if b:
            total += mu[t] * a * b
    return total


def cup_matrix(k: SimplicialComplex, basis: CochainBasis, mu) -> SparseMatrix:
    r = len(basis.cochains)
    return SparseMatrix(r, r, {(i, j): cup_evaluate(k, a, b, mu)
                               for i, a in enumerate(basis.cochains)
                               for j, b in enumerate(basis.cochains)})


def build_embedding(k: SimplicialComplex, n: int | None = None, *, flip_orientation: bool = False,
                    cycles: SparseMatrix | None = None) -> EmbeddingDatum:
    """Embedding datum of a triangulation of a closed orientable 2n-manifold in itself.

    ``Psi`` is the Kronecker-dual cocycle basis.  With ``G`` the cup-product
    matrix of that basis on the fundamental cycle, the intersection form in the
    coordinates of ``R`` is ``Q = (G^-1)^T``.
    """
    top = k.dimension
    if n is None:
        n = top // 2
    if top != 2 * n:
        raise ValueError(f"expected a {2 * n}-dimensional triangulation, got dimension {top}")
    c = chain_complex(k)
    mu = fundamental_cycle(c)
    if flip_orientation:
        mu = [-x for x in mu]
    r_cols = cycles if cycles is not None else homology_basis(c, n)
    beta = cohomology_basis(c, n, r_cols)
    r = r_cols.cols
    g = cup_matrix(k, beta, mu)
    sign = -1 if n % 2 else 1
    if g.transpose() != g.scale(sign):
        raise EmbeddingError("cup pairing is not (-1)^n-symmetric; the cup convention broke")
    inv_cols = []
    for j in range(r):
        col = solve(g, [int(i == j) for i in range(r)])
        if col is None:
            raise EmbeddingError("cup pairing is degenerate; input is not a closed orientable manifold")
        inv_cols.append(col)
    q = SparseMatrix.from_columns(inv_cols, r).transpose() if r else SparseMatrix(0, 0)
    return EmbeddingDatum(n, q, beta.as_matrix() if r else SparseMatrix(0, c.dims[n]), r_cols, c)


def intersection_summary(e: EmbeddingDatum) -> dict:
    """r, symmetry type and |det Q| of a datum."""
    r = e.r
    if r == 0:
        kind = "empty"
    elif e.Q.is_symmetric():
        kind = "symmetric"
    else:
        kind = "antisymmetric"
    return {"r": r, "symmetry": kind, "abs_det": str(abs(_det(e.Q)))}


def _det(m: SparseMatrix) -> Fraction:
    a = m.to_dense()
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        for i in range(c + 1, n):
            f = a[i][c] / a[c][c]
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return det
