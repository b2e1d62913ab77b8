"""Simplicial complexes, chain complexes, spanning subcomplexes and duals."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .exactlin import SparseMatrix, kernel_basis, rank


class NotOrientableError(ValueError):
    """Raised when a complex has no +-1 fundamental cycle."""


@dataclass(frozen=True)
class SimplicialComplex:
    """Downward-closed set of simplices stored as sorted vertex tuples.

    ``cells[k]`` lists the k-simplices in lexicographic order; that order is
    the cell indexing used everywhere else (bitmasks, boundary matrices).
    """

    cells: tuple
    _index: tuple = field(repr=False, compare=False, default=())

    def __post_init__(self):
        idx = tuple({s: i for i, s in enumerate(level)} for level in self.cells)
        object.__setattr__(self, "_index", idx)

    @property
    def dimension(self) -> int:
        return len(self.cells) - 1

    @property
    def vertices(self) -> tuple:
        return tuple(s[0] for s in self.cells[0]) if self.cells else ()

    def f_vector(self) -> tuple:
        return tuple(len(level) for level in self.cells)

    def index(self, simplex: Sequence[int]) -> int:
        s = tuple(sorted(simplex))
        return self._index[len(s) - 1][s]

    def facets(self) -> list[tuple]:
        out = []
        for k, level in enumerate(self.cells):
            higher = set()
            if k + 1 < len(self.cells):
                for t in self.cells[k + 1]:
                    for face in combinations(t, k + 1):
                        higher.add(face)
            out.extend(s for s in level if s not in higher)
        return out


def from_facets(facets: Sequence[Sequence[int]]) -> SimplicialComplex:
    """Downward closure of ``facets`` with lexicographic cell indexing."""
    levels: dict[int, set] = {}
    for f in facets:
        f = list(f)
        if not f:
            raise ValueError("facets must be nonempty vertex lists")
        if len(set(f)) != len(f):
            raise ValueError(f"simplex {f} has repeated vertices")
        s = tuple(sorted(f))
        for k in range(1, len(s) + 1):
            levels.setdefault(k - 1, set()).update(combinations(s, k))
    if not levels:
        return SimplicialComplex(cells=())
    top = max(levels)
    return SimplicialComplex(cells=tuple(tuple(sorted(levels.get(k, ()))) for k in range(top + 1)))


def boundary_of_simplex(dim: int) -> SimplicialComplex:
    """The boundary of the ``dim``-simplex on vertices ``0..dim`` (a (dim-1)-sphere)."""
    return from_facets(list(combinations(range(dim + 1), dim)))


@dataclass(frozen=True)
class ChainComplex:
    """Cell counts ``dims[0..N]`` and boundary maps ``boundaries[k-1] = D_k``.

    ``D_k`` has shape ``dims[k-1] x dims[k]``.
    """

    dims: tuple
    boundaries: tuple

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "boundaries", tuple(self.boundaries))
        if len(self.boundaries) != max(len(dims) - 1, 0):
            raise ValueError(f"expected {len(dims) - 1} boundary maps, got {len(self.boundaries)}")
        for k, d in enumerate(self.boundaries, start=1):
            if d.shape != (dims[k - 1], dims[k]):
                raise ValueError(f"D_{k} has shape {d.shape}, expected {(dims[k - 1], dims[k])}")
        for k in range(1, len(self.boundaries)):
            if not (self.boundaries[k - 1] @ self.boundaries[k]).is_zero():
                raise ValueError(f"D_{k} * D_{k + 1} != 0")

    @property
    def top(self) -> int:
        return len(self.dims) - 1

    def boundary(self, k: int) -> SparseMatrix:
        """``D_k``; the zero map when ``k`` is 0 or above the top dimension."""
        if 1 <= k <= self.top:
            return self.boundaries[k - 1]
        if k == 0:
            return SparseMatrix(0, self.dims[0] if self.dims else 0)
        if k == self.top + 1:
            return SparseMatrix(self.dims[self.top], 0)
        raise ValueError(f"no boundary map in degree {k}")

    def skeleton(self, n: int) -> "ChainComplex":
        n = min(n, self.top)
        return ChainComplex(self.dims[: n + 1], self.boundaries[:n])


def chain_complex(k: SimplicialComplex) -> ChainComplex:
    """Simplicial chain complex with the alternating boundary on sorted vertex lists."""
    dims = k.f_vector()
    bds = []
    for d in range(1, len(k.cells)):
        lower = k._index[d - 1]
        ent = {}
        for j, s in enumerate(k.cells[d]):
            for i in range(d + 1):
                face = s[:i] + s[i + 1:]
                ent[(lower[face], j)] = -1 if i % 2 else 1
        bds.append(SparseMatrix(dims[d - 1], dims[d], ent))
    return ChainComplex(dims, tuple(bds))


def betti(c: ChainComplex, k: int) -> int:
    if not 0 <= k <= c.top:
        raise ValueError(f"degree {k} outside 0..{c.top}")
    return c.dims[k] - rank(c.boundary(k)) - rank(c.boundary(k + 1))


def betti_numbers(c: ChainComplex) -> tuple:
    ranks = [0] + [rank(d) for d in c.boundaries] + [0]
    return tuple(c.dims[k] - ranks[k] - ranks[k + 1] for k in range(c.top + 1))


def algebraic_dual(c: ChainComplex) -> ChainComplex:
    """Dual complex: k-cells are the (N-k)-cells of ``c`` and ``D*_k = D_{N-k+1}^T``.

    Cell indices carry over unchanged, so dual n-cell ``i`` is dual to n-cell
    ``i`` of ``c`` when ``N = 2n``.
    """
    n = c.top
    dims = tuple(reversed(c.dims))
    bds = tuple(c.boundaries[n - k].transpose() for k in range(1, n + 1))
    return ChainComplex(dims, bds)


@dataclass(frozen=True)
class SpanningSelector:
    """Choice of n-cells: bit ``i`` of ``mask`` keeps n-cell ``i``."""

    n: int
    size: int
    mask: int = 0

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.size:
            raise ValueError(f"mask {self.mask:#x} does not fit {self.size} cells")

    @classmethod
    def full(cls, n: int, size: int) -> "SpanningSelector":
        return cls(n, size, (1 << size) - 1)

    def indices(self) -> list[int]:
        return [i for i in range(self.size) if self.mask >> i & 1]

    def complement(self) -> "SpanningSelector":
        return SpanningSelector(self.n, self.size, ((1 << self.size) - 1) ^ self.mask)


def spanning_subcomplex(c: ChainComplex, sel: SpanningSelector) -> ChainComplex:
    """Full (n-1)-skeleton of ``c`` plus the selected n-cells."""
    n = sel.n
    if n > c.top:
        raise ValueError(f"selector dimension {n} exceeds complex dimension {c.top}")
    if sel.size != c.dims[n]:
        raise ValueError(f"selector covers {sel.size} cells, complex has {c.dims[n]} {n}-cells")
    idx = sel.indices()
    dims = c.dims[:n] + (len(idx),)
    bds = c.boundaries[: n - 1] + ((c.boundaries[n - 1].select_columns(idx),) if n >= 1 else ())
    return ChainComplex(dims, bds)


def fundamental_cycle(c: ChainComplex) -> list[int]:
    """A +-1 generator of ``ker D_N`` (first entry +1)."""
    top = c.top
    ker = kernel_basis(c.boundary(top))
    if len(ker) != 1:
        raise NotOrientableError(
            f"not a closed orientable pseudomanifold: top homology has rank {len(ker)}")
    v = ker[0]
    lead = next(x for x in v if x)
    v = [x / lead for x in v]
    if any(abs(x) != 1 for x in v):
        raise NotOrientableError(
            "not a closed orientable pseudomanifold: top cycle is not +-1 on every cell")
    return [int(x) for x in v]


# JSON schemas A (facets) and B (chain complex)

def matrix_to_json(m: SparseMatrix) -> dict:
    ent = sorted(m.entries().items())
    return {"rows": m.rows, "cols": m.cols,
            "entries": [[i, j, _fmt_frac(v)] for (i, j), v in ent]}


def _fmt_frac(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def matrix_from_json(obj) -> SparseMatrix:
    try:
        rows, cols = int(obj["rows"]), int(obj["cols"])
        ent = {}
        for item in obj.get("entries", []):
            i, j, v = item
            ent[(int(i), int(j))] = Fraction(str(v))
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed sparse matrix: {exc}") from exc
    return SparseMatrix(rows, cols, ent)


def chain_to_json(c: ChainComplex) -> dict:
    return {"dims": list(c.dims), "boundaries": [matrix_to_json(d) for d in c.boundaries]}


def chain_from_json(obj) -> ChainComplex:
    if "facets" in obj:
        return chain_complex(from_facets(obj["facets"]))
    try:
        dims = [int(d) for d in obj["dims"]]
        bds = [matrix_from_json(b) for b in obj["boundaries"]]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed chain complex: {exc}") from exc
    return ChainComplex(tuple(dims), tuple(bds))
