"""Small triangulations and handle data used as the acceptance corpus.

The JSON files under ``data/`` are generated by :func:`write_bundled`; the
test suite regenerates them and compares byte-for-byte.
"""

from __future__ import annotations

import itertools
import json
from importlib import resources
from pathlib import Path

from .complexes import ChainComplex, chain_to_json, matrix_to_json
from .exactlin import SparseMatrix


def torus7_facets() -> list[list[int]]:
    """Minimal 7-vertex torus: triangles ``(i, i+1, i+3)`` and ``(i, i+2, i+3)`` mod 7."""
    out = []
    for i in range(7):
        out.append(sorted((i, (i + 1) % 7, (i + 3) % 7)))
        out.append(sorted((i, (i + 2) % 7, (i + 3) % 7)))
    return sorted(out)


def rp2_facets() -> list[list[int]]:
    """6-vertex real projective plane (the hemi-icosahedron)."""
    tris = [[1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6],
            [2, 3, 5], [2, 4, 5], [2, 4, 6], [3, 4, 6], [3, 5, 6]]
    return sorted(sorted(v - 1 for v in t) for t in tris)


def klein_facets() -> list[list[int]]:
    """Klein bottle on a 3x3 grid: one direction wraps plainly, the other with a flip."""

    def label(x, y):
        x %= 6
        if x >= 3:
            x, y = x - 3, -y
        return 3 * x + y % 3

    out = []
    for x, y in itertools.product(range(3), repeat=2):
        a, b, c, d = label(x, y), label(x + 1, y), label(x, y + 1), label(x + 1, y + 1)
        out += [sorted((a, b, d)), sorted((a, c, d))]
    return sorted(out)


def genus2_facets() -> list[list[int]]:
    """Connected sum of two 7-vertex tori along the triangle (0, 1, 3); 11 vertices."""
    first = [t for t in torus7_facets() if t != [0, 1, 3]]
    relabel = {0: 0, 1: 1, 3: 3, 2: 7, 4: 8, 5: 9, 6: 10}
    second = [sorted(relabel[v] for v in t) for t in torus7_facets() if t != [0, 1, 3]]
    return sorted(first + second)


def simplex_boundary_facets(dim: int) -> list[list[int]]:
    """Facets of the boundary of the ``dim``-simplex (a ``(dim-1)``-sphere)."""
    return [list(f) for f in itertools.combinations(range(dim + 1), dim)]


def _zero(rows, cols):
    return SparseMatrix(rows, cols)


def _handle(n: int, dims, q, psi, r) -> dict:
    bds = [_zero(dims[k - 1], dims[k]) for k in range(1, len(dims))]
    cx = ChainComplex(tuple(dims), tuple(bds))
    return {"n": n, "r": len(q), "Q": matrix_to_json(SparseMatrix.from_dense(q)),
            "Psi": matrix_to_json(SparseMatrix.from_dense(psi)),
            "R": matrix_to_json(SparseMatrix.from_dense(r)), "complex": chain_to_json(cx)}


def handle_data() -> dict:
    """Chain-level handle decompositions: one handle in each index, or a CW torus."""
    return {
        "cp2-embedding": _handle(2, [1, 0, 1, 0, 1], [[1]], [[1]], [[1]]),
        "s2xs2-embedding": _handle(2, [1, 0, 2, 0, 1], [[0, 1], [1, 0]],
                                   [[1, 0], [0, 1]], [[1, 0], [0, 1]]),
        "torus-2loop-embedding": _handle(1, [1, 2, 1], [[0, 1], [-1, 0]],
                                         [[1, 0], [0, 1]], [[1, 0], [0, 1]]),
    }


def simplicial_data() -> dict:
    return {
        "triangle": {"facets": [[0, 1, 2]]},
        "bd3simplex": {"facets": simplex_boundary_facets(3)},
        "bd4simplex": {"facets": simplex_boundary_facets(4)},
        "bd5simplex": {"facets": simplex_boundary_facets(5)},
        "torus7": {"facets": torus7_facets()},
        "genus2": {"facets": genus2_facets()},
        "klein": {"facets": klein_facets()},
        "rp2": {"facets": rp2_facets()},
    }


def dumps(obj) -> str:
    """Deterministic JSON text used for every emitted file."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def generated() -> dict[str, str]:
    from .complexes import from_facets
    from .embedding import datum_to_json
    from .pairing import build_embedding

    out = {name: dumps(obj) for name, obj in {**simplicial_data(), **handle_data()}.items()}
    out["torus7-embedding"] = dumps(datum_to_json(build_embedding(from_facets(torus7_facets()))))
    return out


def write_bundled(directory: str | Path | None = None) -> list[Path]:
    directory = Path(directory) if directory else Path(__file__).with_name("data")
    paths = []
    for name, text in generated().items():
        p = directory / f"{name}.json"
        p.write_text(text)
        paths.append(p)
    return paths


def fixture_names() -> list[str]:
    files = resources.files(__package__).joinpath("data")
    return sorted(p.name[:-5] for p in files.iterdir() if p.name.endswith(".json"))


def fixture_text(name: str) -> str:
    if name.endswith(".json"):
        name = name[:-5]
    path = resources.files(__package__).joinpath("data", f"{name}.json")
    if not path.is_file():
        raise FileNotFoundError(f"no bundled fixture named {name!r}")
    return path.read_text()


def load_fixture(name: str) -> dict:
    return json.loads(fixture_text(name))
