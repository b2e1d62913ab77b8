"""Exact polynomial invariants of complexes and of complexes embedded in even-dimensional manifolds."""

from .complexes import (ChainComplex, NotOrientableError, SimplicialComplex, SpanningSelector,
                        algebraic_dual, betti, betti_numbers, boundary_of_simplex, chain_complex,
                        fundamental_cycle, from_facets, spanning_subcomplex)
from .embedding import (EmbeddingDatum, EmbeddingError, OddDimensionError, SubcomplexInvariants,
                        collapse_Pbar, count_flat_subcomplexes, dual_embedding, poly_P, poly_Pbar,
                        specialize_to_T, subcomplex_invariants)
from .exactlin import (SparseMatrix, congruence_signature, image_basis, kernel_basis, rank,
                       solve)
from .matroid import (RankMatroid, dual_matroid, matroid_tutte, matroids_equal,
                      simplicial_matroid)
from .pairing import build_embedding, cohomology_basis, cup_evaluate
from .poly import MultiPoly, canonical_string, evaluate
from .statesum import CapExceeded
from .tutte import GraphView, tutte_graph, tutte_homological

__version__ = "0.1.0"
