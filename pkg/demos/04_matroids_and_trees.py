"""
Simplicial matroids and spanning trees
======================================

The Tutte polynomial of the column matroid of the boundary map agrees with the
homological polynomial, and duality of matroids swaps X and Y.
"""

import itertools
import random

import numpy as np

from triangpoly import (chain_complex, dual_matroid, evaluate, from_facets, matroid_tutte,
                        simplicial_matroid, tutte_homological)
from triangpoly.poly import canonical_string
from triangpoly.tutte import simplicial_spanning_trees

rng = random.Random(1)
pool = list(itertools.combinations(range(6), 3))
k = chain_complex(from_facets(rng.sample(pool, 9)))
m = simplicial_matroid(k, 2)
print("2-cells:", k.dims[2], " rank:", m.full_rank())
print("matroid     :", canonical_string(matroid_tutte(m)))
print("homological :", canonical_string(tutte_homological(k, 2)))
print("dual swapped:", canonical_string(matroid_tutte(dual_matroid(m)).permute({"X": "Y", "Y": "X"})))

# %%
# Rank table of all 512 subsets, grouped by size.
table = m.rank_table()
sizes = np.array([bin(i).count("1") for i in range(len(table))])
for s in range(k.dims[2] + 1):
    print(s, np.bincount(table[sizes == s], minlength=m.full_rank() + 1))

# %%
# T(0,0) counts simplicial spanning trees; compare with direct enumeration.
print("T(0,0) =", evaluate(tutte_homological(k, 2), (0, 0)),
      " brute force =", simplicial_spanning_trees(k, 2))
