"""
The 7-vertex torus: intersection form, P and its dual
=====================================================

The intersection form comes from cup products of cocycles dual to a chosen
cycle basis.  P is a sum over all 2^21 edge subsets.  Expect roughly half a
minute on one core.
"""

import time

import numpy as np

from triangpoly import build_embedding, canonical_string, dual_embedding, poly_P
from triangpoly.fixtures import torus7_facets
from triangpoly.complexes import from_facets
from triangpoly.pairing import intersection_summary
from triangpoly.verify import SWAP_P, identity_suite

k = from_facets(torus7_facets())
e = build_embedding(k)
print("f-vector:", k.f_vector())
print("form:", intersection_summary(e))
print(np.array(e.Q.to_dense(), dtype=object).astype(np.int64))

# %%
t0 = time.perf_counter()
p = poly_P(e)
print(f"P has {len(p.terms)} terms, computed in {time.perf_counter() - t0:.1f} s")
print("P =", canonical_string(p))

# %%
# Dual complex and dual datum: same polynomial with X<->Y and A<->B.
pd = poly_P(dual_embedding(e))
print("duality holds:", pd.permute(SWAP_P) == p)

# %%
# The two linear identities hold on every selector.
for r in identity_suite(e):
    print(r.line())
