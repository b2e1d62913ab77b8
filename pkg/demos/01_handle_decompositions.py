"""
Polynomials of handle decompositions
====================================

Three chain-level handle decompositions ship with the package: the complex
projective plane, S^2 x S^2 and a one-vertex torus with two loops.  Each is an
embedding datum (Q, Psi, R) plus a chain complex with zero boundary maps.
"""

from triangpoly import canonical_string, dual_embedding, evaluate, poly_P, poly_Pbar
from triangpoly.embedding import datum_from_json
from triangpoly.fixtures import load_fixture

# %%
# The complex projective plane has one 2-handle and intersection form [1].
cp2 = datum_from_json(load_fixture("cp2-embedding"))
print("CP2      P    =", canonical_string(poly_P(cp2)))
print("CP2      Pbar =", canonical_string(poly_Pbar(cp2)))
print("reversed Pbar =", canonical_string(poly_Pbar(cp2.flipped())))

# %%
# S^2 x S^2 has the hyperbolic form, so each single 2-handle spans an isotropic line.
s2s2 = datum_from_json(load_fixture("s2xs2-embedding"))
print("S2xS2    P    =", canonical_string(poly_P(s2s2)))
print("S2xS2    Pbar =", canonical_string(poly_Pbar(s2s2)))

# %%
# The dual decomposition gives the same polynomial with X<->Y and A<->B.
for e in (cp2, s2s2):
    print("dual P =", canonical_string(poly_P(dual_embedding(e))))

# %%
# On the torus, n = 1 and the form is antisymmetric.  P(1, 1, 0, 1) counts the
# subgraphs with s = 0: the empty graph and either loop alone.
torus = datum_from_json(load_fixture("torus-2loop-embedding"))
p = poly_P(torus)
print("torus    P    =", canonical_string(p))
print("P(1,1,0,1)    =", evaluate(p, (1, 1, 0, 1)))
