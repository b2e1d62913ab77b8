"""
Duality of the homological Tutte polynomial on spheres
======================================================

For a triangulated sphere, the polynomial of the dual complex is the original
with X and Y exchanged, in every degree.  The dual complex is built
algebraically by transposing boundary matrices.
"""

import time

from triangpoly import algebraic_dual, boundary_of_simplex, canonical_string, chain_complex
from triangpoly import evaluate, tutte_homological

swap = {"X": "Y", "Y": "X"}

# %%
# The 2-sphere as the boundary of a tetrahedron: at n = 1 this is the graph K4.
k = chain_complex(boundary_of_simplex(3))
t = tutte_homological(k, 1)
print("T_K          =", canonical_string(t))
print("T_K(0,0)     =", evaluate(t, (0, 0)), "spanning trees")
print("dual swapped =", canonical_string(tutte_homological(algebraic_dual(k), 1).permute(swap)))

# %%
# The 3-sphere: T^1 pairs with T^2 of the dual and vice versa.
k = chain_complex(boundary_of_simplex(4))
d = algebraic_dual(k)
for j in (1, 2):
    same = tutte_homological(k, j) == tutte_homological(d, 3 - j).permute(swap)
    print(f"T^{j}_K(X,Y) = T^{3 - j}_K*(Y,X):", same)

# %%
# The 4-sphere at n = 2 has 20 triangles, so 2^20 spanning subcomplexes.
t0 = time.perf_counter()
k = chain_complex(boundary_of_simplex(5))
t = tutte_homological(k, 2)
td = tutte_homological(algebraic_dual(k), 2)
print("S^4:", t == td.permute(swap), f"({time.perf_counter() - t0:.1f} s)")
print("T_K =", canonical_string(t))
