"""
Shipped Hopf algebras and their axioms
======================================

Three families ship with the package: group algebras of Z_n with the trivial
R-matrix, the four-dimensional Sweedler algebra and a quotient of the small
quantum group of sl_2 at a fourth root of unity.
"""

from hennings.files import shipped_algebra, shipped_algebra_paths
from hennings.hopf import check_hopf_axioms, check_quasitriangular, check_ribbon, ribbon_element

for name in shipped_algebra_paths():
    H = shipped_algebra(name)
    reports = [check_hopf_axioms(H), check_quasitriangular(H), check_ribbon(H)]
    status = " ".join(f"{r.title}={'ok' if r.ok else 'FAIL'}" for r in reports)
    print(f"{name:10s} dim={H.dim:2d}  {status}")

# %%
# The full report for the quantum group lists every identity checked.
H = shipped_algebra("uq_sl2_i")
print(check_ribbon(H))

# %%
# The ribbon element v = G^-1 u is central.
v = ribbon_element(H)
v = getattr(v, "coeffs", v)
print("v is central:", all(H.mult(v, H.basis_vec(i)) == H.mult(H.basis_vec(i), v) for i in range(H.dim)))
