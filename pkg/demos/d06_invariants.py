"""
Three-manifold invariants
=========================

Normalising the link value by the ribbon integrals gives an invariant of the
surgery manifold. Lens spaces L(n,1) come from the n-framed unknot.
"""

from pathlib import Path

import hennings
from hennings.diagram import MorseWord, unknot
from hennings.files import shipped_algebra
from hennings.fixtures import handle_slide_pairs
from hennings.integral import right_integral
from hennings.invariant import compare_invariants, hennings_inv, lens_space_inv, run_corpus

H = shipped_algebra("uq_sl2_i")
lam = right_integral(H)

print("S^3:", hennings_inv(H, lam, MorseWord(())).inv, hennings_inv(H, lam, unknot(1)).inv)

# %%
# Lens spaces
lens = {n: lens_space_inv(H, lam, n) for n in range(1, 9)}
for n, res in lens.items():
    print(f"L({n},1): INV={res.inv}")
print("L(2,1) vs L(5,1):", compare_invariants(lens[2], lens[5]))

# %%
# Handle slides leave the invariant unchanged.
for name, a, b in handle_slide_pairs()[:4]:
    print(name, hennings_inv(H, lam, a).inv, hennings_inv(H, lam, b).inv)

# %%
# The bundled corpus groups diagrams by the manifold they present.
corpus = Path(hennings.__file__).parent / "data" / "corpus"
report = run_corpus(corpus, {"uq_sl2_i": H, "zn3": shipped_algebra("zn3")})
print("\n".join(line for line in report.lines() if " vs " not in line))
