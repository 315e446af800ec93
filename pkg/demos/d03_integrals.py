"""
Right integrals and unimodularity
=================================

The right integral is found as the exact nullspace of (lam x 1) Delta = lam 1.
Unimodularity decides whether the normalised invariant is defined.
"""

from hennings.files import shipped_algebra
from hennings.integral import (
    check_integral_properties,
    check_trace_theorem,
    check_unimodular,
    right_integral,
)
from hennings.invariant import normalization_data

for name in ("zn3", "sweedler", "uq_sl2_i"):
    H = shipped_algebra(name)
    lam = right_integral(H)
    nonzero = {H.basis[i]: str(c) for i, c in enumerate(lam.coeffs) if not c.is_zero()}
    print(f"\n{name}: lambda = {nonzero}")
    for rep in (check_integral_properties(H, lam), check_trace_theorem(H, lam), check_unimodular(H)):
        print("  ", rep.title, "ok" if rep.ok else f"FAIL {rep.failed()}")
    a, b = normalization_data(H, lam)
    print("   lam(v) =", a, " lam(v^-1) =", b)

# %%
# Sweedler's algebra is not unimodular and both ribbon integrals vanish, so
# only the unnormalised link value is available for it.
