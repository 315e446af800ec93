"""
Evaluating links and tangles
============================

Beads from the R-matrix are slid to one basepoint per component and the
result is fed to the right integral. A full expansion over every crossing
serves as an independent check.
"""

from hennings.diagram import curl_tangle, parse_morse, unknot
from hennings.evaluate import (
    close_normal_form,
    concentrate,
    curl_power_normal_form,
    decorate,
    eval_bruteforce,
    tangle_normal_form,
)
from hennings.files import shipped_algebra
from hennings.fixtures import small_closed_fixtures
from hennings.hopf import ribbon_element
from hennings.integral import right_integral

H = shipped_algebra("uq_sl2_i")
lam = right_integral(H)

for name, word in small_closed_fixtures().items():
    fast = concentrate(H, lam, decorate(H, word))
    slow = eval_bruteforce(H, lam, word)
    print(f"{name:22s} TR={str(fast):8s} {'agree' if fast == slow else 'DISAGREE'}")

# %%
# A curl read as a 1-1 tangle gives the ribbon element.
v = ribbon_element(H)
v = getattr(v, "coeffs", v)
nf = tangle_normal_form(H, curl_tangle(1))
print("positive curl gives v:", H.mult(nf.w, H.power(H.G, nf.d)) == v)

# %%
# Powers of the curl close up to framed unknots.
for n in (-2, 3):
    print(n, close_normal_form(H, lam, curl_power_normal_form(H, n)), concentrate(H, lam, decorate(H, unknot(n))))
