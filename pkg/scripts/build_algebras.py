"""Regenerate the bundled algebra files under src/hennings/data/algebras.

Each algebra is described by a monomial basis with a multiplication rule on
monomials, coproducts and antipodes of generators, an R-matrix and a
grouplike. The written files are certified by the axiom checkers on load.
"""

from __future__ import annotations

import sys
from fractions import Fraction
from pathlib import Path

from hennings.files import save_algebra, validate
from hennings.hopf import HopfData
from hennings.scalar import Scalar

OUT = Path(__file__).resolve().parents[1] / "src" / "hennings" / "data" / "algebras"


class MonomialAlgebra:
    """Helper to turn a monomial presentation into structure constants."""

    def __init__(self, monos, names, mono_mult, m=1):
        self.monos = list(monos)
        self.names = list(names)
        self.index = {mo: i for i, mo in enumerate(self.monos)}
        self.mono_mult = mono_mult
        self.m = m
        self.n = len(self.monos)

    def sc(self, c):
        return c if isinstance(c, Scalar) else Scalar(self.m, [c])

    # vectors are dicts index -> Scalar
    def mult(self, x, y):
        out = {}
        for i, a in x.items():
            for j, b in y.items():
                c, mo = self.mono_mult(self.monos[i], self.monos[j])
                if mo is None or c == 0:
                    continue
                k = self.index[mo]
                out[k] = out.get(k, self.sc(0)) + a * b * c
        return {k: v for k, v in out.items() if not v.is_zero()}

    def tmult(self, x, y):
        out = {}
        for (i1, i2), a in x.items():
            for (j1, j2), b in y.items():
                c1, m1 = self.mono_mult(self.monos[i1], self.monos[j1])
                c2, m2 = self.mono_mult(self.monos[i2], self.monos[j2])
                if m1 is None or m2 is None or c1 == 0 or c2 == 0:
                    continue
                key = (self.index[m1], self.index[m2])
                out[key] = out.get(key, self.sc(0)) + a * b * c1 * c2
        return {k: v for k, v in out.items() if not v.is_zero()}

    def build(self, factor, gen_coproduct, gen_antipode, counit_gen, rho, G, name):
        """``factor(mono)`` lists generator names whose product is the monomial."""
        one_idx = 0
        mul = {}
        for i in range(self.n):
            for j in range(self.n):
                c, mo = self.mono_mult(self.monos[i], self.monos[j])
                if mo is not None and c != 0:
                    mul[(i, j)] = [(self.index[mo], self.sc(c))]
        comul, antipode, counit = {}, [], []
        for i, mo in enumerate(self.monos):
            t = {(one_idx, one_idx): self.sc(1)}
            sv = {one_idx: self.sc(1)}
            e = self.sc(1)
            for g in factor(mo):
                t = self.tmult(t, gen_coproduct[g])
                sv = self.mult(gen_antipode[g], sv)
                e = e * counit_gen[g]
            comul[i] = [(j, k, c) for (j, k), c in sorted(t.items())]
            antipode.append([sv.get(j, self.sc(0)) for j in range(self.n)])
            counit.append(e)
        unit = [self.sc(1 if i == one_idx else 0) for i in range(self.n)]
        return HopfData(
            field_order=self.m, basis=self.names, mul=mul, unit=unit, comul=comul,
            counit=counit, antipode=antipode, rho=rho, G=G, name=name,
        )


def group_algebra(n: int) -> HopfData:
    """k[Z_n] with trivial R-matrix and G = 1."""
    monos = list(range(n))
    names = ["1"] + [f"g^{j}" if j > 1 else "g" for j in range(1, n)]
    alg = MonomialAlgebra(monos, names, lambda a, b: (1, (a + b) % n))
    gens = {"g": {(1 % n, 1 % n): alg.sc(1)}}
    return alg.build(
        factor=lambda mo: ["g"] * mo,
        gen_coproduct=gens,
        gen_antipode={"g": {(n - 1) % n: alg.sc(1)}},
        counit_gen={"g": alg.sc(1)},
        rho={(0, 0): 1},
        G=[1] + [0] * (n - 1),
        name=f"zn{n}",
    )


def sweedler(alpha=Fraction(1)) -> HopfData:
    """Sweedler's 4-dimensional algebra with R-matrix R_alpha and G = g."""
    monos = [(0, 0), (1, 0), (0, 1), (1, 1)]  # g^a x^b
    names = ["1", "g", "x", "gx"]

    def mm(p, q):
        (a, b), (c, d) = p, q
        if b + d > 1:
            return 0, None
        return (-1) ** (b * c), ((a + c) % 2, b + d)

    alg = MonomialAlgebra(monos, names, mm)
    ix = alg.index
    one, g, x, gx = ix[(0, 0)], ix[(1, 0)], ix[(0, 1)], ix[(1, 1)]
    h = Fraction(1, 2)
    rho = {
        (one, one): h, (one, g): h, (g, one): h, (g, g): -h,
        (x, x): alpha * h, (gx, x): alpha * h, (gx, gx): alpha * h, (x, gx): -alpha * h,
    }
    return alg.build(
        factor=lambda mo: ["g"] * mo[0] + ["x"] * mo[1],
        gen_coproduct={
            "g": {(g, g): alg.sc(1)},
            "x": {(x, one): alg.sc(1), (g, x): alg.sc(1)},
        },
        gen_antipode={"g": {g: alg.sc(1)}, "x": {gx: alg.sc(-1)}},
        counit_gen={"g": alg.sc(1), "x": alg.sc(0)},
        rho=rho,
        G=[0, 1, 0, 0],
        name="sweedler",
    )


def uq_sl2_i_monomials(m=4):
    # K^a E^b F^c with K^2 = 1, E^2 = F^2 = 0, KE = -EK, KF = -FK, EF = FE
    monos = [(a, b, c) for b in (0, 1) for c in (0, 1) for a in (0, 1)]
    monos.sort(key=lambda t: (t[1] + t[2], t[1], t[2], t[0]))
    names = []
    for a, b, c in monos:
        s = ("K" if a else "") + ("E" if b else "") + ("F" if c else "")
        names.append(s or "1")

    def mm(p, q):
        (a, b, c), (a2, b2, c2) = p, q
        if b + b2 > 1 or c + c2 > 1:
            return 0, None
        return (-1) ** (a2 * (b + c)), ((a + a2) % 2, b + b2, c + c2)

    return MonomialAlgebra(monos, names, mm, m=m)


def uq_sl2_i(rho, G, name="uq_sl2_i"):
    alg = uq_sl2_i_monomials()
    ix = alg.index
    one, K, E, F = ix[(0, 0, 0)], ix[(1, 0, 0)], ix[(0, 1, 0)], ix[(0, 0, 1)]
    KE, KF = ix[(1, 1, 0)], ix[(1, 0, 1)]
    return alg.build(
        factor=lambda mo: ["K"] * mo[0] + ["E"] * mo[1] + ["F"] * mo[2],
        gen_coproduct={
            "K": {(K, K): alg.sc(1)},
            "E": {(E, K): alg.sc(1), (one, E): alg.sc(1)},
            "F": {(F, one): alg.sc(1), (K, F): alg.sc(1)},
        },
        gen_antipode={"K": {K: alg.sc(1)}, "E": {KE: alg.sc(1)}, "F": {KF: alg.sc(-1)}},
        counit_gen={"K": alg.sc(1), "E": alg.sc(0), "F": alg.sc(0)},
        rho=rho,
        G=G,
        name=name,
    )


def uq_sl2_i_ribbon() -> HopfData:
    """U_q(sl2) at q = i modulo K^2 = 1, with R = R_K (1 + (q^-1 - q) E (x) F) and G = K.

    R_K = (1 (x) 1 + 1 (x) K + K (x) 1 - K (x) K) / 2. The quasitriangular
    structures of this algebra form a four-parameter family; this member is
    the one whose nilpotent part is E (x) F as for the usual quantum group.
    """
    alg = uq_sl2_i_monomials()
    ix = alg.index
    one, K, E, F = ix[(0, 0, 0)], ix[(1, 0, 0)], ix[(0, 1, 0)], ix[(0, 0, 1)]
    KE, KF = ix[(1, 1, 0)], ix[(1, 0, 1)]
    h = Fraction(1, 2)
    q = Scalar.zeta(4)
    c = (q.inverse() - q) * h  # coefficient after expanding R_K (1 + c' E (x) F)
    rho = {
        (one, one): h, (one, K): h, (K, one): h, (K, K): -h,
        (E, F): c, (E, KF): c, (KE, F): c, (KE, KF): -c,
    }
    G = [0] * alg.n
    G[K] = 1
    return uq_sl2_i(rho=rho, G=G)


def main(argv=None):
    OUT.mkdir(parents=True, exist_ok=True)
    algebras = [(group_algebra(n), f"group algebra of Z_{n}, trivial R-matrix, G = 1") for n in range(1, 9)]
    algebras.append((sweedler(), "Sweedler 4-dimensional algebra, R_alpha with alpha = 1, G = g"))
    algebras.append((uq_sl2_i_ribbon(), "U_q(sl2) at q = i (z = i) modulo K^2 = 1; R = R_K (1 + (q^-1 - q) E (x) F); G = K"))
    for H, desc in algebras:
        bad = [f"{r.title}.{n}" for r in validate(H) for n in r.failed()]
        if bad:
            print(f"{H.name}: FAILED {bad}", file=sys.stderr)
            return 1
        save_algebra(H, OUT / f"{H.name}.json", desc)
        print(f"wrote {H.name}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
