"""Finite-dimensional Hopf algebras given by structure constants.

Coefficient vectors are plain tuples of :class:`Scalar`; ``AlgebraElement``
and ``TensorElement`` are thin immutable wrappers used at the public surface.

Index conventions for the structure tensors:

* ``mul[(i, j)]`` lists ``(k, c)`` with ``e_i e_j = sum c e_k``
* ``comul[i]`` lists ``(j, k, c)`` with ``Delta(e_i) = sum c e_j (x) e_k``
* ``antipode[i][j]`` is the coefficient of ``e_j`` in ``s(e_i)``
* ``rho`` maps ``(i, j)`` to the coefficient of ``e_i (x) e_j``
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from . import linalg
from .scalar import Scalar

__all__ = [
    "HopfError",
    "NotInvertible",
    "Report",
    "HopfData",
    "AlgebraElement",
    "TensorElement",
    "check_hopf_axioms",
    "check_quasitriangular",
    "check_ribbon",
    "drinfeld_u",
    "ribbon_element",
]


class HopfError(Exception):
    pass


class NotInvertible(HopfError):
    pass


@dataclass
class Report:
    """Ordered pass/fail entries for a family of identities."""

    title: str
    entries: list[tuple[str, bool, str]] = field(default_factory=list)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.entries.append((name, bool(passed), detail))

    @property
    def ok(self) -> bool:
        return all(p for _, p, _ in self.entries)

    def failed(self) -> list[str]:
        return [n for n, p, _ in self.entries if not p]

    def __bool__(self):
        return self.ok

    def lines(self) -> list[str]:
        out = []
        for name, passed, detail in self.entries:
            line = f"{self.title}.{name}: {'PASS' if passed else 'FAIL'}"
            if detail:
                line += f" ({detail})"
            out.append(line)
        return out

    def __str__(self):
        return "\n".join(self.lines())

    def as_dict(self) -> dict:
        return {
            "title": self.title,
            "ok": self.ok,
            "entries": [{"name": n, "pass": p, "detail": d} for n, p, d in self.entries],
        }


class HopfData:
    """Structure constants of a Hopf algebra plus optional ribbon data."""

    def __init__(
        self,
        *,
        field_order: int,
        basis: list[str],
        mul,
        unit,
        comul,
        counit,
        antipode,
        rho=None,
        G=None,
        name: str = "",
    ):
        m = field_order
        n = len(basis)
        self.field_order = m
        self.dim = n
        self.basis = list(basis)
        self.name = name
        self._zero = Scalar(m)
        self._one = Scalar(m, [1])

        def sc(c):
            return c if isinstance(c, Scalar) else Scalar(m, [c])

        table: dict[tuple[int, int], list[tuple[int, Scalar]]] = {}
        for (i, j), terms in dict(mul).items():
            terms = [(k, sc(c)) for k, c in terms if not sc(c).is_zero()]
            if terms:
                table[(i, j)] = terms
        self.mul = table
        self.unit = tuple(sc(c) for c in unit)
        co: dict[int, list[tuple[int, int, Scalar]]] = {i: [] for i in range(n)}
        for i, terms in dict(comul).items():
            co[i] = [(j, k, sc(c)) for j, k, c in terms if not sc(c).is_zero()]
        self.comul = co
        self.counit = tuple(sc(c) for c in counit)
        self.antipode = tuple(tuple(sc(c) for c in row) for row in antipode)
        self.rho = {ij: sc(c) for ij, c in dict(rho or {}).items() if not sc(c).is_zero()}
        self.G = tuple(sc(c) for c in G) if G is not None else self.unit
        self._spow = {0: tuple(tuple(self._one if i == j else self._zero for j in range(n)) for i in range(n)),
                      1: self.antipode}
        if len(self.unit) != n or len(self.counit) != n or len(self.antipode) != n:
            raise HopfError("structure tensor sizes do not match the basis")

    # -- vectors ---------------------------------------------------------

    @property
    def zero(self) -> tuple[Scalar, ...]:
        return (self._zero,) * self.dim

    @property
    def one(self) -> tuple[Scalar, ...]:
        return self.unit

    def basis_vec(self, i: int) -> tuple[Scalar, ...]:
        v = [self._zero] * self.dim
        v[i] = self._one
        return tuple(v)

    def scalar(self, c) -> Scalar:
        return c if isinstance(c, Scalar) else Scalar(self.field_order, [c])

    def element(self, coeffs) -> "AlgebraElement":
        return AlgebraElement(self, coeffs)

    def e(self, name_or_index) -> "AlgebraElement":
        i = self.basis.index(name_or_index) if isinstance(name_or_index, str) else name_or_index
        return AlgebraElement(self, self.basis_vec(i))

    # -- products --------------------------------------------------------

    def mult(self, x, y) -> tuple[Scalar, ...]:
        out = [self._zero] * self.dim
        nz_y = [(j, b) for j, b in enumerate(y) if not b.is_zero()]
        for i, a in enumerate(x):
            if a.is_zero():
                continue
            for j, b in nz_y:
                terms = self.mul.get((i, j))
                if terms:
                    ab = a * b
                    for k, c in terms:
                        out[k] = out[k] + ab * c
        return tuple(out)

    def mult_basis(self, i: int, j: int) -> tuple[Scalar, ...]:
        out = [self._zero] * self.dim
        for k, c in self.mul.get((i, j), ()):
            out[k] = out[k] + c
        return tuple(out)

    def mult_many(self, *xs):
        out = self.one
        for x in xs:
            out = self.mult(out, x)
        return out

    def add(self, x, y):
        return tuple(a + b for a, b in zip(x, y))

    def sub(self, x, y):
        return tuple(a - b for a, b in zip(x, y))

    def scale(self, c, x):
        c = self.scalar(c)
        return tuple(c * a for a in x)

    def power(self, x, k: int):
        if k < 0:
            return self.power(self.inverse(x), -k)
        out = self.one
        base = x
        while k:
            if k & 1:
                out = self.mult(out, base)
            base = self.mult(base, base)
            k >>= 1
        return out

    def inverse(self, x):
        """Two-sided inverse by solving x*y = 1; raises NotInvertible."""
        n = self.dim
        cols = [self.mult(x, self.basis_vec(j)) for j in range(n)]
        rows = [[cols[j][k] for j in range(n)] for k in range(n)]
        y = linalg.solve(rows, list(self.one), self.field_order)
        if y is None or self.mult(y, x) != self.one:
            raise NotInvertible("element has no inverse")
        return tuple(y)

    def counit_of(self, x) -> Scalar:
        total = self._zero
        for a, e in zip(x, self.counit):
            if not a.is_zero() and not e.is_zero():
                total = total + a * e
        return total

    # -- antipode --------------------------------------------------------

    def s_matrix(self, k: int):
        """Matrix of s^k (rows are images of basis vectors)."""
        if k in self._spow:
            return self._spow[k]
        if k < 0:
            if -1 not in self._spow:
                inv = linalg.inverse_matrix([list(r) for r in self.antipode], self.field_order)
                if inv is None:
                    raise NotInvertible("antipode matrix is singular")
                self._spow[-1] = tuple(tuple(r) for r in inv)
            step = self._spow[-1]
            prev = self.s_matrix(k + 1)
        else:
            step = self.antipode
            prev = self.s_matrix(k - 1)
        mat = tuple(self._apply_matrix(step, row) for row in prev)
        self._spow[k] = mat
        return mat

    def _apply_matrix(self, mat, x):
        out = [self._zero] * self.dim
        for i, a in enumerate(x):
            if a.is_zero():
                continue
            for j, c in enumerate(mat[i]):
                if not c.is_zero():
                    out[j] = out[j] + a * c
        return tuple(out)

    def s(self, x, k: int = 1):
        if k == 0:
            return tuple(x)
        return self._apply_matrix(self.s_matrix(k), x)

    # -- coproduct -------------------------------------------------------

    def coproduct(self, x) -> "TensorElement":
        terms: dict[tuple[int, int], Scalar] = {}
        for i, a in enumerate(x):
            if a.is_zero():
                continue
            for j, k, c in self.comul[i]:
                terms[(j, k)] = terms.get((j, k), self._zero) + a * c
        return TensorElement(self, 2, terms)

    def rho_element(self) -> "TensorElement":
        return TensorElement(self, 2, dict(self.rho))

    def G_vec(self):
        return self.G

    def __repr__(self):
        return f"HopfData({self.name or 'unnamed'}, dim={self.dim}, field_order={self.field_order})"


class AlgebraElement:
    """Element of A as coefficients over ``H.basis``."""

    __slots__ = ("H", "coeffs")

    def __init__(self, H: HopfData, coeffs):
        coeffs = tuple(H.scalar(c) for c in coeffs)
        if len(coeffs) != H.dim:
            raise ValueError("coefficient vector has the wrong length")
        self.H = H
        self.coeffs = coeffs

    def _other(self, y):
        if isinstance(y, AlgebraElement):
            return y.coeffs
        return self.H.scale(y, self.H.one)

    def __add__(self, y):
        return AlgebraElement(self.H, self.H.add(self.coeffs, self._other(y)))

    __radd__ = __add__

    def __sub__(self, y):
        return AlgebraElement(self.H, self.H.sub(self.coeffs, self._other(y)))

    def __neg__(self):
        return AlgebraElement(self.H, self.H.scale(-1, self.coeffs))

    def __mul__(self, y):
        if isinstance(y, AlgebraElement):
            return AlgebraElement(self.H, self.H.mult(self.coeffs, y.coeffs))
        return AlgebraElement(self.H, self.H.scale(y, self.coeffs))

    def __rmul__(self, c):
        return AlgebraElement(self.H, self.H.scale(c, self.coeffs))

    def __pow__(self, k: int):
        return AlgebraElement(self.H, self.H.power(self.coeffs, k))

    def inverse(self):
        return AlgebraElement(self.H, self.H.inverse(self.coeffs))

    def s(self, k: int = 1):
        return AlgebraElement(self.H, self.H.s(self.coeffs, k))

    def counit(self) -> Scalar:
        return self.H.counit_of(self.coeffs)

    def coproduct(self) -> "TensorElement":
        return self.H.coproduct(self.coeffs)

    def __eq__(self, y):
        if isinstance(y, AlgebraElement):
            return self.coeffs == y.coeffs
        if isinstance(y, (int, Scalar)):
            return self.coeffs == self.H.scale(y, self.H.one)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        terms = [f"({c})*{b}" for c, b in zip(self.coeffs, self.H.basis) if not c.is_zero()]
        return " + ".join(terms) if terms else "0"


class TensorElement:
    """Sparse element of the k-fold tensor power of A."""

    __slots__ = ("H", "k", "terms")

    def __init__(self, H: HopfData, k: int, terms):
        self.H = H
        self.k = k
        clean = {}
        for idx, c in dict(terms).items():
            if len(idx) != k:
                raise ValueError("tensor index of wrong arity")
            c = H.scalar(c)
            if not c.is_zero():
                clean[tuple(idx)] = c
        self.terms = clean

    @classmethod
    def pure(cls, H: HopfData, *vecs) -> "TensorElement":
        terms: dict = {}
        nz = [[(i, a) for i, a in enumerate(v) if not a.is_zero()] for v in vecs]
        for combo in product(*nz):
            idx = tuple(i for i, _ in combo)
            c = H._one
            for _, a in combo:
                c = c * a
            terms[idx] = terms.get(idx, H._zero) + c
        return cls(H, len(vecs), terms)

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for idx, c in other.terms.items():
            terms[idx] = terms.get(idx, self.H._zero) + c
        return TensorElement(self.H, self.k, terms)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = self.H.scalar(c)
        return TensorElement(self.H, self.k, {i: c * v for i, v in self.terms.items()})

    def _check(self, other):
        if other.k != self.k:
            raise ValueError("tensor arity mismatch")

    def __mul__(self, other: "TensorElement") -> "TensorElement":
        """Factorwise product in the tensor power algebra."""
        self._check(other)
        H = self.H
        acc: dict = {}
        for ia, ca in self.terms.items():
            for ib, cb in other.terms.items():
                facs = [H.mul.get((a, b)) for a, b in zip(ia, ib)]
                if any(f is None for f in facs):
                    continue
                cab = ca * cb
                for combo in product(*facs):
                    c = cab
                    for _, x in combo:
                        c = c * x
                    idx = tuple(k for k, _ in combo)
                    acc[idx] = acc.get(idx, H._zero) + c
        return TensorElement(H, self.k, acc)

    def map_leg(self, leg: int, fn) -> "TensorElement":
        """Apply a linear map (basis index -> vector) on one tensor leg."""
        H = self.H
        acc: dict = {}
        for idx, c in self.terms.items():
            img = fn(idx[leg])
            for j, a in enumerate(img):
                if a.is_zero():
                    continue
                new = idx[:leg] + (j,) + idx[leg + 1:]
                acc[new] = acc.get(new, H._zero) + c * a
        return TensorElement(H, self.k, acc)

    def coproduct_leg(self, leg: int) -> "TensorElement":
        """Apply Delta on one leg, raising the arity by one."""
        H = self.H
        acc: dict = {}
        for idx, c in self.terms.items():
            for j, k, a in H.comul[idx[leg]]:
                new = idx[:leg] + (j, k) + idx[leg + 1:]
                acc[new] = acc.get(new, H._zero) + c * a
        return TensorElement(H, self.k + 1, acc)

    def place(self, legs: tuple[int, ...], k: int) -> "TensorElement":
        """Embed into arity k putting factor t at position legs[t], units elsewhere."""
        H = self.H
        unit = [(i, a) for i, a in enumerate(H.unit) if not a.is_zero()]
        free = [p for p in range(k) if p not in legs]
        acc: dict = {}
        for idx, c in self.terms.items():
            for combo in product(unit, repeat=len(free)):
                new = [None] * k
                cc = c
                for p, (i, a) in zip(free, combo):
                    new[p] = i
                    cc = cc * a
                for t, p in enumerate(legs):
                    new[p] = idx[t]
                new = tuple(new)
                acc[new] = acc.get(new, H._zero) + cc
        return TensorElement(H, k, acc)

    def flip(self) -> "TensorElement":
        return TensorElement(self.H, self.k, {idx[::-1]: c for idx, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.k == other.k and self.terms == other.terms

    def __hash__(self):
        return hash((self.k, frozenset(self.terms.items())))

    def __repr__(self):
        b = self.H.basis
        parts = [f"({c})*" + "(x)".join(b[i] for i in idx) for idx, c in sorted(self.terms.items())]
        return " + ".join(parts) if parts else "0"


# -- axiom checks ---------------------------------------------------------


def _unit_tensor(H: HopfData, k: int) -> TensorElement:
    return TensorElement.pure(H, *([H.unit] * k))


def check_hopf_axioms(H: HopfData) -> Report:
    rep = Report("hopf")
    n = H.dim
    E = [H.basis_vec(i) for i in range(n)]
    prods = {(i, j): H.mult_basis(i, j) for i in range(n) for j in range(n)}

    assoc = all(
        H.mult(prods[(i, j)], E[k]) == H.mult(E[i], prods[(j, k)])
        for i in range(n) for j in range(n) for k in range(n)
    )
    rep.add("associativity", assoc)

    unit = all(H.mult(H.unit, E[i]) == E[i] == H.mult(E[i], H.unit) for i in range(n))
    rep.add("unit", unit)

    cop = [H.coproduct(E[i]) for i in range(n)]
    coassoc = all(c.coproduct_leg(0) == c.coproduct_leg(1) for c in cop)
    rep.add("coassociativity", coassoc)

    def counit_leg(t: TensorElement, leg: int):
        out = [H._zero] * n
        for (a, b), c in t.terms.items():
            keep, drop = (b, a) if leg == 0 else (a, b)
            e = H.counit[drop]
            if not e.is_zero():
                out[keep] = out[keep] + c * e
        return tuple(out)

    counit = all(counit_leg(cop[i], 0) == E[i] == counit_leg(cop[i], 1) for i in range(n))
    rep.add("counit", counit)

    delta_unit = H.coproduct(H.unit) == _unit_tensor(H, 2)
    delta_mult = all(
        H.coproduct(prods[(i, j)]) == cop[i] * cop[j] for i in range(n) for j in range(n)
    )
    rep.add("coproduct_algebra_map", delta_unit and delta_mult)

    eps_mult = all(
        H.counit_of(prods[(i, j)]) == H.counit[i] * H.counit[j] for i in range(n) for j in range(n)
    )
    rep.add("counit_algebra_map", eps_mult and H.counit_of(H.unit) == 1)

    def antipode_identity(side: int) -> bool:
        for i in range(n):
            acc = H.zero
            for j, k, c in H.comul[i]:
                x = H.s(E[j]) if side == 0 else E[j]
                y = E[k] if side == 0 else H.s(E[k])
                acc = H.add(acc, H.scale(c, H.mult(x, y)))
            if acc != H.scale(H.counit[i], H.unit):
                return False
        return True

    rep.add("antipode_left", antipode_identity(0), "m(s(x)1 Delta) = eps 1")
    rep.add("antipode_right", antipode_identity(1), "m(1(x)s Delta) = eps 1")
    anti = all(
        H.s(prods[(i, j)]) == H.mult(H.s(E[j]), H.s(E[i])) for i in range(n) for j in range(n)
    )
    rep.add("antipode_antihomomorphism", anti)
    rep.add("antipode_unit", H.s(H.unit) == H.unit, "s(1) = 1")
    rep.add("counit_antipode", all(H.counit_of(H.s(x)) == H.counit_of(x) for x in E), "eps s = eps")
    return rep


def _rho_inverse_candidates(H: HopfData):
    rho = H.rho_element()
    left = rho.map_leg(0, lambda i: H.s(H.basis_vec(i)))
    right = rho.map_leg(1, lambda i: H.s(H.basis_vec(i), -1))
    return rho, left, right


def check_quasitriangular(H: HopfData) -> Report:
    rep = Report("quasitriangular")
    n = H.dim
    rho = H.rho_element()
    if not rho.terms:
        rep.add("rho_present", False, "rho is zero")
        return rep
    inter = True
    for i in range(n):
        d = H.coproduct(H.basis_vec(i))
        if rho * d != d.flip() * rho:
            inter = False
            break
    rep.add("intertwines_coproduct", inter, "rho Delta(x) = Delta'(x) rho")

    r12 = rho.place((0, 1), 3)
    r13 = rho.place((0, 2), 3)
    r23 = rho.place((1, 2), 3)
    rep.add("coproduct_second_leg", r13 * r12 == rho.coproduct_leg(1), "rho13 rho12 = (1 (x) Delta) rho")
    rep.add("coproduct_first_leg", r13 * r23 == rho.coproduct_leg(0), "rho13 rho23 = (Delta (x) 1) rho")

    _, inv_s, inv_sinv = _rho_inverse_candidates(H)
    one2 = _unit_tensor(H, 2)
    rep.add("inverse_s_left", rho * inv_s == one2 == inv_s * rho, "(s (x) 1) rho is the inverse")
    rep.add("inverse_s_right", rho * inv_sinv == one2 == inv_sinv * rho, "(1 (x) s^-1) rho is the inverse")
    rep.add("yang_baxter", r12 * r13 * r23 == r23 * r13 * r12)
    return rep


def drinfeld_u(H: HopfData):
    """u = sum s(e') e for rho = sum e (x) e'; raises NotInvertible."""
    acc = H.zero
    for (i, j), c in H.rho.items():
        acc = H.add(acc, H.scale(c, H.mult(H.s(H.basis_vec(j)), H.basis_vec(i))))
    H.inverse(acc)
    return acc


def ribbon_element(H: HopfData):
    """v = G^-1 u."""
    return H.mult(H.inverse(H.G), drinfeld_u(H))


def check_ribbon(H: HopfData) -> Report:
    rep = Report("ribbon")
    n = H.dim
    G = H.G
    grouplike = H.coproduct(G) == TensorElement.pure(H, G, G) and H.counit_of(G) == 1
    rep.add("G_grouplike", grouplike, "Delta(G) = G (x) G, eps(G) = 1")
    try:
        u = drinfeld_u(H)
        uinv = H.inverse(u)
        Ginv = H.inverse(G)
    except NotInvertible as exc:
        rep.add("invertible", False, str(exc))
        return rep
    E = [H.basis_vec(i) for i in range(n)]
    rep.add("s2_by_u", all(H.s(x, 2) == H.mult_many(u, x, uinv) for x in E), "s^2(x) = u x u^-1")
    v = H.mult(Ginv, u)
    rep.add("v_central", all(H.mult(v, x) == H.mult(x, v) for x in E))
    rep.add("s_u", H.s(u) == H.mult_many(Ginv, u, Ginv), "s(u) = G^-1 u G^-1")
    rep.add("s_v", H.s(v) == v)
    rep.add("s2_by_G", all(H.s(x, 2) == H.mult_many(G, x, Ginv) for x in E), "s^2(x) = G x G^-1")
    return rep
