"""Right integrals, the associated trace, and the unimodularity test."""

from __future__ import annotations

from . import linalg
from .hopf import HopfData, HopfError, Report
from .scalar import Scalar

__all__ = [
    "Functional",
    "NoIntegral",
    "NonUniqueIntegral",
    "right_integral",
    "right_integral_space",
    "check_integral_properties",
    "check_trace_theorem",
    "trace_functional",
    "integral_elements",
    "check_unimodular",
]


class NoIntegral(HopfError):
    pass


class NonUniqueIntegral(HopfError):
    pass


class Functional:
    """Linear functional x -> sum coeffs[i] * x[i]."""

    __slots__ = ("H", "coeffs")

    def __init__(self, H: HopfData, coeffs):
        self.H = H
        self.coeffs = tuple(H.scalar(c) for c in coeffs)

    def __call__(self, x) -> Scalar:
        x = getattr(x, "coeffs", x)
        total = self.H._zero
        for a, b in zip(self.coeffs, x):
            if not a.is_zero() and not b.is_zero():
                total = total + a * b
        return total

    def scaled(self, c) -> "Functional":
        c = self.H.scalar(c)
        return Functional(self.H, [c * a for a in self.coeffs])

    def __eq__(self, other):
        if not isinstance(other, Functional):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "Functional(" + ", ".join(str(c) for c in self.coeffs) + ")"



def _integral_system(H: HopfData):
    # row (i, t): sum_j lam_j [coeff of e_j (x) e_t in Delta(e_i)] - lam_i [e_t in 1] = 0
    n = H.dim
    rows = []
    for i in range(n):
        block = [[H._zero] * n for _ in range(n)]
        for j, k, c in H.comul[i]:
            block[k][j] = block[k][j] + c
        for t in range(n):
            if not H.unit[t].is_zero():
                block[t][i] = block[t][i] - H.unit[t]
            rows.append(block[t])
    return rows


def right_integral_space(H: HopfData) -> list[list[Scalar]]:
    """Basis of all right integrals, as coefficient vectors."""
    return linalg.nullspace(_integral_system(H), H.dim, H.field_order)


def right_integral(H: HopfData) -> Functional:
    """The right integral normalised so its first nonzero coefficient is 1."""
    space = right_integral_space(H)
    if not space:
        raise NoIntegral("no nonzero right integral; algebra data is corrupt")
    if len(space) > 1:
        raise NonUniqueIntegral(f"right integral space has dimension {len(space)}")
    v = space[0]
    lead = next(c for c in v if not c.is_zero())
    return Functional(H, [c / lead for c in v])


def trace_functional(H: HopfData, lam: Functional, x) -> Scalar:
    """tr(x) = lam(G x)."""
    x = getattr(x, "coeffs", x)
    return lam(H.mult(H.G, x))


def check_integral_properties(H: HopfData, lam: Functional) -> Report:
    rep = Report("integral")
    n = H.dim
    E = [H.basis_vec(i) for i in range(n)]
    defining = all(
        H.scale(lam(E[i]), H.unit)
        == _sum(H, [H.scale(c * lam.coeffs[j], E[k]) for j, k, c in H.comul[i]])
        for i in range(n)
    )
    rep.add("right_integral", defining, "(lam (x) 1) Delta(x) = lam(x) 1")
    prop1 = all(
        lam(H.mult(E[i], E[j])) == lam(H.mult(H.s(E[j], 2), E[i])) for i in range(n) for j in range(n)
    )
    rep.add("twisted_trace", prop1, "lam(xy) = lam(s^2(y) x)")
    g = H.mult(H.G, H.G)
    prop2 = all(lam(H.mult(g, x)) == lam(H.s(x)) for x in E)
    rep.add("antipode_twist", prop2, "lam(G^2 x) = lam(s(x))")
    return rep


def check_trace_theorem(H: HopfData, lam: Functional) -> Report:
    rep = Report("trace")
    n = H.dim
    E = [H.basis_vec(i) for i in range(n)]
    tr = lambda x: trace_functional(H, lam, x)  # noqa: E731
    rep.add(
        "cyclic",
        all(tr(H.mult(E[i], E[j])) == tr(H.mult(E[j], E[i])) for i in range(n) for j in range(n)),
        "tr(xy) = tr(yx)",
    )
    rep.add("antipode_invariant", all(tr(H.s(x)) == tr(x) for x in E), "tr(s(x)) = tr(x)")
    return rep


def _sum(H, vecs):
    out = H.zero
    for v in vecs:
        out = H.add(out, v)
    return out


def integral_elements(H: HopfData, side: str) -> list[list[Scalar]]:
    """Basis of left (x L = eps(x) L) or right (L x = eps(x) L) integral elements."""
    n = H.dim
    rows = []
    for i in range(n):
        # matrix of L -> e_i L (or L e_i) minus eps(e_i) id
        cols = [
            H.mult_basis(i, j) if side == "left" else H.mult_basis(j, i) for j in range(n)
        ]
        for t in range(n):
            row = [cols[j][t] for j in range(n)]
            row[t] = row[t] - H.counit[i]
            rows.append(row)
    return linalg.nullspace(rows, n, H.field_order)


def check_unimodular(H: HopfData) -> Report:
    rep = Report("unimodular")
    left = integral_elements(H, "left")
    right = integral_elements(H, "right")
    rep.add("left_integral_line", len(left) == 1, f"dimension {len(left)}")
    rep.add("right_integral_line", len(right) == 1, f"dimension {len(right)}")
    same = (
        len(left) == len(right) == 1
        and linalg.rank([left[0], right[0]], H.dim, H.field_order) == 1
    )
    rep.add("left_equals_right", same)
    return rep
