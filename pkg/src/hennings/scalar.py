"""Exact arithmetic in cyclotomic fields and a formal square-root extension.

``Scalar`` is an element of Q(zeta_m) stored as rational coefficients of a
polynomial in ``z`` reduced modulo the m-th cyclotomic polynomial.
``RootScalar`` adjoins two commuting formal roots ``r`` and ``s`` with
``r**2 = a`` and ``s**2 = b`` for fixed scalars ``a`` and ``b``.
"""

from __future__ import annotations

import cmath
import re
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "Scalar",
    "RootScalar",
    "cyclotomic_poly",
    "parse_scalar",
    "ScalarError",
    "OrderMismatch",
    "ContextMismatch",
    "NonInvertibleRoot",
]


class ScalarError(ArithmeticError):
    pass


class OrderMismatch(ScalarError):
    pass


class ContextMismatch(ScalarError):
    pass


class NonInvertibleRoot(ScalarError, ZeroDivisionError):
    pass


# -- integer polynomial helpers (lists, lowest degree first) ---------------


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return _trim(out)


def _poly_divmod(p, q):
    p = _trim(p)
    q = _trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    rem = [Fraction(c) for c in p]
    lead = Fraction(q[-1])
    while len(rem) >= len(q) and rem:
        shift = len(rem) - len(q)
        c = rem[-1] / lead
        quot[shift] = c
        for i, b in enumerate(q):
            rem[shift + i] -= c * b
        rem = _trim(rem)
    return _trim(quot), rem


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Coefficients of Phi_m, lowest degree first.

    Computed as (z^m - 1) divided by Phi_d for every proper divisor d of m.
    """
    if m < 1:
        raise ValueError("cyclotomic order must be positive")
    p = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            p, rem = _poly_divmod(p, list(cyclotomic_poly(d)))
            assert not rem
    return tuple(int(c) for c in p)


@lru_cache(maxsize=None)
def _reduction_table(m: int) -> tuple[tuple[Fraction, ...], ...]:
    """Rows give z^k mod Phi_m for k < max(2*deg - 1, m)."""
    phi = cyclotomic_poly(m)
    deg = len(phi) - 1
    rows = []
    cur = [Fraction(0)] * deg
    cur[0] = Fraction(1)
    for _ in range(max(2 * deg - 1, m)):
        rows.append(tuple(cur))
        # multiply by z then reduce with the monic Phi_m
        top = cur[-1]
        nxt = [Fraction(0)] + cur[:-1]
        if top:
            for i in range(deg):
                nxt[i] -= top * phi[i]
        cur = nxt
    return tuple(rows)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


class Scalar:
    """Element of Q(zeta_m); immutable and hashable."""

    __slots__ = ("m", "coeffs", "_hash")

    def __init__(self, m: int, coeffs=None):
        deg = len(cyclotomic_poly(m)) - 1
        if coeffs is None:
            coeffs = ()
        coeffs = [_as_fraction(c) for c in coeffs]
        if len(coeffs) > deg:
            coeffs = _reduce(m, coeffs)
        else:
            coeffs = coeffs + [Fraction(0)] * (deg - len(coeffs))
        self.m = m
        self.coeffs = tuple(coeffs)
        self._hash = None

    # constructors
    @classmethod
    def from_rational(cls, m: int, x) -> "Scalar":
        return cls(m, [_as_fraction(x)])

    @classmethod
    def zeta(cls, m: int, power: int = 1) -> "Scalar":
        power %= m
        c = [0] * (power + 1)
        c[power] = 1
        return cls(m, c)

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.m != self.m:
                raise OrderMismatch(f"Q(zeta_{self.m}) vs Q(zeta_{other.m})")
            return other
        if isinstance(other, (int, Fraction)):
            return Scalar(self.m, [other])
        return NotImplemented

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, Scalar) else other
        if o is NotImplemented:
            return NotImplemented
        return self.m == o.m and self.coeffs == o.coeffs

    def __hash__(self):
        if self._hash is None:
            if all(c == 0 for c in self.coeffs[1:]):
                self._hash = hash(self.coeffs[0])
            else:
                self._hash = hash((self.m, self.coeffs))
        return self._hash

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Scalar._raw(self.m, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw(self.m, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Scalar._raw(self.m, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Scalar._raw(self.m, tuple(a * other for a in self.coeffs))
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a, b = self.coeffs, o.coeffs
        if len(a) == 1:
            return Scalar._raw(self.m, (a[0] * b[0],))
        prod = [Fraction(0)] * (2 * len(a) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return Scalar._raw(self.m, tuple(_reduce(self.m, prod)))

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero scalar")
        if len(self.coeffs) == 1:
            return Scalar._raw(self.m, (1 / self.coeffs[0],))
        # extended Euclid in Q[z]: find t with t*self = 1 mod Phi_m
        r0, r1 = list(cyclotomic_poly(self.m)), _trim(self.coeffs)
        t0, t1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            qt = _poly_mul(q, t1)
            n = max(len(t0), len(qt))
            t0, t1 = t1, _trim(
                [(t0[i] if i < len(t0) else 0) - (qt[i] if i < len(qt) else 0) for i in range(n)]
            )
        c = r1[0]
        return Scalar(self.m, [x / c for x in t1])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = Scalar(self.m, [1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "Scalar":
        """Image under zeta -> zeta^-1 (complex conjugation)."""
        total = Scalar(self.m)
        for i, c in enumerate(self.coeffs):
            if c:
                total = total + Scalar.zeta(self.m, -i) * c
        return total

    def to_complex(self) -> complex:
        w = cmath.exp(2j * cmath.pi / self.m)
        return sum(complex(c) * w**i for i, c in enumerate(self.coeffs))

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def __str__(self):
        return format_poly(self.coeffs)

    def __repr__(self):
        return f"Scalar({self.m}, {format_poly(self.coeffs)!r})"

    @classmethod
    def _raw(cls, m, coeffs):
        obj = object.__new__(cls)
        obj.m = m
        obj.coeffs = coeffs
        obj._hash = None
        return obj


def _reduce(m: int, coeffs) -> list[Fraction]:
    table = _reduction_table(m)
    deg = len(table[0])
    out = [Fraction(0)] * deg
    for k, c in enumerate(coeffs):
        if not c:
            continue
        if k < deg:
            out[k] += c
        else:
            row = table[k] if k < len(table) else table[k % m]
            for i, r in enumerate(row):
                if r:
                    out[i] += c * r
    return out


def format_poly(coeffs) -> str:
    parts = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
        mag = abs(c)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{mag}*{mono}"
        else:
            body = f"{mag}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


_TERM = re.compile(
    r"\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*(\*)?\s*)?(z(?:\s*\^\s*(\d+))?)?\s*"
)


def parse_scalar(text, m: int) -> Scalar:
    """Parse a polynomial literal in ``z`` such as ``"1/2 - 1/2*z^2"``."""
    if isinstance(text, (int, Fraction)):
        return Scalar(m, [text])
    s = str(text).strip()
    if not s:
        raise ValueError("empty scalar literal")
    coeffs: dict[int, Fraction] = {}
    pos = 0
    first = True
    while pos < len(s):
        mt = _TERM.match(s, pos)
        if not mt or mt.end() == pos:
            raise ValueError(f"bad scalar literal {text!r} at column {pos}")
        sign, num, star, zpart, exp = mt.groups()
        if num is None and zpart is None:
            raise ValueError(f"bad scalar literal {text!r} at column {pos}")
        if sign is None and not first:
            raise ValueError(f"missing operator in scalar literal {text!r} at column {pos}")
        if star and zpart is None:
            raise ValueError(f"dangling '*' in scalar literal {text!r}")
        c = Fraction(num) if num is not None else Fraction(1)
        if sign == "-":
            c = -c
        k = 0 if zpart is None else (int(exp) if exp is not None else 1)
        coeffs[k] = coeffs.get(k, Fraction(0)) + c
        pos = mt.end()
        first = False
    dense = [Fraction(0)] * (max(coeffs) + 1)
    for k, c in coeffs.items():
        dense[k] += c
    return Scalar(m, dense)


class RootScalar:
    """``c00 + c10*r + c01*s + c11*r*s`` with ``r**2 = a``, ``s**2 = b``.

    ``ctx`` is the pair ``(a, b)``. In the invariant layer ``a`` is the
    integral of the ribbon element and ``b`` that of its inverse.
    """

    __slots__ = ("parts", "ctx")

    def __init__(self, parts, ctx):
        a, b = ctx
        parts = tuple(parts)
        if len(parts) != 4:
            raise ValueError("RootScalar needs four parts")
        m = a.m
        self.parts = tuple(p if isinstance(p, Scalar) else Scalar(m, [p]) for p in parts)
        self.ctx = (a, b)

    @classmethod
    def extend(cls, x: Scalar, ctx) -> "RootScalar":
        zero = Scalar(x.m)
        return cls((x, zero, zero, zero), ctx)

    @classmethod
    def root(cls, which: str, ctx) -> "RootScalar":
        zero, one = Scalar(ctx[0].m), Scalar(ctx[0].m, [1])
        idx = {"r": 1, "s": 2}[which]
        parts = [zero] * 4
        parts[idx] = one
        return cls(parts, ctx)

    @classmethod
    def pow_half(cls, which: str, k: int, ctx) -> "RootScalar":
        """``r**k`` or ``s**k`` for any integer ``k``."""
        base = ctx[0] if which == "r" else ctx[1]
        if k < 0 and base.is_zero():
            raise NonInvertibleRoot(f"{which} has square zero")
        half, odd = divmod(k, 2)
        value = cls.extend(base**half, ctx)
        if odd:
            value = value * cls.root(which, ctx)
        return value

    def _check(self, other: "RootScalar"):
        if self.ctx != other.ctx:
            raise ContextMismatch("root contexts differ")

    def _lift(self, other):
        if isinstance(other, RootScalar):
            self._check(other)
            return other
        if isinstance(other, (Scalar, int, Fraction)):
            if not isinstance(other, Scalar):
                other = Scalar(self.ctx[0].m, [other])
            return RootScalar.extend(other, self.ctx)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return RootScalar([x + y for x, y in zip(self.parts, o.parts)], self.ctx)

    __radd__ = __add__

    def __neg__(self):
        return RootScalar([-x for x in self.parts], self.ctx)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        a, b = self.ctx
        p00, p10, p01, p11 = self.parts
        q00, q10, q01, q11 = o.parts
        ab = a * b
        c00 = p00 * q00 + a * p10 * q10 + b * p01 * q01 + ab * p11 * q11
        c10 = p00 * q10 + p10 * q00 + b * (p01 * q11 + p11 * q01)
        c01 = p00 * q01 + p01 * q00 + a * (p10 * q11 + p11 * q10)
        c11 = p00 * q11 + p11 * q00 + p10 * q01 + p01 * q10
        return RootScalar((c00, c10, c01, c11), self.ctx)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("use pow_half for negative powers of the roots")
        out = RootScalar.extend(Scalar(self.ctx[0].m, [1]), self.ctx)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, RootScalar):
            return self.ctx == other.ctx and self.parts == other.parts
        if isinstance(other, (Scalar, int, Fraction)):
            return self == RootScalar.extend(
                other if isinstance(other, Scalar) else Scalar(self.ctx[0].m, [other]), self.ctx
            )
        return NotImplemented

    def __hash__(self):
        return hash((self.parts, self.ctx))

    def support(self) -> frozenset[str]:
        """Which of the monomials 1, r, s, rs carry nonzero coefficients."""
        names = ("1", "r", "s", "rs")
        return frozenset(n for n, p in zip(names, self.parts) if not p.is_zero())

    def scalar_part(self) -> Scalar | None:
        """The value as a plain Scalar when no root monomial is present."""
        if self.support() <= {"1"}:
            return self.parts[0]
        return None

    def to_complex(self) -> complex:
        a, b = self.ctx
        r = cmath.sqrt(a.to_complex())
        s = cmath.sqrt(b.to_complex())
        p = [x.to_complex() for x in self.parts]
        return p[0] + p[1] * r + p[2] * s + p[3] * r * s

    def __str__(self):
        terms = []
        for name, p in zip(("", "r", "s", "r*s"), self.parts):
            if p.is_zero():
                continue
            body = f"({p})" if name else str(p)
            terms.append(f"{body}*{name}" if name else body)
        return " + ".join(terms) if terms else "0"

    __repr__ = __str__
