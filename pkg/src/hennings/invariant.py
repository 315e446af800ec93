"""The normalised 3-manifold invariant and the corpus runner.

    INV(K) = TR(K) * r^-(c+sigma) * s^-(c-sigma)

with formal roots ``r^2 = lam(v)`` and ``s^2 = lam(v^-1)``, ``c`` the number of
components and ``sigma`` the signature of the linking matrix. Since
``c + sigma`` and ``c - sigma`` have the same parity, only the product ``r*s``
can survive; it is replaced by the principal square root of
``lam(v) lam(v^-1)`` whenever that root lies in the coefficient field.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from math import isqrt
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

from .diagram import MorseWord, linking_matrix, parse_morse, signature, trace_components, unknot
from .evaluate import (
    close_normal_form,
    concentrate,
    curl_power_normal_form,
    decorate,
    eval_bruteforce,
)
from .hopf import HopfData, HopfError, ribbon_element
from .integral import Functional, check_unimodular, right_integral
from .scalar import ContextMismatch, RootScalar, Scalar

__all__ = [
    "InvariantResult",
    "NormalizationUndefined",
    "NotUnimodular",
    "OracleMismatch",
    "Comparison",
    "hennings_inv",
    "lens_space_inv",
    "compare_invariants",
    "normalization_data",
    "rescale_result",
    "principal_sqrt",
    "CorpusReport",
    "run_corpus",
    "load_corpus",
    "CorpusError",
]


class NormalizationUndefined(HopfError):
    pass


class NotUnimodular(HopfError):
    pass


class OracleMismatch(AssertionError):
    pass


class CorpusError(ValueError):
    pass


@dataclass(frozen=True)
class InvariantResult:
    tr_value: Scalar
    components: int
    signature: int
    lam_v: Scalar
    lam_vinv: Scalar
    inv: RootScalar | None
    inv_squared: Scalar | None
    algebra: str = ""

    def lines(self) -> list[str]:
        out = [
            f"TR={self.tr_value}",
            f"c={self.components}",
            f"sigma={self.signature}",
            f"lam_v={self.lam_v}",
            f"lam_vinv={self.lam_vinv}",
        ]
        if self.inv is not None:
            out.append(f"INV={self.inv}")
            out.append(f"INV^2={self.inv_squared}")
        return out

    def as_dict(self) -> dict:
        return {
            "algebra": self.algebra,
            "TR": str(self.tr_value),
            "c": self.components,
            "sigma": self.signature,
            "lam_v": str(self.lam_v),
            "lam_vinv": str(self.lam_vinv),
            "INV": None if self.inv is None else str(self.inv),
            "INV^2": None if self.inv_squared is None else str(self.inv_squared),
        }


@lru_cache(maxsize=None)
def _unimodular(H: HopfData) -> bool:
    return check_unimodular(H).ok


def normalization_data(H: HopfData, lam: Functional) -> tuple[Scalar, Scalar]:
    """(lam(v), lam(v^-1)) for the ribbon element v."""
    v = ribbon_element(H)
    v = getattr(v, "coeffs", v)
    return lam(v), lam(H.inverse(v))


def _assemble(H, lam, tr, c, sigma, force) -> InvariantResult:
    if not force and not _unimodular(H):
        raise NotUnimodular(f"{H.name or 'algebra'} is not unimodular; the value would not be invariant")
    a, b = normalization_data(H, lam)
    if a.is_zero() or b.is_zero():
        if not force:
            raise NormalizationUndefined(f"lam(v) = {a}, lam(v^-1) = {b}; normalisation needs both nonzero")
        return InvariantResult(tr, c, sigma, a, b, None, None, H.name)
    ctx = (a, b)
    inv = RootScalar.extend(tr, ctx)
    inv = inv * RootScalar.pow_half("r", -(c + sigma), ctx) * RootScalar.pow_half("s", -(c - sigma), ctx)
    sq = tr * tr * a ** (-(c + sigma)) * b ** (-(c - sigma))
    return InvariantResult(tr, c, sigma, a, b, _resolve_rs(inv), sq, H.name)


def principal_sqrt(x: Scalar) -> Scalar | None:
    """Principal square root of a rational ``x`` when it lies in the field."""
    if not x.is_rational():
        return None
    q = x.coeffs[0]
    num, den = abs(q.numerator), q.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn != num or rd * rd != den:
        return None
    root = Scalar(x.m, [Fraction(rn, rd)])
    if q >= 0:
        return root
    if x.m % 4:
        return None
    return root * Scalar.zeta(x.m, x.m // 4)


def _resolve_rs(inv: RootScalar) -> RootScalar:
    # r and s only ever occur together; replace r*s by sqrt(ab) when that is in the field
    p00, p10, p01, p11 = inv.parts
    if p11.is_zero() or not (p10.is_zero() and p01.is_zero()):
        return inv
    t = principal_sqrt(inv.ctx[0] * inv.ctx[1])
    if t is None:
        return inv
    return RootScalar((p00 + p11 * t, p10, p01, Scalar(p11.m)), inv.ctx)


def hennings_inv(
    H: HopfData,
    lam: Functional | None,
    word: MorseWord,
    force: bool = False,
    oracle: bool = False,
) -> InvariantResult:
    """INV of surgery on ``word`` in the blackboard framing.

    ``force`` skips the unimodularity gate and returns TR without INV when the
    normalisation is undefined. ``oracle`` cross-checks TR by full expansion.
    """
    lam = lam or right_integral(H)
    dd = decorate(H, word)
    tr = concentrate(H, lam, dd)
    if oracle:
        other = eval_bruteforce(H, lam, word, budget=len(word.crossings()))
        if other != tr:
            raise OracleMismatch(f"contraction gave {tr}, full expansion gave {other}")
    traces = list(dd.components)
    sigma = signature(linking_matrix(traces)) if traces else 0
    return _assemble(H, lam, tr, len(traces), sigma, force)


def lens_space_inv(H: HopfData, lam: Functional | None, n: int, force: bool = False) -> InvariantResult:
    """INV of surgery on the n-framed unknot, via powers of the curl."""
    lam = lam or right_integral(H)
    nf = curl_power_normal_form(H, n)
    tr = close_normal_form(H, lam, nf)
    sigma = (n > 0) - (n < 0)
    return _assemble(H, lam, tr, 1, sigma, force)


def lens_word(n: int) -> MorseWord:
    return unknot(n)


def rescale_result(res: InvariantResult, k: int) -> RootScalar:
    """Express ``res.inv`` in the root context of the integral ``k * lam``.

    The two roots always appear with equal parity, so only the monomials 1
    and r*s occur. The new roots satisfy r' s' = k r s, so the r*s
    coefficient is divided by k.
    """
    if res.inv is None:
        raise NormalizationUndefined("no INV to rescale")
    p00, p10, p01, p11 = res.inv.parts
    if not (p10.is_zero() and p01.is_zero()):
        raise ValueError("unexpected single-root monomial")
    a, b = res.inv.ctx
    ctx = (a * k, b * k)
    return RootScalar((p00, p10, p01, p11 / k), ctx)


class Comparison(enum.Enum):
    EQUAL = "Equal"
    DISTINCT = "Distinct"
    INDETERMINATE_SIGN = "IndeterminateSign"

    def __str__(self):
        return self.value


def _has_root(x: RootScalar) -> bool:
    return bool(x.support() - {"1"})


def compare_invariants(a: InvariantResult, b: InvariantResult) -> Comparison:
    """Compare two invariants computed with the same algebra and integral.

    Values free of square roots are compared outright. When a root monomial
    is involved and only the squares agree, the outcome depends on the branch
    and is reported as indeterminate.
    """
    if a.inv is None or b.inv is None:
        raise NormalizationUndefined("both results need INV")
    if a.inv.ctx != b.inv.ctx:
        raise ContextMismatch("invariants come from different normalisations")
    if a.inv == b.inv:
        return Comparison.EQUAL
    if a.inv_squared != b.inv_squared:
        return Comparison.DISTINCT
    if not _has_root(a.inv) and not _has_root(b.inv):
        return Comparison.DISTINCT
    return Comparison.INDETERMINATE_SIGN


# -- corpus ----------------------------------------------------------------


@dataclass
class CorpusReport:
    results: dict = field(default_factory=dict)  # algebra -> group -> file -> InvariantResult
    violations: list = field(default_factory=list)
    distinctness: dict = field(default_factory=dict)  # algebra -> (g1, g2) -> Comparison
    skipped: dict = field(default_factory=dict)  # algebra -> reason

    @property
    def ok(self) -> bool:
        return not self.violations

    def lines(self) -> list[str]:
        out = []
        for alg, reason in sorted(self.skipped.items()):
            out.append(f"{alg}: skipped ({reason})")
        for alg, groups in sorted(self.results.items()):
            for g, files in sorted(groups.items()):
                vals = sorted({str(r.inv) for r in files.values()})
                out.append(f"{alg} {g}: {len(files)} diagrams, INV={' | '.join(vals)}")
            for (g1, g2), cmp in sorted(self.distinctness.get(alg, {}).items()):
                out.append(f"{alg} {g1} vs {g2}: {cmp}")
        for v in self.violations:
            out.append(f"VIOLATION {v}")
        out.append("corpus: " + ("PASS" if self.ok else "FAIL"))
        return out

    def as_dict(self) -> dict:
        return {
            "ok": self.ok,
            "skipped": self.skipped,
            "violations": self.violations,
            "results": {
                alg: {g: {f: r.as_dict() for f, r in files.items()} for g, files in groups.items()}
                for alg, groups in self.results.items()
            },
            "distinctness": {
                alg: {f"{a}|{b}": str(c) for (a, b), c in pairs.items()}
                for alg, pairs in self.distinctness.items()
            },
        }


def load_corpus(directory) -> dict[str, dict[str, MorseWord]]:
    """Read ``<dir>/<manifold-id>/*.morse`` into {manifold-id: {file: word}}."""
    root = Path(directory)
    if not root.is_dir():
        raise FileNotFoundError(f"{root}: not a directory")
    groups: dict = {}
    for sub in sorted(p for p in root.iterdir() if p.is_dir()):
        for f in sorted(sub.glob("*.morse")):
            try:
                groups.setdefault(sub.name, {})[f.name] = parse_morse(f.read_text(), require_closed=True)
            except ValueError as exc:
                raise CorpusError(f"{f}: {exc}") from exc
    return groups


def run_corpus(directory, algebras: dict[str, HopfData] | None = None) -> CorpusReport:
    """Evaluate every corpus diagram under every usable algebra.

    Within a manifold group all INV values must agree; across groups the
    comparison outcomes are recorded.
    """
    from .files import shipped_algebra, shipped_algebra_paths

    if algebras is None:
        algebras = {name: shipped_algebra(name) for name in shipped_algebra_paths()}
    groups = load_corpus(directory)
    rep = CorpusReport()
    for name, H in algebras.items():
        lam = right_integral(H)
        if not _unimodular(H):
            rep.skipped[name] = "not unimodular"
            continue
        a, b = normalization_data(H, lam)
        if a.is_zero() or b.is_zero():
            rep.skipped[name] = "lam(v) or lam(v^-1) vanishes"
            continue
        per_group = {}
        for g, files in groups.items():
            per_group[g] = {f: hennings_inv(H, lam, w) for f, w in files.items()}
            vals = list(per_group[g].items())
            for f, r in vals[1:]:
                if r.inv != vals[0][1].inv:
                    rep.violations.append(f"{name} {g}: {f} INV={r.inv} but {vals[0][0]} INV={vals[0][1].inv}")
        rep.results[name] = per_group
        reps = {g: next(iter(files.values())) for g, files in per_group.items() if files}
        names = sorted(reps)
        rep.distinctness[name] = {
            (g1, g2): compare_invariants(reps[g1], reps[g2])
            for i, g1 in enumerate(names)
            for g2 in names[i + 1 :]
        }
    return rep
