"""Link and tangle evaluation with R-matrix beads.

Each crossing is replaced by the two tensor legs of rho. For ``xr`` the beads
``e`` and ``e'`` sit on the outgoing strands (left, right); for ``xl`` the
beads ``s(e)`` and ``e'`` sit on the incoming strands. Walking a component
from a basepoint on an upward segment, a bead met after extrema of total
turning ``k`` is slid back to the basepoint as ``s^(-k)``. Beads met later
land further left, so the concentrated element is

    x = s^(-k_n)(b_n) ... s^(-k_1)(b_1)

and the component contributes ``lam(G^(d+1) x)`` where ``d`` is its Whitney
degree. The offset ``d+1`` is what makes the value independent of the
basepoint (via ``lam(xy) = lam(s^2(y) x)``) and of the traversal direction
(via ``lam(G^2 x) = lam(s(x))``).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .diagram import (
    ComponentTrace,
    DiagramError,
    Extremum,
    MorseWord,
    NotClosed,
    Passage,
    trace_components,
    trace_tangle,
    whitney_degree,
)
from .hopf import HopfData
from .integral import Functional
from .scalar import Scalar

__all__ = [
    "Bead",
    "DecoratedDiagram",
    "TangleNormalForm",
    "BudgetExceeded",
    "ArityError",
    "decorate",
    "concentrate",
    "eval_bruteforce",
    "tangle_normal_form",
    "compose_normal_forms",
    "close_normal_form",
    "identity_normal_form",
    "curl_power_normal_form",
]

# extra G power inside lam for a closed component: lam(G^(d + DEGREE_OFFSET) x)
DEGREE_OFFSET = 1


class BudgetExceeded(RuntimeError):
    pass


class ArityError(DiagramError):
    pass


@dataclass(frozen=True)
class Bead:
    crossing: int  # slice index of the crossing
    leg: int  # 0 for e, 1 for e'
    shift: int  # antipode power fixed by the crossing type
    k: int  # signed extremum count from the basepoint

    @property
    def exponent(self) -> int:
        return self.shift - self.k


@dataclass(frozen=True)
class DecoratedDiagram:
    word: MorseWord
    components: tuple[ComponentTrace, ...]

    @property
    def beads(self) -> list[tuple[int, list[Bead]]]:
        return [(c.id, bead_word(c)) for c in self.components]

    def degrees(self) -> list[int]:
        return [whitney_degree(c) for c in self.components]

    def with_basepoints(self, offsets: dict[int, int]) -> "DecoratedDiagram":
        comps = tuple(c.rebased(offsets[c.id]) if c.id in offsets else c for c in self.components)
        return DecoratedDiagram(self.word, comps)

    def with_reversed(self, ids) -> "DecoratedDiagram":
        comps = tuple(c.reversed() if c.id in ids else c for c in self.components)
        return DecoratedDiagram(self.word, comps)


def bead_word(trace: ComponentTrace) -> list[Bead]:
    out = []
    k = 0
    for ev in trace.events:
        if isinstance(ev, Extremum):
            k += ev.turn
        else:
            out.append(Bead(ev.slice, ev.leg, ev.shift, k))
    return out


def decorate(H: HopfData, word: MorseWord) -> DecoratedDiagram:
    if not word.closed:
        raise NotClosed("decorate needs a closed diagram")
    return DecoratedDiagram(word, tuple(trace_components(word)))


class _Beads:
    """Cache of s^p(e_i) vectors."""

    def __init__(self, H: HopfData):
        self.H = H
        self._cache: dict = {}

    def __call__(self, i: int, p: int):
        key = (i, p)
        if key not in self._cache:
            self._cache[key] = self.H.s(self.H.basis_vec(i), p) if p else self.H.basis_vec(i)
        return self._cache[key]


def _rho_terms(H: HopfData):
    return [(i, j, c) for (i, j), c in sorted(H.rho.items()) if not c.is_zero()]


def _g_power(H: HopfData, n: int):
    return H.power(H.G, n)


def concentrate(H: HopfData, lam: Functional, dd: DecoratedDiagram) -> Scalar:
    """TR of a decorated closed diagram by sparse contraction over crossings.

    Components are processed one at a time. The state maps the set of
    crossings with one leg already placed (and the basis index waiting for the
    other leg) to an accumulated coefficient; within a component the state
    carries the partial bead product instead.
    """
    terms = _rho_terms(H)
    bead = _Beads(H)
    one = H.scalar(1)
    states: dict[tuple, Scalar] = {(): one}
    for comp in dd.components:
        d = whitney_degree(comp)
        g = _g_power(H, d + DEGREE_OFFSET)
        partial = {key: H.scale(c, H.one) for key, c in states.items()}
        for b in bead_word(comp):
            nxt: dict = {}
            for key, vec in partial.items():
                pending = dict(key)
                if b.crossing in pending:
                    idx = pending.pop(b.crossing)
                    _acc(H, nxt, tuple(sorted(pending.items())), H.mult(bead(idx, b.exponent), vec))
                    continue
                for i, j, c in terms:
                    mine, other = (i, j) if b.leg == 0 else (j, i)
                    pending[b.crossing] = other
                    k2 = tuple(sorted(pending.items()))
                    _acc(H, nxt, k2, H.scale(c, H.mult(bead(mine, b.exponent), vec)))
            partial = nxt
        states = {}
        for key, vec in partial.items():
            val = lam(H.mult(g, vec))
            if not val.is_zero():
                states[key] = states.get(key, H._zero) + val
        states = {k: v for k, v in states.items() if not v.is_zero()}
    leftover = [k for k in states if k]
    if leftover:
        raise DiagramError(f"unpaired crossing legs: {leftover[0]}")
    return states.get((), H._zero)


def _acc(H, table, key, vec):
    if key in table:
        table[key] = H.add(table[key], vec)
    else:
        table[key] = vec


def eval_bruteforce(H: HopfData, lam: Functional, word: MorseWord, budget: int = 3) -> Scalar:
    """Independent evaluation by full expansion of every crossing.

    The bead product is carried forward along each component: passing an
    extremum of turning t applies s^t to it, a bead met while heading up is
    multiplied on the left and one met heading down on the right. After a
    full loop the carried element is conjugated by G^(2d) relative to the
    concentrated one, which leaves lam(G^(d+1) .) unchanged.
    """
    if not word.closed:
        raise NotClosed("eval_bruteforce needs a closed diagram")
    crossings = word.crossings()
    if len(crossings) > budget:
        raise BudgetExceeded(f"{len(crossings)} crossings exceed the budget of {budget}")
    traces = trace_components(word)
    terms = _rho_terms(H)
    total = H._zero
    for choice in product(terms, repeat=len(crossings)):
        assign = dict(zip(crossings, choice))
        coef = H.scalar(1)
        for _, _, c in choice:
            coef = coef * c
        value = coef
        for tr in traces:
            carried = H.one
            for ev in tr.events:
                if isinstance(ev, Extremum):
                    carried = H.s(carried, ev.turn)
                    continue
                i, j, _ = assign[ev.slice]
                b = H.basis_vec(i if ev.leg == 0 else j)
                if ev.shift:
                    b = H.s(b, ev.shift)
                carried = H.mult(b, carried) if ev.up else H.mult(carried, b)
            d = whitney_degree(tr)
            value = value * lam(H.mult(_g_power(H, d + DEGREE_OFFSET), carried))
            if value.is_zero():
                break
        total = total + value
    return total


# -- 1-1 tangles ---------------------------------------------------------------


@dataclass(frozen=True)
class TangleNormalForm:
    """The morphism w * G^d of a 1-1 tangle."""

    w: tuple
    d: int


def identity_normal_form(H: HopfData) -> TangleNormalForm:
    return TangleNormalForm(H.one, 0)


def tangle_normal_form(H: HopfData, word: MorseWord) -> TangleNormalForm:
    """Concentrate all beads of a single-strand 1-1 tangle at its bottom end.

    The bare curve with turning d is G^d, so F(T) = G^d x = s^(2d)(x) G^d.
    """
    if word.in_width != 1 or word.out_width != 1:
        raise ArityError(f"expected a 1-1 tangle, got {word.in_width}-{word.out_width}")
    strand, closed = trace_tangle(word)
    if closed:
        raise ArityError("tangle has closed components besides the strand")
    terms = _rho_terms(H)
    bead = _Beads(H)
    partial = {(): H.one}
    for b in bead_word(strand):
        nxt: dict = {}
        for key, vec in partial.items():
            pending = dict(key)
            if b.crossing in pending:
                idx = pending.pop(b.crossing)
                _acc(H, nxt, tuple(sorted(pending.items())), H.mult(bead(idx, b.exponent), vec))
                continue
            for i, j, c in terms:
                mine, other = (i, j) if b.leg == 0 else (j, i)
                pending[b.crossing] = other
                _acc(H, nxt, tuple(sorted(pending.items())), H.scale(c, H.mult(bead(mine, b.exponent), vec)))
        partial = nxt
    x = partial.get((), H.zero)
    d = whitney_degree(strand)
    return TangleNormalForm(H.s(x, 2 * d) if d else x, d)


def compose_normal_forms(H: HopfData, a: TangleNormalForm, b: TangleNormalForm) -> TangleNormalForm:
    """Normal form of ``a`` stacked on top of ``b``."""
    moved = H.s(b.w, 2 * a.d) if a.d else b.w
    return TangleNormalForm(H.mult(a.w, moved), a.d + b.d)


def close_normal_form(H: HopfData, lam: Functional, nf: TangleNormalForm) -> Scalar:
    """Value of the closure by a cup below and a cap to the right: lam(w G^d)."""
    return lam(H.mult(nf.w, _g_power(H, nf.d)))


def curl_power_normal_form(H: HopfData, n: int) -> TangleNormalForm:
    """Normal form of |n| stacked curls of sign sign(n), by repeated squaring."""
    from .diagram import curl_tangle

    result = identity_normal_form(H)
    if n == 0:
        return result
    base = tangle_normal_form(H, curl_tangle(1 if n > 0 else -1))
    k = abs(n)
    while k:
        if k & 1:
            result = compose_normal_forms(H, result, base)
        k >>= 1
        if k:
            base = compose_normal_forms(H, base, base)
    return result
