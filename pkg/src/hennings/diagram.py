"""Morse-word link and tangle diagrams.

A diagram is a bottom-to-top sequence of slices. Each slice acts at a strand
index ``i`` (0-based from the left):

``cup i``
    a local minimum creating strands ``i`` and ``i+1``
``cap i``
    a local maximum joining strands ``i`` and ``i+1``
``xr i`` / ``xl i``
    a crossing of strands ``i`` and ``i+1``. In ``xr`` the over-strand runs
    from the lower right to the upper left; in ``xl`` from the lower left to
    the upper right.

Components are traversed starting at the right leg of their lowest cup,
heading upward, so a plain circle runs counterclockwise. Turning
counterclockwise at an extremum counts +1/2 towards the Whitney degree,
clockwise -1/2.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import NamedTuple

__all__ = [
    "Slice",
    "MorseWord",
    "Passage",
    "Extremum",
    "ComponentTrace",
    "DiagramError",
    "MorseSyntaxError",
    "WidthError",
    "NotClosed",
    "parse_morse",
    "format_morse",
    "trace_components",
    "trace_tangle",
    "whitney_degree",
    "crossing_signs",
    "linking_matrix",
    "signature",
    "disjoint_union",
    "unknot",
    "curl_tangle",
    "blowup",
    "mirror",
    "rotate180",
    "stack",
    "insert_tangle",
    "writhe",
    "framings",
    "with_framings",
    "two_strand_link",
]

KINDS = ("cup", "cap", "xr", "xl")


class DiagramError(ValueError):
    pass


class MorseSyntaxError(DiagramError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col


class WidthError(DiagramError):
    pass


class NotClosed(DiagramError):
    pass


class Slice(NamedTuple):
    kind: str
    pos: int

    def __str__(self):
        return f"{self.kind} {self.pos}"


@dataclass(frozen=True)
class MorseWord:
    slices: tuple[Slice, ...]
    in_width: int = 0

    def __post_init__(self):
        object.__setattr__(self, "slices", tuple(Slice(*s) for s in self.slices))
        self.widths()  # validates

    def widths(self) -> list[int]:
        """Strand count at each level; level t lies just below slice t."""
        w = self.in_width
        out = [w]
        for t, (kind, i) in enumerate(self.slices):
            if kind not in KINDS:
                raise DiagramError(f"slice {t}: unknown kind {kind!r}")
            if kind == "cup":
                if not 0 <= i <= w:
                    raise WidthError(f"slice {t}: cup at {i} needs 0 <= i <= {w}")
                w += 2
            elif kind == "cap":
                if not 0 <= i <= w - 2:
                    raise WidthError(f"slice {t}: cap at {i} needs 0 <= i <= {w - 2}")
                w -= 2
            else:
                if not 0 <= i <= w - 2:
                    raise WidthError(f"slice {t}: crossing at {i} needs 0 <= i <= {w - 2}")
            out.append(w)
        return out

    @property
    def out_width(self) -> int:
        return self.widths()[-1]

    @property
    def closed(self) -> bool:
        return self.in_width == 0 and self.out_width == 0

    def crossings(self) -> list[int]:
        return [t for t, s in enumerate(self.slices) if s.kind in ("xr", "xl")]

    def __len__(self):
        return len(self.slices)

    def __str__(self):
        return format_morse(self)


_LINE = re.compile(r"^\s*([A-Za-z]+)\s+(-?\d+)\s*$")


def parse_morse(text: str, require_closed: bool = False) -> MorseWord:
    """Parse the diagram grammar.

    One slice per line (``/`` also separates slices), ``#`` starts a comment.
    An optional first statement ``in <n>`` declares the number of strands
    entering from below.
    """
    slices: list[Slice] = []
    in_width = 0
    w = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        col = 1
        for chunk in body.split("/"):
            stripped = chunk.strip()
            if stripped:
                start = col + (len(chunk) - len(chunk.lstrip()))
                mt = _LINE.match(stripped)
                if not mt:
                    raise MorseSyntaxError(f"cannot parse {stripped!r}", lineno, start)
                kind, num = mt.group(1).lower(), int(mt.group(2))
                if kind == "in":
                    if slices or w is not None:
                        raise MorseSyntaxError("'in' must precede all slices", lineno, start)
                    if num < 0:
                        raise MorseSyntaxError("negative input width", lineno, start)
                    in_width = num
                    w = num
                elif kind in KINDS:
                    if w is None:
                        w = in_width
                    try:
                        w = _advance(w, kind, num)
                    except WidthError as exc:
                        raise WidthError(f"line {lineno}, column {start}: {exc}") from None
                    slices.append(Slice(kind, num))
                else:
                    raise MorseSyntaxError(f"unknown slice kind {kind!r}", lineno, start)
            col += len(chunk) + 1
    word = MorseWord(tuple(slices), in_width)
    if require_closed and not word.closed:
        raise NotClosed(f"diagram has {word.in_width} inputs and {word.out_width} outputs")
    return word


def _advance(w: int, kind: str, i: int) -> int:
    if kind == "cup":
        if not 0 <= i <= w:
            raise WidthError(f"cup at {i} with {w} strands")
        return w + 2
    if not 0 <= i <= w - 2:
        raise WidthError(f"{kind} at {i} with {w} strands")
    return w - 2 if kind == "cap" else w


def format_morse(word: MorseWord) -> str:
    lines = [f"in {word.in_width}"] if word.in_width else []
    lines += [str(s) for s in word.slices]
    return "\n".join(lines) + "\n"


# -- tracing ---------------------------------------------------------------


class Passage(NamedTuple):
    """A strand passing through a crossing slice during traversal."""

    slice: int
    in_rel: int  # 0 = lower-left input, 1 = lower-right input
    out_rel: int
    up: bool
    over: bool
    leg: int  # R-matrix leg carried by the bead on this passage
    shift: int  # antipode power already applied to that bead

    @property
    def direction(self) -> tuple[int, int]:
        if self.up:
            return (self.out_rel - self.in_rel, 1)
        return (self.in_rel - self.out_rel, -1)

    def reversed(self) -> "Passage":
        return self._replace(up=not self.up)


class Extremum(NamedTuple):
    slice: int
    turn: int  # +1 counterclockwise, -1 clockwise
    is_max: bool

    def reversed(self) -> "Extremum":
        return self._replace(turn=-self.turn)


@dataclass(frozen=True)
class ComponentTrace:
    """One component, as the cyclic event sequence met while walking it.

    ``events`` starts at a point where the walk heads upward. For an open
    strand of a tangle the sequence runs from the bottom end to the top end.
    """

    id: int
    events: tuple
    closed: bool = True
    segments: frozenset = field(default=frozenset(), compare=False)

    @property
    def whitney_degree(self) -> int:
        return whitney_degree(self)

    @property
    def passages(self) -> list[Passage]:
        return [e for e in self.events if isinstance(e, Passage)]

    def upward_starts(self) -> list[int]:
        """Event offsets at which the walk is heading upward."""
        out = []
        up = True
        for j, e in enumerate(self.events):
            if up:
                out.append(j)
            if isinstance(e, Extremum):
                up = not e.is_max
        return out

    def rebased(self, offset: int) -> "ComponentTrace":
        if not self.closed:
            raise DiagramError("cannot move the basepoint of an open strand")
        if offset not in self.upward_starts():
            raise DiagramError(f"offset {offset} is not on an upward segment")
        ev = self.events[offset:] + self.events[:offset]
        return replace(self, events=ev)

    def reversed(self) -> "ComponentTrace":
        """The same component walked the other way, starting just after a minimum."""
        if not self.closed:
            raise DiagramError("cannot reverse an open strand")
        ev = tuple(e.reversed() for e in reversed(self.events))
        rev = replace(self, events=ev)
        # first event in ev is heading downward; restart after the first minimum
        for j, e in enumerate(ev):
            if isinstance(e, Extremum) and not e.is_max:
                k = (j + 1) % len(ev)
                return replace(rev, events=ev[k:] + ev[:k])
        raise DiagramError("closed component without a minimum")


class _Walker:
    def __init__(self, word: MorseWord):
        self.word = word
        self.widths = word.widths()
        self.n = len(word.slices)

    def up(self, L: int, p: int):
        """From segment (L, p) heading up: returns (event, state) or (None, None) at the top."""
        if L == self.n:
            return None, None
        kind, i = self.word.slices[L]
        if kind == "cup":
            return None, (L + 1, p if p < i else p + 2, True)
        if kind == "cap":
            if p in (i, i + 1):
                other = i if p == i + 1 else i + 1
                turn = 1 if p == i + 1 else -1
                return Extremum(L, turn, True), (L, other, False)
            return None, (L + 1, p if p < i else p - 2, True)
        if p in (i, i + 1):
            a = p - i
            b = 1 - a
            return self._passage(L, kind, a, b, True), (L + 1, i + b, True)
        return None, (L + 1, p, True)

    def down(self, L: int, p: int):
        if L == 0:
            return None, None
        t = L - 1
        kind, i = self.word.slices[t]
        if kind == "cup":
            if p in (i, i + 1):
                other = i if p == i + 1 else i + 1
                turn = 1 if p == i else -1
                return Extremum(t, turn, False), (L, other, True)
            return None, (t, p if p < i else p - 2, False)
        if kind == "cap":
            return None, (t, p if p < i else p + 2, False)
        if p in (i, i + 1):
            b = p - i
            a = 1 - b
            return self._passage(t, kind, a, b, False), (t, i + a, False)
        return None, (t, p, False)

    @staticmethod
    def _passage(t, kind, a, b, up):
        if kind == "xr":
            over = a == 1
            leg, shift = b, 0  # beads e, e' sit above the crossing
        else:
            over = a == 0
            leg, shift = a, (1 if a == 0 else 0)  # beads s(e), e' sit below
        return Passage(t, a, b, up, over, leg, shift)

    def walk(self, L, p, up, stop):
        events = []
        seen = set()
        state = (L, p, up)
        while True:
            L, p, up = state
            seen.add((L, p))
            ev, nxt = self.up(L, p) if up else self.down(L, p)
            if ev is not None:
                events.append(ev)
            if nxt is None:
                return events, seen, (L, p, up)
            state = nxt
            if stop(state):
                seen.add(state[:2])
                return events, seen, state


def trace_components(word: MorseWord) -> list[ComponentTrace]:
    """Partition a closed diagram into components (in order of lowest cup)."""
    if not word.closed:
        raise NotClosed("trace_components needs a closed diagram")
    walker = _Walker(word)
    covered: set = set()
    traces = []
    for t, (kind, i) in enumerate(word.slices):
        if kind != "cup" or (t + 1, i) in covered:
            continue
        start = (t + 1, i + 1, True)
        events, seen, _ = walker.walk(*start, stop=lambda s, st=start: s == st)
        covered |= seen
        traces.append(ComponentTrace(len(traces), tuple(events), True, frozenset(seen)))
    total = {(L, p) for L, w in enumerate(walker.widths) for p in range(w)}
    if covered != total:
        raise DiagramError("strand segments left untraced")
    return traces


def trace_tangle(word: MorseWord) -> tuple[ComponentTrace, list[ComponentTrace]]:
    """Trace a 1-1 tangle: the open strand plus any closed components."""
    if word.in_width != 1 or word.out_width != 1:
        raise DiagramError("expected a 1-1 tangle")
    walker = _Walker(word)
    events, seen, end = walker.walk(0, 0, True, stop=lambda s: False)
    if end[0] != walker.n or not end[2]:
        raise DiagramError("open strand does not run from bottom to top")
    strand = ComponentTrace(0, tuple(events), False, frozenset(seen))
    covered = set(seen)
    closed = []
    for t, (kind, i) in enumerate(word.slices):
        if kind != "cup" or (t + 1, i) in covered:
            continue
        start = (t + 1, i + 1, True)
        ev, s2, _ = walker.walk(*start, stop=lambda s, st=start: s == st)
        covered |= s2
        closed.append(ComponentTrace(1 + len(closed), tuple(ev), True, frozenset(s2)))
    return strand, closed


def whitney_degree(trace: ComponentTrace) -> int:
    total = sum(e.turn for e in trace.events if isinstance(e, Extremum))
    if total % 2:
        raise DiagramError("odd total turning; trace is not closed up")
    return total // 2


def _cross(o, u) -> int:
    z = o[0] * u[1] - o[1] * u[0]
    return (z > 0) - (z < 0)


def crossing_signs(traces: list[ComponentTrace]) -> dict[int, tuple[int, int, int]]:
    """Map crossing slice -> (sign, component of over-strand, component of under-strand)."""
    over, under = {}, {}
    for tr in traces:
        for ps in tr.passages:
            (over if ps.over else under)[ps.slice] = (tr.id, ps.direction)
    out = {}
    for t in over:
        (co, do), (cu, du) = over[t], under[t]
        out[t] = (_cross(do, du), co, cu)
    return out


def writhe(trace: ComponentTrace, traces=None) -> int:
    signs = crossing_signs(traces or [trace])
    return sum(s for s, a, b in signs.values() if a == b == trace.id)


def linking_matrix(word_or_traces) -> list[list[Fraction]]:
    traces = (
        trace_components(word_or_traces) if isinstance(word_or_traces, MorseWord) else word_or_traces
    )
    c = len(traces)
    index = {tr.id: k for k, tr in enumerate(traces)}
    mat = [[Fraction(0)] * c for _ in range(c)]
    for sign, a, b in crossing_signs(traces).values():
        i, j = index[a], index[b]
        if i == j:
            mat[i][i] += sign
        else:
            mat[i][j] += Fraction(sign, 2)
            mat[j][i] += Fraction(sign, 2)
    return mat


def signature(mat) -> int:
    """Signature of a symmetric rational matrix by congruence diagonalisation."""
    a = [[Fraction(x) for x in row] for row in mat]
    n = len(a)
    if any(a[i][j] != a[j][i] for i in range(n) for j in range(n)):
        raise ValueError("matrix is not symmetric")
    sig = 0
    while a:
        n = len(a)
        piv = next((i for i in range(n) if a[i][i] != 0), None)
        if piv is not None:
            p = a[piv][piv]
            sig += 1 if p > 0 else -1
            rest = [i for i in range(n) if i != piv]
            a = [[a[i][j] - a[i][piv] * a[piv][j] / p for j in rest] for i in rest]
            continue
        off = next(((i, j) for i in range(n) for j in range(i + 1, n) if a[i][j] != 0), None)
        if off is None:
            break  # zero matrix
        i, j = off
        # hyperbolic 2x2 pivot [[0, h], [h, 0]] contributes one + and one -
        h = a[i][j]
        rest = [k for k in range(n) if k not in (i, j)]
        # Schur complement with block inverse [[0, 1/h], [1/h, 0]]
        a = [
            [a[k][l] - (a[k][i] * a[j][l] + a[k][j] * a[i][l]) / h for l in rest]
            for k in rest
        ]
    return sig


# -- corpus operations -------------------------------------------------------


def stack(lower: MorseWord, upper: MorseWord) -> MorseWord:
    if lower.out_width != upper.in_width:
        raise WidthError("widths do not match for stacking")
    return MorseWord(lower.slices + upper.slices, lower.in_width)


def disjoint_union(a: MorseWord, b: MorseWord) -> MorseWord:
    """Place closed diagram ``b`` above closed diagram ``a``."""
    if not (a.closed and b.closed):
        raise NotClosed("disjoint_union needs closed diagrams")
    return MorseWord(a.slices + b.slices)


def curl_tangle(sign: int) -> MorseWord:
    """1-1 tangle with one curl of the given crossing sign (rotation -1)."""
    kind = "xl" if sign > 0 else "xr"
    return MorseWord((Slice("cup", 1), Slice(kind, 0), Slice("cap", 1)), in_width=1)


def insert_tangle(word: MorseWord, at: int, strand: int, tangle: MorseWord) -> MorseWord:
    """Splice a 1-1 tangle into strand ``strand`` just below slice ``at``."""
    if tangle.in_width != 1 or tangle.out_width != 1:
        raise DiagramError("only 1-1 tangles can be spliced")
    w = word.widths()[at]
    if not 0 <= strand < w:
        raise WidthError(f"strand {strand} out of range at level {at}")
    spliced = tuple(Slice(k, i + strand) for k, i in tangle.slices)
    return MorseWord(word.slices[:at] + spliced + word.slices[at:], word.in_width)


def unknot(framing: int = 0) -> MorseWord:
    """Unknot with ``framing`` curls of matching sign on its left leg."""
    word = MorseWord((Slice("cup", 0), Slice("cap", 0)))
    for _ in range(abs(framing)):
        word = insert_tangle(word, 1, 0, curl_tangle(framing))
    return word


def blowup(word: MorseWord, sign: int) -> MorseWord:
    """Add a distant unknot with framing +1 or -1."""
    if sign not in (1, -1):
        raise ValueError("blowup sign must be +1 or -1")
    return disjoint_union(word, unknot(sign))


def mirror(word: MorseWord) -> MorseWord:
    swap = {"xr": "xl", "xl": "xr", "cup": "cup", "cap": "cap"}
    return MorseWord(tuple(Slice(swap[k], i) for k, i in word.slices), word.in_width)


def rotate180(word: MorseWord) -> MorseWord:
    """Rotate the diagram by a half turn in the plane (an isotopy)."""
    widths = word.widths()
    out = []
    for t in reversed(range(len(word.slices))):
        kind, i = word.slices[t]
        top = widths[t + 1]
        if kind == "cup":
            out.append(Slice("cap", top - 2 - i))
        elif kind == "cap":
            out.append(Slice("cup", widths[t] - 2 - i))
        else:
            out.append(Slice(kind, top - 2 - i))
    return MorseWord(tuple(out), word.out_width)


def framings(word: MorseWord) -> list[int]:
    traces = trace_components(word)
    return [writhe(t, traces) for t in traces]


def with_framings(word: MorseWord, targets) -> MorseWord:
    """Add curls so that component ``k`` has blackboard framing ``targets[k]``.

    Curls go just above each component's lowest cup, which keeps the
    component numbering unchanged.
    """
    traces = trace_components(word)
    if len(targets) != len(traces):
        raise ValueError(f"{len(traces)} components but {len(targets)} framings")
    current = [writhe(t, traces) for t in traces]
    cups = [t for t, s in enumerate(word.slices) if s.kind == "cup"]
    starts = {}
    for t in cups:
        i = word.slices[t].pos
        for tr in traces:
            if tr.id not in starts and (t + 1, i + 1) in tr.segments:
                starts[tr.id] = (t, i)
    # insert from the top down so earlier slice indices stay valid
    for cid in sorted(starts, key=lambda c: -starts[c][0]):
        t, i = starts[cid]
        diff = targets[cid] - current[cid]
        for _ in range(abs(diff)):
            word = insert_tangle(word, t + 1, i + 1, curl_tangle(diff))
    return word


def two_strand_link(k: int) -> MorseWord:
    """Closure of the 2-strand braid with |k| crossings, positive when k > 0.

    Even k gives a two-component link with linking number k/2, odd k a knot.
    """
    kind = "xl" if k > 0 else "xr"
    mid = tuple(Slice(kind, 0) for _ in range(abs(k)))
    return MorseWord((Slice("cup", 0), Slice("cup", 1)) + mid + (Slice("cap", 1), Slice("cap", 0)))
