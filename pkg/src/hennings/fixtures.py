"""Curated diagrams for tests, demos and the corpus.

Handle slides enter only through the families below, each a pair of framed
links whose surgeries agree:

``slide_unlinked(a, b)``
    unknots framed ``a`` and ``b``; sliding the first over the second gives
    the closed 2-braid with ``2b`` crossings framed ``(b, a + b)``.
``slide_over_hopf(a, b, c)``
    a Hopf link framed ``(b, c)`` next to an unknot framed ``a``; sliding the
    unknot over the ``b`` component adds a parallel copy of it, framed
    ``a + b``, that also passes through the ``c`` component.
"""

from __future__ import annotations

from .diagram import (
    MorseWord,
    Slice,
    blowup,
    disjoint_union,
    parse_morse,
    rotate180,
    two_strand_link,
    unknot,
    with_framings,
)

__all__ = [
    "hopf_link",
    "clasp_link",
    "slide_unlinked",
    "slide_over_hopf",
    "handle_slide_pairs",
    "small_closed_fixtures",
    "isotopy_pairs",
    "tangle_pairs",
    "insert_r2",
    "insert_r3",
    "insert_snake",
    "corpus_groups",
]


def hopf_link(a: int = 0, b: int = 0) -> MorseWord:
    """Positive Hopf link with framings ``a`` and ``b``."""
    return with_framings(two_strand_link(2), [a, b])


def clasp_link(k: int) -> MorseWord:
    """Closed 2-braid with ``k`` crossings plus a circle around both strands.

    Components: 0 the circle, 1 and 2 the braid strands.
    """
    kind = "xl" if k > 0 else "xr"
    slices = [
        ("cup", 0), ("cup", 2), ("cup", 3),
        ("xl", 1), ("xl", 2), ("xr", 0), ("xr", 1), ("cap", 2),
    ]
    slices += [(kind, 0)] * abs(k)
    slices += [("cap", 1), ("cap", 0)]
    return MorseWord(tuple(Slice(*s) for s in slices))


def slide_unlinked(a: int, b: int) -> tuple[MorseWord, MorseWord]:
    before = disjoint_union(unknot(a), unknot(b))
    after = with_framings(two_strand_link(2 * b), [b, a + b])
    return before, after


def slide_over_hopf(a: int, b: int, c: int) -> tuple[MorseWord, MorseWord]:
    before = disjoint_union(hopf_link(b, c), unknot(a))
    after = with_framings(clasp_link(2 * b), [c, b, a + b])
    return before, after


SLIDE_UNLINKED = [(0, 1), (1, 1), (-1, 1), (2, 1), (1, -1), (0, -1), (-2, -1), (2, -1), (1, 2), (-1, -2)]
SLIDE_OVER_HOPF = [(1, 0, 1), (1, 1, 0), (-1, 1, 2), (2, -1, 1), (1, 1, 1)]


def handle_slide_pairs() -> list[tuple[str, MorseWord, MorseWord]]:
    out = []
    for a, b in SLIDE_UNLINKED:
        out.append((f"unlinked_a{a}_b{b}", *slide_unlinked(a, b)))
    for a, b, c in SLIDE_OVER_HOPF:
        out.append((f"hopf_a{a}_b{b}_c{c}", *slide_over_hopf(a, b, c)))
    return out


_SMALL = {
    "empty": "",
    "circle": "cup 0\ncap 0",
    "nested_circles": "cup 0\ncup 1\ncap 1\ncap 0",
    "snake": "cup 0\ncup 1\ncap 2\ncap 0",
    "curl_r": "cup 0\nxr 0\ncap 0",
    "curl_l": "cup 0\nxl 0\ncap 0",
    "curl_inner_l": "cup 0\ncup 1\nxl 0\ncap 1\ncap 0",
    "curl_inner_r": "cup 0\ncup 1\nxr 0\ncap 1\ncap 0",
    "curl_right_leg": "cup 0\ncup 1\nxr 1\ncap 0\ncap 0",
    "hopf_pos": "cup 0\ncup 1\nxl 0\nxl 0\ncap 1\ncap 0",
    "hopf_neg": "cup 0\ncup 1\nxr 0\nxr 0\ncap 1\ncap 0",
    "r2_unlink": "cup 0\ncup 1\nxl 0\nxr 0\ncap 1\ncap 0",
    "trefoil_r": "cup 0\ncup 1\nxr 0\nxr 0\nxr 0\ncap 1\ncap 0",
    "trefoil_l": "cup 0\ncup 1\nxl 0\nxl 0\nxl 0\ncap 1\ncap 0",
    "double_curl": "cup 0\nxr 0\nxr 0\ncap 0",
    "curl_pair_cancel": "cup 0\nxr 0\nxl 0\ncap 0",
    "two_curls_mixed": "cup 0\ncup 1\nxl 0\ncap 1\ncup 1\nxr 0\ncap 1\ncap 0",
    "two_circles_curled": "cup 0\nxr 0\ncap 0\ncup 0\nxl 0\ncap 0",
    "hopf_curl": "cup 0\ncup 1\nxl 0\nxl 0\ncup 0\nxr 0\ncap 0\ncap 1\ncap 0",
    "three_circles": "cup 0\ncap 0\ncup 0\ncup 1\ncap 1\ncap 0",
}


def small_closed_fixtures() -> dict[str, MorseWord]:
    """Closed diagrams with at most three crossings."""
    out = {name: parse_morse(text, require_closed=True) for name, text in _SMALL.items()}
    out["unknot_p1_blowup_m1"] = blowup(unknot(1), -1)
    out["unknot_p2"] = unknot(2)
    out["unknot_m3"] = unknot(-3)
    return out


def _splice(word: MorseWord, at: int, slices) -> MorseWord:
    return MorseWord(word.slices[:at] + tuple(Slice(*s) for s in slices) + word.slices[at:], word.in_width)


def insert_r2(word: MorseWord, at: int, i: int, first: str = "xr") -> MorseWord:
    """Insert a cancelling crossing pair on strands i, i+1 below slice ``at``."""
    other = "xl" if first == "xr" else "xr"
    return _splice(word, at, [(first, i), (other, i)])


def insert_r3(word: MorseWord, at: int, i: int, kind: str, side: int) -> MorseWord:
    """Insert one side of the braid relation on strands i..i+2."""
    seq = [(kind, i), (kind, i + 1), (kind, i)] if side == 0 else [(kind, i + 1), (kind, i), (kind, i + 1)]
    return _splice(word, at, seq)


def insert_snake(word: MorseWord, at: int, i: int, right: bool = True) -> MorseWord:
    """Insert a cup-cap zig-zag into strand ``i`` below slice ``at``."""
    seq = [("cup", i + 1), ("cap", i)] if right else [("cup", i), ("cap", i + 1)]
    return _splice(word, at, seq)


def isotopy_pairs() -> list[tuple[str, MorseWord, MorseWord]]:
    """Pairs of closed diagrams related by regular isotopy."""
    hopf = hopf_link(1, -1)
    clasp = clasp_link(2)
    pairs = []
    for first in ("xr", "xl"):
        pairs.append((f"r2_{first}_hopf", hopf, insert_r2(hopf, 2, 0, first)))
        pairs.append((f"r2_{first}_clasp", clasp, insert_r2(clasp, 8, 1, first)))
    base = MorseWord(tuple(Slice(*s) for s in [("cup", 0), ("cup", 2), ("cup", 2)]))
    for kind in ("xr", "xl"):
        a = insert_r3(base, 3, 1, kind, 0)
        b = insert_r3(base, 3, 1, kind, 1)
        # close the six strands pairwise after a twist so the result is linked
        tail = tuple(Slice(*s) for s in [(kind, 0), ("cap", 4), ("cap", 2), ("cap", 0)])
        pairs.append((f"r3_{kind}", MorseWord(a.slices + tail), MorseWord(b.slices + tail)))
    for right in (True, False):
        pairs.append((f"snake_{'r' if right else 'l'}_hopf", hopf, insert_snake(hopf, 2, 1, right)))
    trefoil = parse_morse(_SMALL["trefoil_r"])
    pairs.append(("rotate_trefoil", trefoil, rotate180(trefoil)))
    pairs.append(("rotate_clasp", clasp, rotate180(clasp)))
    return pairs


def tangle_pairs() -> list[tuple[str, MorseWord, MorseWord]]:
    """Regularly isotopic 1-1 tangles."""
    def t(text):
        return parse_morse("in 1\n" + text)

    return [
        ("curl_r2", t("cup 1\nxl 0\ncap 1"), t("cup 1\nxl 0\nxr 1\nxl 1\ncap 1")),
        ("curl_snake", t("cup 1\nxr 0\ncap 1"), t("cup 1\ncap 0\ncup 1\nxr 0\ncap 1")),
        ("identity_snake", t(""), t("cup 1\ncap 0")),
        ("identity_r2", t(""), t("cup 1\nxr 0\nxl 0\ncap 0")),
        ("double_curl_r2", t("cup 1\nxr 0\ncap 1\ncup 1\nxr 0\ncap 1"),
         t("cup 1\nxr 0\ncap 1\ncup 1\nxl 0\nxr 0\nxr 0\ncap 1")),
    ]


def corpus_groups() -> dict[str, dict[str, MorseWord]]:
    """Diagrams grouped by the surgery manifold they present."""
    groups: dict[str, dict[str, MorseWord]] = {}
    groups["S3"] = {
        "empty": MorseWord(()),
        "unknot_p1": unknot(1),
        "unknot_m1": unknot(-1),
        "blowups_mpm": blowup(blowup(unknot(-1), 1), -1),
        "hopf_0_0": hopf_link(0, 0),
        "hopf_0_3": hopf_link(0, 3),
        "hopf_p1_p2": hopf_link(1, 2),
    }
    for n in range(0, 5):
        g = groups.setdefault(f"L{n}", {})
        g[f"unknot_{n}"] = unknot(n)
        g[f"unknot_{n}_blowup_p"] = blowup(unknot(n), 1)
        g[f"hopf_{n + 1}_p1"] = hopf_link(n + 1, 1)
        g[f"hopf_{n - 1}_m1"] = hopf_link(n - 1, -1)
        g[f"slide_{n}_p1"] = slide_unlinked(n, 1)[1]
    for name, before, after in handle_slide_pairs():
        groups[f"slide_{name}"] = {"before": before, "after": after}
    return groups
