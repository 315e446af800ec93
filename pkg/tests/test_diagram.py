from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hennings.diagram import (
    MorseSyntaxError,
    MorseWord,
    NotClosed,
    WidthError,
    blowup,
    curl_tangle,
    disjoint_union,
    format_morse,
    framings,
    insert_tangle,
    linking_matrix,
    mirror,
    parse_morse,
    rotate180,
    signature,
    trace_components,
    trace_tangle,
    unknot,
    whitney_degree,
)
from hennings.fixtures import handle_slide_pairs, hopf_link, isotopy_pairs, small_closed_fixtures

from strategies import closed_words


def comps(text):
    return trace_components(parse_morse(text))


# -- parsing -----------------------------------------------------------------


def test_unknot_has_one_component():
    assert len(comps("cup 0 / cap 0")) == 1


def test_nested_circles():
    assert len(comps("cup 0 / cup 1 / cap 1 / cap 0")) == 2


def test_zigzag_is_one_circle():
    # the inner cup's right leg is capped with the outer one: a single curve
    assert len(comps("cup 0 / cup 1 / cap 2 / cap 0")) == 1


def test_curled_unknot():
    w = parse_morse("cup 0 / xr 0 / cap 0")
    assert len(w.crossings()) == 1 and len(trace_components(w)) == 1


def test_comments_and_lines():
    w = parse_morse("# a curl\ncup 0   # min\nxr 0\n\ncap 0\n")
    assert [str(s) for s in w.slices] == ["cup 0", "xr 0", "cap 0"]


def test_syntax_error_position():
    with pytest.raises(MorseSyntaxError) as err:
        parse_morse("cup 0\n  twist 1\ncap 0")
    assert (err.value.line, err.value.col) == (2, 3)


def test_syntax_error_after_separator():
    with pytest.raises(MorseSyntaxError) as err:
        parse_morse("cup 0 / cap")
    assert err.value.line == 1 and err.value.col == 9


@pytest.mark.parametrize("text", ["cap 0", "cup 0 / xr 1", "cup 3", "cup 0 / cap 1"])
def test_width_errors(text):
    with pytest.raises(WidthError):
        parse_morse(text)


def test_not_closed():
    with pytest.raises(NotClosed):
        parse_morse("cup 0", require_closed=True)
    with pytest.raises(NotClosed):
        trace_components(parse_morse("cup 0"))


def test_input_width_directive():
    w = parse_morse("in 1\ncup 1\nxl 0\ncap 1")
    assert (w.in_width, w.out_width) == (1, 1)
    assert parse_morse(format_morse(w)) == w


@given(closed_words(max_crossings=4))
def test_width_bookkeeping(word):
    widths = word.widths()
    assert widths[0] == widths[-1] == 0
    for (kind, _), a, b in zip(word.slices, widths, widths[1:]):
        assert b - a == {"cup": 2, "cap": -2, "xr": 0, "xl": 0}[kind]
    assert parse_morse(format_morse(word)) == word


@given(closed_words(max_crossings=4))
def test_components_partition_segments(word):
    traces = trace_components(word)
    segs = [t.segments for t in traces]
    total = sum(len(s) for s in segs)
    assert total == sum(word.widths())
    assert len(frozenset().union(*segs)) == total if segs else total == 0


# -- Whitney degree ------------------------------------------------------------


def test_plain_circle_counterclockwise():
    assert whitney_degree(comps("cup 0 / cap 0")[0]) == 1


@pytest.mark.parametrize(
    "text,degree",
    [
        ("cup 0/cup 1/xl 0/cap 1/cap 0", 2),
        ("cup 0/cup 1/xr 0/cap 1/cap 0", 2),
        ("cup 0/cup 0/xr 1/cap 0/cap 0", 0),
        ("cup 0/cup 0/xl 1/cap 0/cap 0", 0),
    ],
)
def test_circle_with_curl(text, degree):
    # four extrema: two from the circle, two from the curl
    assert whitney_degree(comps(text)[0]) == degree


def test_nested_circles_same_sense():
    assert [t.whitney_degree for t in comps("cup 0/cup 1/cap 1/cap 0")] == [1, 1]


@given(closed_words(max_crossings=3), st.data())
def test_curl_changes_degree_by_one(word, data):
    traces = trace_components(word)
    if not traces:
        return
    seg = data.draw(st.sampled_from(sorted(traces[0].segments)))
    L, p = seg
    curled = insert_tangle(word, L, p, curl_tangle(data.draw(st.sampled_from([1, -1]))))
    before = {t.segments and min(t.segments): t.whitney_degree for t in traces}
    after = trace_components(curled)
    # the touched component gains +-1; the total of the others is unchanged
    diff = sum(t.whitney_degree for t in after) - sum(before.values())
    assert abs(diff) == 1


@given(closed_words(max_crossings=4))
def test_reversal_negates_degree_and_keeps_framing(word):
    traces = trace_components(word)
    for t in traces:
        r = t.reversed()
        assert whitney_degree(r) == -whitney_degree(t)
        others = [r if u.id == t.id else u for u in traces]
        assert linking_matrix(others)[t.id][t.id] == linking_matrix(traces)[t.id][t.id]


def test_tangle_strand_degree():
    strand, closed = trace_tangle(curl_tangle(1))
    assert whitney_degree(strand) == -1 and not closed


# -- linking matrix and signature --------------------------------------------------


def test_zero_framed_unknot():
    assert linking_matrix(unknot(0)) == [[0]]


def test_positive_curl_writhe():
    assert linking_matrix(parse_morse("cup 0 / xr 0 / cap 0")) == [[1]]
    assert framings(unknot(1)) == [1]


def test_positive_hopf_link():
    assert linking_matrix(parse_morse("cup 0/cup 1/xl 0/xl 0/cap 1/cap 0")) == [[0, 1], [1, 0]]


def test_mirror_negates_matrix():
    w = hopf_link(2, -1)
    assert linking_matrix(mirror(w)) == [[-x for x in row] for row in linking_matrix(w)]


def all_fixture_words():
    words = list(small_closed_fixtures().values())
    for _, a, b in handle_slide_pairs() + isotopy_pairs():
        words += [a, b]
    return words


def test_fixture_matrices_symmetric_integral():
    for w in all_fixture_words():
        m = linking_matrix(w)
        assert all(m[i][j] == m[j][i] for i in range(len(m)) for j in range(len(m)))
        assert all(x.denominator == 1 for row in m for x in row)


def test_half_turn_preserves_matrix():
    for w in all_fixture_words():
        assert sorted(map(sorted, linking_matrix(rotate180(w)))) == sorted(map(sorted, linking_matrix(w)))


@pytest.mark.parametrize("mat,sig", [([[3]], 1), ([[0, 1], [1, 0]], 0), ([[0, 2, 0], [2, 0, 0], [0, 0, -3]], -1)])
def test_signature_examples(mat, sig):
    assert signature(mat) == sig


@pytest.mark.parametrize("n", range(-2, 3))
def test_signature_of_scalar(n):
    assert signature([[n]]) == (n > 0) - (n < 0)


sym_entries = st.integers(-4, 4)


@st.composite
def symmetric_matrices(draw, max_n=5):
    n = draw(st.integers(1, max_n))
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            a[i][j] = a[j][i] = draw(sym_entries)
    return a


@given(symmetric_matrices())
def test_signature_matches_eigenvalues(mat):
    ev = np.linalg.eigvalsh(np.array(mat, dtype=float))
    ref = int(np.sum(ev > 1e-9)) - int(np.sum(ev < -1e-9))
    assert signature(mat) == ref


@given(symmetric_matrices(), st.permutations(range(5)), st.lists(st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(-2, 2)), max_size=6))
def test_signature_congruence_invariance(mat, perm, ops):
    n = len(mat)
    p = [i for i in perm if i < n]
    permuted = [[mat[p[i]][p[j]] for j in range(n)] for i in range(n)]
    assert signature(permuted) == signature(mat)
    P = np.eye(n, dtype=int)
    for i, j, c in ops:
        if i < n and j < n and i != j:
            E = np.eye(n, dtype=int)
            E[i, j] = c
            P = P @ E
    M = np.array(mat, dtype=int)
    congruent = (P.T @ M @ P).tolist()
    assert signature(congruent) == signature(mat)


def test_signature_rejects_asymmetric():
    with pytest.raises(ValueError):
        signature([[0, 1], [0, 0]])


# -- corpus operations -----------------------------------------------------------


def test_blowup_of_unknot():
    w = blowup(unknot(0), 1)
    assert len(trace_components(w)) == 2
    assert linking_matrix(w) == [[0, 0], [0, 1]]


@pytest.mark.parametrize("sign", [1, -1])
def test_blowup_shifts_count_and_signature(sign):
    for w in all_fixture_words()[:12]:
        b = blowup(w, sign)
        assert len(trace_components(b)) == len(trace_components(w)) + 1
        assert signature(linking_matrix(b)) == signature(linking_matrix(w) or [[0]]) + sign


def test_disjoint_union_counts():
    assert len(trace_components(disjoint_union(unknot(0), unknot(0)))) == 2


def test_handle_slide_fixtures():
    pairs = handle_slide_pairs()
    assert len(pairs) >= 10
    for name, a, b in pairs:
        ma, mb = linking_matrix(a), linking_matrix(b)
        assert len(ma) == len(mb), name
        # a slide is an integral congruence of the linking form
        det = lambda m: round(np.linalg.det(np.array(m, dtype=float)))  # noqa: E731
        assert det(ma) == det(mb), name
        assert signature(ma) == signature(mb), name


def test_rebase_rejects_downward_offset():
    t = comps("cup 0 / xr 0 / cap 0")[0]
    bad = [j for j in range(len(t.events)) if j not in t.upward_starts()]
    with pytest.raises(ValueError):
        t.rebased(bad[0])


def test_linking_entries_are_fractions():
    assert isinstance(linking_matrix(hopf_link())[0][1], Fraction)


def test_morse_word_validates_directly():
    with pytest.raises(WidthError):
        MorseWord((("cap", 0),))
