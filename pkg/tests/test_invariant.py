import itertools

import pytest

from hennings.diagram import MorseWord, blowup, disjoint_union, format_morse, unknot
from hennings.files import shipped_algebra
from hennings.fixtures import corpus_groups, handle_slide_pairs, small_closed_fixtures
from hennings.hopf import ribbon_element
from hennings.integral import right_integral
from hennings import invariant
from hennings.invariant import (
    Comparison,
    InvariantResult,
    NormalizationUndefined,
    NotUnimodular,
    compare_invariants,
    hennings_inv,
    lens_space_inv,
    rescale_result,
    run_corpus,
)
from hennings.scalar import ContextMismatch, RootScalar, Scalar

from conftest import GROUP_ALGEBRAS

EMPTY = MorseWord(())
SMALL = small_closed_fixtures()


def test_empty_diagram(inv_algebra):
    H, lam = inv_algebra
    res = hennings_inv(H, lam, EMPTY)
    assert (res.tr_value, res.components, res.signature) == (1, 0, 0)
    assert res.inv == 1


@pytest.mark.parametrize("n", [1, -1])
def test_unit_framed_unknot_is_sphere(inv_algebra, n):
    H, lam = inv_algebra
    assert hennings_inv(H, lam, unknot(n)).inv == 1


@pytest.mark.parametrize("name", GROUP_ALGEBRAS)
def test_trivial_algebras_are_trivial(name):
    H = shipped_algebra(name)
    lam = right_integral(H)
    for word in list(SMALL.values()) + [w for _, a, b in handle_slide_pairs() for w in (a, b)]:
        assert hennings_inv(H, lam, word).inv == 1


def test_lens_values_by_ribbon_powers(uq):
    # TR of the n-framed unknot is lam(v^n): check the fast path against plain powers of v
    lam = right_integral(uq)
    v = ribbon_element(uq)
    a, b = lam(v), lam(uq.inverse(v))
    for n in range(-8, 9):
        res = lens_space_inv(uq, lam, n)
        assert res.tr_value == lam(uq.power(v, n))
        sigma = (n > 0) - (n < 0)
        assert res.inv_squared == res.tr_value ** 2 * a ** (-(1 + sigma)) * b ** (-(1 - sigma))


@pytest.mark.parametrize("n", range(-3, 4))
def test_fast_path_agrees(inv_algebra, n):
    H, lam = inv_algebra
    assert lens_space_inv(H, lam, n).inv == hennings_inv(H, lam, unknot(n)).inv


def test_lens_spaces_distinct(uq):
    lam = right_integral(uq)
    res = {n: lens_space_inv(uq, lam, n) for n in range(1, 9)}
    for n, m in itertools.combinations(res, 2):
        assert compare_invariants(res[n], res[m]) is Comparison.DISTINCT


def test_sphere_presentations_equal(uq):
    lam = right_integral(uq)
    a = hennings_inv(uq, lam, unknot(1))
    b = hennings_inv(uq, lam, EMPTY)
    assert compare_invariants(a, b) is Comparison.EQUAL


def test_branch_dependent_comparison():
    ctx = (Scalar(4, [0, 2]), Scalar(4, [0, -3]))
    x = Scalar(4, [1, 1])
    rs = RootScalar.root("r", ctx) * RootScalar.root("s", ctx)
    a = InvariantResult(x, 1, 0, *ctx, RootScalar.extend(x, ctx) * rs, x * x * ctx[0] * ctx[1])
    b = InvariantResult(-x, 1, 0, *ctx, RootScalar.extend(-x, ctx) * rs, x * x * ctx[0] * ctx[1])
    assert compare_invariants(a, b) is Comparison.INDETERMINATE_SIGN
    c = InvariantResult(-x, 2, 0, *ctx, RootScalar.extend(x * x, ctx), x**4)
    d = InvariantResult(x, 2, 0, *ctx, RootScalar.extend(-x * x, ctx), x**4)
    assert compare_invariants(c, d) is Comparison.DISTINCT


def test_context_mismatch(uq):
    lam = right_integral(uq)
    a = hennings_inv(uq, lam, unknot(2))
    b = hennings_inv(uq, lam.scaled(7), unknot(2))
    with pytest.raises(ContextMismatch):
        compare_invariants(a, b)


def every_fixture():
    words = list(SMALL.items())
    for name, a, b in handle_slide_pairs():
        words += [(name + "_before", a), (name + "_after", b)]
    return words


@pytest.mark.parametrize("sign", [1, -1])
def test_blowup_invariance(inv_algebra, sign):
    H, lam = inv_algebra
    for name, word in every_fixture():
        assert hennings_inv(H, lam, blowup(word, sign)).inv == hennings_inv(H, lam, word).inv, name


@pytest.mark.parametrize("name,a,b", handle_slide_pairs(), ids=[p[0] for p in handle_slide_pairs()])
def test_handle_slide_invariance(uq, name, a, b):
    lam = right_integral(uq)
    assert hennings_inv(uq, lam, a).inv == hennings_inv(uq, lam, b).inv


def test_integral_scaling(inv_algebra):
    H, lam = inv_algebra
    big = lam.scaled(7)
    for name, word in every_fixture():
        a = hennings_inv(H, lam, word)
        b = hennings_inv(H, big, word)
        assert b.inv == rescale_result(a, 7), name
        assert b.inv_squared == a.inv_squared, name


def test_disjoint_union_multiplies(uq):
    lam = right_integral(uq)
    words = [unknot(2), unknot(-3), SMALL["hopf_curl"], SMALL["trefoil_l"]]
    for a, b in itertools.combinations(words, 2):
        ab = hennings_inv(uq, lam, disjoint_union(a, b))
        assert ab.inv == hennings_inv(uq, lam, a).inv * hennings_inv(uq, lam, b).inv


def test_non_unimodular_refused(sweedler):
    with pytest.raises(NotUnimodular):
        hennings_inv(sweedler, None, unknot(2))
    res = hennings_inv(sweedler, None, unknot(2), force=True)
    assert res.inv is None and res.tr_value == 0


def test_vanishing_normalisation(sweedler, monkeypatch):
    monkeypatch.setattr(invariant, "_unimodular", lambda H: True)
    with pytest.raises(NormalizationUndefined):
        hennings_inv(sweedler, None, unknot(2))


def test_oracle_flag(uq):
    assert hennings_inv(uq, None, SMALL["trefoil_r"], oracle=True).inv == hennings_inv(uq, None, SMALL["trefoil_r"]).inv


def test_result_lines(uq):
    lines = lens_space_inv(uq, None, 3).lines()
    assert lines[:3] == ["TR=-6*z", "c=1", "sigma=1"]
    assert "INV=3" in lines


# -- corpus ---------------------------------------------------------------------------


@pytest.fixture(scope="module")
def shipped_corpus():
    from importlib import resources

    return resources.files("hennings").joinpath("data/corpus")


def test_shipped_corpus_matches_generator(shipped_corpus):
    from hennings.invariant import load_corpus

    loaded = load_corpus(str(shipped_corpus))
    generated = corpus_groups()
    assert loaded.keys() == generated.keys()
    for g, files in generated.items():
        assert {f"{k}.morse": w for k, w in files.items()} == loaded[g]


def test_run_shipped_corpus(shipped_corpus):
    algebras = {n: shipped_algebra(n) for n in ("uq_sl2_i", "zn3", "sweedler")}
    rep = run_corpus(str(shipped_corpus), algebras)
    assert rep.ok, rep.violations
    assert rep.skipped == {"sweedler": "not unimodular"}
    uq_pairs = rep.distinctness["uq_sl2_i"]
    lens = [f"L{n}" for n in range(5)]
    for a, b in itertools.combinations(lens, 2):
        assert uq_pairs[(a, b)] is Comparison.DISTINCT
    assert all(r.inv == 1 for r in rep.results["uq_sl2_i"]["S3"].values())


def test_corpus_violation_detected(tmp_path, uq):
    g = tmp_path / "bogus"
    g.mkdir()
    (g / "a.morse").write_text(format_morse(unknot(2)))
    (g / "b.morse").write_text(format_morse(unknot(3)))
    rep = run_corpus(tmp_path, {"uq_sl2_i": uq})
    assert not rep.ok and "bogus" in rep.violations[0]


def test_corpus_parse_error_names_file(tmp_path, uq):
    g = tmp_path / "x"
    g.mkdir()
    (g / "broken.morse").write_text("cup 0\nwiggle 2\n")
    with pytest.raises(ValueError, match="broken.morse"):
        run_corpus(tmp_path, {"uq_sl2_i": uq})


@pytest.mark.parametrize("m,q,root", [(1, 4, 2), (1, 2, None), (4, -9, "3*z"), (3, -1, None), (4, "1/4", "1/2")])
def test_principal_sqrt(m, q, root):
    from hennings.invariant import principal_sqrt
    from hennings.scalar import parse_scalar

    got = principal_sqrt(parse_scalar(str(q), m))
    assert got == (None if root is None else parse_scalar(str(root), m))
