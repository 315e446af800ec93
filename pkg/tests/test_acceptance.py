"""Acceptance criteria, one test per criterion.

Each test prints a single ``criterion N: PASS|FAIL`` line with a short
detail. Run ``python tests/test_acceptance.py`` for the summary alone.
"""

import itertools
import sys
import time
from pathlib import Path

import pytest

from hennings.diagram import MorseWord, blowup, unknot
from hennings.evaluate import concentrate, decorate, eval_bruteforce
from hennings.files import shipped_algebra, shipped_algebra_paths
from hennings.fixtures import handle_slide_pairs, isotopy_pairs, small_closed_fixtures
from hennings.hopf import check_hopf_axioms, check_quasitriangular, check_ribbon
from hennings.integral import (
    check_integral_properties,
    check_trace_theorem,
    check_unimodular,
    right_integral,
    right_integral_space,
)
from hennings.invariant import (
    Comparison,
    compare_invariants,
    hennings_inv,
    lens_space_inv,
    load_corpus,
    normalization_data,
    rescale_result,
)

ROOT = Path(__file__).resolve().parent.parent
CORPUS = ROOT / "src" / "hennings" / "data" / "corpus"
NAMES = sorted(shipped_algebra_paths())


def _algebras():
    return {n: shipped_algebra(n) for n in NAMES}


def _invariant_algebras():
    out = {}
    for n, H in _algebras().items():
        lam = right_integral(H)
        if not check_unimodular(H).ok:
            continue
        a, b = normalization_data(H, lam)
        if not a.is_zero() and not b.is_zero():
            out[n] = (H, lam)
    return out


def _fixtures():
    words = list(small_closed_fixtures().items())
    for name, a, b in handle_slide_pairs():
        words += [(name + "_before", a), (name + "_after", b)]
    return words


# -- criteria ------------------------------------------------------------------


def criterion_1():
    bad = []
    for n, H in _algebras().items():
        for check in (check_hopf_axioms, check_quasitriangular, check_ribbon):
            bad += [f"{n}:{x}" for x in check(H).failed()]
    return not bad, f"{len(NAMES)} algebras" + (f"; failing {bad}" if bad else "")


def criterion_2():
    bad = []
    for n, H in _algebras().items():
        dim = len(right_integral_space(H))
        if dim != 1:
            bad.append(f"{n}:space dim {dim}")
            continue
        lam = right_integral(H)
        for rep in (check_integral_properties(H, lam), check_trace_theorem(H, lam)):
            bad += [f"{n}:{x}" for x in rep.failed()]
    return not bad, f"{len(NAMES)} algebras" + (f"; failing {bad}" if bad else "")


def criterion_3():
    fixtures = {k: w for k, w in small_closed_fixtures().items() if len(w.crossings()) <= 3}
    bad = []
    for n, H in _algebras().items():
        lam = right_integral(H)
        for name, w in fixtures.items():
            if concentrate(H, lam, decorate(H, w)) != eval_bruteforce(H, lam, w, budget=3):
                bad.append(f"{n}:{name}")
    ok = not bad and len(fixtures) >= 12
    return ok, f"{len(fixtures)} fixtures x {len(NAMES)} algebras" + (f"; mismatches {bad}" if bad else "")


def criterion_4():
    pairs = handle_slide_pairs()
    bad = []
    algs = _invariant_algebras()
    for n, (H, lam) in algs.items():
        for name, a, b in pairs:
            if hennings_inv(H, lam, a).inv != hennings_inv(H, lam, b).inv:
                bad.append(f"{n}:slide {name}")
        for name, w in _fixtures():
            base = hennings_inv(H, lam, w).inv
            for sign in (1, -1):
                if hennings_inv(H, lam, blowup(w, sign)).inv != base:
                    bad.append(f"{n}:blowup{sign:+d} {name}")
    ok = not bad and len(pairs) >= 10
    return ok, f"{len(pairs)} slide pairs, {len(_fixtures())} fixtures, algebras {sorted(algs)}" + (
        f"; failing {bad[:5]}" if bad else ""
    )


def criterion_5():
    bad = []
    algs = _invariant_algebras()
    for n, (H, lam) in algs.items():
        for label, w in (("empty", MorseWord(())), ("+1", unknot(1)), ("-1", unknot(-1))):
            val = hennings_inv(H, lam, w).inv
            if val != 1:
                bad.append(f"{n}:{label}={val}")
    return not bad, f"algebras {sorted(algs)}" + (f"; failing {bad}" if bad else "")


def criterion_6():
    H = shipped_algebra("uq_sl2_i")
    lam = right_integral(H)
    res = {n: lens_space_inv(H, lam, n) for n in range(1, 9)}
    bad, resolved = [], []
    for n, m in itertools.combinations(range(1, 9), 2):
        cmp = compare_invariants(res[n], res[m])
        if cmp is Comparison.INDETERMINATE_SIGN:
            if res[n].inv_squared != res[m].inv_squared:
                resolved.append((n, m))
                continue
        if cmp is not Comparison.DISTINCT:
            bad.append(f"L({n},1) vs L({m},1): {cmp}")
    values = ", ".join(f"L({n},1)={res[n].inv}" for n in res)
    detail = values + (f"; resolved by square {resolved}" if resolved else "") + (f"; failing {bad}" if bad else "")
    return not bad, detail


def criterion_7():
    groups = load_corpus(CORPUS)
    count = sum(len(g) for g in groups.values())
    bad = []
    zn = [n for n in NAMES if n.startswith("zn")]
    for n in zn:
        H = shipped_algebra(n)
        lam = right_integral(H)
        for g, files in groups.items():
            for f, w in files.items():
                val = hennings_inv(H, lam, w).inv
                if val != 1:
                    bad.append(f"{n}:{g}/{f}={val}")
    return not bad, f"{count} corpus diagrams x {len(zn)} group algebras" + (f"; failing {bad[:5]}" if bad else "")


def _conventions_hold(H, lam, word):
    dd = decorate(H, word)
    base = concentrate(H, lam, dd)
    # basepoints move one component at a time; the effects are independent
    for c in dd.components:
        for off in c.upward_starts():
            if concentrate(H, lam, dd.with_basepoints({c.id: off})) != base:
                return False
    ids = [c.id for c in dd.components]
    for k in range(1, len(ids) + 1):
        for rev in itertools.combinations(ids, k):
            if concentrate(H, lam, dd.with_reversed(set(rev))) != base:
                return False
    return True


def criterion_8():
    bad = []
    words = _fixtures() + [(f"{n}_{s}", w) for n, a, b in isotopy_pairs() for s, w in (("a", a), ("b", b))]
    for n, H in _algebras().items():
        lam = right_integral(H)
        bad += [f"{n}:{name}" for name, w in words if not _conventions_hold(H, lam, w)]
    for n, (H, lam) in _invariant_algebras().items():
        big = lam.scaled(7)
        for name, w in _fixtures():
            if hennings_inv(H, big, w).inv != rescale_result(hennings_inv(H, lam, w), 7):
                bad.append(f"{n}:scale7 {name}")
    return not bad, f"{len(words)} fixtures x {len(NAMES)} algebras, scaling on normalisable algebras" + (
        f"; failing {bad[:5]}" if bad else ""
    )


CRITERIA = {
    1: (criterion_1, 10.0),
    2: (criterion_2, 10.0),
    3: (criterion_3, 120.0),
    4: (criterion_4, None),
    5: (criterion_5, None),
    6: (criterion_6, 120.0),
    7: (criterion_7, None),
    8: (criterion_8, None),
}


def run_criterion(n):
    fn, limit = CRITERIA[n]
    t0 = time.perf_counter()
    ok, detail = fn()
    elapsed = time.perf_counter() - t0
    if limit is not None and elapsed >= limit:
        ok = False
        detail += f"; exceeded {limit:.0f} s"
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} ({elapsed:.2f} s) {detail}"
    return ok, line


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n, capsys):
    ok, line = run_criterion(n)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [run_criterion(n) for n in sorted(CRITERIA)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
