"""Command line front end.

    hopf check <algebra>            hopf integral <algebra>
    diagram info <file>
    hennings tr <algebra> <diagram>  hennings inv <algebra> <diagram>
    hennings lens <algebra> <n>      hennings corpus <dir>

``<algebra>`` is a JSON file or the name of a bundled algebra. Output is one
``key=value`` per line, or a JSON object with ``--json``.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .diagram import DiagramError, linking_matrix, parse_morse, signature, trace_components, writhe
from .evaluate import BudgetExceeded, concentrate, decorate, eval_bruteforce
from .files import AlgebraLoadError, load_algebra, shipped_algebra_paths, validate
from .hopf import HopfError
from .integral import (
    NoIntegral,
    NonUniqueIntegral,
    check_integral_properties,
    check_trace_theorem,
    check_unimodular,
    right_integral,
)
from .invariant import (
    CorpusError,
    NormalizationUndefined,
    NotUnimodular,
    OracleMismatch,
    hennings_inv,
    lens_space_inv,
    run_corpus,
)


def _algebra(ref: str, force: bool = False):
    path = Path(ref)
    if not path.exists():
        shipped = shipped_algebra_paths()
        if ref not in shipped:
            raise AlgebraLoadError(f"{ref}: no such file or bundled algebra ({', '.join(shipped)})")
        path = shipped[ref]
    return load_algebra(path, force=force)


def _diagram(path: str, closed: bool = True):
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise DiagramError(f"{p}: {exc.strerror}") from exc
    try:
        return parse_morse(text, require_closed=closed)
    except DiagramError as exc:
        raise DiagramError(f"{p}: {type(exc).__name__}: {exc}") from exc


def _emit(args, fields: dict, lines: list[str] | None = None):
    if args.json:
        print(json.dumps(fields, indent=2, default=str))
    else:
        for line in lines if lines is not None else [f"{k}={v}" for k, v in fields.items()]:
            print(line)


def _fmt_matrix(mat) -> str:
    return "[" + ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in mat) + "]"


# -- hopf ----------------------------------------------------------------------


def cmd_hopf_check(args) -> int:
    H = _algebra(args.algebra, force=True)
    reports = validate(H)
    ok = all(r.ok for r in reports)
    lines = [line for r in reports for line in r.lines()] + [f"result={'PASS' if ok else 'FAIL'}"]
    _emit(args, {"algebra": H.name, "ok": ok, "reports": [r.as_dict() for r in reports]}, lines)
    return 0 if ok else 1


def cmd_hopf_integral(args) -> int:
    H = _algebra(args.algebra, force=args.force)
    lam = right_integral(H)
    reports = [check_integral_properties(H, lam), check_trace_theorem(H, lam), check_unimodular(H)]
    nonzero = {H.basis[i]: str(c) for i, c in enumerate(lam.coeffs) if not c.is_zero()}
    lam_text = " + ".join(f"({c})*{b}^*" for b, c in nonzero.items())
    ok = all(r.ok for r in reports)
    lines = [f"lambda={lam_text}"] + [line for r in reports for line in r.lines()]
    lines.append(f"unimodular={'yes' if reports[2].ok else 'no'}")
    _emit(args, {"algebra": H.name, "lambda": nonzero, "ok": ok,
                 "reports": [r.as_dict() for r in reports]}, lines)
    return 0 if ok else 1


# -- diagram -------------------------------------------------------------------


def cmd_diagram_info(args) -> int:
    word = _diagram(args.file)
    traces = trace_components(word)
    mat = linking_matrix(traces)
    fields = {
        "c": len(traces),
        "crossings": len(word.crossings()),
        "components": [
            {"id": t.id, "whitney_degree": t.whitney_degree, "framing": writhe(t, traces)} for t in traces
        ],
        "linking_matrix": [[str(x) for x in row] for row in mat],
        "sigma": signature(mat),
    }
    lines = [f"c={fields['c']}", f"crossings={fields['crossings']}"]
    lines += [f"component {c['id']}: whitney={c['whitney_degree']} framing={c['framing']}"
              for c in fields["components"]]
    lines += [f"linking={_fmt_matrix(mat)}", f"sigma={fields['sigma']}"]
    _emit(args, fields, lines)
    return 0


# -- hennings ------------------------------------------------------------------


def cmd_tr(args) -> int:
    H = _algebra(args.algebra, force=args.force)
    lam = right_integral(H)
    word = _diagram(args.diagram)
    tr = concentrate(H, lam, decorate(H, word))
    fields = {"TR": str(tr)}
    if args.oracle:
        other = eval_bruteforce(H, lam, word, budget=args.budget)
        fields["oracle"] = "agree" if other == tr else f"DISAGREE ({other})"
        if other != tr:
            _emit(args, fields)
            return 1
    _emit(args, fields)
    return 0


def cmd_inv(args) -> int:
    H = _algebra(args.algebra, force=args.force)
    word = _diagram(args.diagram)
    res = hennings_inv(H, None, word, force=args.force, oracle=args.oracle)
    _emit(args, res.as_dict(), res.lines())
    return 0


def cmd_lens(args) -> int:
    H = _algebra(args.algebra, force=args.force)
    res = lens_space_inv(H, None, args.n, force=args.force)
    _emit(args, res.as_dict(), res.lines())
    return 0


def cmd_corpus(args) -> int:
    algebras = None
    if args.algebra:
        algebras = {a: _algebra(a) for a in args.algebra}
    rep = run_corpus(args.dir, algebras)
    _emit(args, rep.as_dict(), rep.lines())
    return 0 if rep.ok else 1


# -- parsers -------------------------------------------------------------------


def _common(p):
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--force", action="store_true", help="skip certification and unimodularity gates")


def build_parser(prog: str | None = None) -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog=prog or "hennings", description="Hopf-algebra 3-manifold invariants")
    groups = top.add_subparsers(dest="group", required=True)

    hopf = groups.add_parser("hopf", help="algebra checks").add_subparsers(dest="cmd", required=True)
    p = hopf.add_parser("check", help="Hopf, quasitriangular and ribbon identities")
    p.add_argument("algebra")
    _common(p)
    p.set_defaults(func=cmd_hopf_check)
    p = hopf.add_parser("integral", help="right integral and its identities")
    p.add_argument("algebra")
    _common(p)
    p.set_defaults(func=cmd_hopf_integral)

    diag = groups.add_parser("diagram", help="diagram data").add_subparsers(dest="cmd", required=True)
    p = diag.add_parser("info", help="components, Whitney degrees, framings, linking matrix")
    p.add_argument("file")
    _common(p)
    p.set_defaults(func=cmd_diagram_info)

    hen = groups.add_parser("hennings", help="link values and invariants").add_subparsers(dest="cmd", required=True)
    p = hen.add_parser("tr", help="unnormalised link value")
    p.add_argument("algebra")
    p.add_argument("diagram")
    p.add_argument("--oracle", action="store_true", help="cross-check by full expansion")
    p.add_argument("--budget", type=int, default=3, help="crossing limit for --oracle")
    _common(p)
    p.set_defaults(func=cmd_tr)
    p = hen.add_parser("inv", help="normalised invariant of the surgery manifold")
    p.add_argument("algebra")
    p.add_argument("diagram")
    p.add_argument("--oracle", action="store_true", help="cross-check by full expansion")
    _common(p)
    p.set_defaults(func=cmd_inv)
    p = hen.add_parser("lens", help="invariant of L(n,1) by the curl-power shortcut")
    p.add_argument("algebra")
    p.add_argument("n", type=int)
    _common(p)
    p.set_defaults(func=cmd_lens)
    p = hen.add_parser("corpus", help="evaluate a directory of diagrams grouped by manifold")
    p.add_argument("dir")
    p.add_argument("--algebra", action="append", help="restrict to these algebras (repeatable)")
    _common(p)
    p.set_defaults(func=cmd_corpus)
    return top


_ERRORS = (
    AlgebraLoadError,
    HopfError,
    NoIntegral,
    NonUniqueIntegral,
    NotUnimodular,
    NormalizationUndefined,
    DiagramError,
    BudgetExceeded,
    OracleMismatch,
    CorpusError,
    FileNotFoundError,
)


def main(argv=None, prog: str | None = None) -> int:
    args = build_parser(prog).parse_args(argv)
    try:
        return args.func(args)
    except _ERRORS as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


def _group_main(group: str) -> int:
    return main([group] + sys.argv[1:], prog=group)


def hopf_main() -> int:
    return _group_main("hopf")


def diagram_main() -> int:
    return _group_main("diagram")


def hennings_main() -> int:
    argv = sys.argv[1:]
    if argv and argv[0] in ("hopf", "diagram", "hennings"):
        return main(argv)
    return main(["hennings"] + argv, prog="hennings")
