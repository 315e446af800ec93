"""Algebra data files: JSON with sparse structure tensors and scalar literals."""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from .hopf import HopfData, HopfError, Report, check_hopf_axioms, check_quasitriangular, check_ribbon
from .scalar import Scalar, parse_scalar

__all__ = [
    "AlgebraLoadError",
    "algebra_from_dict",
    "algebra_to_dict",
    "load_algebra",
    "save_algebra",
    "shipped_algebra_paths",
    "shipped_algebra",
    "validate",
]

DATA_DIR = "data/algebras"


class AlgebraLoadError(HopfError):
    def __init__(self, message: str, reports: list[Report] | None = None):
        super().__init__(message)
        self.reports = reports or []


def algebra_from_dict(doc: dict, name: str = "") -> HopfData:
    try:
        m = int(doc["field_order"])
        basis = list(doc["basis"])
        n = int(doc.get("dim", len(basis)))
    except (KeyError, TypeError, ValueError) as exc:
        raise AlgebraLoadError(f"bad algebra header: {exc}") from exc
    if n != len(basis):
        raise AlgebraLoadError(f"dim {n} does not match {len(basis)} basis names")

    def sc(text) -> Scalar:
        try:
            return parse_scalar(text, m)
        except ValueError as exc:
            raise AlgebraLoadError(str(exc)) from exc

    def idx(i):
        i = int(i)
        if not 0 <= i < n:
            raise AlgebraLoadError(f"basis index {i} out of range")
        return i

    def vec(key):
        vals = doc.get(key)
        if vals is None or len(vals) != n:
            raise AlgebraLoadError(f"'{key}' must list {n} coefficients")
        return [sc(v) for v in vals]

    mul: dict = {}
    for i, j, k, c in doc.get("mul", []):
        mul.setdefault((idx(i), idx(j)), []).append((idx(k), sc(c)))
    comul: dict = {}
    for i, j, k, c in doc.get("comul", []):
        comul.setdefault(idx(i), []).append((idx(j), idx(k), sc(c)))
    zero = Scalar(m)
    antipode = [[zero] * n for _ in range(n)]
    for i, j, c in doc.get("antipode", []):
        antipode[idx(i)][idx(j)] = antipode[idx(i)][idx(j)] + sc(c)
    rho: dict = {}
    for i, j, c in doc.get("rho", []):
        key = (idx(i), idx(j))
        rho[key] = rho.get(key, zero) + sc(c)
    G = vec("G") if "G" in doc else None
    return HopfData(
        field_order=m,
        basis=basis,
        mul=mul,
        unit=vec("unit"),
        comul=comul,
        counit=vec("counit"),
        antipode=antipode,
        rho=rho,
        G=G,
        name=doc.get("name", name),
    )


def algebra_to_dict(H: HopfData, description: str = "") -> dict:
    n = H.dim
    doc = {"name": H.name, "field_order": H.field_order, "dim": n, "basis": H.basis}
    if description:
        doc["description"] = description
    doc["unit"] = [str(c) for c in H.unit]
    doc["counit"] = [str(c) for c in H.counit]
    doc["mul"] = [[i, j, k, str(c)] for (i, j), terms in sorted(H.mul.items()) for k, c in terms]
    doc["comul"] = [[i, j, k, str(c)] for i in range(n) for j, k, c in H.comul[i]]
    doc["antipode"] = [
        [i, j, str(c)] for i in range(n) for j, c in enumerate(H.antipode[i]) if not c.is_zero()
    ]
    doc["rho"] = [[i, j, str(c)] for (i, j), c in sorted(H.rho.items())]
    doc["G"] = [str(c) for c in H.G]
    return doc


def validate(H: HopfData) -> list[Report]:
    return [check_hopf_axioms(H), check_quasitriangular(H), check_ribbon(H)]


def load_algebra(path, force: bool = False) -> HopfData:
    """Read an algebra file and certify it with all three axiom checkers.

    Raises ``AlgebraLoadError`` if any identity fails, unless ``force``.
    """
    path = Path(path)
    try:
        doc = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise AlgebraLoadError(f"{path}: {exc}") from exc
    H = algebra_from_dict(doc, name=path.stem)
    if force:
        return H
    reports = validate(H)
    bad = [f"{r.title}.{n}" for r in reports for n in r.failed()]
    if bad:
        raise AlgebraLoadError(f"{path}: failed identities: {', '.join(bad)}", reports)
    return H


def save_algebra(H: HopfData, path, description: str = "") -> None:
    doc = algebra_to_dict(H, description)
    lines = []
    for key, val in doc.items():
        if isinstance(val, list) and val and isinstance(val[0], list):
            body = ",\n  ".join(json.dumps(v) for v in val)
            lines.append(f' {json.dumps(key)}: [\n  {body}\n ]')
        else:
            lines.append(f" {json.dumps(key)}: {json.dumps(val)}")
    Path(path).write_text("{\n" + ",\n".join(lines) + "\n}\n")


def shipped_algebra_paths() -> dict[str, Path]:
    root = resources.files("hennings").joinpath(DATA_DIR)
    return {p.name[:-5]: Path(str(p)) for p in sorted(root.iterdir(), key=lambda p: p.name)
            if p.name.endswith(".json")}


_CACHE: dict[str, HopfData] = {}


def shipped_algebra(name: str) -> HopfData:
    """Load (and cache) one of the bundled, pre-certified algebras."""
    if name not in _CACHE:
        paths = shipped_algebra_paths()
        if name not in paths:
            raise KeyError(f"unknown algebra {name!r}; have {sorted(paths)}")
        _CACHE[name] = load_algebra(paths[name], force=True)
    return _CACHE[name]
