"""Canonical JSON encoding of algebras, bimodules, matched pairs and doubles.

Rationals travel as strings (``"3"``, ``"-1/2"``), object keys keep a fixed
order and output ends with a newline, so serializing twice gives identical
bytes.
"""

from __future__ import annotations

import json
import os
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from .algebra import AlgebraSpec
from .bimodule import Bimodule
from .double import DoubleSpec, dual_names
from .errors import ParseError, ShapeError
from .linalg import Matrix, Tensor3, format_rational, parse_rational
from .matched_pair import MatchedPairSpec

DEFAULT_MAX_DIM = 64


def max_dim() -> int:
    raw = os.environ.get("QFLEX_MAX_DIM", "")
    try:
        return int(raw) if raw else DEFAULT_MAX_DIM
    except ValueError:
        raise ParseError(f"QFLEX_MAX_DIM must be an integer, got {raw!r}", "QFLEX_MAX_DIM") from None


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


# -- encoding ----------------------------------------------------------------

def products_to_json(structure: Tensor3) -> List[dict]:
    rows: Dict[tuple, Dict[str, str]] = {}
    for (i, j, k), c in structure.items():
        rows.setdefault((i, j), {})[str(k)] = format_rational(c)
    return [{"i": i, "j": j, "coeffs": rows[i, j]} for i, j in sorted(rows)]


def algebra_to_json(alg: AlgebraSpec) -> dict:
    return {
        "dim": alg.dim,
        "q": format_rational(alg.q),
        "basis": list(alg.basis_names),
        "products": products_to_json(alg.structure),
    }


def matrix_to_json(m: Matrix) -> List[List[str]]:
    return [[format_rational(c) for c in row] for row in m.rows]


def bimodule_to_json(b: Bimodule) -> dict:
    return {
        "algebra": algebra_to_json(b.algebra),
        "vdim": b.vdim,
        "l": [matrix_to_json(m) for m in b.l_maps],
        "r": [matrix_to_json(m) for m in b.r_maps],
    }


def matched_pair_to_json(p: MatchedPairSpec) -> dict:
    return {
        "algA": algebra_to_json(p.algA),
        "algB": algebra_to_json(p.algB),
        "lA": [matrix_to_json(m) for m in p.lA],
        "rA": [matrix_to_json(m) for m in p.rA],
        "lB": [matrix_to_json(m) for m in p.lB],
        "rB": [matrix_to_json(m) for m in p.rB],
    }


def double_to_json(d: DoubleSpec) -> dict:
    return {"primal": algebra_to_json(d.primal), "dualProducts": products_to_json(d.dual.structure)}


def to_json(obj) -> dict:
    for cls, enc in ((AlgebraSpec, algebra_to_json), (Bimodule, bimodule_to_json),
                     (MatchedPairSpec, matched_pair_to_json), (DoubleSpec, double_to_json)):
        if isinstance(obj, cls):
            return enc(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def serialize(obj) -> str:
    return dumps(to_json(obj))


def write(obj, path) -> None:
    Path(path).write_text(serialize(obj), encoding="utf-8")


# -- decoding ----------------------------------------------------------------

def _expect(value, kind, where: str):
    if kind is int:
        ok = isinstance(value, int) and not isinstance(value, bool)
    else:
        ok = isinstance(value, kind)
    if not ok:
        raise ParseError(f"expected {getattr(kind, '__name__', kind)}, got {type(value).__name__}", where)
    return value


def _field(obj: dict, key: str, where: str):
    if key not in obj:
        raise ParseError(f"missing key {key!r}", where or "$")
    return obj[key]


def _index(value, dim: int, where: str) -> int:
    if isinstance(value, str) and value.isdigit():
        value = int(value)
    _expect(value, int, where)
    if not 0 <= value < dim:
        raise ParseError(f"index {value} out of range for dimension {dim}", where)
    return value


def _dim(value, where: str) -> int:
    _expect(value, int, where)
    if value < 0:
        raise ParseError("dimension must be non-negative", where)
    cap = max_dim()
    if value > cap:
        raise ParseError(f"dimension {value} exceeds QFLEX_MAX_DIM={cap}", where)
    return value


def products_from_json(data, dim: int, where: str) -> Tensor3:
    _expect(data, list, where)
    entries = {}
    for n, row in enumerate(data):
        w = f"{where}[{n}]"
        _expect(row, dict, w)
        i = _index(_field(row, "i", w), dim, f"{w}.i")
        j = _index(_field(row, "j", w), dim, f"{w}.j")
        coeffs = _expect(_field(row, "coeffs", w), dict, f"{w}.coeffs")
        for k, c in coeffs.items():
            kk = _index(k, dim, f"{w}.coeffs.{k}")
            if (i, j, kk) in entries:
                raise ParseError(f"duplicate entry for ({i},{j},{kk})", w)
            entries[(i, j, kk)] = parse_rational(c, f"{w}.coeffs.{k}")
    return Tensor3(dim, entries)


def algebra_from_json(data, where: str = "$") -> AlgebraSpec:
    _expect(data, dict, where)
    dim = _dim(_field(data, "dim", where), f"{where}.dim")
    q = parse_rational(_field(data, "q", where), f"{where}.q")
    basis = data.get("basis", [])
    _expect(basis, list, f"{where}.basis")
    for n, name in enumerate(basis):
        _expect(name, str, f"{where}.basis[{n}]")
    products = products_from_json(data.get("products", []), dim, f"{where}.products")
    try:
        return AlgebraSpec(dim, q, tuple(basis), products)
    except ShapeError as exc:
        raise ParseError(str(exc), where) from None


def matrix_from_json(data, n: int, where: str) -> Matrix:
    _expect(data, list, where)
    if len(data) != n:
        raise ParseError(f"expected {n} rows, got {len(data)}", where)
    rows = []
    for i, row in enumerate(data):
        _expect(row, list, f"{where}[{i}]")
        if len(row) != n:
            raise ParseError(f"expected {n} columns, got {len(row)}", f"{where}[{i}]")
        rows.append(tuple(parse_rational(c, f"{where}[{i}][{j}]") for j, c in enumerate(row)))
    return Matrix(rows, ncols=n)


def _maps(data, count: int, n: int, where: str) -> List[Matrix]:
    _expect(data, list, where)
    if len(data) != count:
        raise ParseError(f"expected {count} matrices, got {len(data)}", where)
    return [matrix_from_json(m, n, f"{where}[{i}]") for i, m in enumerate(data)]


def _algebra_ref(value, base: Optional[Path], where: str) -> AlgebraSpec:
    """An inline algebra object or a path (relative to the referring file)."""
    if isinstance(value, str):
        path = Path(value)
        if base is not None and not path.is_absolute():
            path = base / path
        return load_algebra(path)
    return algebra_from_json(value, where)


def bimodule_from_json(data, where: str = "$", base: Optional[Path] = None) -> Bimodule:
    _expect(data, dict, where)
    alg = _algebra_ref(_field(data, "algebra", where), base, f"{where}.algebra")
    vdim = _dim(_field(data, "vdim", where), f"{where}.vdim")
    l = _maps(_field(data, "l", where), alg.dim, vdim, f"{where}.l")
    r = _maps(_field(data, "r", where), alg.dim, vdim, f"{where}.r")
    return Bimodule(alg, vdim, l, r)


def matched_pair_from_json(data, where: str = "$", base: Optional[Path] = None) -> MatchedPairSpec:
    _expect(data, dict, where)
    a = _algebra_ref(_field(data, "algA", where), base, f"{where}.algA")
    b = _algebra_ref(_field(data, "algB", where), base, f"{where}.algB")
    maps = {
        "lA": _maps(_field(data, "lA", where), a.dim, b.dim, f"{where}.lA"),
        "rA": _maps(_field(data, "rA", where), a.dim, b.dim, f"{where}.rA"),
        "lB": _maps(_field(data, "lB", where), b.dim, a.dim, f"{where}.lB"),
        "rB": _maps(_field(data, "rB", where), b.dim, a.dim, f"{where}.rB"),
    }
    return MatchedPairSpec(a, b, **maps)


def double_from_json(data, where: str = "$", base: Optional[Path] = None) -> DoubleSpec:
    _expect(data, dict, where)
    primal = _algebra_ref(_field(data, "primal", where), base, f"{where}.primal")
    dual = products_from_json(data.get("dualProducts", []), primal.dim, f"{where}.dualProducts")
    return DoubleSpec(primal, AlgebraSpec(primal.dim, primal.q, dual_names(primal.basis_names), dual))


def parse_text(text: str, where: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", f"{where}:{exc.lineno}:{exc.colno}") from None


def _load(path, decoder, **kw):
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise ParseError(f"cannot read file: {exc}", str(path)) from None
    data = parse_text(text, str(path))
    return decoder(data, where=f"{path.name}:$", **kw)


def load_algebra(path) -> AlgebraSpec:
    return _load(path, algebra_from_json)


def load_bimodule(path) -> Bimodule:
    return _load(path, bimodule_from_json, base=Path(path).parent)


def load_matched_pair(path) -> MatchedPairSpec:
    return _load(path, matched_pair_from_json, base=Path(path).parent)


def load_double(path) -> DoubleSpec:
    return _load(path, double_from_json, base=Path(path).parent)


def dual_from_algebra_file(primal: AlgebraSpec, path) -> DoubleSpec:
    """Pair ``primal`` with a dual structure stored as an algebra file.

    Only the dual file's products are used; its dimension and q must match.
    """
    dual = load_algebra(path)
    if dual.dim != primal.dim or dual.q != primal.q:
        raise ParseError(f"dual structure has dim {dual.dim}, q {format_rational(dual.q)}; "
                         f"expected dim {primal.dim}, q {format_rational(primal.q)}", str(path))
    return DoubleSpec(primal, AlgebraSpec(primal.dim, primal.q, dual_names(primal.basis_names), dual.structure))
