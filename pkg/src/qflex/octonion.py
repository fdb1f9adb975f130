"""The octonion algebra as a fully cross-checked fixture.

Basis e0 (unit), e1..e7 with ``e_i e_j = -delta_ij e0 + c_ijk e_k`` where c
is totally antisymmetric and equals 1 on the seven quaternionic triples.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .algebra import (
    AlgebraSpec,
    CheckReport,
    associator,
    commutator,
    failed,
    passed,
    render_vector,
)
from .errors import PreconditionError, ShapeError
from .linalg import ZERO, Matrix, Scalar, Tensor3, Vector, matrix_sum

QUATERNIONIC_TRIPLES = ((1, 2, 4), (1, 3, 7), (1, 5, 6), (2, 3, 5), (2, 6, 7), (3, 4, 6), (4, 5, 7))
NAMES = tuple(f"e{i}" for i in range(8))
IMAG = range(1, 8)


def _build_constants() -> Dict[Tuple[int, int, int], int]:
    c = {}
    for t in QUATERNIONIC_TRIPLES:
        for perm in itertools.permutations(range(3)):
            sign = 1 if perm in ((0, 1, 2), (1, 2, 0), (2, 0, 1)) else -1
            c[tuple(t[p] for p in perm)] = sign
    return c


_C = _build_constants()


def c(i: int, j: int, k: int) -> int:
    """Structure constant c_ijk; zero whenever an index is 0."""
    return _C.get((i, j, k), 0)


def delta(i: int, j: int) -> int:
    return 1 if i == j else 0


def build_octonion(q: Scalar = -1) -> AlgebraSpec:
    entries = {(0, 0, 0): 1}
    for i in IMAG:
        entries[(0, i, i)] = 1
        entries[(i, 0, i)] = 1
        entries[(i, i, 0)] = -1
        for j in IMAG:
            for k in IMAG:
                if c(i, j, k):
                    entries[(i, j, k)] = c(i, j, k)
    return AlgebraSpec(8, Fraction(q), NAMES, Tensor3(8, entries))


# Reference multiplication table: row e_i, column e_j holds e_i e_j.
TABLE1 = (
    "e0 e1 e2 e3 e4 e5 e6 e7",
    "e1 -e0 e4 e7 -e2 e6 -e5 -e3",
    "e2 -e4 -e0 e5 e1 -e3 e7 -e6",
    "e3 -e7 -e5 -e0 e6 e2 -e4 e1",
    "e4 e2 -e1 -e6 -e0 e7 e3 -e5",
    "e5 -e6 e3 -e2 -e7 -e0 e1 e4",
    "e6 e5 -e7 e4 -e3 -e1 -e0 e2",
    "e7 e3 e6 -e1 e5 -e4 -e2 -e0",
)

# Reference associator rows e_ij; cell k holds (e_i, e_j, e_k).
TABLE2 = {
    (0, 0): "0 0 0 0 0 0 0 0",
    (0, 1): "0 0 0 0 0 0 0 0",
    (1, 1): "0 0 0 0 0 0 0 0",
    (1, 2): "0 0 0 -2e6 0 2e7 2e3 -2e5",
    (2, 2): "0 0 0 0 0 0 0 0",
    (2, 3): "0 -2e6 0 0 -2e7 0 2e1 2e4",
    (3, 3): "0 0 0 0 0 0 0 0",
    (3, 4): "0 2e5 -2e7 0 0 -2e1 0 2e2",
    (4, 4): "0 0 0 0 0 0 0 0",
    (4, 5): "0 2e3 2e6 -2e1 0 0 -2e2 0",
    (5, 5): "0 0 0 0 0 0 0 0",
    (5, 6): "0 0 2e4 2e7 -2e2 0 0 -2e3",
    (6, 6): "0 0 0 0 0 0 0 0",
    (6, 7): "0 -2e4 0 2e5 2e1 -2e3 0 0",
    (7, 7): "0 0 0 0 0 0 0 0",
}

# Reference list of nonvanishing associator index combinations, permuted forms included.
LISTED_NONZERO = ((1, 2, 3), (1, 2, 5), (1, 2, 6), (1, 2, 7), (2, 3, 4), (2, 3, 6), (2, 3, 7),
                  (3, 4, 1), (3, 4, 2), (3, 4, 5), (3, 4, 7), (4, 5, 1), (4, 5, 2), (4, 5, 3),
                  (4, 5, 6), (5, 6, 2), (5, 6, 3), (5, 6, 4), (5, 6, 7), (6, 7, 1), (6, 7, 3),
                  (6, 7, 4), (6, 7, 5))


def parse_cell(text: str) -> Vector:
    """Parse a table cell such as ``-e0``, ``2e7`` or ``0``."""
    out = [ZERO] * 8
    if text == "0":
        return tuple(out)
    sign = -1 if text.startswith("-") else 1
    body = text.lstrip("-")
    coef, _, idx = body.partition("e")
    out[int(idx)] = Fraction(sign * (int(coef) if coef else 1))
    return tuple(out)


def render_cell(v: Vector) -> str:
    """Render a one-term vector in table style (``-2e6``)."""
    nz = [(k, a) for k, a in enumerate(v) if a]
    if not nz:
        return "0"
    if len(nz) > 1:
        return render_vector(v, NAMES)
    k, a = nz[0]
    mag = "" if abs(a) == 1 else str(abs(a))
    return f"{'-' if a < 0 else ''}{mag}e{k}"


@dataclass(frozen=True)
class Discrepancy:
    where: str
    tabulated: str
    computed: str


@dataclass(frozen=True)
class TableReport:
    name: str
    checked: int
    discrepancies: Tuple[Discrepancy, ...] = ()

    @property
    def verdict(self) -> bool:
        return not self.discrepancies

    def summary(self) -> str:
        if self.verdict:
            return f"{self.name}: {self.checked}/{self.checked} entries match"
        lines = [f"{self.name}: {len(self.discrepancies)} table discrepancies (computed value is normative)"]
        lines += [f"  {d.where}: table {d.tabulated}, computed {d.computed}" for d in self.discrepancies]
        return "\n".join(lines)


def multiplication_table(alg: AlgebraSpec | None = None) -> List[List[Vector]]:
    alg = alg or build_octonion()
    e = alg.basis_elements()
    return [[(e[i] * e[j]).coeffs for j in range(8)] for i in range(8)]


def check_table1(alg: AlgebraSpec | None = None) -> TableReport:
    table = multiplication_table(alg)
    bad = []
    for i, line in enumerate(TABLE1):
        for j, cell in enumerate(line.split()):
            if parse_cell(cell) != table[i][j]:
                bad.append(Discrepancy(f"e{i}*e{j}", cell, render_cell(table[i][j])))
    return TableReport("table1", 64, tuple(bad))


def associator_table(alg: AlgebraSpec | None = None) -> Dict[Tuple[int, int], Tuple[Vector, ...]]:
    """Brute-force associator rows ``(e_i, e_j, e_k)`` for the reference row keys."""
    alg = alg or build_octonion()
    e = alg.basis_elements()
    return {
        (i, j): tuple(associator(e[i], e[j], e[k]).coeffs for k in range(8))
        for (i, j) in TABLE2
    }


def check_table2(alg: AlgebraSpec | None = None) -> TableReport:
    rows = associator_table(alg)
    bad = []
    for (i, j), line in TABLE2.items():
        for k, cell in enumerate(line.split()):
            if parse_cell(cell) != rows[i, j][k]:
                bad.append(Discrepancy(f"(e{i},e{j},e{k})", cell, render_cell(rows[i, j][k])))
    return TableReport("table2", len(TABLE2) * 8, tuple(bad))


def closed_form_associator(i: int, j: int, k: int, kronecker_terms: bool = False) -> Vector:
    """Associator of imaginary units from structure constants alone.

    With ``kronecker_terms=False`` this is the sum over c-products exactly as
    usually written; it omits ``-delta_ij e_k + delta_jk e_i`` and so is wrong
    on triples with ``i == j`` or ``j == k`` (i != k). Passing True adds them.
    """
    out = [ZERO] * 8
    out[0] = Fraction(sum(c(i, j, m) * delta(m, k) - c(j, k, m) * delta(i, m) for m in IMAG))
    for n in IMAG:
        out[n] = Fraction(sum(c(i, j, m) * c(m, k, n) - c(j, k, m) * c(i, m, n) for m in IMAG))
    if kronecker_terms:
        out[k] -= delta(i, j)
        out[i] += delta(j, k)
    return tuple(out)


def compare_closed_form(kronecker_terms: bool = False) -> Tuple[int, List[Tuple[int, int, int]]]:
    """Compare the closed form with brute force on all 512 basis triples.

    Triples involving e0 are compared against zero (c vanishes there).
    Returns the number of triples checked and the mismatching ones.
    """
    alg = build_octonion()
    e = alg.basis_elements()
    bad = []
    for i, j, k in itertools.product(range(8), repeat=3):
        brute = associator(e[i], e[j], e[k]).coeffs
        if 0 in (i, j, k):
            closed = (ZERO,) * 8
        else:
            closed = closed_form_associator(i, j, k, kronecker_terms)
        if brute != closed:
            bad.append((i, j, k))
    return 512, bad


def _span_closed(alg: AlgebraSpec, idx: Sequence[int]) -> Tuple[int, int] | None:
    e = alg.basis_elements()
    inside = set(idx)
    for a in idx:
        for b in idx:
            v = (e[a] * e[b]).coeffs
            if any(v[k] for k in range(alg.dim) if k not in inside):
                return (a, b)
    return None


def check_subalgebra_associativity(alg: AlgebraSpec | None = None) -> CheckReport:
    """Each span {e0, e_i, e_j, e_k} over a quaternionic triple is a closed, associative subalgebra."""
    alg = alg or build_octonion()
    e = alg.basis_elements()
    for t in QUATERNIONIC_TRIPLES:
        idx = (0,) + t
        leak = _span_closed(alg, idx)
        if leak:
            a, b = leak
            return failed("quaternionic-subalgebras", (a, b), (e[a] * e[b]).coeffs, NAMES,
                          (NAMES[a], NAMES[b]), note=f"span of {idx} not closed")
        for a, b, d in itertools.product(idx, repeat=3):
            r = associator(e[a], e[b], e[d])
            if r:
                return failed("quaternionic-subalgebras", (a, b, d), r.coeffs, NAMES,
                              (NAMES[a], NAMES[b], NAMES[d]))
    return passed("quaternionic-subalgebras", note=f"{len(QUATERNIONIC_TRIPLES)} x 64 associators vanish")


def is_closed_span(idx: Sequence[int], alg: AlgebraSpec | None = None) -> bool:
    return _span_closed(alg or build_octonion(), idx) is None


def nonzero_associator_triples(alg: AlgebraSpec | None = None) -> List[Tuple[int, int, int]]:
    """Sorted index triples of distinct imaginary units with nonzero associator."""
    alg = alg or build_octonion()
    e = alg.basis_elements()
    return [t for t in itertools.combinations(IMAG, 3) if associator(e[t[0]], e[t[1]], e[t[2]])]


def listed_orbits() -> Dict[Tuple[int, int, int], List[Tuple[int, int, int]]]:
    """Canonicalize the listed nonvanishing combinations to sorted triples."""
    orbits: Dict[Tuple[int, int, int], List[Tuple[int, int, int]]] = {}
    for t in LISTED_NONZERO:
        orbits.setdefault(tuple(sorted(t)), []).append(t)
    return orbits


def check_associator_alternating(alg: AlgebraSpec | None = None) -> CheckReport:
    """Sign change under each adjacent swap, and nonzero exactly off quaternionic triples.

    Runs over all ordered triples of distinct imaginary indices.
    """
    alg = alg or build_octonion()
    e = alg.basis_elements()
    lines = {frozenset(t) for t in QUATERNIONIC_TRIPLES}
    for i, j, k in itertools.permutations(IMAG, 3):
        a = associator(e[i], e[j], e[k])
        for name, other in (("left", associator(e[j], e[i], e[k])),
                            ("right", associator(e[i], e[k], e[j]))):
            r = a + other
            if r:
                return failed("associator-alternating", (i, j, k), r.coeffs, NAMES,
                              (NAMES[i], NAMES[j], NAMES[k]), note=f"{name} swap")
        if a.is_zero() != (frozenset((i, j, k)) in lines):
            # Residual is the associator itself when it should vanish, else e0 as a marker.
            res = a.coeffs if a else (Fraction(1),) + (ZERO,) * 7
            return failed("associator-alternating", (i, j, k), res, NAMES,
                          (NAMES[i], NAMES[j], NAMES[k]), note="zero pattern")
    return passed("associator-alternating", note="210 ordered triples")


# -- bimodules of the octonions ---------------------------------------------

def _check_maps(maps: Sequence[Matrix], name: str) -> int:
    if len(maps) != 8:
        raise ShapeError(f"{name}: expected 8 maps, got {len(maps)}")
    n = maps[0].nrows
    for m in maps:
        if m.shape != (n, n):
            raise ShapeError(f"{name}: maps must all be {n}x{n}, got {m.shape}")
    return n


def _first_column(m: Matrix) -> int:
    return next(k for k in range(m.ncols) if any(m.column(k)))


def _fail_matrix(name, family, idx, m: Matrix) -> CheckReport:
    k = _first_column(m)
    names = tuple(f"v{i}" for i in range(m.nrows))
    return failed(name, idx + (k,), m.column(k), names,
                  tuple(NAMES[i] for i in idx) + (names[k],), equation=family)


def check_octonion_bimodule(l_maps: Sequence[Matrix], r_maps: Sequence[Matrix]) -> CheckReport:
    """Check the three relation families for (l, r) on a common space V.

    1. ``l_{e0} = id = r_{e0}`` and ``l_{e_i} = -r_{e_i}``
    2. ``[r_{e_i}, l_{e_j}] = [r_{e_j}, l_{e_i}]`` for all i, j
    3. ``delta_ij id + l_{e_i} l_{e_j} = c_ijk l_{e_k}`` for i, j >= 1

    Failures carry the relation family in ``equation`` and the witness
    ``(e_i, [e_j,] v_k)`` with column k of the residual matrix.
    """
    n = _check_maps(l_maps, "l")
    if _check_maps(r_maps, "r") != n:
        raise ShapeError("l and r act on spaces of different dimension")
    name = "octonion-bimodule"
    ident = Matrix.identity(n)
    for i in range(8):
        m = (l_maps[0] - ident) if i == 0 else (l_maps[i] + r_maps[i])
        if not m.is_zero():
            return _fail_matrix(name, 1, (i,), m)
        if i == 0 and not (r_maps[0] - ident).is_zero():
            return _fail_matrix(name, 1, (0,), r_maps[0] - ident)
    for i, j in itertools.product(range(8), repeat=2):
        m = (r_maps[i] @ l_maps[j] - l_maps[j] @ r_maps[i]) - (r_maps[j] @ l_maps[i] - l_maps[i] @ r_maps[j])
        if not m.is_zero():
            return _fail_matrix(name, 2, (i, j), m)
    for i, j in itertools.product(IMAG, repeat=2):
        m = delta(i, j) * ident + l_maps[i] @ l_maps[j] - matrix_sum(((c(i, j, k), l_maps[k]) for k in IMAG), n)
        if not m.is_zero():
            return _fail_matrix(name, 3, (i, j), m)
    return passed(name, note=f"vdim={n}")


def check_final_proposition(r_maps: Sequence[Matrix]) -> CheckReport:
    """``2 delta_ij + c_ijk r_k + 2 r_j r_i = 0`` and its l-form, for i, j in 1..7.

    ``l`` is derived as ``l_{e0} = id``, ``l_{e_i} = -r_{e_i}``; the maps must
    satisfy :func:`check_octonion_bimodule`, otherwise PreconditionError.
    """
    n = _check_maps(r_maps, "r")
    ident = Matrix.identity(n)
    l_maps = [ident] + [-m for m in r_maps[1:]]
    pre = check_octonion_bimodule(l_maps, r_maps)
    if not pre:
        raise PreconditionError("maps do not satisfy the octonion bimodule relations", pre)
    name = "octonion-final-proposition"
    for i, j in itertools.product(IMAG, repeat=2):
        r_form = (2 * delta(i, j) * ident + matrix_sum(((c(i, j, k), r_maps[k]) for k in IMAG), n)
                  + 2 * (r_maps[j] @ r_maps[i]))
        if not r_form.is_zero():
            return _fail_matrix(name, 1, (i, j), r_form)
        l_form = (2 * delta(i, j) * ident - matrix_sum(((c(i, j, k), l_maps[k]) for k in IMAG), n)
                  + 2 * (l_maps[j] @ l_maps[i]))
        if not l_form.is_zero():
            return _fail_matrix(name, 2, (i, j), l_form)
    return passed(name, note=f"vdim={n}")


@dataclass(frozen=True)
class BimoduleSearchResult:
    candidates: int
    by_vdim: Dict[int, int]
    hits: Tuple[Tuple[Tuple[Matrix, ...], Tuple[Matrix, ...]], ...]

    @property
    def found(self) -> bool:
        return bool(self.hits)

    def summary(self) -> str:
        verdict = f"{len(self.hits)} solutions" if self.hits else "no solution"
        dims = ", ".join(f"vdim {d}: {n}" for d, n in sorted(self.by_vdim.items()))
        return f"octonion bimodule search: {self.candidates} candidates ({dims}); {verdict}"


def _regular_candidates() -> List[List[Matrix]]:
    from .algebra import left_op, right_op
    alg = build_octonion()
    e = alg.basis_elements()
    L = [left_op(x) for x in e]
    R = [right_op(x) for x in e]
    cands = []
    for fam in (L, R):
        for sign in (1, -1):
            cands.append([Matrix.identity(8)] + [sign * m for m in fam[1:]])
    return cands


def search_octonion_bimodules(max_vdim: int = 8, trials: int = 200, seed: int = 0) -> BimoduleSearchResult:
    """Bounded search for nonzero (l, r) satisfying the octonion bimodule relations.

    Candidates are built from l_1, l_2, l_3 (the rest follow from relation 3
    via quaternionic products) drawn as random signed permutation matrices,
    plus the signed regular left/right operators in dimension 8.
    """
    rng = random.Random(seed)
    hits = []
    by_vdim: Dict[int, int] = {}
    count = 0

    def test(l_maps):
        nonlocal count
        count += 1
        n = l_maps[0].nrows
        by_vdim[n] = by_vdim.get(n, 0) + 1
        r_maps = [Matrix.identity(n)] + [-m for m in l_maps[1:]]
        if check_octonion_bimodule(l_maps, r_maps):
            hits.append((tuple(l_maps), tuple(r_maps)))

    for cand in _regular_candidates():
        test(cand)
    for vdim in range(1, max_vdim + 1):
        for _ in range(trials):
            gens = {g: _random_signed_permutation(vdim, rng) for g in (1, 2, 3)}
            test(_complete_from_generators(gens, vdim))
    return BimoduleSearchResult(count, by_vdim, tuple(hits))


def _random_signed_permutation(n: int, rng: random.Random) -> Matrix:
    perm = list(range(n))
    rng.shuffle(perm)
    rows = [[0] * n for _ in range(n)]
    for i, p in enumerate(perm):
        rows[i][p] = rng.choice((1, -1))
    return Matrix(rows, n)


def _complete_from_generators(gens: Dict[int, Matrix], n: int) -> List[Matrix]:
    # e1e2 = e4, e2e3 = e5, e3e4 = e6, e4e5 = e7 fix the remaining units.
    l = dict(gens)
    l[4] = l[1] @ l[2]
    l[5] = l[2] @ l[3]
    l[6] = l[3] @ l[4]
    l[7] = l[4] @ l[5]
    return [Matrix.identity(n)] + [l[i] for i in IMAG]


@dataclass(frozen=True)
class StructureMyungReport:
    derivation: CheckReport
    constants: CheckReport

    @property
    def agree(self) -> bool:
        return self.derivation.verdict == self.constants.verdict


def check_structure_constant_myung(indices: Sequence[int] | None = None) -> StructureMyungReport:
    """Evaluate ``[e_k, e_ie_j] = [e_k, e_i]e_j + e_i[e_k, e_j]`` and the constant identity.

    The derivation form runs over basis triples drawn from ``indices``
    (default all of 0..7); the constant form
    ``c_ijm c_kml = c_kim c_mjl + c_kjm c_iml`` (sum over m in 1..7) runs
    over 4-tuples from the imaginary part of ``indices``.
    """
    alg = build_octonion()
    e = alg.basis_elements()
    idx = tuple(range(8)) if indices is None else tuple(indices)
    deriv = passed("octonion-bracket-derivation")
    for i, j, k in itertools.product(idx, repeat=3):
        r = commutator(e[k], e[i] * e[j]) - (commutator(e[k], e[i]) * e[j] + e[i] * commutator(e[k], e[j]))
        if r:
            deriv = failed("octonion-bracket-derivation", (i, j, k), r.coeffs, NAMES,
                           (NAMES[i], NAMES[j], NAMES[k]))
            break
    imag = [i for i in idx if i != 0]
    const = passed("octonion-constant-identity")
    for i, j, k, l in itertools.product(imag, repeat=4):
        lhs = sum(c(i, j, m) * c(k, m, l) for m in IMAG)
        rhs = sum(c(k, i, m) * c(m, j, l) + c(k, j, m) * c(i, m, l) for m in IMAG)
        if lhs != rhs:
            const = failed("octonion-constant-identity", (i, j, k, l), (Fraction(lhs - rhs),), ("lhs-rhs",),
                           (f"i={i}", f"j={j}", f"k={k}", f"l={l}"))
            break
    return StructureMyungReport(deriv, const)


# -- text and JSON renderings of the tables ----------------------------------

def _aligned(header: Sequence[str], rows: Sequence[Tuple[str, Sequence[str]]]) -> str:
    cells = [list(header)] + [list(r) for _, r in rows]
    widths = [max(len(row[k]) for row in cells) for k in range(len(header))]
    labels = [""] + [label for label, _ in rows]
    lw = max(len(x) for x in labels)
    lines = []
    for label, row in zip(labels, cells):
        body = " ".join(cell.rjust(w) for cell, w in zip(row, widths))
        lines.append(f"{label.ljust(lw)} | {body}".rstrip())
    return "\n".join(lines) + "\n"


def table1_text(alg: AlgebraSpec | None = None) -> str:
    table = multiplication_table(alg)
    rows = [(NAMES[i], [render_cell(v) for v in table[i]]) for i in range(8)]
    return _aligned(NAMES, rows)


def table2_text(alg: AlgebraSpec | None = None) -> str:
    rows = [(f"e{i}{j}", [render_cell(v) for v in vs]) for (i, j), vs in associator_table(alg).items()]
    return _aligned(NAMES, rows)


def table1_json(alg: AlgebraSpec | None = None) -> dict:
    table = multiplication_table(alg)
    return {"columns": list(NAMES),
            "rows": [{"row": NAMES[i], "cells": [render_cell(v) for v in table[i]]} for i in range(8)]}


def table2_json(alg: AlgebraSpec | None = None) -> dict:
    return {"columns": list(NAMES),
            "rows": [{"row": f"e{i}{j}", "i": i, "j": j, "cells": [render_cell(v) for v in vs]}
                     for (i, j), vs in associator_table(alg).items()]}


# -- the full fixture suite ----------------------------------------------------

@dataclass(frozen=True)
class SuiteItem:
    name: str
    ok: bool
    detail: str
    gating: bool = True


def run_suite(bimodule_trials: int = 50, seed: int = 0) -> List[SuiteItem]:
    """Every octonion check, each with the outcome the fixture is known to have.

    Items with ``gating=False`` record data (e.g. search outcomes) and do not
    affect the overall verdict.
    """
    from .algebra import (check_myung_equivalence, check_operator_relations, check_q_flexible,
                          check_q_jacobi, cyclic_associator_sum, jacobiator)

    items: List[SuiteItem] = []

    def add(name, ok, detail, gating=True):
        items.append(SuiteItem(name, bool(ok), detail, gating))

    o = build_octonion(-1)
    for rep in (check_table1(o), check_table2(o)):
        add(rep.name, rep.verdict, rep.summary())
    r = check_q_flexible(o)
    add("q-flexible at q=-1", r, r.summary())
    for q, expected in ((0, (-2, 6)), (1, (-4, 6))):
        r = check_q_flexible(o.with_q(q))
        ok = (not r) and r.witness == (1, 2, 3) and r.residual[expected[1]] == expected[0]
        add(f"q-flexible fails at q={q}", ok, r.summary())
    for fn in (check_operator_relations, check_q_jacobi):
        r = fn(o)
        add(f"{r.identity_name} at q=-1", r, r.summary())
    e = o.basis_elements()
    J, S = jacobiator(e[1], e[2], e[3]), cyclic_associator_sum(e[1], e[2], e[3])
    add("J(e1,e2,e3) = 12*e6 and S(e1,e2,e3) = -6*e6",
        str(J) == "12*e6" and str(S) == "-6*e6" and J == (o.q - 1) * S, f"J = {J}, S = {S}")
    for rep in (check_subalgebra_associativity(o), check_associator_alternating(o)):
        add(rep.identity_name, rep, rep.summary() + (f" ({rep.note})" if rep.note else ""))
    n, bad = compare_closed_form(kronecker_terms=True)
    add("closed associator formula with Kronecker terms", not bad, f"{n - len(bad)}/{n} triples agree")
    n, bad = compare_closed_form(kronecker_terms=False)
    add("closed associator formula without Kronecker terms", True,
        f"{n - len(bad)}/{n} triples agree; differs where i=j or j=k", gating=False)
    sm = check_structure_constant_myung()
    add("structure-constant identities agree", sm.agree,
        f"derivation {sm.derivation.verdict}, constants {sm.constants.verdict}")
    my = check_myung_equivalence(o)
    add("Myung conditions", True,
        "bracket-derivation {}, star-derivation {}, Lie-admissible {}; agree {}".format(*my.verdicts, my.agree),
        gating=False)
    res = search_octonion_bimodules(max_vdim=8, trials=bimodule_trials, seed=seed)
    add("octonion bimodule search", True, res.summary(), gating=False)
    fp = check_final_proposition([Matrix.zeros(0)] * 8)
    add("final proposition at vdim 0", fp, fp.summary())
    return items
