"""Bimodules (l, r, V) of a q-flexible algebra, semidirect products and duals."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence, Tuple

from .algebra import (
    AlgebraSpec,
    CheckReport,
    Element,
    check_q_flexible,
    failed,
    left_op,
    passed,
    right_op,
)
from .errors import PreconditionError, ShapeError
from .linalg import Matrix, Tensor3, Vector, matrix_sum


@dataclass(frozen=True)
class Bimodule:
    """Left and right actions of an algebra on a ``vdim``-dimensional space.

    ``l_maps[i]`` and ``r_maps[i]`` are the actions of basis element ``i``;
    other elements act through the linear extension.
    """

    algebra: AlgebraSpec
    vdim: int
    l_maps: Tuple[Matrix, ...]
    r_maps: Tuple[Matrix, ...]
    vbasis_names: Tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "l_maps", tuple(self.l_maps))
        object.__setattr__(self, "r_maps", tuple(self.r_maps))
        for side, maps in (("l", self.l_maps), ("r", self.r_maps)):
            if len(maps) != self.algebra.dim:
                raise ShapeError(f"{side}: {len(maps)} maps for an algebra of dimension {self.algebra.dim}")
            for m in maps:
                if m.shape != (self.vdim, self.vdim):
                    raise ShapeError(f"{side}: expected {self.vdim}x{self.vdim} maps, got {m.shape}")
        names = tuple(self.vbasis_names) or tuple(f"v{i}" for i in range(self.vdim))
        if len(names) != self.vdim:
            raise ShapeError("wrong number of module basis names")
        object.__setattr__(self, "vbasis_names", names)

    def l(self, x: Element | Vector) -> Matrix:
        coeffs = x.coeffs if isinstance(x, Element) else x
        return matrix_sum(zip(coeffs, self.l_maps), self.vdim)

    def r(self, x: Element | Vector) -> Matrix:
        coeffs = x.coeffs if isinstance(x, Element) else x
        return matrix_sum(zip(coeffs, self.r_maps), self.vdim)


def regular_bimodule(alg: AlgebraSpec) -> Bimodule:
    """(L, R) acting on the algebra itself."""
    e = alg.basis_elements()
    return Bimodule(alg, alg.dim, [left_op(x) for x in e], [right_op(x) for x in e], alg.basis_names)


def zero_bimodule(alg: AlgebraSpec, vdim: int) -> Bimodule:
    z = Matrix.zeros(vdim)
    return Bimodule(alg, vdim, [z] * alg.dim, [z] * alg.dim)


def bimodule_residuals(b: Bimodule, i: int, j: int) -> Tuple[Matrix, Matrix, Matrix]:
    """Residuals of the three bimodule identities at basis pair ``(e_i, e_j)``.

    1. ``l_{xy} - l_x l_y - q (r_x r_y - r_{yx})``
    2. ``[r_x, l_y] - q [r_y, l_x]``
    3. ``r_x r_y - r_{yx} - q (l_{xy} - l_x l_y)``
    """
    alg = b.algebra
    q = alg.q
    x, y = alg.basis(i), alg.basis(j)
    lx, ly, rx, ry = b.l_maps[i], b.l_maps[j], b.r_maps[i], b.r_maps[j]
    left_defect = b.l(x * y) - lx @ ly
    right_defect = rx @ ry - b.r(y * x)
    return (
        left_defect - q * right_defect,
        (rx @ ly - ly @ rx) - q * (ry @ lx - lx @ ry),
        right_defect - q * left_defect,
    )


def check_bimodule(b: Bimodule) -> CheckReport:
    """All three identities for every basis pair; witness is ``(x, y, v)``."""
    names = b.algebra.basis_names
    for i, j in itertools.product(range(b.algebra.dim), repeat=2):
        for n, m in enumerate(bimodule_residuals(b, i, j), start=1):
            if m.is_zero():
                continue
            k = next(k for k in range(b.vdim) if any(m.column(k)))
            return failed("bimodule", (i, j, k), m.column(k), b.vbasis_names,
                          (names[i], names[j], b.vbasis_names[k]), equation=n)
    return passed("bimodule")


def semidirect_product(b: Bimodule, verify: bool = True) -> AlgebraSpec:
    """The algebra on A + V with ``(x + u)(y + v) = xy + l_x v + r_y u``.

    With ``verify`` (the default) the algebra must be q-flexible and ``b``
    a bimodule, otherwise PreconditionError. ``verify=False`` builds the
    product regardless, which is how non-bimodules are shown to fail.
    """
    alg = b.algebra
    if verify:
        for report in (check_q_flexible(alg), check_bimodule(b)):
            if not report:
                raise PreconditionError(f"semidirect product needs a verified input: {report.summary()}", report)
    n, m = alg.dim, b.vdim
    entries = {}
    for (i, j, k), c in alg.structure.items():
        entries[(i, j, k)] = c
    for i in range(n):
        for u in range(m):
            for w in range(m):
                if b.l_maps[i][w, u]:
                    entries[(i, n + u, n + w)] = b.l_maps[i][w, u]
                if b.r_maps[i][w, u]:
                    entries[(n + u, i, n + w)] = b.r_maps[i][w, u]
    names = alg.basis_names + _fresh_names(b.vbasis_names, alg.basis_names)
    return AlgebraSpec(n + m, alg.q, names, Tensor3(n + m, entries))


def _fresh_names(names: Sequence[str], taken: Sequence[str]) -> Tuple[str, ...]:
    taken = set(taken)
    out = []
    for name in names:
        while name in taken:
            name = name + "'"
        taken.add(name)
        out.append(name)
    return tuple(out)


def dual_bimodule(b: Bimodule, sign: int = 1) -> Bimodule:
    """The bimodule ``(r*, l*)`` on V* in the dual basis.

    Dual maps are transposes, so the new left action is ``r_x^T`` and the
    new right action ``l_x^T``. ``sign=-1`` selects the negated convention
    ``<l*_x a, u> = -<a, l_x u>``; its bimodule property is not asserted for that variant.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    names = tuple(n[:-1] if n.endswith("*") else n + "*" for n in b.vbasis_names)
    return Bimodule(
        b.algebra,
        b.vdim,
        [sign * m.T for m in b.r_maps],
        [sign * m.T for m in b.l_maps],
        names,
    )
