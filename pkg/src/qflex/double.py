"""The double A + A* of an algebra and a dual structure, its invariant form,
and the Manin triple verdict."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Sequence, Tuple, Union

from .algebra import AlgebraSpec, CheckReport, Element, check_q_flexible, failed, left_op, passed, right_op
from .errors import DomainError
from .linalg import ZERO, Matrix, Tensor3, Vector, unit_vector, vec_add, vec_scale, vec_sub
from .matched_pair import MatchedPairSpec


def dual_names(names: Sequence[str]) -> Tuple[str, ...]:
    return tuple(n + "*" for n in names)


@dataclass(frozen=True)
class DoubleSpec:
    """An algebra (product ``.``) and a structure ``o`` on its dual space.

    The dual is coordinatized in the dual basis ``e^0, ..., e^{n-1}``.
    The four derived families are transposes of multiplication operators:
    ``R_dot[i] = R_{e_i}^T`` acts on A*, ``R_circ[s] = R_{e^s}^T`` acts on A,
    and likewise for the left operators.
    """

    primal: AlgebraSpec
    dual: AlgebraSpec
    R_dot: Tuple[Matrix, ...] = field(init=False, repr=False, compare=False)
    L_dot: Tuple[Matrix, ...] = field(init=False, repr=False, compare=False)
    R_circ: Tuple[Matrix, ...] = field(init=False, repr=False, compare=False)
    L_circ: Tuple[Matrix, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.primal.dim != self.dual.dim:
            raise DomainError(f"dual has dimension {self.dual.dim}, primal {self.primal.dim}")
        if self.primal.q != self.dual.q:
            raise DomainError(f"q mismatch: {self.primal.q} vs {self.dual.q}")
        p, d = self.primal.basis_elements(), self.dual.basis_elements()
        object.__setattr__(self, "R_dot", tuple(right_op(x).T for x in p))
        object.__setattr__(self, "L_dot", tuple(left_op(x).T for x in p))
        object.__setattr__(self, "R_circ", tuple(right_op(a).T for a in d))
        object.__setattr__(self, "L_circ", tuple(left_op(a).T for a in d))

    @classmethod
    def zero_dual(cls, primal: AlgebraSpec) -> "DoubleSpec":
        return cls(primal, AlgebraSpec(primal.dim, primal.q, dual_names(primal.basis_names)))

    @classmethod
    def from_dual_products(cls, primal: AlgebraSpec, products) -> "DoubleSpec":
        """``products`` maps ``(s, t)`` to ``{u: coeff}`` for ``e^s o e^t``."""
        dual = AlgebraSpec.from_products(primal.dim, primal.q, products, dual_names(primal.basis_names))
        return cls(primal, dual)

    @property
    def dim(self) -> int:
        return self.primal.dim

    @property
    def q(self) -> Fraction:
        return self.primal.q


def build_double(d: DoubleSpec) -> AlgebraSpec:
    """The 2n-dimensional algebra with
    ``(x+a)(y+b) = (x.y + R_o*(a)y + L_o*(b)x) + (a o b + R.*(x)b + L.*(y)a)``.

    Entries are read off the pairing directly: for instance the e^t
    coefficient of ``R.*(e_i) e^s`` is ``<e^s, e_t . e_i>``.
    """
    n = d.dim
    P, D = d.primal.structure, d.dual.structure
    entries: Dict[Tuple[int, int, int], Fraction] = {}

    def put(i, j, k, c):
        if c:
            entries[(i, j, k)] = entries.get((i, j, k), ZERO) + c

    for (i, j, k), c in P.items():
        put(i, j, k, c)
    for (s, t, u), c in D.items():
        put(n + s, n + t, n + u, c)
    for i, s, k in itertools.product(range(n), repeat=3):
        # e_i * e^s: L_o*(e^s) e_i in A, R.*(e_i) e^s in A*
        put(i, n + s, k, D[s, k, i])
        put(i, n + s, n + k, P[k, i, s])
        # e^s * e_i: R_o*(e^s) e_i in A, L.*(e_i) e^s in A*
        put(n + s, i, k, D[k, s, i])
        put(n + s, i, n + k, P[i, k, s])
    names = d.primal.basis_names + tuple(
        name if name not in d.primal.basis_names else name + "'" for name in d.dual.basis_names)
    return AlgebraSpec(2 * n, d.q, names, Tensor3(2 * n, entries))


def as_matched_pair(d: DoubleSpec) -> MatchedPairSpec:
    """The sixtuple (A, A*, R.*, L.*, R_o*, L_o*)."""
    return MatchedPairSpec(d.primal, d.dual, d.R_dot, d.L_dot, d.R_circ, d.L_circ)


def _act(maps: Sequence[Matrix], coeffs: Vector, v: Vector) -> Vector:
    out = (ZERO,) * len(v)
    for i, c in enumerate(coeffs):
        if c:
            out = vec_add(out, vec_scale(c, maps[i].apply(v)))
    return out


def _dual_equations(d: DoubleSpec, x: Vector, y: Vector, a: Vector) -> Tuple[Vector, ...]:
    q = d.q
    dot = d.primal.product_vector

    def Rc(a_, v):
        return _act(d.R_circ, a_, v)

    def Lc(a_, v):
        return _act(d.L_circ, a_, v)

    def Rd(v, a_):
        return _act(d.R_dot, v, a_)

    def Ld(v, a_):
        return _act(d.L_dot, v, a_)

    def combo(pos, neg):
        out = (ZERO,) * d.dim
        for v in pos:
            out = vec_add(out, v)
        for v in neg:
            out = vec_sub(out, v)
        return out

    e1 = vec_sub(
        combo([dot(Rc(a, x), y), Rc(Ld(x, a), y)], [Rc(a, dot(x, y))]),
        vec_scale(q, combo([Lc(a, dot(y, x))], [dot(y, Lc(a, x)), Lc(Rd(x, a), y)])),
    )
    e2 = vec_sub(
        combo([Lc(a, dot(x, y))], [dot(x, Lc(a, y)), Lc(Rd(y, a), x)]),
        vec_scale(q, combo([dot(Rc(a, y), x), Rc(Ld(y, a), x)], [Rc(a, dot(y, x))])),
    )
    e3 = vec_sub(
        combo([dot(Lc(a, x), y), Rc(Rd(x, a), y)], [dot(x, Rc(a, y)), Lc(Ld(y, a), x)]),
        vec_scale(q, combo([dot(Lc(a, y), x), Rc(Rd(y, a), x)], [dot(y, Rc(a, x)), Lc(Ld(x, a), y)])),
    )
    return e1, e2, e3


def dual_equation_residuals(d: DoubleSpec, i: int, j: int, s: int) -> Tuple[Vector, ...]:
    """Residuals (vectors in A) of the three dual identities at ``(e_i, e_j, e^s)``."""
    n = d.dim
    return _dual_equations(d, unit_vector(n, i), unit_vector(n, j), unit_vector(n, s))


def check_dual_matched_pair(d: DoubleSpec) -> CheckReport:
    """Primal and dual q-flexible, then the three dual identities on every basis triple.

    Coupling failures report ``equation`` 1-3.
    """
    for label, alg in (("primal", d.primal), ("dual", d.dual)):
        r = check_q_flexible(alg)
        if not r:
            return CheckReport(f"dual-matched-pair/{label} {r.identity_name}", False, r.witness, r.residual,
                               r.residual_basis, r.witness_names, note=r.note)
    names, dnames = d.primal.basis_names, d.dual.basis_names
    for n in range(3):
        for i, j, s in itertools.product(range(d.dim), repeat=3):
            r = dual_equation_residuals(d, i, j, s)[n]
            if any(r):
                return failed("dual-matched-pair", (i, j, s), r, names,
                              (names[i], names[j], dnames[s]), equation=n + 1)
    return passed("dual-matched-pair")


def _double_dim(alg: AlgebraSpec) -> int:
    if alg.dim % 2:
        raise DomainError(f"a double has even dimension, got {alg.dim}")
    return alg.dim // 2


def bilinear_form(u: Element, v: Element) -> Fraction:
    """``B(x + a, y + b) = <x, b> + <y, a>`` on elements of a double."""
    if u.algebra != v.algebra:
        raise DomainError("elements belong to different doubles")
    n = _double_dim(u.algebra)
    return sum((u.coeffs[i] * v.coeffs[n + i] + u.coeffs[n + i] * v.coeffs[i] for i in range(n)), ZERO)


def bilinear_form_matrix(n: int) -> Matrix:
    """Gram matrix of the form on a 2n-dim double: ``[[0, I], [I, 0]]``."""
    return Matrix.from_columns([unit_vector(2 * n, (k + n) % (2 * n)) for k in range(2 * n)], 2 * n)


def _form(n: int, u: Vector, v: Vector) -> Fraction:
    return sum((u[i] * v[n + i] + u[n + i] * v[i] for i in range(n)), ZERO)


def check_invariance(d: Union[DoubleSpec, AlgebraSpec]) -> CheckReport:
    """``B(u*v, w) = B(u, v*w)`` on every basis triple of the double.

    Accepts a :class:`DoubleSpec` (built canonically) or an already built
    2n-dimensional algebra, so altered doubles can be checked too.
    """
    alg = build_double(d) if isinstance(d, DoubleSpec) else d
    n = _double_dim(alg)
    dim = alg.dim
    basis = [unit_vector(dim, i) for i in range(dim)]
    prods = {(i, j): alg.product_vector(basis[i], basis[j]) for i in range(dim) for j in range(dim)}
    for i, j, k in itertools.product(range(dim), repeat=3):
        r = _form(n, prods[i, j], basis[k]) - _form(n, basis[i], prods[j, k])
        if r:
            names = alg.basis_names
            return failed("invariance", (i, j, k), (r,), ("B",), (names[i], names[j], names[k]))
    return passed("invariance")


def check_lagrangian(alg: AlgebraSpec, indices: Sequence[int], name: str = "lagrangian") -> CheckReport:
    """The span of ``indices`` is closed under the product, B vanishes on it,
    and it has half the dimension of the double."""
    n = _double_dim(alg)
    idx = list(indices)
    if len(idx) != n:
        raise DomainError(f"Lagrangian subspace must have dimension {n}")
    inside = set(idx)
    basis = [unit_vector(alg.dim, i) for i in range(alg.dim)]
    for i, j in itertools.product(idx, repeat=2):
        p = alg.product_vector(basis[i], basis[j])
        outside = tuple(c if k not in inside else ZERO for k, c in enumerate(p))
        if any(outside):
            return failed(f"{name}/closed", (i, j), outside, alg.basis_names,
                          (alg.basis_names[i], alg.basis_names[j]))
        b = _form(n, basis[i], basis[j])
        if b:
            return failed(f"{name}/isotropic", (i, j), (b,), ("B",),
                          (alg.basis_names[i], alg.basis_names[j]))
    return passed(name)


@dataclass(frozen=True)
class ManinVerdict:
    is_manin_triple: bool
    is_matched_pair: bool
    is_bialgebra: bool
    reports: Dict[str, CheckReport]

    @property
    def agree(self) -> bool:
        return self.is_manin_triple == self.is_matched_pair == self.is_bialgebra

    @property
    def verdict(self) -> bool:
        return self.is_manin_triple and self.is_matched_pair and self.is_bialgebra

    def to_dict(self) -> dict:
        return {
            "is_manin_triple": self.is_manin_triple,
            "is_matched_pair": self.is_matched_pair,
            "is_bialgebra": self.is_bialgebra,
            "agree": self.agree,
            "reports": {k: r.to_dict() for k, r in self.reports.items()},
        }


def _form_is_nondegenerate_symmetric(n: int) -> bool:
    g = bilinear_form_matrix(n)
    return g == g.T and g @ g == Matrix.identity(2 * n)


def manin_verdict(d: DoubleSpec) -> ManinVerdict:
    """Evaluate the three equivalent conditions independently.

    * Manin triple: the double is q-flexible, B is invariant and both blocks
      are isotropic subalgebras.
    * matched pair: :func:`check_dual_matched_pair`.
    * bialgebra: additionally B is symmetric and nondegenerate and the two
      Lagrangian subalgebras span the double.
    """
    n = d.dim
    alg = build_double(d)
    reports = {
        "flexible": check_q_flexible(alg),
        "invariance": check_invariance(alg),
        "lagrangian_A": check_lagrangian(alg, range(n), "lagrangian A"),
        "lagrangian_A_dual": check_lagrangian(alg, range(n, 2 * n), "lagrangian A*"),
        "dual_matched_pair": check_dual_matched_pair(d),
    }
    manin = all(bool(reports[k]) for k in ("flexible", "invariance", "lagrangian_A", "lagrangian_A_dual"))
    spans = sorted(list(range(n)) + list(range(n, 2 * n))) == list(range(alg.dim))
    bialgebra = manin and _form_is_nondegenerate_symmetric(n) and spans
    return ManinVerdict(manin, bool(reports["dual_matched_pair"]), bialgebra, reports)
