"""q-generalized flexible algebras given by structure constants.

An algebra is *q-flexible* when its associator satisfies
``(x, y, z) = q (z, y, x)``: q = 0 gives associative algebras, q = -1
flexible ones and q = 1 center-symmetric (antiflexible) ones.

Every "for all x, y, z" identity is checked on basis tuples only; by
multilinearity this is the same as checking it on all elements. Checkers
return a :class:`CheckReport` carrying the lexicographically first
failing basis tuple.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterable, Mapping, Optional, Sequence, Tuple

from .errors import DomainError, PreconditionError, ShapeError
from .linalg import (
    ZERO,
    Matrix,
    Scalar,
    Tensor3,
    Vector,
    format_rational,
    is_zero_vector,
    unit_vector,
    vec_add,
    vec_scale,
    vec_sub,
)

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class AlgebraSpec:
    """A finite-dimensional algebra over the rationals with parameter ``q``.

    ``structure[i, j, k]`` is the coefficient of basis ``k`` in ``e_i e_j``.
    """

    dim: int
    q: Fraction
    basis_names: Tuple[str, ...] = ()
    structure: Tensor3 = None

    def __post_init__(self):
        if self.dim < 0:
            raise ShapeError("dimension must be non-negative")
        object.__setattr__(self, "q", Fraction(self.q))
        names = tuple(self.basis_names) or tuple(f"e{i}" for i in range(self.dim))
        if len(names) != self.dim:
            raise ShapeError(f"{len(names)} basis names for dimension {self.dim}")
        if len(set(names)) != len(names):
            raise ShapeError("basis names must be distinct")
        object.__setattr__(self, "basis_names", names)
        structure = self.structure if self.structure is not None else Tensor3(self.dim)
        if structure.dim != self.dim:
            raise ShapeError(f"structure tensor has dimension {structure.dim}, expected {self.dim}")
        object.__setattr__(self, "structure", structure)

    @classmethod
    def from_products(cls, dim: int, q: Scalar,
                      products: Mapping[Tuple[int, int], Mapping[int, Scalar]],
                      basis_names: Sequence[str] = ()) -> "AlgebraSpec":
        """Build from ``{(i, j): {k: coeff}}``; omitted entries are zero."""
        entries = {(i, j, k): c for (i, j), row in products.items() for k, c in row.items()}
        return cls(dim, Fraction(q), tuple(basis_names), Tensor3(dim, entries))

    def with_q(self, q: Scalar) -> "AlgebraSpec":
        return AlgebraSpec(self.dim, Fraction(q), self.basis_names, self.structure)

    def basis(self, i: int) -> "Element":
        return Element(self, unit_vector(self.dim, i))

    def basis_elements(self) -> Tuple["Element", ...]:
        return tuple(self.basis(i) for i in range(self.dim))

    def element(self, coeffs: Iterable[Scalar]) -> "Element":
        return Element(self, tuple(Fraction(c) for c in coeffs))

    def zero(self) -> "Element":
        return Element(self, (ZERO,) * self.dim)

    def product_vector(self, u: Vector, v: Vector) -> Vector:
        """Bilinear product on raw coefficient vectors."""
        acc: Dict[int, Fraction] = {}
        vs = [(j, b) for j, b in enumerate(v) if b]
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in vs:
                ab = a * b
                for k, c in self.structure.row(i, j).items():
                    acc[k] = acc.get(k, ZERO) + ab * c
        return tuple(acc.get(k, ZERO) for k in range(self.dim))

    def describe(self, coeffs: Vector) -> str:
        return render_vector(coeffs, self.basis_names)


def render_vector(coeffs: Sequence[Fraction], names: Sequence[str]) -> str:
    """Render like ``-2*e6`` or ``e1 + 1/2*e4``; the zero vector is ``0``."""
    parts = []
    for c, name in zip(coeffs, names):
        if not c:
            continue
        mag = abs(c)
        term = name if mag == 1 else f"{format_rational(mag)}*{name}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"- {term}")
    return " ".join(parts) if parts else "0"


@dataclass(frozen=True)
class Element:
    algebra: AlgebraSpec
    coeffs: Vector

    def __post_init__(self):
        if len(self.coeffs) != self.algebra.dim:
            raise ShapeError(f"{len(self.coeffs)} coefficients for dimension {self.algebra.dim}")

    def _same(self, other: "Element") -> None:
        if not isinstance(other, Element):
            raise TypeError(f"expected Element, got {type(other).__name__}")
        if other.algebra is not self.algebra and other.algebra != self.algebra:
            raise DomainError("elements belong to different algebras")

    def __add__(self, other: "Element") -> "Element":
        self._same(other)
        return Element(self.algebra, vec_add(self.coeffs, other.coeffs))

    def __sub__(self, other: "Element") -> "Element":
        self._same(other)
        return Element(self.algebra, vec_sub(self.coeffs, other.coeffs))

    def __neg__(self) -> "Element":
        return Element(self.algebra, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, Element):
            return multiply(self, other)
        return Element(self.algebra, vec_scale(other, self.coeffs))

    def __rmul__(self, c: Scalar) -> "Element":
        return Element(self.algebra, vec_scale(c, self.coeffs))

    def is_zero(self) -> bool:
        return is_zero_vector(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __str__(self) -> str:
        return self.algebra.describe(self.coeffs)


@dataclass(frozen=True)
class CheckReport:
    """Verdict of an identity check.

    A failing report names the first failing basis tuple (``witness``) and
    the nonzero residual as a coefficient vector over ``residual_basis``.
    """

    identity_name: str
    verdict: bool
    witness: Optional[Tuple[int, ...]] = None
    residual: Optional[Vector] = None
    residual_basis: Tuple[str, ...] = ()
    witness_names: Tuple[str, ...] = ()
    equation: Optional[int] = None
    note: str = ""

    def __post_init__(self):
        if not self.verdict:
            assert self.witness is not None and self.residual is not None
            assert not is_zero_vector(self.residual), "failing report needs a nonzero residual"

    def __bool__(self) -> bool:
        return self.verdict

    @property
    def residual_text(self) -> str:
        if self.residual is None:
            return ""
        return render_vector(self.residual, self.residual_basis)

    def summary(self) -> str:
        if self.verdict:
            return f"{self.identity_name}: holds"
        where = "(" + ",".join(self.witness_names or map(str, self.witness)) + ")"
        eq = f" [equation {self.equation}]" if self.equation is not None else ""
        return f"{self.identity_name}: fails at {where}{eq} residual {self.residual_text}"

    def to_dict(self) -> dict:
        out = {"identity": self.identity_name, "verdict": self.verdict}
        if not self.verdict:
            out["witness"] = list(self.witness)
            out["witness_names"] = list(self.witness_names)
            out["residual"] = [format_rational(c) for c in self.residual]
            out["residual_text"] = self.residual_text
            if self.equation is not None:
                out["equation"] = self.equation
        if self.note:
            out["note"] = self.note
        return out


def passed(name: str, note: str = "") -> CheckReport:
    return CheckReport(name, True, note=note)


def failed(name: str, witness: Tuple[int, ...], residual: Vector, residual_basis: Sequence[str],
           witness_names: Sequence[str] = (), equation: Optional[int] = None, note: str = "") -> CheckReport:
    return CheckReport(name, False, tuple(witness), tuple(residual), tuple(residual_basis),
                       tuple(witness_names), equation, note)


def scan(name: str, alg: AlgebraSpec, arity: int,
         residual: Callable[..., Element]) -> CheckReport:
    """Evaluate ``residual`` on every basis tuple in lexicographic order."""
    basis = alg.basis_elements()
    for idx in itertools.product(range(alg.dim), repeat=arity):
        r = residual(*(basis[i] for i in idx))
        if not r.is_zero():
            return failed(name, idx, r.coeffs, alg.basis_names,
                          [alg.basis_names[i] for i in idx])
    return passed(name)


# -- products ----------------------------------------------------------------

def _check_same(*xs: Element) -> AlgebraSpec:
    alg = xs[0].algebra
    for x in xs[1:]:
        if x.algebra is not alg and x.algebra != alg:
            raise DomainError("elements belong to different algebras")
    return alg


def multiply(x: Element, y: Element) -> Element:
    alg = _check_same(x, y)
    return Element(alg, alg.product_vector(x.coeffs, y.coeffs))


def associator(x: Element, y: Element, z: Element) -> Element:
    _check_same(x, y, z)
    return (x * y) * z - x * (y * z)


def commutator(x: Element, y: Element) -> Element:
    _check_same(x, y)
    return x * y - y * x


def q_bracket(x: Element, y: Element) -> Element:
    """``{x, y}_q = xy + q yx``."""
    alg = _check_same(x, y)
    return x * y + alg.q * (y * x)


def star_q(x: Element, y: Element) -> Element:
    """``x *_q y = (xy - q yx) / 2``."""
    alg = _check_same(x, y)
    return HALF * (x * y - alg.q * (y * x))


def left_op(x: Element) -> Matrix:
    """Matrix of ``y -> x y`` in the algebra basis."""
    alg = x.algebra
    cols = [alg.product_vector(x.coeffs, unit_vector(alg.dim, j)) for j in range(alg.dim)]
    return Matrix.from_columns(cols, alg.dim)


def right_op(x: Element) -> Matrix:
    """Matrix of ``y -> y x`` in the algebra basis."""
    alg = x.algebra
    cols = [alg.product_vector(unit_vector(alg.dim, j), x.coeffs) for j in range(alg.dim)]
    return Matrix.from_columns(cols, alg.dim)


def cyclic_associator_sum(x: Element, y: Element, z: Element) -> Element:
    return associator(x, y, z) + associator(y, z, x) + associator(z, x, y)


def jacobiator(x: Element, y: Element, z: Element) -> Element:
    """``[x, [y, z]] + [y, [z, x]] + [z, [x, y]]``."""
    c = commutator
    return c(x, c(y, z)) + c(y, c(z, x)) + c(z, c(x, y))


# -- residuals of the defining identities -----------------------------------

def q_flexible_residual(x, y, z):
    return associator(x, y, z) - x.algebra.q * associator(z, y, x)


def q_jacobi_residual(x, y, z):
    q = x.algebra.q
    c = commutator
    return (c(x * y - q * (y * x), z)
            + c(y * z - q * (z * y), x)
            + c(z * x - q * (x * z), y))


def jacobi_relation_residual(x, y, z):
    """``J(x, y, z) - (q - 1) S(x, y, z)``; vanishes in every q-flexible algebra."""
    q = x.algebra.q
    return jacobiator(x, y, z) - (q - 1) * cyclic_associator_sum(x, y, z)


def bracket_derivation_residual(x, y, z):
    """``[z, xy] - ({z, x}_q y - x {y, z}_q)``."""
    return commutator(z, x * y) - (q_bracket(z, x) * y - x * q_bracket(y, z))


def star_derivation_residual(x, y, z):
    """``[z, x *_q y] - ([z, x] *_q y + x *_q [z, y])``."""
    return (commutator(z, star_q(x, y))
            - (star_q(commutator(z, x), y) + star_q(x, commutator(z, y))))


def lie_jacobi_residual(x, y, z):
    """``[[x, y], z] + [[y, z], x] + [[z, x], y]``."""
    c = commutator
    return c(c(x, y), z) + c(c(y, z), x) + c(c(z, x), y)


# -- checkers ----------------------------------------------------------------

def check_q_flexible(a: AlgebraSpec) -> CheckReport:
    """``(e_i, e_j, e_k) = q (e_k, e_j, e_i)`` for all basis triples."""
    return scan("q-flexible", a, 3, q_flexible_residual)


def check_associative(a: AlgebraSpec) -> CheckReport:
    return scan("associative", a, 3, associator)


def check_q_jacobi(a: AlgebraSpec) -> CheckReport:
    return scan("q-jacobi", a, 3, q_jacobi_residual)


def check_jacobi_relation(a: AlgebraSpec) -> CheckReport:
    """``J = (q - 1) S`` on all basis triples."""
    return scan("jacobiator-relation", a, 3, jacobi_relation_residual)


def check_lie_admissible(a: AlgebraSpec) -> CheckReport:
    """The commutator algebra satisfies the Jacobi identity."""
    return scan("lie-admissible", a, 3, jacobiator)


def check_cyclic_sum_vanishes(a: AlgebraSpec) -> CheckReport:
    """``S(x, y, z) = 0``: sufficient for Lie admissibility."""
    return scan("cyclic-associator-sum", a, 3, cyclic_associator_sum)


def check_scaled_cyclic_sum(a: AlgebraSpec) -> CheckReport:
    """``(q - 1) S(x, y, z) = 0``: equivalent to Lie admissibility when q-flexible."""
    return scan("scaled-cyclic-associator-sum", a, 3,
                lambda x, y, z: (a.q - 1) * cyclic_associator_sum(x, y, z))


def operator_residuals(x: Element, y: Element) -> Tuple[Matrix, Matrix, Matrix]:
    """Residual matrices of the three L/R operator relations at ``(x, y)``.

    1. ``L_{xy} - L_x L_y - q (R_x R_y - R_{yx})``
    2. ``[R_x, L_y] - q [R_y, L_x]``
    3. ``R_x R_y - R_{yx} - q (L_{xy} - L_x L_y)``
    """
    q = x.algebra.q
    Lx, Ly, Rx, Ry = left_op(x), left_op(y), right_op(x), right_op(y)
    Lxy, Ryx = left_op(x * y), right_op(y * x)
    left_defect = Lxy - Lx @ Ly
    right_defect = Rx @ Ry - Ryx
    return (
        left_defect - q * right_defect,
        (Rx @ Ly - Ly @ Rx) - q * (Ry @ Lx - Lx @ Ry),
        right_defect - q * left_defect,
    )


def summed_operator_residual(x: Element, y: Element) -> Matrix:
    """Residual of the summed relation, built directly from L and R.

    ``L_{xy} - L_xL_y + R_xL_y - L_yR_x + R_yR_x - R_{xy}``
    ``- q (R_xR_y - R_{yx} + R_yL_x - L_xR_y + L_{yx} - L_yL_x)``
    """
    q = x.algebra.q
    Lx, Ly, Rx, Ry = left_op(x), left_op(y), right_op(x), right_op(y)
    lhs = left_op(x * y) - Lx @ Ly + Rx @ Ly - Ly @ Rx + Ry @ Rx - right_op(x * y)
    rhs = Rx @ Ry - right_op(y * x) + Ry @ Lx - Lx @ Ry + left_op(y * x) - Ly @ Lx
    return lhs - q * rhs


def check_operator_relations(a: AlgebraSpec) -> CheckReport:
    """The three operator relations on every basis pair, as matrices.

    A failure is located at ``(x, y, z)``: the residual shown is the
    column ``z`` of the first failing relation's residual matrix.
    """
    basis = a.basis_elements()
    for i, j in itertools.product(range(a.dim), repeat=2):
        for n, m in enumerate(operator_residuals(basis[i], basis[j]), start=1):
            if m.is_zero():
                continue
            k = next(k for k in range(a.dim) if any(m.column(k)))
            names = a.basis_names
            return failed("operator-relations", (i, j, k), m.column(k), names,
                          (names[i], names[j], names[k]), equation=n)
    return passed("operator-relations")


@dataclass(frozen=True)
class MyungReport:
    """Verdicts of the three conditions of the q-Myung equivalence."""

    bracket_derivation: CheckReport
    star_derivation: CheckReport
    lie_admissible: CheckReport

    @property
    def verdicts(self) -> Tuple[bool, bool, bool]:
        return (self.bracket_derivation.verdict, self.star_derivation.verdict,
                self.lie_admissible.verdict)

    @property
    def agree(self) -> bool:
        return len(set(self.verdicts)) == 1

    @property
    def verdict(self) -> bool:
        return self.agree and all(self.verdicts)

    def reports(self) -> Tuple[CheckReport, ...]:
        return (self.bracket_derivation, self.star_derivation, self.lie_admissible)


def check_myung_equivalence(a: AlgebraSpec) -> MyungReport:
    """Evaluate all three Myung conditions; requires a q-flexible algebra."""
    flex = check_q_flexible(a)
    if not flex:
        raise PreconditionError("Myung equivalence applies to q-flexible algebras only", flex)
    return MyungReport(
        scan("q-bracket-derivation", a, 3, bracket_derivation_residual),
        scan("q-star-derivation", a, 3, star_derivation_residual),
        scan("lie-jacobi", a, 3, lie_jacobi_residual),
    )
