"""Matched pairs of q-flexible algebras and their bicrossed products."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator, List, Sequence, Tuple

from .algebra import AlgebraSpec, CheckReport, check_q_flexible, failed, passed
from .bimodule import Bimodule, _fresh_names, check_bimodule
from .errors import DomainError, PreconditionError, ShapeError
from .linalg import Matrix, Tensor3, Vector, linear_combination, unit_vector, vec_add, vec_sub, vec_scale


@dataclass(frozen=True)
class MatchedPairSpec:
    """Two algebras acting on each other.

    ``lA[i]``/``rA[i]`` act on B's space for basis element i of A;
    ``lB[s]``/``rB[s]`` act on A's space for basis element s of B.
    """

    algA: AlgebraSpec
    algB: AlgebraSpec
    lA: Tuple[Matrix, ...]
    rA: Tuple[Matrix, ...]
    lB: Tuple[Matrix, ...]
    rB: Tuple[Matrix, ...]

    def __post_init__(self):
        if self.algA.q != self.algB.q:
            raise DomainError(f"q mismatch: {self.algA.q} vs {self.algB.q}")
        for name in ("lA", "rA", "lB", "rB"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        # Bimodule construction validates every shape.
        self.bimodule_on_b()
        self.bimodule_on_a()

    @property
    def q(self):
        return self.algA.q

    def bimodule_on_b(self) -> Bimodule:
        """(lA, rA) as a bimodule of A on the space of B."""
        return Bimodule(self.algA, self.algB.dim, self.lA, self.rA, self.algB.basis_names)

    def bimodule_on_a(self) -> Bimodule:
        """(lB, rB) as a bimodule of B on the space of A."""
        return Bimodule(self.algB, self.algA.dim, self.lB, self.rB, self.algA.basis_names)

    def replace(self, **changes) -> "MatchedPairSpec":
        fields = dict(algA=self.algA, algB=self.algB, lA=self.lA, rA=self.rA, lB=self.lB, rB=self.rB)
        fields.update(changes)
        return MatchedPairSpec(**fields)


def _act(maps: Sequence[Matrix], coeffs: Vector, v: Vector) -> Vector:
    """Apply the linear extension ``sum_i coeffs[i] maps[i]`` to ``v``."""
    n = len(v)
    return linear_combination(((c, maps[i].apply(v)) for i, c in enumerate(coeffs) if c), n)


class _Ops:
    """Shorthand for the products and actions appearing in the coupling identities."""

    def __init__(self, p: MatchedPairSpec):
        self.p = p
        self.q = p.q

    def dot(self, x, y):
        return self.p.algA.product_vector(x, y)

    def star(self, a, b):
        return self.p.algB.product_vector(a, b)

    def lA(self, x, b):
        return _act(self.p.lA, x, b)

    def rA(self, x, b):
        return _act(self.p.rA, x, b)

    def lB(self, a, y):
        return _act(self.p.lB, a, y)

    def rB(self, a, y):
        return _act(self.p.rB, a, y)


def _sub_q(lhs: Vector, rhs: Vector, q) -> Vector:
    return vec_sub(lhs, vec_scale(q, rhs))


def _sum(*vs: Vector) -> Vector:
    out = vs[0]
    for v in vs[1:]:
        out = vec_add(out, v)
    return out


# Equations 1-3 take (x, y, a) and live in A; equations 4-6 take (x, a, b) and live in B.

def _eq1(o: _Ops, x, y, a):
    lhs = _sum(o.dot(o.lB(a, x), y), o.lB(o.rA(x, a), y), vec_scale(-1, o.lB(a, o.dot(x, y))))
    rhs = _sum(o.rB(a, o.dot(y, x)), vec_scale(-1, o.dot(y, o.rB(a, x))), vec_scale(-1, o.rB(o.lA(x, a), y)))
    return _sub_q(lhs, rhs, o.q)


def _eq2(o: _Ops, x, y, a):
    lhs = _sum(o.rB(a, o.dot(x, y)), vec_scale(-1, o.dot(x, o.rB(a, y))), vec_scale(-1, o.rB(o.lA(y, a), x)))
    rhs = _sum(o.dot(o.lB(a, y), x), o.lB(o.rA(y, a), x), vec_scale(-1, o.lB(a, o.dot(y, x))))
    return _sub_q(lhs, rhs, o.q)


def _eq3(o: _Ops, x, y, a):
    lhs = _sum(o.dot(o.rB(a, x), y), o.lB(o.lA(x, a), y),
               vec_scale(-1, o.dot(x, o.lB(a, y))), vec_scale(-1, o.rB(o.rA(y, a), x)))
    rhs = _sum(o.dot(o.rB(a, y), x), o.lB(o.lA(y, a), x),
               vec_scale(-1, o.dot(y, o.lB(a, x))), vec_scale(-1, o.rB(o.rA(x, a), y)))
    return _sub_q(lhs, rhs, o.q)


def _eq4(o: _Ops, x, a, b):
    lhs = _sum(o.star(o.lA(x, a), b), o.lA(o.rB(a, x), b), vec_scale(-1, o.lA(x, o.star(a, b))))
    rhs = _sum(o.rA(x, o.star(b, a)), vec_scale(-1, o.star(b, o.rA(x, a))), vec_scale(-1, o.rA(o.lB(a, x), b)))
    return _sub_q(lhs, rhs, o.q)


def _eq5(o: _Ops, x, a, b):
    lhs = _sum(o.rA(x, o.star(a, b)), vec_scale(-1, o.star(a, o.rA(x, b))), vec_scale(-1, o.rA(o.lB(b, x), a)))
    rhs = _sum(o.star(o.lA(x, b), a), o.lA(o.rB(b, x), a), vec_scale(-1, o.lA(x, o.star(b, a))))
    return _sub_q(lhs, rhs, o.q)


def _eq6(o: _Ops, x, a, b):
    lhs = _sum(o.star(o.rA(x, a), b), o.lA(o.lB(a, x), b),
               vec_scale(-1, o.star(a, o.lA(x, b))), vec_scale(-1, o.rA(o.rB(b, x), a)))
    rhs = _sum(o.star(o.rA(x, b), a), o.lA(o.lB(b, x), a),
               vec_scale(-1, o.star(b, o.lA(x, a))), vec_scale(-1, o.rA(o.rB(a, x), b)))
    return _sub_q(lhs, rhs, o.q)


COUPLING_EQUATIONS: Tuple[Callable, ...] = (_eq1, _eq2, _eq3, _eq4, _eq5, _eq6)


def coupling_residual(p: MatchedPairSpec, n: int, i: int, j: int, k: int) -> Vector:
    """Residual of coupling equation ``n`` (1-6) at basis indices.

    For n <= 3 the indices are ``(x, y, a)`` with x, y in A and a in B;
    for n >= 4 they are ``(x, a, b)`` with x in A and a, b in B.
    """
    dA, dB = p.algA.dim, p.algB.dim
    if n <= 3:
        args = (unit_vector(dA, i), unit_vector(dA, j), unit_vector(dB, k))
    else:
        args = (unit_vector(dA, i), unit_vector(dB, j), unit_vector(dB, k))
    return COUPLING_EQUATIONS[n - 1](_Ops(p), *args)


def _coupling_tuples(p: MatchedPairSpec, n: int) -> Iterator[Tuple[int, int, int]]:
    dA, dB = p.algA.dim, p.algB.dim
    if n <= 3:
        return itertools.product(range(dA), range(dA), range(dB))
    return itertools.product(range(dA), range(dB), range(dB))


def check_matched_pair(p: MatchedPairSpec) -> CheckReport:
    """Both algebras q-flexible, both bimodules, and the six coupling identities.

    The first failing condition is reported; coupling failures carry the
    equation number (1-6) in ``equation``.
    """
    for label, report in (("algA", check_q_flexible(p.algA)), ("algB", check_q_flexible(p.algB)),
                          ("A on B", check_bimodule(p.bimodule_on_b())),
                          ("B on A", check_bimodule(p.bimodule_on_a()))):
        if not report:
            return CheckReport(f"matched-pair/{label} {report.identity_name}", False, report.witness,
                               report.residual, report.residual_basis, report.witness_names,
                               report.equation, report.note)
    o = _Ops(p)
    na, nb = p.algA.basis_names, p.algB.basis_names
    for n, eq in enumerate(COUPLING_EQUATIONS, start=1):
        for i, j, k in _coupling_tuples(p, n):
            if n <= 3:
                args = (unit_vector(p.algA.dim, i), unit_vector(p.algA.dim, j), unit_vector(p.algB.dim, k))
                names, space = (na[i], na[j], nb[k]), na
            else:
                args = (unit_vector(p.algA.dim, i), unit_vector(p.algB.dim, j), unit_vector(p.algB.dim, k))
                names, space = (na[i], nb[j], nb[k]), nb
            r = eq(o, *args)
            if any(r):
                return failed("matched-pair/coupling", (i, j, k), r, space, names, equation=n)
    return passed("matched-pair")


def bicrossed_product(p: MatchedPairSpec, verify: bool = True) -> AlgebraSpec:
    """The algebra on A + B with
    ``(x + a)(y + b) = (xy + lB(a)y + rB(b)x) + (a*b + lA(x)b + rA(y)a)``.

    ``verify=False`` skips the matched-pair precondition.
    """
    if verify:
        report = check_matched_pair(p)
        if not report:
            raise PreconditionError(f"bicrossed product needs a matched pair: {report.summary()}", report)
    n, m = p.algA.dim, p.algB.dim
    entries = {}
    for (i, j, k), c in p.algA.structure.items():
        entries[(i, j, k)] = c
    for (s, t, u), c in p.algB.structure.items():
        entries[(n + s, n + t, n + u)] = c
    for i in range(n):
        for s in range(m):
            # e_i * f_s = rB(f_s) e_i + lA(e_i) f_s
            for k in range(n):
                if p.rB[s][k, i]:
                    entries[(i, n + s, k)] = p.rB[s][k, i]
                # f_s * e_i = lB(f_s) e_i + rA(e_i) f_s
                if p.lB[s][k, i]:
                    entries[(n + s, i, k)] = p.lB[s][k, i]
            for t in range(m):
                if p.lA[i][t, s]:
                    entries[(i, n + s, n + t)] = p.lA[i][t, s]
                if p.rA[i][t, s]:
                    entries[(n + s, i, n + t)] = p.rA[i][t, s]
    names = p.algA.basis_names + _fresh_names(p.algB.basis_names, p.algA.basis_names)
    return AlgebraSpec(n + m, p.q, names, Tensor3(n + m, entries))


def zero_algebra(dim: int, q, names: Sequence[str] = ()) -> AlgebraSpec:
    return AlgebraSpec(dim, q, tuple(names))


def pair_from_bimodule(b: Bimodule) -> MatchedPairSpec:
    """Matched pair (A, V with zero product, l, r, 0, 0); its bicrossed product is A ⋉ V."""
    alg = b.algebra
    V = zero_algebra(b.vdim, alg.q, b.vbasis_names)
    zA = Matrix.zeros(alg.dim)
    return MatchedPairSpec(alg, V, b.l_maps, b.r_maps, [zA] * b.vdim, [zA] * b.vdim)
