import random
from fractions import Fraction

import pytest

from corpus import double_corpus, search_hits
from qflex.algebra import AlgebraSpec, check_associative, check_q_flexible
from qflex.double import (
    DoubleSpec,
    as_matched_pair,
    bilinear_form,
    bilinear_form_matrix,
    build_double,
    check_dual_matched_pair,
    check_invariance,
    check_lagrangian,
    manin_verdict,
)
from qflex.errors import DomainError
from qflex.fixtures import dual_numbers, unit_line
from qflex.linalg import Matrix
from qflex.matched_pair import bicrossed_product, check_matched_pair
from qflex.octonion import build_octonion
from qflex.search import search_dual_structures


def test_zero_dual_blocks():
    d = DoubleSpec.zero_dual(dual_numbers(0))
    alg = build_double(d)
    n = 2
    for s in range(n):
        for t in range(n):
            assert (alg.basis(n + s) * alg.basis(n + t)).is_zero()
    assert alg.basis(1) * alg.basis(1) == alg.zero()
    assert alg.basis(0) * alg.basis(1) == alg.basis(1)


def test_unit_line_pattern():
    alg = build_double(DoubleSpec.zero_dual(unit_line(0)))
    # R.*(e0) e^0 = e^0 and L.*(e0) e^0 = e^0
    assert alg.basis(0) * alg.basis(1) == alg.basis(1)
    assert alg.basis(1) * alg.basis(0) == alg.basis(1)


def test_double_equals_bicrossed_of_sixtuple():
    rng = random.Random(4)
    for _ in range(15):
        n = rng.choice((1, 2, 3))
        q = rng.choice((-1, 0, 1, 2))
        prods = lambda: {(i, j): {k: rng.choice((-1, 1))} for i in range(n) for j in range(n)
                         for k in range(n) if rng.random() < 0.3}
        primal = AlgebraSpec.from_products(n, q, prods())
        d = DoubleSpec.from_dual_products(primal, prods())
        assert build_double(d).structure == bicrossed_product(as_matched_pair(d), verify=False).structure


def test_dim_and_q_mismatch():
    with pytest.raises(DomainError):
        DoubleSpec(dual_numbers(0), unit_line(0))
    with pytest.raises(DomainError):
        DoubleSpec(dual_numbers(0), dual_numbers(1))


def test_bilinear_form():
    alg = build_double(DoubleSpec.zero_dual(dual_numbers(0)))
    e = alg.basis_elements()
    assert bilinear_form(e[0], e[2]) == 1
    assert bilinear_form(e[0], e[3]) == 0
    assert bilinear_form(e[0], e[1]) == 0 and bilinear_form(e[2], e[3]) == 0
    rng = random.Random(2)
    for _ in range(20):
        u = alg.element(Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(4))
        v = alg.element(Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(4))
        assert bilinear_form(u, v) == bilinear_form(v, u)
    with pytest.raises(DomainError):
        bilinear_form(e[0], build_octonion().basis(0))
    g = bilinear_form_matrix(2)
    assert g == g.T and g @ g == Matrix.identity(4)


def test_invariance_and_mutation():
    d = DoubleSpec.zero_dual(dual_numbers(0))
    assert check_invariance(d)
    alg = build_double(d)
    broken = AlgebraSpec(alg.dim, alg.q, alg.basis_names, alg.structure.replace((0, 2, 2), 5))
    assert not check_invariance(broken)


def test_lagrangian_blocks():
    alg = build_double(DoubleSpec.zero_dual(dual_numbers(0)))
    assert check_lagrangian(alg, [0, 1])
    assert check_lagrangian(alg, [2, 3])
    assert not check_lagrangian(alg, [0, 2])


def test_zero_dual_q0_associative():
    d = DoubleSpec.zero_dual(dual_numbers(0))
    assert check_dual_matched_pair(d)


def test_manin_zero_dim():
    v = manin_verdict(DoubleSpec.zero_dual(AlgebraSpec(0, -1)))
    assert (v.is_manin_triple, v.is_matched_pair, v.is_bialgebra) == (True, True, True)


def test_manin_failing_instance():
    d = DoubleSpec.from_dual_products(dual_numbers(0), {(0, 0): {0: 1}})
    v = manin_verdict(d)
    assert (v.is_manin_triple, v.is_matched_pair, v.is_bialgebra) == (False, False, False)
    r = check_dual_matched_pair(d)
    assert not r and r.equation in (1, 2, 3)


def test_perturbed_dual_fails():
    primal = [a for _, a in search_hits() if a.dim == 2 and not check_associative(a)][0]
    d = search_dual_structures(primal, 80, 5)[0]
    assert check_dual_matched_pair(d)
    flips = 0
    for idx, c in d.dual.structure.items():
        t = d.dual.structure.replace(idx, c + 1)
        bad = DoubleSpec(primal, AlgebraSpec(2, primal.q, d.dual.basis_names, t))
        ok = bool(check_dual_matched_pair(bad))
        assert ok == bool(check_q_flexible(build_double(bad)))
        flips += not ok
    assert flips


def test_equivalence_chain_over_corpus():
    for label, d in double_corpus():
        v = manin_verdict(d)
        assert v.agree, label
        assert v.is_matched_pair == bool(check_dual_matched_pair(d)) == bool(check_q_flexible(build_double(d)))
        assert bool(check_matched_pair(as_matched_pair(d))) == v.is_matched_pair, label
        assert check_invariance(d), label


def test_nonzero_dual_with_nonassociative_primal_exists():
    primals = [a for _, a in search_hits() if a.dim == 2 and not check_associative(a)]
    assert any(search_dual_structures(p, 60, 5) for p in primals)
