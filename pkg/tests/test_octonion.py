import itertools

import pytest

from qflex.algebra import associator
from qflex.errors import PreconditionError, ShapeError
from qflex.linalg import Matrix
from qflex.octonion import (
    IMAG,
    LISTED_NONZERO,
    QUATERNIONIC_TRIPLES,
    build_octonion,
    c,
    check_associator_alternating,
    check_final_proposition,
    check_octonion_bimodule,
    check_structure_constant_myung,
    check_subalgebra_associativity,
    check_table1,
    check_table2,
    compare_closed_form,
    is_closed_span,
    listed_orbits,
    nonzero_associator_triples,
    run_suite,
    search_octonion_bimodules,
    table1_text,
    table2_text,
)
from qflex.algebra import left_op, right_op


def test_constants():
    nz = [(i, j, k) for i, j, k in itertools.product(IMAG, repeat=3) if c(i, j, k)]
    assert len(nz) == 42
    for i, j, k in nz:
        assert c(i, j, k) == -c(j, i, k) == -c(i, k, j) == c(j, k, i)
    for t in QUATERNIONIC_TRIPLES:
        assert c(*t) == 1


def test_defining_products():
    o = build_octonion()
    e = o.basis_elements()
    assert str(e[5] * e[1]) == "-e6"
    for i in IMAG:
        assert str(e[i] * e[i]) == "-e0"
    assert e[0] * e[0] == e[0]


def test_tables_match():
    assert check_table1().verdict and check_table1().checked == 64
    rep = check_table2()
    assert rep.verdict and rep.checked == 120


def test_table_discrepancy_reported():
    # Flipping the sign convention produces a different table, which must be surfaced.
    other = build_octonion().with_q(-1)
    e = other.basis_elements()
    assert str(associator(e[2], e[3], e[1])) == "-2*e6"
    from qflex.algebra import AlgebraSpec
    t = other.structure.replace((1, 2, 4), -1)
    rep = check_table1(AlgebraSpec(8, -1, other.basis_names, t))
    assert not rep.verdict
    assert rep.discrepancies[0].tabulated == "e4" and rep.discrepancies[0].computed == "-e4"
    assert "table e4, computed -e4" in rep.summary()


def test_table_text_layout():
    lines = table1_text().splitlines()
    assert len(lines) == 9
    assert lines[1].split() == "e0 | e0 e1 e2 e3 e4 e5 e6 e7".split()
    t2 = table2_text().splitlines()
    assert t2[4].split() == "e12 | 0 0 0 -2e6 0 2e7 2e3 -2e5".split()


def test_closed_form():
    n, bad = compare_closed_form(kronecker_terms=True)
    assert n == 512 and not bad
    _, bad = compare_closed_form(kronecker_terms=False)
    assert bad and all(i == j or j == k for i, j, k in bad)


def test_subalgebras():
    assert check_subalgebra_associativity()
    assert is_closed_span((0, 1, 2, 4))
    assert not is_closed_span((0, 1, 2, 3))


def test_alternation():
    rep = check_associator_alternating()
    assert rep
    e = build_octonion().basis_elements()
    a = associator(e[1], e[2], e[3])
    assert a == -associator(e[2], e[1], e[3]) == -associator(e[1], e[3], e[2]) == -associator(e[3], e[2], e[1])
    assert associator(e[1], e[2], e[4]).is_zero()
    assert not associator(e[1], e[2], e[5]).is_zero()


def test_listed_combinations_are_nonzero_orbits():
    triples = set(nonzero_associator_triples())
    assert len(triples) == 28
    orbits = listed_orbits()
    assert set(orbits) <= triples
    assert all(len(t) == 3 for t in LISTED_NONZERO)


def test_bimodule_relations_small_cases():
    assert check_octonion_bimodule([Matrix.zeros(0)] * 8, [Matrix.zeros(0)] * 8)
    o = build_octonion()
    e = o.basis_elements()
    r = check_octonion_bimodule([left_op(x) for x in e], [right_op(x) for x in e])
    assert not r and r.equation == 1
    bad_unit = [Matrix.zeros(1)] * 8
    r = check_octonion_bimodule(bad_unit, bad_unit)
    assert not r and r.equation == 1 and r.witness[0] == 0
    with pytest.raises(ShapeError):
        check_octonion_bimodule([Matrix.zeros(1)] * 7, [Matrix.zeros(1)] * 8)


def test_bimodule_search_reports_no_solution():
    res = search_octonion_bimodules(max_vdim=4, trials=20, seed=1)
    assert not res.found
    assert "no solution" in res.summary()


def test_final_proposition():
    assert check_final_proposition([Matrix.zeros(0)] * 8)
    with pytest.raises(PreconditionError):
        check_final_proposition([Matrix.identity(2)] * 8)


def test_structure_constant_myung():
    full = check_structure_constant_myung()
    assert full.agree
    assert check_structure_constant_myung((0, 1, 2, 4)).derivation
    k0 = check_structure_constant_myung((0,))
    assert k0.derivation


def test_suite_passes():
    items = run_suite(bimodule_trials=5)
    assert all(item.ok for item in items if item.gating)
