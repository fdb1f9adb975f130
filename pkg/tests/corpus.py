"""Shared corpora for the module tests and the acceptance suite.

Everything is built deterministically and cached, since several test
modules reuse the same instances.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from functools import lru_cache

from qflex.algebra import AlgebraSpec, check_associative, check_q_flexible
from qflex.bimodule import Bimodule, check_bimodule, dual_bimodule, regular_bimodule, zero_bimodule
from qflex.double import DoubleSpec, as_matched_pair, check_dual_matched_pair, dual_names
from qflex.fixtures import associative_corpus, diagonal_pair, dual_numbers, null_square, unit_line, upper_triangular
from qflex.linalg import Matrix
from qflex.matched_pair import MatchedPairSpec, check_matched_pair, pair_from_bimodule, zero_algebra
from qflex.octonion import build_octonion
from qflex.search import random_tensor, search_dual_structures, search_q_flexible

ONE = Fraction(1)


@lru_cache(maxsize=None)
def search_hits():
    """At least 20 distinct q-flexible tables of dimension 2 and 3, most of them nonassociative."""
    out = []
    for dim, q, seed in ((2, -1, 11), (2, 1, 12), (3, -1, 13), (3, 1, 14)):
        res = search_q_flexible(dim, q, 600, seed)
        out += [(f"search d{dim} q={q} #{n}", a) for n, a in enumerate(res.catalog[:8])]
    return tuple(out)


@lru_cache(maxsize=None)
def algebra_corpus():
    """(label, algebra) pairs: octonion at several q, fixtures at five q, search hits."""
    out = [(f"octonion q={q}", build_octonion(q)) for q in (-1, 0, 1, 2)]
    out += associative_corpus()
    out += list(search_hits())
    return tuple(out)


def flexible_corpus():
    return tuple((label, a) for label, a in algebra_corpus() if check_q_flexible(a))


def mutate_matrix(m: Matrix, i: int, j: int, delta=ONE) -> Matrix:
    return m.replace(i, j, m[i, j] + delta)


@lru_cache(maxsize=None)
def bimodule_corpus():
    """Verified bimodules: regular and coregular over fixtures and search hits, zero modules, octonion."""
    out = []
    sources = [("octonion", build_octonion(-1)), ("dual-numbers q=1/2", dual_numbers(Fraction(1, 2))),
               ("upper-triangular q=2", upper_triangular(2)), ("null-square q=-1", null_square(-1)),
               ("unit-line q=1", unit_line(1))]
    sources += [(label, a) for label, a in search_hits()[::4]]
    for label, alg in sources:
        reg = regular_bimodule(alg)
        out.append((f"regular {label}", reg))
        out.append((f"coregular {label}", dual_bimodule(reg)))
    out.append(("zero on dual-numbers", zero_bimodule(dual_numbers(0), 2)))
    return tuple(out)


def mutations(b: Bimodule, limit: int):
    """Single-entry +1 mutations of ``b`` in a fixed scan order, ``limit`` of them at most."""
    found = 0
    for side, idx, i, j in itertools.product(("l", "r"), range(b.algebra.dim), range(b.vdim), range(b.vdim)):
        maps = list(getattr(b, f"{side}_maps"))
        maps[idx] = mutate_matrix(maps[idx], i, j)
        kw = {"l_maps": b.l_maps, "r_maps": b.r_maps, f"{side}_maps": maps}
        yield f"{side}[{idx}][{i},{j}]+1", Bimodule(b.algebra, b.vdim, kw["l_maps"], kw["r_maps"], b.vbasis_names)
        found += 1
        if found >= limit:
            return


@lru_cache(maxsize=None)
def failing_bimodule_mutations():
    """One failing single-entry mutation per small corpus bimodule (first in scan order)."""
    out = []
    for label, b in bimodule_corpus():
        if b.algebra.dim > 4:
            continue
        for tag, m in mutations(b, 40):
            if not check_bimodule(m):
                out.append((f"{label} {tag}", m))
                break
    return tuple(out)


@lru_cache(maxsize=None)
def double_corpus():
    """DoubleSpecs: zero duals (octonion included) and searched nonzero duals, passing and failing."""
    out = [("octonion zero dual", DoubleSpec.zero_dual(build_octonion(-1))),
           ("dual-numbers zero dual", DoubleSpec.zero_dual(dual_numbers(0))),
           ("null-square zero dual q=1", DoubleSpec.zero_dual(null_square(1))),
           ("upper-triangular zero dual q=-1", DoubleSpec.zero_dual(upper_triangular(-1)))]
    for label, alg in search_hits()[:3] + (("dual-numbers q=0", dual_numbers(0)),):
        if alg.dim > 2:
            continue
        for n, d in enumerate(search_dual_structures(alg, 60, 5)[:2]):
            out.append((f"{label} searched dual #{n}", d))
    # Failing instances: a dual structure that is q-flexible but breaks the coupling.
    dn = dual_numbers(0)
    out.append(("dual-numbers with unit dual", DoubleSpec.from_dual_products(dn, {(0, 0): {0: 1}})))
    out.append(("null-square q=-1 with idempotent dual",
                DoubleSpec.from_dual_products(null_square(-1), {(0, 0): {0: 1}})))
    out += failing_doubles()
    return tuple(out)


def failing_doubles(count: int = 3):
    """Nonassociative primals with a q-flexible dual structure that breaks the dual conditions."""
    rng = random.Random(17)
    out = []
    primals = [a for _, a in search_hits() if a.dim == 2 and not check_associative(a)]
    while len(out) < count:
        primal = primals[len(out) % len(primals)]
        t = random_tensor(rng, 2, density=0.3)
        d = DoubleSpec(primal, AlgebraSpec(2, primal.q, dual_names(primal.basis_names), t))
        if t.nnz and check_q_flexible(d.dual) and not check_dual_matched_pair(d):
            out.append((f"nonassociative primal with breaking dual #{len(out)}", d))
    return out


@lru_cache(maxsize=None)
def matched_pair_corpus():
    """Passing pairs (semidirect cases, doubles, empty B) and single-entry mutated pairs."""
    passing = []
    for label, b in bimodule_corpus():
        if b.algebra.dim <= 3:
            passing.append((f"semidirect {label}", pair_from_bimodule(b)))
    for label, d in double_corpus():
        if d.dim <= 2:
            p = as_matched_pair(d)
            if check_matched_pair(p):
                passing.append((f"double {label}", p))
    alg = upper_triangular(1)
    passing.append(("empty B", MatchedPairSpec(alg, zero_algebra(0, alg.q), [Matrix.zeros(0)] * 3, [Matrix.zeros(0)] * 3, [], [])))
    mutated = []
    for label, p in passing:
        if p.algA.dim == 0 or p.algB.dim == 0:
            continue
        for fam in ("lB", "rB", "lA", "rA"):
            maps = list(getattr(p, fam))
            if not maps:
                continue
            maps[0] = mutate_matrix(maps[0], 0, 0)
            mutated.append((f"{label} {fam}[0][0,0]+1", p.replace(**{fam: maps})))
            break
    # Both actions regular: the bimodule conditions hold, the coupling decides.
    for make in (dual_numbers, diagonal_pair, unit_line):
        for q in (0, 1, -1):
            alg = make(q)
            reg = regular_bimodule(alg)
            p = MatchedPairSpec(alg, alg, reg.l_maps, reg.r_maps, reg.l_maps, reg.r_maps)
            (passing if q == -1 else mutated).append((f"mutual regular {make.__name__} q={q}", p))
    return tuple(passing), tuple(mutated)
