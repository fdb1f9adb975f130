"""Bounded randomized searches for q-flexible structures.

Searches use :class:`random.Random` (Mersenne Twister) seeded explicitly, so
a given ``(dim, q, trials, seed)`` always yields the same catalog.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Sequence, Tuple

from .algebra import AlgebraSpec, check_associative, check_q_flexible
from .double import DoubleSpec, check_dual_matched_pair, dual_names
from .errors import DomainError
from .linalg import Tensor3

RNG_ALGORITHM = "python-random-mt19937"
MAX_SEARCH_DIM = 4
MAX_TRIALS = 10 ** 6
DEFAULT_POOL = (Fraction(-1), Fraction(1))
DENSITIES = (0.1, 0.2, 0.35)


def random_tensor(rng: random.Random, dim: int, pool: Sequence[Fraction] = DEFAULT_POOL,
                  density: float = 0.2) -> Tensor3:
    entries = {}
    for idx in itertools.product(range(dim), repeat=3):
        if rng.random() < density:
            entries[idx] = rng.choice(pool)
    return Tensor3(dim, entries)


def canonical_key(t: Tensor3) -> Tuple:
    """Smallest relabelled entry list over all basis permutations."""
    best = None
    for perm in itertools.permutations(range(t.dim)):
        key = tuple(sorted(((perm[i], perm[j], perm[k]), c) for (i, j, k), c in t.items()))
        if best is None or key < best:
            best = key
    return best


@dataclass
class SearchResult:
    dim: int
    q: Fraction
    trials: int
    seed: int
    catalog: List[AlgebraSpec] = field(default_factory=list)
    hits: int = 0
    rng: str = RNG_ALGORITHM

    @property
    def nonassociative(self) -> List[AlgebraSpec]:
        return [a for a in self.catalog if not check_associative(a)]


def search_q_flexible(dim: int, q, trials: int, seed: int,
                      pool: Sequence[Fraction] = DEFAULT_POOL) -> SearchResult:
    """Sample sparse structure tensors and keep the q-flexible ones.

    Every kept tensor passes :func:`check_q_flexible`; tensors equal up to
    a permutation of the basis are kept once, in order of discovery.
    """
    if not 1 <= dim <= MAX_SEARCH_DIM:
        raise DomainError(f"search dimension must be between 1 and {MAX_SEARCH_DIM}, got {dim}")
    if not 0 <= trials <= MAX_TRIALS:
        raise DomainError(f"trials must be between 0 and {MAX_TRIALS}")
    q = Fraction(q)
    rng = random.Random(seed)
    result = SearchResult(dim, q, trials, seed)
    seen = set()
    for _ in range(trials):
        t = random_tensor(rng, dim, pool, rng.choice(DENSITIES))
        alg = AlgebraSpec(dim, q, structure=t)
        if not check_q_flexible(alg):
            continue
        result.hits += 1
        key = canonical_key(t)
        if key not in seen:
            seen.add(key)
            result.catalog.append(alg)
    return result


def search_dual_structures(primal: AlgebraSpec, trials: int, seed: int,
                           pool: Sequence[Fraction] = DEFAULT_POOL) -> List[DoubleSpec]:
    """Nonzero dual structures making ``primal`` and its dual a matched pair."""
    rng = random.Random(seed)
    found, seen = [], set()
    names = dual_names(primal.basis_names)
    for _ in range(trials):
        t = random_tensor(rng, primal.dim, pool, rng.choice(DENSITIES))
        if not t.nnz or t in seen:
            continue
        seen.add(t)
        d = DoubleSpec(primal, AlgebraSpec(primal.dim, primal.q, names, t))
        if check_dual_matched_pair(d):
            found.append(d)
    return found
