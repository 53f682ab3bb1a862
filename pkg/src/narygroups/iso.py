"""Isomorphism of finite n-ary groups.

:func:`iso_retract` reduces the problem to binary groups: an n-ary group is
determined by its retract at an anchor together with the derived ``phi`` and
``b``, so a bijection is an n-ary isomorphism exactly when it is a retract
isomorphism intertwining ``phi`` and mapping ``b`` to ``b``. One anchor in the
first group suffices; every image of it is tried in the second.
:func:`iso_bruteforce` is the independent permutation-search oracle.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import BudgetExceeded, ShapeMismatch
from .groups import MAX_PERMUTATION_ORDER, all_isomorphisms
from .polyadic import (
    AUDIT_SAMPLES,
    DENSE_BUDGET,
    NaryGroup,
    binary_retract,
    derived_b,
    derived_phi,
    sample_tuples,
)

BRUTEFORCE_BUDGET = 2**26


@dataclass(frozen=True)
class IsoWitness:
    map: tuple
    anchor_pair: tuple

    def __call__(self, x: int) -> int:
        return self.map[x]


def _hg_at(g: NaryGroup, a: int):
    cache = g._cache.setdefault("hg_at", {})
    if a not in cache:
        cache[a] = (binary_retract(g, a), derived_phi(g, a), derived_b(g, a))
    return cache[a]


def iso_retract(g1: NaryGroup, g2: NaryGroup, anchor: int = 0) -> Optional[IsoWitness]:
    """First isomorphism ``g1 -> g2`` (smallest image ``d`` of the anchor, then
    lexicographically smallest map), or None."""
    if (g1.arity, g1.order) != (g2.arity, g2.order):
        raise ShapeMismatch(f"arity/order differ: {(g1.arity, g1.order)} vs {(g2.arity, g2.order)}")
    if g1.order > MAX_PERMUTATION_ORDER:
        raise ShapeMismatch(f"carriers larger than {MAX_PERMUTATION_ORDER} are not supported")
    c = anchor
    ret1, phi1, b1 = _hg_at(g1, c)
    phi1 = np.asarray(phi1)
    for d in range(g2.order):
        ret2, phi2, b2 = _hg_at(g2, d)
        phi2 = np.asarray(phi2)
        for h in all_isomorphisms(ret1, ret2):
            if h[c] != d or h[b1] != b2:
                continue
            ha = np.asarray(h)
            if np.array_equal(ha[phi1], phi2[ha]):
                return IsoWitness(tuple(h), (c, d))
    return None


def is_homomorphism(h, g1: NaryGroup, g2: NaryGroup, budget: int = DENSE_BUDGET,
                    samples: int = AUDIT_SAMPLES, seed: int = 0) -> bool:
    """``h(f1(x)) = f2(h(x))``; exhaustive within ``budget`` tuples, otherwise on
    structured plus seeded random tuples."""
    ha = np.asarray(h)
    n, k = g1.arity, g1.order
    if k**n <= budget:
        T1, T2 = g1.op.as_array(budget), g2.op.as_array(budget)
        return bool(np.array_equal(ha[T1], T2[np.ix_(*([ha] * n))]))
    X = sample_tuples(k, n, samples, seed)
    return bool(np.array_equal(ha[g1.eval_many(X)], g2.eval_many(ha[X])))


def iso_bruteforce(g1: NaryGroup, g2: NaryGroup, budget: int = BRUTEFORCE_BUDGET,
                   samples: int = AUDIT_SAMPLES, seed: int = 0) -> Optional[tuple]:
    """Search all ``k!`` bijections for an n-ary isomorphism."""
    if (g1.arity, g1.order) != (g2.arity, g2.order):
        raise ShapeMismatch("arity/order differ")
    n, k = g1.arity, g1.order
    dense = k**n <= DENSE_BUDGET
    cost = math.factorial(k) * (k**n if dense else n * (samples + 2 * n * k * k))
    if cost > budget:
        raise BudgetExceeded(f"brute-force isomorphism search costs ~{cost} > {budget}")
    if dense:
        T1, T2 = g1.op.as_array(), g2.op.as_array()
        for h in itertools.permutations(range(k)):
            ha = np.asarray(h)
            if np.array_equal(ha[T1], T2[np.ix_(*([ha] * n))]):
                return tuple(h)
        return None
    X = sample_tuples(k, n, samples, seed)
    V1 = g1.eval_many(X)
    for h in itertools.permutations(range(k)):
        ha = np.asarray(h)
        if np.array_equal(ha[V1], g2.eval_many(ha[X])):
            return tuple(h)
    return None
