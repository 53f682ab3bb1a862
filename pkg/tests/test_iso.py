import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from narygroups.classify import enumerate_classes, hg_candidates
from narygroups.errors import ShapeMismatch
from narygroups.groups import catalog
from narygroups.hosszu import canonical_ops, construct
from narygroups.iso import is_homomorphism, iso_bruteforce, iso_retract
from narygroups.polyadic import NaryOp, certify

import oracles


def relabelled(g, perm):
    """The n-ary group transported along ``perm``: x -> perm[x]."""
    perm = np.asarray(perm)
    inv = np.argsort(perm)
    T = g.op.as_array()
    U = perm[T[np.ix_(*([inv] * g.arity))]]
    return certify(NaryOp.from_table(U))


def test_example_pair():
    f1 = canonical_ops(3, 4, "f", a=1)
    f2 = canonical_ops(3, 4, "f", a=2)
    w = iso_retract(f1, f2)
    assert w is not None
    assert w.map == (0, 2, 1)
    assert all(w(x) == (2 * x) % 3 for x in range(3))
    assert is_homomorphism(w.map, f1, f2)


def test_self_isomorphism_is_identity():
    for g in (canonical_ops(3, 4, "f", a=1), canonical_ops(5, 5, "g", d=2)):
        w = iso_retract(g, g)
        assert w.map == tuple(range(g.order))


def test_non_isomorphic_pair():
    f0 = canonical_ops(3, 4, "f", a=0)
    f1 = canonical_ops(3, 4, "f", a=1)
    assert iso_retract(f0, f1) is None
    assert iso_bruteforce(f0, f1) is None
    assert oracles.brute_isomorphism(
        oracles.table_fn(f0.op.as_array()), oracles.table_fn(f1.op.as_array()), 4, 3) is None


def test_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        iso_retract(canonical_ops(3, 4, "f", a=1), canonical_ops(3, 3, "f", a=1))
    with pytest.raises(ShapeMismatch):
        iso_bruteforce(canonical_ops(3, 4, "f", a=1), canonical_ops(4, 4, "f", a=1))


def test_witness_compatibility_conditions():
    for k in (3, 4):
        for n in (3, 4):
            reps = [c.group for c in enumerate_classes(k, n).classes]
            for g in reps:
                for perm in itertools.islice(itertools.permutations(range(k)), 0, None, 5):
                    h = relabelled(g, perm)
                    w = iso_retract(g, h)
                    assert w is not None
                    c, d = w.anchor_pair
                    assert w.map[c] == d
                    cb, db = g.skew[c], h.skew[d]
                    assert w.map[g(*([cb] * n))] == h(*([db] * n))
                    for x in range(k):
                        lhs = w.map[g(cb, x, *([c] * (n - 2)))]
                        assert lhs == h(db, w.map[x], *([d] * (n - 2)))
                    assert is_homomorphism(w.map, g, h)


def test_agrees_with_bruteforce_small():
    for k in (2, 3):
        for n in (3, 4):
            gs = [construct(hg) for base in catalog(k) for hg in hg_candidates(base, n)]
            for g1, g2 in itertools.product(gs, repeat=2):
                fast = iso_retract(g1, g2)
                slow = iso_bruteforce(g1, g2)
                assert (fast is None) == (slow is None)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([construct(hg) for k in (4, 5) for b in catalog(k) for hg in hg_candidates(b, 3)]),
       st.randoms(use_true_random=False))
def test_relabelled_copy_is_isomorphic(g, rnd):
    perm = list(range(g.order))
    rnd.shuffle(perm)
    h = relabelled(g, perm)
    w = iso_retract(g, h)
    assert w is not None and is_homomorphism(w.map, g, h)


def test_bruteforce_sampled_path():
    # n = 13 is beyond the dense budget, so the sampled comparison is used
    g1 = canonical_ops(3, 13, "f", a=1)
    g2 = canonical_ops(3, 13, "f", a=2)
    assert iso_bruteforce(g1, g2) == (0, 2, 1)
    assert iso_retract(g1, g2).map == (0, 2, 1)
