import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from narygroups.errors import MalformedTable, NoIdentity, NotAssociative, OrderTooLarge, ParseError
from narygroups.groups import (
    all_isomorphisms,
    automorphism_from_map,
    automorphisms,
    catalog,
    cyclic_group,
    format_group,
    group_isomorphic,
    identify,
    is_automorphism,
    klein_group,
    parse_group,
    validate_group,
)

import oracles


def _canon_binary(table):
    k = len(table)
    f = lambda x, y: int(table[x][y])
    return oracles.canonical_form(f, 2, k)


@pytest.mark.parametrize("k", range(1, 7))
def test_catalog_matches_exhaustive_enumeration(k):
    brute = {_canon_binary(t) for t in oracles.group_tables(k)}
    ours = [_canon_binary(g.mul) for g in catalog(k)]
    assert len(ours) == len(set(ours))
    assert set(ours) == brute


@pytest.mark.parametrize("k, count", [(7, 1), (8, 5)])
def test_catalog_larger_orders(k, count):
    groups = catalog(k)
    assert len(groups) == count
    profiles = {(g.is_abelian(), tuple(sorted(g.element_orders()))) for g in groups}
    # order profile plus commutativity separates the groups of order 7 and 8
    assert len(profiles) == count
    for g in groups:
        validate_group(g.mul)


@pytest.mark.parametrize("label, size", [
    ("Z3", 2), ("Z4", 2), ("V4", 6), ("Z5", 4), ("Z6", 2), ("S3", 6),
    ("Z7", 6), ("Z8", 4), ("Z4xZ2", 8), ("Z2xZ2xZ2", 168), ("D4", 8), ("Q8", 24),
])
def test_automorphism_group_sizes(label, size):
    g = next(g for k in range(1, 9) for g in catalog(k) if g.label == label)
    assert len(automorphisms(g)) == size


@pytest.mark.parametrize("k", range(2, 6))
def test_automorphisms_agree_with_permutation_scan(k):
    for g in catalog(k):
        brute = [p for p in itertools.permutations(range(k)) if is_automorphism(g, p)]
        assert sorted(tuple(a.map) for a in automorphisms(g)) == sorted(brute)


def test_automorphism_algebra():
    g = cyclic_group(5)
    a = automorphism_from_map(g, [0, 2, 4, 1, 3])
    assert a.order() == 4
    assert a.power(4).is_identity()
    assert a.compose(a.inverse()).is_identity()
    with pytest.raises(MalformedTable):
        automorphism_from_map(g, [0, 2, 1, 3, 4])


def test_isomorphisms_between_presentations():
    swap = np.array([0, 2, 1, 3])
    h = validate_group(swap[klein_group().mul[np.ix_(swap, swap)]])
    assert group_isomorphic(klein_group(), h) is not None
    assert len(all_isomorphisms(klein_group(), h)) == 6
    assert group_isomorphic(klein_group(), cyclic_group(4)) is None
    assert identify(h) == "V4"


def test_validate_rejects():
    with pytest.raises(NotAssociative):
        validate_group([[0, 1, 2], [1, 0, 2], [2, 2, 0]])
    with pytest.raises(NoIdentity):
        validate_group([[1, 1], [1, 1]])
    with pytest.raises(MalformedTable):
        validate_group([[0, 1], [1]])


def test_automorphisms_refuse_large_orders():
    with pytest.raises(OrderTooLarge):
        automorphisms(cyclic_group(9))


def test_group_file_round_trip():
    for k in range(1, 9):
        for g in catalog(k):
            again = parse_group(format_group(g))
            assert np.array_equal(again.mul, g.mul)


def test_group_file_comments_and_errors():
    text = "# cyclic\norder 2\ntable\n0 1 # row zero\n1 0\n"
    assert parse_group(text).order == 2
    with pytest.raises(ParseError):
        parse_group("order 2\ntable\n0 1\n")


@settings(max_examples=50, deadline=None)
@given(st.sampled_from([g for k in range(2, 9) for g in catalog(k)]), st.data())
def test_power_laws(g, data):
    x = data.draw(st.integers(0, g.order - 1))
    m = data.draw(st.integers(-20, 20))
    t = data.draw(st.integers(-20, 20))
    assert g(g.power(x, m), g.power(x, t)) == g.power(x, m + t)
    assert g.power(x, g.order_of(x)) == g.identity
