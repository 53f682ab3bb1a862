"""Finite binary groups stored as index-based Cayley tables.

Elements are always the integers ``0..k-1``; the identity may be any index
(retracts of n-ary groups rarely have their identity at 0).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np

from ._catalog_data import CATALOG_DATA
from .errors import (
    MalformedTable,
    NoIdentity,
    NoInverse,
    NotAssociative,
    OrderTooLarge,
    ParseError,
    UnsupportedOrder,
)

MAX_PERMUTATION_ORDER = 8


def index_dtype(k: int):
    """Smallest integer dtype able to hold element indices of a k-element carrier."""
    return np.int8 if k <= 127 else np.int32


@dataclass(frozen=True, eq=False)
class BinaryGroup:
    mul: np.ndarray
    identity: int
    inv: tuple
    label: str = ""

    @property
    def order(self) -> int:
        return self.mul.shape[0]

    def __call__(self, x: int, y: int) -> int:
        return int(self.mul[x, y])

    @property
    def key(self) -> bytes:
        return self.mul.tobytes()

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))

    def power(self, x: int, m: int) -> int:
        if m < 0:
            x, m = self.inv[x], -m
        acc = self.identity
        for _ in range(m):
            acc = int(self.mul[acc, x])
        return acc

    def element_orders(self) -> tuple:
        return _element_orders(self)

    def exponent(self) -> int:
        return int(np.lcm.reduce(np.array(self.element_orders(), dtype=np.int64)))

    def order_of(self, x: int) -> int:
        return self.element_orders()[x]

    def __repr__(self):
        name = self.label or "BinaryGroup"
        return f"<{name} order={self.order} identity={self.identity}>"


@dataclass(frozen=True)
class Automorphism:
    base: BinaryGroup = field(repr=False, compare=False)
    map: tuple

    def __call__(self, x: int) -> int:
        return self.map[x]

    def compose(self, other: "Automorphism") -> "Automorphism":
        """``self o other``: apply ``other`` first."""
        return Automorphism(self.base, tuple(self.map[other.map[x]] for x in range(len(self.map))))

    def inverse(self) -> "Automorphism":
        inv = [0] * len(self.map)
        for x, y in enumerate(self.map):
            inv[y] = x
        return Automorphism(self.base, tuple(inv))

    def power(self, m: int) -> "Automorphism":
        return Automorphism(self.base, tuple(int(v) for v in _perm_power(np.array(self.map), m)))

    def order(self) -> int:
        return perm_order(self.map)

    def is_identity(self) -> bool:
        return all(x == y for x, y in enumerate(self.map))


def _perm_power(p: np.ndarray, m: int) -> np.ndarray:
    if m < 0:
        p = np.argsort(p)
        m = -m
    out = np.arange(len(p))
    for _ in range(m):
        out = p[out]
    return out


def perm_order(p: Sequence[int]) -> int:
    seen = [False] * len(p)
    result = 1
    for start in range(len(p)):
        if seen[start]:
            continue
        length, x = 0, start
        while not seen[x]:
            seen[x] = True
            x = p[x]
            length += 1
        result = result * length // _gcd(result, length)
    return result


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def validate_group(candidate, label: str = "") -> BinaryGroup:
    """Certify a Cayley table as a group.

    Raises the first violated axiom: ``MalformedTable`` for shape or range
    problems, ``NotAssociative`` with a witness triple, ``NoIdentity`` or
    ``NoInverse``.
    """
    try:
        table = np.asarray(candidate)
    except Exception as exc:  # ragged nested lists
        raise MalformedTable(str(exc)) from None
    if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
        raise MalformedTable(f"expected a non-empty k x k table, got shape {table.shape}")
    if not np.issubdtype(table.dtype, np.integer):
        raise MalformedTable("table entries must be integers")
    k = table.shape[0]
    if table.min() < 0 or table.max() >= k:
        raise MalformedTable(f"entries must lie in 0..{k - 1}")
    mul = table.astype(index_dtype(k))

    # (xy)z vs x(yz), all triples at once
    left = mul[mul[:, :, None], np.arange(k)[None, None, :]]
    right = mul[np.arange(k)[:, None, None], mul[None, :, :]]
    bad = np.argwhere(left != right)
    if len(bad):
        raise NotAssociative(*map(int, bad[0]))

    ar = np.arange(k)
    ids = [e for e in range(k) if np.array_equal(mul[e], ar) and np.array_equal(mul[:, e], ar)]
    if not ids:
        raise NoIdentity("no two-sided identity element")
    e = ids[0]
    inv = []
    for x in range(k):
        hits = np.flatnonzero(mul[x] == e)
        ys = [int(y) for y in hits if mul[y, x] == e]
        if not ys:
            raise NoInverse(x)
        inv.append(ys[0])
    mul.setflags(write=False)
    return BinaryGroup(mul, e, tuple(inv), label)


@lru_cache(maxsize=None)
def _catalog(order: int) -> tuple:
    return tuple(validate_group(table, label) for label, table in CATALOG_DATA[order])


def catalog(order: int) -> list:
    """All groups of the given order up to isomorphism (1 <= order <= 8)."""
    if order not in CATALOG_DATA:
        raise UnsupportedOrder(f"catalog covers orders 1..8, not {order}")
    return list(_catalog(order))


def cyclic_group(k: int) -> BinaryGroup:
    ar = np.arange(k)
    return validate_group((ar[:, None] + ar[None, :]) % k, f"Z{k}")


def klein_group() -> BinaryGroup:
    return catalog(4)[1]


def _element_orders(g: BinaryGroup) -> tuple:
    out = []
    for x in range(g.order):
        m, acc = 1, x
        while acc != g.identity:
            acc = int(g.mul[acc, x])
            m += 1
        out.append(m)
    return tuple(out)


def _generators(g: BinaryGroup) -> list:
    """Greedy generating set together with a spanning word for every element.

    Returns ``(gens, steps)`` where ``steps`` lists ``(target, source, gen_index)``
    such that ``target = source * gens[gen_index]``, in BFS order from the identity.
    """
    gens = []
    reached = {g.identity}
    for x in range(g.order):
        if x in reached:
            continue
        gens.append(x)
        frontier = list(reached)
        while frontier:
            nxt = []
            for y in frontier:
                for s in gens:
                    z = int(g.mul[y, s])
                    if z not in reached:
                        reached.add(z)
                        nxt.append(z)
            frontier = nxt
    steps = []
    seen = {g.identity}
    frontier = [g.identity]
    while frontier:
        nxt = []
        for y in frontier:
            for gi, s in enumerate(gens):
                z = int(g.mul[y, s])
                if z not in seen:
                    seen.add(z)
                    steps.append((z, y, gi))
                    nxt.append(z)
        frontier = nxt
    return gens, steps


def _isomorphisms(g1: BinaryGroup, g2: BinaryGroup) -> list:
    if g1.order != g2.order:
        return []
    if sorted(g1.element_orders()) != sorted(g2.element_orders()):
        return []
    gens, steps = _generators(g1)
    o1, o2 = g1.element_orders(), g2.element_orders()
    cands = [[y for y in range(g2.order) if o2[y] == o1[s]] for s in gens]
    k = g1.order
    found = []
    for images in itertools.product(*cands):
        h = [-1] * k
        h[g1.identity] = g2.identity
        for z, y, gi in steps:
            h[z] = int(g2.mul[h[y], images[gi]])
        if len(set(h)) != k:
            continue
        ha = np.array(h)
        if np.array_equal(ha[g1.mul], g2.mul[ha[:, None], ha[None, :]]):
            found.append(tuple(h))
    found.sort()
    return found


@lru_cache(maxsize=4096)
def _automorphism_maps(key: bytes, k: int, identity: int) -> tuple:
    mul = np.frombuffer(key, dtype=index_dtype(k)).reshape(k, k)
    g = BinaryGroup(mul, identity, ())
    return tuple(_isomorphisms(g, g))


def automorphisms(g: BinaryGroup) -> list:
    """All automorphisms of ``g``, sorted lexicographically by their maps."""
    if g.order > MAX_PERMUTATION_ORDER:
        raise OrderTooLarge(f"automorphism search is limited to order <= {MAX_PERMUTATION_ORDER}")
    return [Automorphism(g, m) for m in _automorphism_maps(g.key, g.order, g.identity)]


def all_isomorphisms(g1: BinaryGroup, g2: BinaryGroup) -> list:
    """Every isomorphism ``g1 -> g2`` as a tuple map, lexicographically sorted."""
    if g1.order > MAX_PERMUTATION_ORDER:
        raise OrderTooLarge(f"isomorphism search is limited to order <= {MAX_PERMUTATION_ORDER}")
    return _isomorphisms(g1, g2)


def group_isomorphic(g1: BinaryGroup, g2: BinaryGroup) -> Optional[tuple]:
    """Lexicographically first isomorphism ``g1 -> g2``, or None."""
    isos = _isomorphisms(g1, g2)
    return isos[0] if isos else None


def is_automorphism(g: BinaryGroup, m: Sequence[int]) -> bool:
    ha = np.asarray(m)
    if sorted(ha.tolist()) != list(range(g.order)):
        return False
    return bool(np.array_equal(ha[g.mul], g.mul[ha[:, None], ha[None, :]]))


def automorphism_from_map(g: BinaryGroup, m: Sequence[int]) -> Automorphism:
    if not is_automorphism(g, m):
        raise MalformedTable(f"{list(m)} is not an automorphism of {g!r}")
    return Automorphism(g, tuple(int(v) for v in m))


def identify(g: BinaryGroup) -> str:
    """Label of the catalog group isomorphic to ``g``."""
    for h in catalog(g.order):
        if group_isomorphic(g, h) is not None:
            return h.label
    raise UnsupportedOrder("no catalog entry matched")  # unreachable for valid groups


# -- text format ---------------------------------------------------------

def _tokens(text: str) -> list:
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0]
        out.extend(line.split())
    return out


def parse_group(text: str) -> BinaryGroup:
    toks = _tokens(text)
    try:
        if toks[0] != "order" or toks[2] != "table":
            raise ParseError("expected 'order <k>' followed by 'table'")
        k = int(toks[1])
        vals = [int(t) for t in toks[3:]]
    except (IndexError, ValueError) as exc:
        raise ParseError(f"malformed group file: {exc}") from None
    if len(vals) != k * k:
        raise ParseError(f"expected {k * k} table entries, got {len(vals)}")
    return validate_group(np.array(vals).reshape(k, k))


def format_group(g: BinaryGroup) -> str:
    lines = [f"order {g.order}", "table"]
    lines += [" ".join(str(int(v)) for v in row) for row in g.mul]
    return "\n".join(lines) + "\n"
