"""Hosszu-Gluskin algebras: building n-ary groups from a binary group, an
automorphism and a fixed element, and recovering that data from an n-ary group.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import (
    BudgetExceeded,
    DivisibilityViolated,
    EvenArity,
    FixedPointViolated,
    InnerPowerViolated,
    MalformedTable,
    ParamConstraintViolated,
    ParseError,
)
from .groups import Automorphism, BinaryGroup, automorphism_from_map, cyclic_group, validate_group
from .polyadic import (
    CHECK_BUDGET,
    DENSE_BUDGET,
    NaryGroup,
    NaryOp,
    _eval_iterated_many,
    binary_retract,
    certify,
    derive_skew,
    derived_b,
    derived_phi,
    eval_iterated,
    is_idempotent,
    retract,
)


@dataclass(frozen=True, eq=False)
class HGAlgebra:
    """Certified data ``<(G; .), phi, b, n>``; build with :func:`certify_hg`."""

    base: BinaryGroup
    phi: Automorphism
    b: int
    n: int
    phi_powers: np.ndarray  # phi^0 .. phi^(d-1), d = ord(phi)

    @property
    def order(self) -> int:
        return self.base.order

    @property
    def op(self) -> NaryOp:
        return NaryOp(self.n, self.base.order, hg=self)

    def phi_power(self, e: int) -> np.ndarray:
        return self.phi_powers[e % len(self.phi_powers)]

    def __repr__(self):
        return f"<HGAlgebra {self.base.label or 'G'} phi={self.phi.map} b={self.b} n={self.n}>"


def _power_table(phi: Sequence[int]) -> np.ndarray:
    k = len(phi)
    p = np.asarray(phi, dtype=np.intp)
    rows = [np.arange(k)]
    while True:
        nxt = p[rows[-1]]
        if np.array_equal(nxt, rows[0]):
            break
        rows.append(nxt)
    out = np.array(rows, dtype=np.intp)
    out.setflags(write=False)
    return out


def certify_hg(base: BinaryGroup, phi, b: int, n: int) -> HGAlgebra:
    """Check ``phi(b) = b`` and ``phi^(n-1)(x) = b x b^-1`` for all x."""
    if n < 3:
        raise ValueError("HG algebras need target arity n >= 3")
    if not isinstance(phi, Automorphism):
        phi = automorphism_from_map(base, phi)
    if not 0 <= b < base.order:
        raise MalformedTable(f"b = {b} outside the carrier")
    if phi.map[b] != b:
        raise FixedPointViolated(f"phi(b) = {phi.map[b]} != b = {b}")
    powers = _power_table(phi.map)
    top = powers[(n - 1) % len(powers)]
    binv = base.inv[b]
    for x in range(base.order):
        if top[x] != base.mul[base.mul[b, x], binv]:
            raise InnerPowerViolated(x)
    return HGAlgebra(base, phi, int(b), n, powers)


def construct(hg: HGAlgebra) -> NaryGroup:
    """The n-ary group ``f(x1..xn) = x1 . phi(x2) . ... . phi^(n-1)(xn) . b``."""
    return certify(hg.op)


def decompose(g: NaryGroup, a: int = 0) -> HGAlgebra:
    """HG data of ``g`` relative to the anchor ``a``.

    The base group is the binary retract at ``a`` (its identity is the skew of
    ``a``), ``phi(x) = f(abar, x, a, ..., a)`` and ``b = f(abar, ..., abar)``.
    """
    ret = binary_retract(g, a)
    return certify_hg(ret, derived_phi(g, a), derived_b(g, a), g.arity)


# k-ary generalization ---------------------------------------------------

@dataclass(frozen=True, eq=False)
class KaryHGAlgebra:
    base: NaryGroup
    phi: tuple
    bs: tuple  # b_2 .. b_m
    n: int
    phi_powers: np.ndarray

    @property
    def m(self) -> int:
        return self.base.arity


def _require_divides(m: int, n: int):
    if m < 2 or (n - 1) % (m - 1):
        raise DivisibilityViolated(f"{m - 1} does not divide {n - 1}")


def certify_khg(base: NaryGroup, phi: Sequence[int], bs: Sequence[int], n: int) -> KaryHGAlgebra:
    m, k = base.arity, base.order
    _require_divides(m, n)
    if len(bs) != m - 1:
        raise ValueError(f"need {m - 1} constants b_2..b_m")
    p = np.asarray(phi, dtype=np.intp)
    if sorted(p.tolist()) != list(range(k)):
        raise MalformedTable("phi is not a bijection")
    T = base.op.as_array()
    if not np.array_equal(p[T], T[np.ix_(*([p] * m))]):
        raise MalformedTable("phi is not an automorphism of the m-ary group")
    for b in bs:
        if p[b] != b:
            raise FixedPointViolated(f"phi({b}) = {p[b]}")
    powers = _power_table(p)
    top = powers[(n - 1) % len(powers)]
    for x in range(k):
        if base(int(top[x]), *bs) != base(*bs, x):
            raise InnerPowerViolated(x)
    return KaryHGAlgebra(base, tuple(int(v) for v in p), tuple(int(b) for b in bs), n, powers)


def construct_k(khg: KaryHGAlgebra, budget: int = DENSE_BUDGET) -> NaryGroup:
    """``f(x1..xn) = g_(t)(x1, phi(x2), ..., phi^(n-1)(xn), b_2, ..., b_m)``."""
    n, m, k = khg.n, khg.m, khg.base.order
    if k**n > budget:
        raise BudgetExceeded(f"{k}^{n} cells exceed dense budget {budget}")
    t = (n - 1) // (m - 1) + 1
    d = len(khg.phi_powers)
    grid = np.indices((k,) * n).reshape(n, -1)
    cols = [khg.phi_powers[p % d][grid[p]] for p in range(n)]
    cols += [np.full(grid.shape[1], b) for b in khg.bs]
    vals = _eval_iterated_many(khg.base.op, t, np.column_stack(cols))
    op = NaryOp.from_table(vals, arity=n, order=k, budget=budget)
    if k ** (2 * n - 1) <= CHECK_BUDGET:
        return certify(op)
    return NaryGroup(op, derive_skew(op))


def literal_b2(g: NaryGroup, m: int, a: int = 0) -> Optional[int]:
    """One reading of the closed formula for ``b_2``: the iterated operation on
    ``(n-r-2)n`` copies of ``a``, ``n`` copies of ``abar``, ``(m-2)(n-r-2)``
    copies of ``a``. Returns None when that length is not a valid arity of an
    iterate of ``f``."""
    n = g.arity
    r = (n - m) // (m - 1)
    ab = g.skew[a]
    args = [a] * ((n - r - 2) * n) + [ab] * n + [a] * ((m - 2) * (n - r - 2))
    if (len(args) - 1) % (n - 1):
        return None
    return eval_iterated(g.op, (len(args) - 1) // (n - 1), args)


def decompose_k(g: NaryGroup, m: int, a: int = 0) -> KaryHGAlgebra:
    """Recover m-ary HG data of ``g`` at anchor ``a``.

    The base is the m-ary retract with anchors all equal to ``a`` and
    ``phi(x) = f(abar, a^(n-r-2), x, a^(r))``; ``b_3 = ... = b_m = abar``.
    ``b_2`` is obtained by solving the reconstruction identity at the constant
    tuple, which is unambiguous; :func:`literal_b2` gives the closed formula.
    """
    n, k = g.arity, g.order
    _require_divides(m, n)
    r = (n - m) // (m - 1)
    base = retract(g, [a] * r, m)
    if m == 2:
        base = _binary_as_nary(base)
    ab = g.skew[a]
    cols = [np.full(k, ab)] + [np.full(k, a)] * (n - r - 2) + [np.arange(k)] + [np.full(k, a)] * r
    phi = tuple(int(v) for v in g.eval_many(np.column_stack(cols)))
    powers = _power_table(phi)
    d = len(powers)
    t = (n - 1) // (m - 1) + 1
    target = g(*([a] * n))
    prefix = [int(powers[p % d][a]) for p in range(n)]
    rows = np.array([prefix + [z] + [ab] * (m - 2) for z in range(k)])
    hits = np.flatnonzero(_eval_iterated_many(base.op, t, rows) == target)
    b2 = int(hits[0])
    return certify_khg(base, phi, [b2] + [ab] * (m - 2), n)


def _binary_as_nary(grp: BinaryGroup) -> NaryGroup:
    op = NaryOp(2, grp.order, grp.mul.copy())
    return NaryGroup(op, (grp.identity,) * grp.order)


# canonical families ---------------------------------------------------------

def canonical_ops(k: int, n: int, family: str, **params) -> NaryGroup:
    """Named n-ary groups over ``Z_k``.

    ``family="f"`` (param ``a``): ``x1 + ... + xn + a``;
    ``family="g"`` (param ``d``): ``x1 + d x2 + ... + d^(n-1) xn``;
    ``family="gc"`` (params ``d``, ``c``): the same plus ``c``.
    """
    return construct(canonical_hg(k, n, family, **params))


def canonical_hg(k: int, n: int, family: str, **params) -> HGAlgebra:
    z = cyclic_group(k)
    if family == "f":
        a = params["a"] % k
        return certify_hg(z, list(range(k)), a, n)
    d = params["d"] % k
    if d in (0, 1):
        raise ParamConstraintViolated(f"d = {d} must not be 0 or 1")
    if pow(d, n - 1, k) != 1:
        raise ParamConstraintViolated(f"d^(n-1) = {pow(d, n - 1, k)} != 1 (mod {k})")
    phi = [(d * x) % k for x in range(k)]
    if family == "g":
        return certify_hg(z, phi, 0, n)
    if family == "gc":
        c = params["c"] % k
        if c in (0, 1):
            raise ParamConstraintViolated(f"c = {c} must not be 0 or 1")
        if (d * c) % k != c:
            raise ParamConstraintViolated(f"d c = {(d * c) % k} != c = {c} (mod {k})")
        return certify_hg(z, phi, c, n)
    raise ValueError(f"unknown family {family!r}")


def group_canonical_hg(base: BinaryGroup, n: int, phi=None, c: Optional[int] = None) -> HGAlgebra:
    """``x1 . phi(x2) . ... . phi^(n-1)(xn) . c`` over an arbitrary group;
    ``phi`` defaults to the identity and ``c`` to the identity element."""
    phi = list(range(base.order)) if phi is None else phi
    c = base.identity if c is None else c
    return certify_hg(base, phi, c, n)


# structural recognizers --------------------------------------------------------

def form19_check(g: NaryGroup, budget: int = DENSE_BUDGET) -> bool:
    """Whether ``f`` has the alternating form ``x1 x2^-1 x3 ... x_(n-1)^-1 xn``
    over an abelian group: idempotent, and any adjacent equal pair ``y, y`` can
    be replaced by any other ``z, z``. Defined for odd arity only."""
    n = g.arity
    if n % 2 == 0:
        raise EvenArity(f"the alternating form needs odd arity, got {n}")
    if not is_idempotent(g):
        return False
    T = g.op.as_array(budget)
    for i in range(n - 1):
        D = np.diagonal(T, axis1=i, axis2=i + 1)
        if not np.all(D == D[..., :1]):
            return False
    return True


def alternating_op(grp: BinaryGroup, n: int, budget: int = DENSE_BUDGET) -> NaryOp:
    """``x1 x2^-1 x3 ... xn`` in ``grp`` (dense)."""
    k = grp.order
    if k**n > budget:
        raise BudgetExceeded(f"{k}^{n} cells exceed dense budget {budget}")
    inv = np.asarray(grp.inv)
    t = np.arange(k)
    for p in range(1, n):
        col = inv if p % 2 else np.arange(k)
        t = grp.mul[t[..., None], col.reshape((1,) * p + (k,))]
    return NaryOp(n, k, t.astype(np.int8 if k < 128 else np.int32))


def k_exponential_check(g: NaryGroup, kexp: int) -> Optional[int]:
    """First ``a`` with ``f(a..a) = a`` and
    ``f_(kexp)(a^(n-2), x, a^(n-2), x, ..., a^(n-2), x, a) = x`` for every x."""
    n, k = g.arity, g.order
    xs = np.arange(k)
    for a in range(k):
        if g(*([a] * n)) != a:
            continue
        cols = []
        for _ in range(kexp):
            cols += [np.full(k, a)] * (n - 2) + [xs]
        cols.append(np.full(k, a))
        if np.array_equal(_eval_iterated_many(g.op, kexp, np.column_stack(cols)), xs):
            return a
    return None


# text format -------------------------------------------------------------------

def parse_hg(text: str) -> HGAlgebra:
    toks = []
    for line in text.splitlines():
        toks.extend(line.split("#", 1)[0].split())
    try:
        if toks[0] != "arity" or toks[2] != "order" or toks[4] != "table":
            raise ParseError("expected 'arity <n>', 'order <k>', 'table'")
        n, k = int(toks[1]), int(toks[3])
        pos = 5
        vals = [int(t) for t in toks[pos:pos + k * k]]
        pos += k * k
        if toks[pos] != "phi":
            raise ParseError("expected 'phi' after the table")
        phi = [int(t) for t in toks[pos + 1:pos + 1 + k]]
        pos += 1 + k
        if toks[pos] != "b":
            raise ParseError("expected 'b <element>'")
        b = int(toks[pos + 1])
        if len(toks) != pos + 2:
            raise ParseError("trailing tokens after 'b'")
    except (IndexError, ValueError) as exc:
        raise ParseError(f"malformed HG file: {exc}") from None
    if len(vals) != k * k or len(phi) != k:
        raise ParseError("table or phi has the wrong number of entries")
    base = validate_group(np.array(vals).reshape(k, k))
    return certify_hg(base, phi, b, n)


def format_hg(hg: HGAlgebra) -> str:
    lines = [f"arity {hg.n}", f"order {hg.order}", "table"]
    lines += [" ".join(str(int(v)) for v in row) for row in hg.base.mul]
    lines.append("phi " + " ".join(str(v) for v in hg.phi.map))
    lines.append(f"b {hg.b}")
    return "\n".join(lines) + "\n"
