"""n-ary operations on finite carriers and the n-ary group machinery around them.

An operation is either *dense* (an ``ndarray`` of shape ``(k,) * n``, last
argument varying fastest in the flattened order) or *HG-backed*, in which
case it is evaluated lazily as ``x1 . phi(x2) . ... . phi^(n-1)(xn) . b``
from a certified Hosszu-Gluskin algebra (see :mod:`narygroups.hosszu`).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .errors import (
    ArityArithmeticMismatch,
    ArityMismatch,
    BudgetExceeded,
    IndexOutOfRange,
    MissingSkewMap,
    NotAnNaryGroup,
    ParseError,
)
from .groups import BinaryGroup, index_dtype, validate_group

DENSE_BUDGET = 2**20
CHECK_BUDGET = 2**22
AUDIT_SAMPLES = 10**4


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str = ""
    witness: Optional[tuple] = None

    def __bool__(self):
        return self.ok


TRUE = Verdict(True)


class NaryOp:
    """An ``arity``-ary operation on ``{0..order-1}``."""

    def __init__(self, arity: int, order: int, table: Optional[np.ndarray] = None, hg=None):
        if arity < 2:
            raise ArityMismatch("arity must be at least 2")
        if (table is None) == (hg is None):
            raise ValueError("exactly one of table / hg must be given")
        self.arity = arity
        self.order = order
        self.table = table
        self.hg = hg
        if table is not None:
            if table.shape != (order,) * arity:
                raise ArityMismatch(f"dense table must have shape {(order,) * arity}, got {table.shape}")
            table.setflags(write=False)

    # construction ------------------------------------------------------

    @classmethod
    def from_table(cls, values, arity: Optional[int] = None, order: Optional[int] = None,
                   budget: int = DENSE_BUDGET) -> "NaryOp":
        arr = np.asarray(values)
        if arity is not None:
            if order is None:
                order = round(arr.size ** (1.0 / arity))
            if order**arity > budget:
                raise BudgetExceeded(f"{order}^{arity} cells exceed dense budget {budget}")
            if arr.size != order**arity:
                raise ArityMismatch(f"expected {order}^{arity} = {order**arity} values, got {arr.size}")
            arr = arr.reshape((order,) * arity)
        else:
            order = arr.shape[0]
            arity = arr.ndim
            if arr.size > budget:
                raise BudgetExceeded(f"{arr.size} cells exceed dense budget {budget}")
        if arr.size and (arr.min() < 0 or arr.max() >= order):
            raise IndexOutOfRange(f"table entries must lie in 0..{order - 1}")
        return cls(arity, order, arr.astype(index_dtype(order)))

    @classmethod
    def from_function(cls, fn, arity: int, order: int, budget: int = DENSE_BUDGET) -> "NaryOp":
        """Tabulate ``fn(*args)``; ``fn`` receives broadcast index grids, so numpy
        arithmetic like ``lambda x, y, z: (x + y + z) % 3`` works directly."""
        if order**arity > budget:
            raise BudgetExceeded(f"{order}^{arity} cells exceed dense budget {budget}")
        grids = np.indices((order,) * arity)
        vals = np.broadcast_to(np.asarray(fn(*grids)), (order,) * arity)
        return cls.from_table(vals)

    # evaluation --------------------------------------------------------

    @property
    def is_dense(self) -> bool:
        return self.table is not None

    def __call__(self, *args) -> int:
        return eval_op(self, args)

    def eval_many(self, args) -> np.ndarray:
        """Evaluate on each row of an ``(N, arity)`` integer array."""
        args = np.asarray(args)
        if args.shape[-1] != self.arity:
            raise ArityMismatch(f"expected {self.arity} arguments, got {args.shape[-1]}")
        if self.table is not None:
            return self.table[tuple(args[..., p] for p in range(self.arity))]
        hg = self.hg
        mul, pw, d = hg.base.mul, hg.phi_powers, len(hg.phi_powers)
        acc = args[..., 0].astype(np.intp)
        for p in range(1, self.arity):
            acc = mul[acc, pw[p % d][args[..., p]]]
        return mul[acc, hg.b]

    def dense(self, budget: int = DENSE_BUDGET) -> "NaryOp":
        if self.table is not None:
            return self
        return NaryOp(self.arity, self.order, self.as_array(budget))

    def as_array(self, budget: int = DENSE_BUDGET) -> np.ndarray:
        if self.table is not None:
            return self.table
        k, n = self.order, self.arity
        if k**n > budget:
            raise BudgetExceeded(f"{k}^{n} cells exceed dense budget {budget}")
        hg = self.hg
        mul, pw, d = hg.base.mul, hg.phi_powers, len(hg.phi_powers)
        t = np.arange(k)
        for p in range(1, n):
            t = mul[t[..., None], pw[p % d].reshape((1,) * p + (k,))]
        return mul[t, hg.b].astype(index_dtype(k))

    def fits(self, budget: int = DENSE_BUDGET) -> bool:
        return self.order**self.arity <= budget

    def __repr__(self):
        kind = "dense" if self.is_dense else "hg"
        return f"<NaryOp arity={self.arity} order={self.order} {kind}>"


def eval_op(op: NaryOp, args: Sequence[int]) -> int:
    if len(args) != op.arity:
        raise ArityMismatch(f"expected {op.arity} arguments, got {len(args)}")
    for a in args:
        if not 0 <= a < op.order:
            raise IndexOutOfRange(f"argument {a} outside 0..{op.order - 1}")
    if op.table is not None:
        return int(op.table[tuple(args)])
    hg = op.hg
    mul, pw, d = hg.base.mul, hg.phi_powers, len(hg.phi_powers)
    acc = args[0]
    for p in range(1, op.arity):
        acc = mul[acc, pw[p % d][args[p]]]
    return int(mul[acc, hg.b])


def ops_equal(op1: NaryOp, op2: NaryOp, budget: int = DENSE_BUDGET,
              samples: int = AUDIT_SAMPLES, seed: int = 0) -> Verdict:
    """Pointwise equality; exhaustive when both fit the dense budget, sampled otherwise."""
    if (op1.arity, op1.order) != (op2.arity, op2.order):
        return Verdict(False, "shape differs")
    if op1.fits(budget):
        a, b = op1.as_array(budget), op2.as_array(budget)
        bad = np.argwhere(a != b)
        if len(bad):
            return Verdict(False, "values differ", tuple(int(v) for v in bad[0]))
        return TRUE
    args = sample_tuples(op1.order, op1.arity, samples, seed)
    diff = np.flatnonzero(op1.eval_many(args) != op2.eval_many(args))
    if len(diff):
        return Verdict(False, "values differ", tuple(int(v) for v in args[diff[0]]))
    return TRUE


def sample_tuples(k: int, width: int, samples: int, seed: int) -> np.ndarray:
    """Seeded random tuples preceded by every tuple with at most two distinct
    entries placed as a prefix/suffix split (cheap structured coverage)."""
    rng = np.random.default_rng(seed)
    structured = [[x] * s + [y] * (width - s) for x in range(k) for y in range(k) for s in range(1, width + 1)]
    rand = rng.integers(0, k, size=(samples, width))
    return np.concatenate([np.array(structured, dtype=np.int64).reshape(-1, width), rand])


# simple iteration ------------------------------------------------------

def iterate(op: NaryOp, t: int, budget: int = DENSE_BUDGET) -> NaryOp:
    """The ``t(n-1)+1``-ary operation ``f(f(...f(x1..xn)...)...)`` nested ``t`` times."""
    if t < 1:
        raise ValueError("t must be positive")
    if t == 1:
        return op
    n, k = op.arity, op.order
    m = t * (n - 1) + 1
    if op.hg is not None:
        hg = op.hg
        from .hosszu import certify_hg

        return certify_hg(hg.base, hg.phi, hg.base.power(hg.b, t), m).op
    if k**m > budget:
        raise BudgetExceeded(f"{k}^{m} cells exceed dense budget {budget}")
    F = op.table
    acc = F
    for _ in range(t - 1):
        acc = F[acc]  # f(acc(...), x, ..., x)
    return NaryOp(m, k, acc)


def eval_iterated(op: NaryOp, t: int, args: Sequence[int]) -> int:
    n = op.arity
    if len(args) != t * (n - 1) + 1:
        raise ArityMismatch(f"iteration {t} of an {n}-ary op takes {t * (n - 1) + 1} arguments")
    acc = op(*args[:n])
    for s in range(1, t):
        lo = n + (s - 1) * (n - 1)
        acc = op(acc, *args[lo:lo + n - 1])
    return acc


def _eval_iterated_many(op: NaryOp, t: int, args: np.ndarray) -> np.ndarray:
    n = op.arity
    acc = op.eval_many(args[:, :n])
    for s in range(1, t):
        lo = n + (s - 1) * (n - 1)
        acc = op.eval_many(np.column_stack([acc, args[:, lo:lo + n - 1]]))
    return acc


# associativity ---------------------------------------------------------

def _axis_grid(k: int, dims: int, axis: int) -> np.ndarray:
    shape = [1] * dims
    shape[axis] = k
    return np.arange(k).reshape(shape)


def _assoc_side(F: np.ndarray, i: int) -> np.ndarray:
    """``f(x_1^{i-1}, f(x_i^{n+i-1}), x_{n+i}^{2n-1})`` over the full (2n-1)-grid."""
    n, k = F.ndim, F.shape[0]
    dims = 2 * n - 1
    inner = F.reshape((1,) * (i - 1) + (k,) * n + (1,) * (n - i))
    idx = [_axis_grid(k, dims, p) for p in range(i - 1)]
    idx.append(inner)
    idx += [_axis_grid(k, dims, p) for p in range(i + n - 1, dims)]
    return F[tuple(idx)]


def _assoc_side_sampled(op: NaryOp, i: int, X: np.ndarray) -> np.ndarray:
    n = op.arity
    inner = op.eval_many(X[:, i - 1:i + n - 1])
    return op.eval_many(np.column_stack([X[:, :i - 1], inner, X[:, i + n - 1:]]))


def check_assoc_pair(op: NaryOp, i: int, j: int, budget: int = CHECK_BUDGET,
                     samples: int = AUDIT_SAMPLES, seed: int = 0) -> Verdict:
    """(i,j)-associativity, positions 1-based.

    Dense operations are checked on all ``k^(2n-1)`` tuples; HG-backed ones
    on seeded random samples.
    """
    n, k = op.arity, op.order
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexOutOfRange(f"positions must lie in 1..{n}")
    if i == j:
        return TRUE
    if op.table is None:
        X = np.random.default_rng(seed).integers(0, k, size=(samples, 2 * n - 1))
        bad = np.flatnonzero(_assoc_side_sampled(op, i, X) != _assoc_side_sampled(op, j, X))
        if len(bad):
            return Verdict(False, f"({i},{j})-associativity fails", tuple(int(v) for v in X[bad[0]]))
        return TRUE
    if k ** (2 * n - 1) > budget:
        raise BudgetExceeded(f"{k}^{2 * n - 1} tuples exceed check budget {budget}")
    return _compare_sides(_assoc_side(op.table, i), _assoc_side(op.table, j), i, j)


def _compare_sides(lhs: np.ndarray, rhs: np.ndarray, i: int, j: int) -> Verdict:
    if np.array_equal(lhs, rhs):
        return TRUE
    bad = np.argwhere(lhs != rhs)
    return Verdict(False, f"({i},{j})-associativity fails", tuple(int(v) for v in bad[0]))


def is_associative(op: NaryOp, budget: int = CHECK_BUDGET) -> Verdict:
    n, k = op.arity, op.order
    if op.table is None or k ** (2 * n - 1) > budget:
        for j in range(2, n + 1):
            v = check_assoc_pair(op, 1, j, budget)
            if not v:
                return v
        return TRUE
    first = _assoc_side(op.table, 1)
    for j in range(2, n + 1):
        v = _compare_sides(first, _assoc_side(op.table, j), 1, j)
        if not v:
            return v
    return TRUE


# solvability -----------------------------------------------------------

def check_solvable(op: NaryOp, place: int) -> Verdict:
    """Unique solvability of ``f(x_1^{i-1}, z, x_{i+1}^n) = x_0`` at ``place`` (1-based).

    On a finite carrier existence and uniqueness coincide: both say that every
    fibre along the axis is a permutation.
    """
    if op.table is None:
        return TRUE  # HG-backed operations are groups by construction
    T = op.table
    axis = place - 1
    counts = np.zeros(T.shape, dtype=bool)
    np.put_along_axis(counts, T.astype(np.intp), True, axis=axis)
    missing = np.argwhere(~counts)
    if len(missing):
        w = [int(v) for v in missing[0]]
        target = w[axis]
        w[axis] = None
        return Verdict(False, f"not solvable at place {place}", (tuple(w), target))
    return TRUE


# n-ary group verifiers ---------------------------------------------------

def derive_skew(op: NaryOp) -> Optional[tuple]:
    """Solutions of ``f(x, ..., x, z) = x`` for every x (smallest z), or None if
    some x has no solution."""
    k, n = op.order, op.arity
    out = []
    for x in range(k):
        args = np.array([[x] * (n - 1) + [z] for z in range(k)])
        hits = np.flatnonzero(op.eval_many(args) == x)
        if not len(hits):
            return None
        out.append(int(hits[0]))
    return tuple(out)


def _xy_args(k: int) -> tuple:
    xs, ys = np.meshgrid(np.arange(k), np.arange(k), indexing="ij")
    return xs.ravel(), ys.ravel()


def check_dornte(op: NaryOp, skew: Sequence[int], identity: str,
                 position: int) -> Verdict:
    """One of the skew identities for a single position, exhaustively over (x, y).

    ``identity`` is ``"right"`` for ``f(x^(i-2), xbar, x^(n-i), y) = y``,
    ``"left"`` for ``f(y, x^(n-j), xbar, x^(j-2)) = y`` and ``"skew"`` for
    ``f(x^(k-1), xbar, x^(n-k)) = x``.
    """
    n, k = op.arity, op.order
    sk = np.asarray(skew)
    x, y = _xy_args(k)
    cols = [x] * n
    if identity == "right":
        if not 2 <= position <= n:
            raise IndexOutOfRange("i must lie in 2..n")
        cols[position - 2] = sk[x]
        cols[n - 1] = y
        want = y
    elif identity == "left":
        if not 2 <= position <= n:
            raise IndexOutOfRange("j must lie in 2..n")
        cols[0] = y
        cols[n - position + 1] = sk[x]
        want = y
    elif identity == "skew":
        if not 1 <= position <= n:
            raise IndexOutOfRange("k must lie in 1..n")
        cols[position - 1] = sk[x]
        want = x
    else:
        raise ValueError(identity)
    got = op.eval_many(np.column_stack(cols))
    bad = np.flatnonzero(got != want)
    if len(bad):
        b = bad[0]
        return Verdict(False, f"{identity} skew identity fails at position {position}",
                       (int(x[b]), int(y[b])))
    return TRUE


def is_nary_group(op: NaryOp, method: str = "full", i: int = 2, j: int = 2,
                  skew: Optional[Sequence[int]] = None, budget: int = CHECK_BUDGET,
                  audit: bool = False, samples: int = AUDIT_SAMPLES, seed: int = 0) -> Verdict:
    """Decide whether ``op`` is an n-ary group.

    ``method`` selects the axiom system:

    * ``"full"``: every (1,j)-associativity plus unique solvability everywhere;
    * ``"sokolov"``: (1,2)-associativity, solvability at place n and unique
      solvability at place 1;
    * ``"dornte"``: (1,2)-associativity with the left/right skew identities at
      positions ``i`` and ``j``. ``skew`` defaults to the solution of
      ``f(x,...,x,z) = x``; raises ``MissingSkewMap`` if some x has none.

    HG-backed operations are groups by construction; with ``audit=True`` a
    seeded sampling of the associativity laws is run as well.
    """
    if op.hg is not None:
        if not audit:
            return TRUE
        for jj in range(2, op.arity + 1):
            v = check_assoc_pair(op, 1, jj, samples=samples, seed=seed)
            if not v:
                return v
        return TRUE
    n = op.arity
    if method == "full":
        for place in range(1, n + 1):
            v = check_solvable(op, place)
            if not v:
                return v
        return is_associative(op, budget)
    if method == "sokolov":
        for place in (1, n):
            v = check_solvable(op, place)
            if not v:
                return v
        return check_assoc_pair(op, 1, 2, budget)
    if method == "dornte":
        if skew is None:
            skew = derive_skew(op)
            if skew is None:
                raise MissingSkewMap("f(x,...,x,z) = x has no solution for some x")
        for ident, pos in (("right", i), ("left", j)):
            v = check_dornte(op, skew, ident, pos)
            if not v:
                return v
        return check_assoc_pair(op, 1, 2, budget)
    raise ValueError(f"unknown method {method!r}")


# alternative characterizations -------------------------------------------

def check_characterizations(op: NaryOp, budget: int = CHECK_BUDGET) -> dict:
    """Evaluate each alternative characterization of n-ary groups.

    Returns a dict mapping a criterion name to a bool. ``semigroup`` is the
    associativity of ``op``; the ``*_raw`` entries record the extra hypotheses
    alone, and the unsuffixed entries combine them with associativity where
    the criterion presupposes an n-ary semigroup.
    """
    op = op.dense()
    n, k, T = op.arity, op.order, op.table
    ar = np.arange(k)
    semigroup = bool(is_associative(op, budget))
    solv = {p: bool(check_solvable(op, p)) for p in range(1, n + 1)}

    def assoc(i, j):
        return bool(check_assoc_pair(op, i, j, budget))

    prop1_a = assoc(1, 2) and solv[n] and solv[1]
    prop1_b = assoc(n - 1, n) and solv[1] and solv[n]
    prop1_c = any(assoc(i, i + 1) and solv[i] and any(solv[j] for j in range(i + 1, n + 1))
                  for i in range(2, n - 1))

    # units: for some block length s and all a_1^s there are x, y with
    # f(a, x, b) = b = f(b, y, a) for all b
    def units_for(s):
        mid = n - 1 - s
        # T[a(s), x(mid), b] == b
        left = np.all(T == ar, axis=-1).reshape((k**s, k**mid)).any(axis=1)
        # T[b, y(mid), a(s)] == b  -> move b axis last
        R = np.moveaxis(T, 0, -1)
        right = np.all(R == ar, axis=-1).reshape((k**mid, k**s)).any(axis=0)
        return bool(left.all() and right.all())

    units_raw = any(units_for(s) for s in range(1, n - 1))

    def pattern_for(i, j):
        # f(x, b^(i-1), a^(n-i)) = b solvable in x; f(a^(n-j), b^(j-1), y) = b solvable in y
        for a in range(k):
            for b in range(k):
                args = [b] * (i - 1) + [a] * (n - i)
                if not np.any(T[(slice(None), *args)] == b):
                    return False
                args = [a] * (n - j) + [b] * (j - 1)
                if not np.any(T[(*args, slice(None))] == b):
                    return False
        return True

    patterns = {(i, j): pattern_for(i, j) for i in range(1, n) for j in range(1, n)}
    pattern_raw = any(patterns.values())
    tyutin_raw = patterns[(1, 1)]

    prop1 = prop1_a or prop1_b or prop1_c
    return {
        "semigroup": semigroup,
        "prop1_a": prop1_a,
        "prop1_b": prop1_b,
        "prop1_c": prop1_c,
        "prop1": prop1,
        "units_raw": units_raw,
        "units": semigroup and units_raw,
        "pattern_raw": pattern_raw,
        "pattern": semigroup and pattern_raw,
        "tyutin_raw": tyutin_raw,
        "tyutin": semigroup and tyutin_raw,
    }


# certified n-ary groups ---------------------------------------------------

@dataclass(frozen=True, eq=False)
class NaryGroup:
    op: NaryOp
    skew: tuple
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def arity(self) -> int:
        return self.op.arity

    @property
    def order(self) -> int:
        return self.op.order

    @property
    def hg(self):
        return self.op.hg

    def __call__(self, *args) -> int:
        return eval_op(self.op, args)

    def eval_many(self, args) -> np.ndarray:
        return self.op.eval_many(args)


def _hg_skew(hg, x: int) -> int:
    g, pw, d = hg.base, hg.phi_powers, len(hg.phi_powers)
    p = x
    for q in range(1, hg.n - 1):
        p = int(g.mul[p, pw[q % d][x]])
    return int(g.mul[g.inv[hg.b], g.mul[g.inv[p], x]])


def certify(op: NaryOp, budget: int = CHECK_BUDGET) -> NaryGroup:
    """Wrap an operation as a certified :class:`NaryGroup` or raise ``NotAnNaryGroup``."""
    if op.hg is not None:
        return NaryGroup(op, tuple(_hg_skew(op.hg, x) for x in range(op.order)))
    v = is_nary_group(op, "full", budget=budget)
    if not v:
        raise NotAnNaryGroup(v)
    return NaryGroup(op, derive_skew(op))


def skew_of(g: NaryGroup, x: int) -> int:
    return g.skew[x]


def scan_skew(op: NaryOp) -> Optional[tuple]:
    """Skew map by scanning candidates, independent of any HG data."""
    return derive_skew(op)


def solve_last(g: NaryGroup, prefix: Sequence[int], target: int) -> int:
    """The unique z with ``f(prefix, z) = target``."""
    n = g.arity
    if len(prefix) != n - 1:
        raise ArityMismatch(f"prefix must have {n - 1} entries")
    hg = g.hg
    if hg is not None:
        base, pw, d = hg.base, hg.phi_powers, len(hg.phi_powers)
        q = prefix[0]
        for p in range(1, n - 1):
            q = int(base.mul[q, pw[p % d][prefix[p]]])
        return int(base.mul[base.inv[hg.b], base.mul[base.inv[q], target]])
    return int(np.flatnonzero(g.op.table[tuple(prefix)] == target)[0])


def hat_of(g: NaryGroup, x: int) -> int:
    """The unique solution of ``f_(2)(x, ..., x, z) = x`` (2n-2 copies of x)."""
    n = g.arity
    inner = g(*([x] * n))
    # f(f(x..x), x^(n-2), z) = x
    return solve_last(g, [inner] + [x] * (n - 2), x)


def _translation(g: NaryGroup, x: int) -> np.ndarray:
    """The permutation ``z -> f(x, ..., x, z)``."""
    cache = g._cache.setdefault("translation", {})
    if x not in cache:
        n, k = g.arity, g.order
        args = np.column_stack([np.full((k, n - 1), x), np.arange(k)])
        cache[x] = g.eval_many(args).astype(np.intp)
    return cache[x]


def nary_power(g: NaryGroup, x: int, exp: int) -> int:
    """``x^<exp>``: ``x^<0> = x`` and ``x^<m+1> = f(x, ..., x, x^<m>)``.

    Powers are read off the cycle of ``x`` under ``z -> f(x, ..., x, z)``, so
    any integer exponent costs O(k) evaluations.
    """
    L = _translation(g, x)
    cycle = [x]
    z = int(L[x])
    while z != x:
        cycle.append(z)
        z = int(L[z])
    return cycle[exp % len(cycle)]


def skew_exponent(n: int, m: int) -> int:
    """``((2-n)^m - 1) / (n-1)``, exactly."""
    num = (2 - n) ** m - 1
    assert num % (n - 1) == 0
    return num // (n - 1)


def iterated_skew(g: NaryGroup, x: int, m: int) -> int:
    for _ in range(m):
        x = g.skew[x]
    return x


# retracts ------------------------------------------------------------------

def retract(g: NaryGroup, anchors: Sequence[int], target_arity: int,
            budget: int = DENSE_BUDGET):
    """The ``target_arity``-ary retract with the anchor block inserted between
    consecutive variables.

    Returns a :class:`BinaryGroup` for target arity 2, otherwise a certified
    :class:`NaryGroup` with a dense body.
    """
    n, k = g.arity, g.order
    m, r = target_arity, len(anchors)
    if m < 2 or m + r * (m - 1) != n:
        raise ArityArithmeticMismatch(f"need m + r(m-1) = n, got m={m}, r={r}, n={n}")
    if k**m > budget:
        raise BudgetExceeded(f"{k}^{m} cells exceed dense budget {budget}")
    grids = np.indices((k,) * m).reshape(m, -1)
    cols = []
    for p in range(m):
        cols.append(grids[p])
        if p < m - 1:
            cols += [np.full(k**m, a) for a in anchors]
    table = g.eval_many(np.column_stack(cols)).reshape((k,) * m)
    if m == 2:
        return validate_group(table)
    op = NaryOp(m, k, table.astype(index_dtype(k)))
    if k ** (2 * m - 1) <= CHECK_BUDGET:
        return certify(op)
    return NaryGroup(op, derive_skew(op))


def binary_retract(g: NaryGroup, a: int) -> BinaryGroup:
    """``x o y = f(x, a, ..., a, y)``, cached per anchor."""
    cache = g._cache.setdefault("retract", {})
    if a not in cache:
        cache[a] = retract(g, [a] * (g.arity - 2), 2)
    return cache[a]


def retract_inverse(g: NaryGroup, a: int, x: int) -> int:
    """Inverse of ``x`` in the binary retract at ``a``, through the n-ary operation."""
    n = g.arity
    ab = g.skew[a]
    return g(*([ab] + [x] * (n - 3) + [g.skew[x], ab]))


def derived_phi(g: NaryGroup, a: int) -> tuple:
    """``phi(x) = f(abar, x, a, ..., a)`` for the retract at ``a``."""
    n, k = g.arity, g.order
    args = np.column_stack([np.full(k, g.skew[a]), np.arange(k)] + [np.full(k, a)] * (n - 2))
    return tuple(int(v) for v in g.eval_many(args))


def derived_b(g: NaryGroup, a: int) -> int:
    return g(*([g.skew[a]] * g.arity))


# predicates ------------------------------------------------------------------

def is_idempotent(g) -> bool:
    op = g.op if isinstance(g, NaryGroup) else g
    k, n = op.order, op.arity
    diag = op.eval_many(np.repeat(np.arange(k)[:, None], n, axis=1))
    return bool(np.array_equal(diag, np.arange(k)))


def sigma_permutable(op: NaryOp, sigma: Sequence[int], budget: int = DENSE_BUDGET) -> bool:
    """``f(x_1..x_n) = f(x_sigma(1)..x_sigma(n))`` exhaustively (0-based sigma)."""
    T = op.as_array(budget)
    # value at args x equals T[x[sigma]]: axis p of the permuted table reads x[sigma[p]]
    perm = np.transpose(T, axes=np.argsort(sigma))
    return bool(np.array_equal(T, perm))


def is_semiabelian(g: NaryGroup, anchor: int = 0) -> bool:
    return binary_retract(g, anchor).is_abelian()


def is_commutative(g: NaryGroup, anchor: int = 0) -> bool:
    if not is_semiabelian(g, anchor):
        return False
    return all(v == x for x, v in enumerate(derived_phi(g, anchor)))


def predicates(g: NaryGroup, sigma: Optional[Sequence[int]] = None, anchor: int = 0) -> dict:
    flags = {
        "commutative": is_commutative(g, anchor),
        "semiabelian": is_semiabelian(g, anchor),
        "idempotent": is_idempotent(g),
    }
    if sigma is not None:
        flags["sigma_permutable"] = sigma_permutable(g.op, sigma)
    return flags


def is_medial(op: NaryOp, budget: int = CHECK_BUDGET) -> bool:
    """Full medial identity: the n x n matrix of arguments may be read by rows
    or by columns. Exhaustive over ``k^(n*n)`` matrices."""
    n, k = op.arity, op.order
    if k ** (n * n) > budget:
        raise BudgetExceeded(f"{k}^{n * n} argument matrices exceed check budget {budget}")
    T = op.table if op.table is not None else op.as_array()
    M = np.indices((k,) * (n * n)).reshape(n, n, -1)
    rows = [T[tuple(M[r, c] for c in range(n))] for r in range(n)]
    cols = [T[tuple(M[r, c] for r in range(n))] for c in range(n)]
    return bool(np.array_equal(T[tuple(rows)], T[tuple(cols)]))


# text format -------------------------------------------------------------

def parse_nop(text: str, budget: int = DENSE_BUDGET) -> NaryOp:
    toks = []
    for line in text.splitlines():
        toks.extend(line.split("#", 1)[0].split())
    try:
        if toks[0] != "arity" or toks[2] != "order" or toks[4] != "values":
            raise ParseError("expected 'arity <n>', 'order <k>', 'values'")
        n, k = int(toks[1]), int(toks[3])
        vals = [int(t) for t in toks[5:]]
    except (IndexError, ValueError) as exc:
        raise ParseError(f"malformed operation file: {exc}") from None
    return NaryOp.from_table(vals, arity=n, order=k, budget=budget)


def format_nop(op: NaryOp, budget: int = DENSE_BUDGET, per_line: Optional[int] = None) -> str:
    T = op.as_array(budget)
    per_line = per_line or op.order
    flat = [str(int(v)) for v in T.ravel()]
    lines = [f"arity {op.arity}", f"order {op.order}", "values"]
    lines += [" ".join(flat[s:s + per_line]) for s in range(0, len(flat), per_line)]
    return "\n".join(lines) + "\n"
