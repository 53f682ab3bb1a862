"""Term operations of semiabelian HG-algebras and independence of subsets.

With an abelian base (written additively) every m-ary term operation reduces
to ``F(x_1..x_m) = sum_i g_i(x_i) + k_F b`` where each ``g_i`` is an integer
combination of powers of ``phi``. Coefficient vectors are only a syntax:
distinct vectors can denote the same function, so every equality and
independence decision here is made on evaluation vectors.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import ArityMismatch, BudgetExceeded, DuplicateElements, NonAbelianBase, ShapeMismatch
from .hosszu import HGAlgebra

TERM_BUDGET = 10**6


def _require_abelian(algebra: HGAlgebra):
    if not algebra.base.is_abelian():
        raise NonAbelianBase("term normal forms need an abelian base group")


def _multiples(algebra: HGAlgebra) -> np.ndarray:
    """``M[c, x] = c * x`` for ``0 <= c < exponent``."""
    g = algebra.base
    e = g.exponent()
    rows = [np.full(g.order, g.identity)]
    for _ in range(1, e):
        rows.append(g.mul[rows[-1], np.arange(g.order)])
    return np.array(rows, dtype=np.intp)


def _b_multiples(algebra: HGAlgebra) -> list:
    """``[0*b, 1*b, ...]`` up to the order of b."""
    g = algebra.base
    out = [g.identity]
    while True:
        nxt = int(g.mul[out[-1], algebra.b])
        if nxt == g.identity:
            return out
        out.append(nxt)


@dataclass(frozen=True)
class UnaryTerm:
    algebra: HGAlgebra
    coeffs: tuple
    const_mult: int = 0

    @classmethod
    def make(cls, algebra: HGAlgebra, coeffs: Sequence[int], const_mult: int = 0) -> "UnaryTerm":
        """Reduce integer coefficients modulo the exponent and ``ord(b)``; fewer
        coefficients than ``ord(phi)`` are padded with zeros, more are folded."""
        _require_abelian(algebra)
        d = len(algebra.phi_powers)
        e = algebra.base.exponent()
        red = [0] * d
        for l, c in enumerate(coeffs):
            red[l % d] = (red[l % d] + c) % e
        return cls(algebra, tuple(red), const_mult % len(_b_multiples(algebra)))

    def values(self) -> np.ndarray:
        """Evaluation vector of the non-constant part over the whole carrier."""
        return _values(self.algebra, self.coeffs)

    def __call__(self, x: int) -> int:
        g = self.algebra.base
        return int(g.mul[self.values()[x], _b_multiples(self.algebra)[self.const_mult]])

    def __str__(self):
        return format_term([self.coeffs], self.const_mult)


def _values(algebra: HGAlgebra, coeffs: Sequence[int], M: Optional[np.ndarray] = None) -> np.ndarray:
    g = algebra.base
    if M is None:
        M = _multiples(algebra)
    acc = np.full(g.order, g.identity, dtype=np.intp)
    for l, c in enumerate(coeffs):
        acc = g.mul[acc, M[c][algebra.phi_powers[l]]]
    return acc


@dataclass(frozen=True)
class MTerm:
    algebra: HGAlgebra
    parts: tuple  # one reduced coefficient tuple per variable
    const_mult: int = 0

    @property
    def m(self) -> int:
        return len(self.parts)

    @classmethod
    def make(cls, algebra: HGAlgebra, parts: Sequence[Sequence[int]], const_mult: int = 0) -> "MTerm":
        units = [UnaryTerm.make(algebra, p) for p in parts]
        return cls(algebra, tuple(u.coeffs for u in units), const_mult % len(_b_multiples(algebra)))

    def __call__(self, *args) -> int:
        return eval_term(self, args)

    def __str__(self):
        return format_term(self.parts, self.const_mult)


def format_term(parts: Sequence[Sequence[int]], const_mult: int, first_var: int = 1) -> str:
    pieces = []
    for i, coeffs in enumerate(parts, start=first_var):
        for l, c in enumerate(coeffs):
            if c:
                pieces.append(f"{c}*phi^{l}(x{i})")
    if const_mult:
        pieces.append(f"{const_mult}*b")
    return " + ".join(pieces) if pieces else "0"


def eval_term(t: MTerm, args: Sequence[int]) -> int:
    if len(args) != t.m:
        raise ArityMismatch(f"term takes {t.m} arguments, got {len(args)}")
    g = t.algebra.base
    acc = _b_multiples(t.algebra)[t.const_mult]
    for coeffs, x in zip(t.parts, args):
        acc = int(g.mul[acc, _values(t.algebra, coeffs)[x]])
    return acc


def terms_equal(t1: MTerm, t2: MTerm) -> bool:
    """Function equality in O(m k): constants compared at the all-zero tuple,
    then each variable's unary part on the whole carrier."""
    if t1.algebra is not t2.algebra or t1.m != t2.m:
        raise ShapeMismatch("terms must share algebra and arity")
    bm = _b_multiples(t1.algebra)
    if bm[t1.const_mult] != bm[t2.const_mult]:
        return False
    return all(np.array_equal(_values(t1.algebra, p), _values(t2.algebra, q)) for p, q in zip(t1.parts, t2.parts))


def enumerate_unary_functions(algebra: HGAlgebra, budget: int = TERM_BUDGET) -> list:
    """One :class:`UnaryTerm` per distinct function ``x -> sum_l c_l phi^l(x)``,
    represented by its lexicographically first coefficient vector."""
    _require_abelian(algebra)
    d = len(algebra.phi_powers)
    e = algebra.base.exponent()
    if e**d > budget:
        raise BudgetExceeded(f"{e}^{d} coefficient vectors exceed term budget {budget}")
    return list(_unary_functions(algebra, d, e))


_FUNCTIONS: dict = {}  # id(algebra) -> (algebra, functions); the algebra is kept alive


def _unary_functions(algebra: HGAlgebra, d: int, e: int) -> tuple:
    hit = _FUNCTIONS.get(id(algebra))
    if hit is not None and hit[0] is algebra:
        return hit[1]
    M = _multiples(algebra)
    seen = {}
    for coeffs in itertools.product(range(e), repeat=d):
        key = _values(algebra, coeffs, M).tobytes()
        if key not in seen:
            seen[key] = UnaryTerm(algebra, coeffs, 0)
    funcs = tuple(seen.values())
    _FUNCTIONS[id(algebra)] = (algebra, funcs)
    return funcs


@dataclass(frozen=True)
class Certificate:
    elements: tuple  # a_1..a_m
    terms: tuple  # h_1..h_m as UnaryTerm
    values: tuple  # h_i(a_i)
    const_mult: int  # k_H
    const_value: int  # k_H b

    def __str__(self):
        hs = "; ".join(f"h{i}={format_term([t.coeffs], 0, i)}" for i, t in enumerate(self.terms, start=1))
        vals = ",".join(map(str, self.values))
        return f"{hs}; k={self.const_mult}; values={vals}; kb={self.const_value}"


@dataclass(frozen=True)
class IndependenceVerdict:
    independent: bool
    family: str
    certificate: Optional[Certificate] = None

    def __bool__(self):
        return self.independent


def independent(algebra: HGAlgebra, X: Sequence[int], family: str = "G",
                budget: int = TERM_BUDGET) -> IndependenceVerdict:
    """Decide M- or G-independence of ``X`` by exhaustive search.

    ``family="G"``: look for values ``v_i in {h(a_i)}`` and ``w in <b>`` with
    ``sum v_i + w = 0`` and not all zero. ``family="M"``: look for unary
    functions ``h_i`` and a multiple ``k_H`` with ``sum h_i(a_i) + k_H b = 0``
    where some ``h_i`` is not the zero function or ``k_H b != 0``. A nontrivial
    relation on part of ``X`` extends by zeros, so scanning all of ``X`` at once
    covers every sub-tuple.
    """
    _require_abelian(algebra)
    family = family.upper()
    if family not in ("G", "M"):
        raise ValueError("family must be 'M' or 'G'")
    X = tuple(int(a) for a in X)
    if not X:
        raise ValueError("X must be non-empty")
    if len(set(X)) != len(X):
        raise DuplicateElements(f"elements of X must be pairwise distinct: {X}")
    g = algebra.base
    e0 = g.identity
    funcs = enumerate_unary_functions(algebra, budget)
    bm = _b_multiples(algebra)
    vals = [f.values() for f in funcs]
    zero_func = [not np.any(v != e0) for v in vals]
    m = len(X)

    if family == "G":
        # H_i: the subgroup of values at a_i, with one representative term each
        reps = []
        for a in X:
            rep = {}
            for f, v in zip(funcs, vals):
                rep.setdefault(int(v[a]), f)
            reps.append(sorted(rep.items()))
        size = len(bm)
        for r in reps:
            size *= len(r)
        if size > budget:
            raise BudgetExceeded(f"{size} value tuples exceed term budget {budget}")
        for combo in itertools.product(*reps, range(len(bm))):
            *pairs, kh = combo
            acc = bm[kh]
            for v, _ in pairs:
                acc = int(g.mul[acc, v])
            if acc != e0:
                continue
            if all(v == e0 for v, _ in pairs) and bm[kh] == e0:
                continue
            return IndependenceVerdict(False, "G", Certificate(
                X, tuple(f for _, f in pairs), tuple(v for v, _ in pairs), kh, bm[kh]))
        return IndependenceVerdict(True, "G")

    size = len(funcs) ** m * len(bm)
    if size > budget:
        raise BudgetExceeded(f"{size} term tuples exceed term budget {budget}")
    idx = range(len(funcs))
    for combo in itertools.product(*([idx] * m), range(len(bm))):
        *hs, kh = combo
        acc = bm[kh]
        for i, a in zip(hs, X):
            acc = int(g.mul[acc, vals[i][a]])
        if acc != e0:
            continue
        if all(zero_func[i] for i in hs) and bm[kh] == e0:
            continue
        return IndependenceVerdict(False, "M", Certificate(
            X, tuple(funcs[i] for i in hs), tuple(int(vals[i][a]) for i, a in zip(hs, X)), kh, bm[kh]))
    return IndependenceVerdict(True, "M")
