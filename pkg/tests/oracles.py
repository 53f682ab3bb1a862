"""Brute-force reference implementations used as test oracles.

Everything here is plain Python over nested tuples/dicts so that it shares no
code path with the numpy-based library.
"""
import itertools


def table_fn(T):
    """Python callable for a numpy table, via a dict of all cells."""
    cells = {idx: int(v) for idx, v in _ndenumerate(T)}
    return lambda *args: cells[tuple(args)]


def _ndenumerate(T):
    k = T.shape[0]
    n = T.ndim
    for idx in itertools.product(range(k), repeat=n):
        yield idx, T[idx]


def is_associative(f, n, k):
    for xs in itertools.product(range(k), repeat=2 * n - 1):
        first = None
        for i in range(n):
            inner = f(*xs[i:i + n])
            val = f(*(xs[:i] + (inner,) + xs[i + n:]))
            if first is None:
                first = val
            elif val != first:
                return False
    return True


def is_uniquely_solvable(f, n, k):
    for place in range(n):
        for rest in itertools.product(range(k), repeat=n - 1):
            seen = set()
            for z in range(k):
                args = rest[:place] + (z,) + rest[place:]
                seen.add(f(*args))
            if len(seen) != k:
                return False
    return True


def is_nary_group(f, n, k):
    return is_uniquely_solvable(f, n, k) and is_associative(f, n, k)


def hg_fn(mul, phi, b, n):
    """``x1 . phi(x2) . ... . phi^(n-1)(xn) . b`` written out with loops."""
    mul = [[int(v) for v in row] for row in mul]
    phi = [int(v) for v in phi]

    def f(*xs):
        acc = None
        for p, x in enumerate(xs):
            y = x
            for _ in range(p):
                y = phi[y]
            acc = y if acc is None else mul[acc][y]
        return mul[acc][b]
    return f


def relabel(f, h, n, k):
    """Cells of ``h f h^-1`` flattened in lexicographic order."""
    inv = [0] * k
    for x, y in enumerate(h):
        inv[y] = x
    return tuple(h[f(*(inv[y] for y in ys))] for ys in itertools.product(range(k), repeat=n))


def canonical_form(f, n, k):
    return min(relabel(f, h, n, k) for h in itertools.permutations(range(k)))


def brute_isomorphism(f1, f2, n, k):
    target = tuple(f2(*xs) for xs in itertools.product(range(k), repeat=n))
    for h in itertools.permutations(range(k)):
        if relabel(f1, h, n, k) == target:
            return h
    return None


def group_tables(k):
    """All group tables on ``{0..k-1}`` with identity 0, by backtracking over
    reduced Latin squares and filtering associative ones."""
    T = [[None] * k for _ in range(k)]
    for i in range(k):
        T[0][i] = i
        T[i][0] = i
    cells = [(i, j) for i in range(1, k) for j in range(1, k)]
    out = []

    def fill(pos):
        if pos == len(cells):
            if all(T[T[x][y]][z] == T[x][T[y][z]]
                   for x in range(k) for y in range(k) for z in range(k)):
                out.append(tuple(tuple(r) for r in T))
            return
        i, j = cells[pos]
        used = {T[i][c] for c in range(j)} | {T[r][j] for r in range(i)}
        for v in range(k):
            if v not in used:
                T[i][j] = v
                fill(pos + 1)
        T[i][j] = None

    fill(0)
    return out


def ternary_latin_cubes(k):
    """All k x k x k tables whose every line is a permutation."""
    C = {}
    cells = list(itertools.product(range(k), repeat=3))
    out = []

    def fill(pos):
        if pos == len(cells):
            out.append(dict(C))
            return
        x, y, z = cells[pos]
        used = {C[(a, y, z)] for a in range(x)}
        used |= {C[(x, a, z)] for a in range(y)}
        used |= {C[(x, y, a)] for a in range(z)}
        for v in range(k):
            if v not in used:
                C[(x, y, z)] = v
                fill(pos + 1)
        C.pop((x, y, z), None)

    fill(0)
    return out


def ternary_group_tables(k):
    """All ternary group operations on k elements, as Python callables."""
    out = []
    for C in ternary_latin_cubes(k):
        f = (lambda C: lambda x, y, z: C[(x, y, z)])(C)
        if is_associative(f, 3, k):
            out.append(f)
    return out


def skew(f, n, k, x):
    sols = [z for z in range(k) if f(*([x] * (n - 1) + [z])) == x]
    return sols[0] if len(sols) == 1 else None
