"""Classification of all n-ary groups on a k-element set (k <= 7).

Every n-ary group comes from HG data over some group of order k, so sweeping
``<G, phi, b>`` over the catalog and merging isomorphic results gives one
representative per isomorphism class.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import gcd
from typing import Optional

from .errors import NotCyclicBase, RowNotTabulated, UnsupportedOrder
from .groups import automorphisms, catalog, group_isomorphic, cyclic_group, klein_group
from .hosszu import HGAlgebra, canonical_hg, certify_hg, construct
from .iso import iso_retract
from .polyadic import NaryGroup, binary_retract, predicates

# modulus M_k with l = gcd(n-1, M_k)
TABLE_MODULUS = {2: 2, 3: 6, 4: 12, 5: 20, 6: 6, 7: 42}

COUNT_KEYS = (
    "all",
    "commutative",
    "commutative_idempotent",
    "noncommutative_medial_idempotent",
    "noncommutative_medial_nonidempotent",
    "nonmedial",
)

# Published counts of n-ary groups on k-element sets, per column l.
# Rows absent for a given k are not tabulated there.
_A, _C, _CI, _NMI, _NMN, _NM = COUNT_KEYS
PUBLISHED_COUNTS = {
    2: {
        2: {_A: 2, _C: 2, _CI: 1},
        1: {_A: 1, _C: 1, _CI: 0},
    },
    3: {
        6: {_A: 3, _C: 2, _CI: 1, _NMI: 1},
        3: {_A: 2, _C: 2, _CI: 1, _NMI: 0},
        2: {_A: 2, _C: 1, _CI: 0, _NMI: 1},
        1: {_A: 1, _C: 1, _CI: 0, _NMI: 0},
    },
    4: {
        12: {_A: 10, _C: 5, _CI: 2, _NMI: 3, _NMN: 2},
        6: {_A: 8, _C: 4, _CI: 1, _NMI: 2, _NMN: 2},
        4: {_A: 9, _C: 5, _CI: 2, _NMI: 1, _NMN: 3},
        3: {_A: 3, _C: 2, _CI: 0, _NMI: 1, _NMN: 0},
        2: {_A: 7, _C: 4, _CI: 1, _NMI: 1, _NMN: 2},
        1: {_A: 2, _C: 2, _CI: 0, _NMI: 0, _NMN: 0},
    },
    5: {
        20: {_A: 5, _C: 2, _CI: 1, _NMI: 3, _NMN: 0},
        10: {_A: 3, _C: 2, _CI: 1, _NMI: 1, _NMN: 0},
        5: {_A: 2, _C: 2, _CI: 1, _NMI: 0, _NMN: 0},
        4: {_A: 4, _C: 1, _CI: 0, _NMI: 3, _NMN: 0},
        2: {_A: 2, _C: 1, _CI: 0, _NMI: 1, _NMN: 0},
        1: {_A: 1, _C: 1, _CI: 0, _NMI: 0, _NMN: 0},
    },
    6: {
        6: {_A: 7, _C: 4, _CI: 1, _NMI: 1, _NMN: 1, _NM: 1},
        3: {_A: 3, _C: 2, _CI: 0, _NMI: 0, _NMN: 0, _NM: 1},
        2: {_A: 5, _C: 2, _CI: 0, _NMI: 1, _NMN: 1, _NM: 1},
        1: {_A: 2, _C: 1, _CI: 0, _NMI: 0, _NMN: 0, _NM: 1},
    },
    7: {
        42: {_A: 7, _C: 2, _NMI: 5, _CI: 1},
        21: {_A: 4, _C: 2, _NMI: 2, _CI: 1},
        14: {_A: 3, _C: 2, _NMI: 1, _CI: 1},
        7: {_A: 2, _C: 2, _NMI: 0, _CI: 1},
        6: {_A: 6, _C: 1, _NMI: 5, _CI: 0},
        3: {_A: 3, _C: 1, _NMI: 2, _CI: 0},
        2: {_A: 2, _C: 1, _NMI: 1, _CI: 0},
        1: {_A: 1, _C: 1, _NMI: 0, _CI: 0},
    },
}

# Klein four-group: number of classes per l = gcd(n-1, 12)
KLEIN_CLASS_COUNTS = {12: 5, 6: 4, 4: 4, 3: 2, 2: 3, 1: 1}


def table_column(k: int, n: int) -> int:
    if k not in TABLE_MODULUS:
        raise UnsupportedOrder(f"no table modulus for k = {k}")
    return gcd(n - 1, TABLE_MODULUS[k])


def count_keys_for(k: int) -> tuple:
    """Rows tabulated for carrier size k, in canonical order."""
    rows = next(iter(PUBLISHED_COUNTS[k].values()))
    return tuple(key for key in COUNT_KEYS if key in rows)


@dataclass
class ClassInfo:
    hg: HGAlgebra
    group: NaryGroup
    label: str
    flags: dict
    size: int = 1  # number of swept candidates in the class


@dataclass
class ClassificationReport:
    k: int
    n: int
    l: int
    classes: list
    counts: dict
    candidates: int

    def render(self) -> str:
        lines = []
        for i, c in enumerate(self.classes):
            lines.append(
                f"class {i} group={c.label} phi={','.join(map(str, c.hg.phi.map))} b={c.hg.b} "
                f"commutative={int(c.flags['commutative'])} medial={int(c.flags['medial'])} "
                f"idempotent={int(c.flags['idempotent'])}"
            )
        keys = count_keys_for(self.k) if self.k in PUBLISHED_COUNTS else COUNT_KEYS
        lines.append("counts " + " ".join(f"{key}={self.counts[key]}" for key in keys))
        return "\n".join(lines) + "\n"


def hg_candidates(base, n: int) -> list:
    """Every ``(phi, b)`` over ``base`` satisfying the HG conditions for arity n,
    phi in lexicographic order and b ascending."""
    out = []
    for phi in automorphisms(base):
        for b in range(base.order):
            if phi.map[b] != b:
                continue
            try:
                out.append(certify_hg(base, phi, b, n))
            except Exception:  # InnerPowerViolated
                continue
    return out


def _flags(g: NaryGroup) -> dict:
    p = predicates(g)
    return {"commutative": p["commutative"], "medial": p["semiabelian"], "idempotent": p["idempotent"]}


def _key(label: str, g: NaryGroup, flags: dict) -> tuple:
    idem = sum(1 for x in range(g.order) if g(*([x] * g.arity)) == x)
    fixed = sum(1 for x, s in enumerate(g.skew) if x == s)
    return (label, flags["commutative"], flags["medial"], flags["idempotent"], idem, fixed)


def _tally(classes: list) -> dict:
    counts = dict.fromkeys(COUNT_KEYS, 0)
    for c in classes:
        f = c.flags
        counts["all"] += 1
        if f["commutative"]:
            counts["commutative"] += 1
            if f["idempotent"]:
                counts["commutative_idempotent"] += 1
        elif f["medial"]:
            key = "noncommutative_medial_idempotent" if f["idempotent"] else "noncommutative_medial_nonidempotent"
            counts[key] += 1
        else:
            counts["nonmedial"] += 1
    return counts


def enumerate_classes(k: int, n: int, threads: int = 1, groups: Optional[list] = None) -> ClassificationReport:
    """All n-ary groups on ``k`` elements up to isomorphism.

    ``groups`` restricts the sweep to the given base groups (default: the full
    catalog of order k). Output is independent of ``threads``.
    """
    if not 2 <= k <= 7:
        raise UnsupportedOrder(f"classification covers 2 <= k <= 7, not {k}")
    if n < 3:
        raise ValueError("arity must be at least 3")
    bases = catalog(k) if groups is None else groups
    hgs = [(b.label, hg) for b in bases for hg in hg_candidates(b, n)]

    def build(item):
        label, hg = item
        g = construct(hg)
        flags = _flags(g)
        return label, hg, g, flags

    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            built = list(pool.map(build, hgs))
    else:
        built = [build(item) for item in hgs]

    classes: list = []
    buckets: dict = {}
    for label, hg, g, flags in built:
        key = _key(label, g, flags)
        bucket = buckets.setdefault(key, [])
        for c in bucket:
            if iso_retract(g, c.group) is not None:
                c.size += 1
                break
        else:
            info = ClassInfo(hg, g, label, flags)
            bucket.append(info)
            classes.append(info)
    l = gcd(n - 1, TABLE_MODULUS[k])
    return ClassificationReport(k, n, l, classes, _tally(classes), len(built))


@dataclass
class TableDiff:
    k: int
    l: int
    mismatches: list = field(default_factory=list)  # (row, expected, computed)
    witnesses: dict = field(default_factory=dict)  # row -> class indices

    def __bool__(self):
        return bool(self.mismatches)

    def render(self) -> str:
        if not self.mismatches:
            return f"table k={self.k} l={self.l}: match\n"
        out = []
        for row, want, got in self.mismatches:
            out.append(f"mismatch k={self.k} l={self.l} row={row} expected={want} computed={got} "
                       f"classes={','.join(map(str, self.witnesses.get(row, [])))}")
        return "\n".join(out) + "\n"


def _row_members(report: ClassificationReport, row: str) -> list:
    out = []
    for i, c in enumerate(report.classes):
        if _tally([c])[row]:
            out.append(i)
    return out


def verify_against_table(report: ClassificationReport) -> TableDiff:
    """Compare computed counts with the published table; an empty diff is falsy."""
    rows = PUBLISHED_COUNTS.get(report.k, {}).get(report.l)
    if rows is None:
        raise RowNotTabulated(f"no published column for k={report.k}, l={report.l}")
    diff = TableDiff(report.k, report.l)
    for row, want in rows.items():
        got = report.counts[row]
        if got != want:
            diff.mismatches.append((row, want, got))
            diff.witnesses[row] = _row_members(report, row)
    return diff


def klein_classification(n: int) -> list:
    """Class representatives of n-ary groups derived from the Klein four-group."""
    return enumerate_classes(4, n, groups=[klein_group()]).classes


@dataclass(frozen=True)
class NormalForm:
    family: str  # "f", "g" or "gc"
    params: tuple  # (a,), (d,) or (d, c)

    def __str__(self):
        names = {"f": ("a",), "g": ("d",), "gc": ("d", "c")}[self.family]
        return f"{self.family} " + " ".join(f"{k}={v}" for k, v in zip(names, self.params))


def canonical_parameters(k: int, n: int) -> list:
    """All admissible canonical parameter sets over Z_k, in search order."""
    out = [NormalForm("f", (a,)) for a in range(k)]
    ds = [d for d in range(2, k) if pow(d, n - 1, k) == 1]
    out += [NormalForm("g", (d,)) for d in ds]
    out += [NormalForm("gc", (d, c)) for d in ds for c in range(2, k) if (d * c) % k == c]
    return out


def normal_form_op(k: int, n: int, form: NormalForm) -> NaryGroup:
    names = {"f": ("a",), "g": ("d",), "gc": ("d", "c")}[form.family]
    return construct(canonical_hg(k, n, form.family, **dict(zip(names, form.params))))


def cyclic_normal_form(g: NaryGroup) -> NormalForm:
    """First canonical form over ``Z_k`` isomorphic to ``g``."""
    k, n = g.order, g.arity
    if group_isomorphic(binary_retract(g, 0), cyclic_group(k)) is None:
        raise NotCyclicBase("the binary retract is not cyclic")
    for form in canonical_parameters(k, n):
        if iso_retract(g, normal_form_op(k, n, form)) is not None:
            return form
    raise AssertionError("no canonical form matched")  # excluded by the HG theorem
