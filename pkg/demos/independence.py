"""Independence in a semiabelian n-ary group over Z5.

With phi = id every unary term is x -> c*x + k*b, so {a} is G-independent for
any a, while two distinct elements always satisfy a nontrivial linear relation.
With b = 0 the zero element is fixed by every unary term, so {0} cannot be
M-independent.
"""
import itertools

from narygroups.groups import cyclic_group
from narygroups.hosszu import certify_hg
from narygroups.terms import enumerate_unary_functions, independent


def show(alg, X):
    for family in ("M", "G"):
        v = independent(alg, X, family)
        line = f"  {family}-independent {set(X)}: {bool(v)}"
        if not v:
            line += f"  [{v.certificate}]"
        print(line)


def main():
    z5 = certify_hg(cyclic_group(5), list(range(5)), 0, 3)
    print("unary term functions on Z5:", len(enumerate_unary_functions(z5)))
    for X in ([1], [0], [1, 2]):
        show(z5, X)

    # phi = 2x needs arity 5 so that phi^4 = id; the unary terms are unchanged in number
    twisted = certify_hg(cyclic_group(5), [0, 2, 4, 1, 3], 0, 5)
    print("phi = 2x, unary term functions:", len(enumerate_unary_functions(twisted)))
    for X in itertools.combinations(range(5), 2):
        # every term sends 0 to 0, so a pair containing 0 carries no relation
        assert bool(independent(twisted, X, "G")) == (0 in X)
    print("  a pair is G-independent exactly when it contains 0")


if __name__ == "__main__":
    main()
