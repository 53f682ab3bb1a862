"""Two 4-ary groups on Z3 that differ only in the constant b.

f_a(x1, x2, x3, x4) = x1 + x2 + x3 + x4 + a (mod 3). For a = 1 and a = 2 the
operations are isomorphic via x -> 2x. a = 0 is the derived group; it is
idempotent, so it is not isomorphic to either of the others.
"""
from narygroups.hosszu import canonical_ops, decompose, format_hg
from narygroups.iso import iso_bruteforce, iso_retract
from narygroups.polyadic import predicates


def main():
    ops = {a: canonical_ops(3, 4, "f", a=a) for a in range(3)}
    for a, g in ops.items():
        print(f"a={a} skew={list(g.skew)} predicates={predicates(g)}")

    w = iso_retract(ops[1], ops[2])
    print("f1 -> f2:", w.map, "brute force:", iso_bruteforce(ops[1], ops[2]))
    print("f0 -> f1:", iso_retract(ops[0], ops[1]))

    # the HG data read back at anchor 0 uses a shifted group law on Z3
    print(format_hg(decompose(ops[1], 0)))


if __name__ == "__main__":
    main()
