"""Class counts of n-ary groups on k points, one column per value of gcd(n-1, M_k).

Prints every tabulated column next to the stored reference counts and the
result of the table comparison.
"""
import sys

from narygroups.classify import PUBLISHED_COUNTS, enumerate_classes, table_column, verify_against_table


def first_arity(k, column):
    return next(n for n in range(3, 500) if table_column(k, n) == column)


def main(orders):
    for k in orders:
        for column in sorted(PUBLISHED_COUNTS[k], reverse=True):
            n = first_arity(k, column)
            report = enumerate_classes(k, n)
            diff = verify_against_table(report)
            counts = " ".join(f"{key}={v}" for key, v in report.counts.items())
            print(f"k={k} l={column:2d} n={n:2d} {counts}")
            if diff:
                sys.stdout.write("  " + diff.render().replace("\n", "\n  ").rstrip() + "\n")


if __name__ == "__main__":
    main([int(a) for a in sys.argv[1:]] or sorted(PUBLISHED_COUNTS))
