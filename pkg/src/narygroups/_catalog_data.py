"""Multiplication tables of every group of order 1..8, one per isomorphism class.

Element 0 is the identity in every table. Generated once and checked by the test
suite against an exhaustive search; do not edit by hand.
"""

CATALOG_DATA = {
    1: [
        ('Z1', [
            [0],
        ]),
    ],
    2: [
        ('Z2', [
            [0, 1],
            [1, 0],
        ]),
    ],
    3: [
        ('Z3', [
            [0, 1, 2],
            [1, 2, 0],
            [2, 0, 1],
        ]),
    ],
    4: [
        ('Z4', [
            [0, 1, 2, 3],
            [1, 2, 3, 0],
            [2, 3, 0, 1],
            [3, 0, 1, 2],
        ]),
        ('V4', [
            [0, 1, 2, 3],
            [1, 0, 3, 2],
            [2, 3, 0, 1],
            [3, 2, 1, 0],
        ]),
    ],
    5: [
        ('Z5', [
            [0, 1, 2, 3, 4],
            [1, 2, 3, 4, 0],
            [2, 3, 4, 0, 1],
            [3, 4, 0, 1, 2],
            [4, 0, 1, 2, 3],
        ]),
    ],
    6: [
        ('Z6', [
            [0, 1, 2, 3, 4, 5],
            [1, 2, 3, 4, 5, 0],
            [2, 3, 4, 5, 0, 1],
            [3, 4, 5, 0, 1, 2],
            [4, 5, 0, 1, 2, 3],
            [5, 0, 1, 2, 3, 4],
        ]),
        ('S3', [
            [0, 1, 2, 3, 4, 5],
            [1, 0, 4, 5, 2, 3],
            [2, 3, 0, 1, 5, 4],
            [3, 2, 5, 4, 0, 1],
            [4, 5, 1, 0, 3, 2],
            [5, 4, 3, 2, 1, 0],
        ]),
    ],
    7: [
        ('Z7', [
            [0, 1, 2, 3, 4, 5, 6],
            [1, 2, 3, 4, 5, 6, 0],
            [2, 3, 4, 5, 6, 0, 1],
            [3, 4, 5, 6, 0, 1, 2],
            [4, 5, 6, 0, 1, 2, 3],
            [5, 6, 0, 1, 2, 3, 4],
            [6, 0, 1, 2, 3, 4, 5],
        ]),
    ],
    8: [
        ('Z8', [
            [0, 1, 2, 3, 4, 5, 6, 7],
            [1, 2, 3, 4, 5, 6, 7, 0],
            [2, 3, 4, 5, 6, 7, 0, 1],
            [3, 4, 5, 6, 7, 0, 1, 2],
            [4, 5, 6, 7, 0, 1, 2, 3],
            [5, 6, 7, 0, 1, 2, 3, 4],
            [6, 7, 0, 1, 2, 3, 4, 5],
            [7, 0, 1, 2, 3, 4, 5, 6],
        ]),
        ('Z4xZ2', [
            [0, 1, 2, 3, 4, 5, 6, 7],
            [1, 0, 3, 2, 5, 4, 7, 6],
            [2, 3, 4, 5, 6, 7, 0, 1],
            [3, 2, 5, 4, 7, 6, 1, 0],
            [4, 5, 6, 7, 0, 1, 2, 3],
            [5, 4, 7, 6, 1, 0, 3, 2],
            [6, 7, 0, 1, 2, 3, 4, 5],
            [7, 6, 1, 0, 3, 2, 5, 4],
        ]),
        ('Z2xZ2xZ2', [
            [0, 1, 2, 3, 4, 5, 6, 7],
            [1, 0, 3, 2, 5, 4, 7, 6],
            [2, 3, 0, 1, 6, 7, 4, 5],
            [3, 2, 1, 0, 7, 6, 5, 4],
            [4, 5, 6, 7, 0, 1, 2, 3],
            [5, 4, 7, 6, 1, 0, 3, 2],
            [6, 7, 4, 5, 2, 3, 0, 1],
            [7, 6, 5, 4, 3, 2, 1, 0],
        ]),
        ('D4', [
            [0, 1, 2, 3, 4, 5, 6, 7],
            [1, 2, 3, 0, 5, 6, 7, 4],
            [2, 3, 0, 1, 6, 7, 4, 5],
            [3, 0, 1, 2, 7, 4, 5, 6],
            [4, 7, 6, 5, 0, 3, 2, 1],
            [5, 4, 7, 6, 1, 0, 3, 2],
            [6, 5, 4, 7, 2, 1, 0, 3],
            [7, 6, 5, 4, 3, 2, 1, 0],
        ]),
        ('Q8', [
            [0, 1, 2, 3, 4, 5, 6, 7],
            [1, 4, 3, 6, 5, 0, 7, 2],
            [2, 7, 4, 1, 6, 3, 0, 5],
            [3, 2, 5, 4, 7, 6, 1, 0],
            [4, 5, 6, 7, 0, 1, 2, 3],
            [5, 0, 7, 2, 1, 4, 3, 6],
            [6, 3, 0, 5, 2, 7, 4, 1],
            [7, 6, 1, 0, 3, 2, 5, 4],
        ]),
    ],
}
