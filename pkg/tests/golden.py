"""Frozen expected values for the n <= 4 series and the n <= 3 tables."""

from coinv.qpoly import QuvPolynomial


def build_poly(uv_blocks):
    """Build a polynomial from {(u_exp, v_exp): [q-coefficients ascending]}."""
    terms = {}
    for (b, c), coeffs in uv_blocks.items():
        for a, coeff in enumerate(coeffs):
            if coeff:
                terms[(a, b, c)] = coeff
    return QuvPolynomial(terms)


HILBERT = {
    1: build_poly({(0, 0): [1]}),
    2: build_poly({(0, 0): [1, 1], (1, 0): [1], (0, 1): [1]}),
    3: build_poly({
        (0, 0): [1, 2, 2, 1],
        (1, 0): [2, 3, 1],
        (0, 1): [2, 3, 1],
        (2, 0): [1],
        (1, 1): [3, 1],
        (0, 2): [1],
    }),
    4: build_poly({
        (0, 0): [1, 3, 5, 6, 5, 3, 1],
        (1, 0): [3, 8, 11, 9, 4, 1],
        (0, 1): [3, 8, 11, 9, 4, 1],
        (2, 0): [3, 6, 4, 1],
        (1, 1): [8, 17, 13, 5, 1],
        (0, 2): [3, 6, 4, 1],
        (2, 1): [6, 4, 1],
        (1, 2): [6, 4, 1],
        (3, 0): [1],
        (0, 3): [1],
    }),
}

FROBENIUS = {
    1: {(1,): build_poly({(0, 0): [1]})},
    2: {
        (1, 1): build_poly({(0, 0): [0, 1], (1, 0): [1], (0, 1): [1]}),
        (2,): build_poly({(0, 0): [1]}),
    },
    3: {
        (1, 1, 1): build_poly({
            (0, 0): [0, 0, 0, 1],
            (1, 0): [0, 1, 1],
            (0, 1): [0, 1, 1],
            (2, 0): [1],
            (1, 1): [1, 1],
            (0, 2): [1],
        }),
        (2, 1): build_poly({
            (0, 0): [0, 1, 1],
            (1, 0): [1, 1],
            (0, 1): [1, 1],
            (1, 1): [1],
        }),
        (3,): build_poly({(0, 0): [1]}),
    },
    4: {
        (1, 1, 1, 1): build_poly({
            (0, 0): [0, 0, 0, 0, 0, 0, 1],
            (1, 0): [0, 0, 0, 1, 1, 1],
            (0, 1): [0, 0, 0, 1, 1, 1],
            (2, 0): [0, 1, 1, 1],
            (1, 1): [0, 1, 2, 2, 1],
            (0, 2): [0, 1, 1, 1],
            (2, 1): [1, 1, 1],
            (1, 2): [1, 1, 1],
            (3, 0): [1],
            (0, 3): [1],
        }),
        (2, 1, 1): build_poly({
            (0, 0): [0, 0, 0, 1, 1, 1],
            (1, 0): [0, 1, 2, 2, 1],
            (0, 1): [0, 1, 2, 2, 1],
            (2, 0): [1, 1, 1],
            (1, 1): [1, 3, 3, 1],
            (0, 2): [1, 1, 1],
            (2, 1): [1, 1],
            (1, 2): [1, 1],
        }),
        (2, 2): build_poly({
            (0, 0): [0, 0, 1, 0, 1],
            (1, 0): [0, 1, 1, 1],
            (0, 1): [0, 1, 1, 1],
            (1, 1): [1, 2, 1],
            (2, 0): [0, 1],
            (0, 2): [0, 1],
            (2, 1): [1],
            (1, 2): [1],
        }),
        (3, 1): build_poly({
            (0, 0): [0, 1, 1, 1],
            (1, 0): [1, 1, 1],
            (0, 1): [1, 1, 1],
            (1, 1): [1, 1],
        }),
        (4,): build_poly({(0, 0): [1]}),
    },
}

# Conversion tables for n = 1, 2, 3: (sigma, basis element, k, l, sminv, split),
# grouped by bar pattern and ordered by the underlying permutation.
BIJECTION_TABLES = {
    1: [
        ("1", "1", 0, 0, 0, "{}"),
    ],
    2: [
        ("1 2", "th2", 1, 0, 0, "{1}"),
        ("2 1", "xi2", 0, 1, 0, "{1}"),
        ("1|2", "1", 0, 0, 0, "{}"),
        ("2|1", "x2", 0, 0, 1, "{1}"),
    ],
    3: [
        ("1 2 3", "th2*th3", 2, 0, 0, "{1,2}"),
        ("1 3 2", "th3*xi3", 1, 1, 0, "{2}"),
        ("2 1 3", "xi2*th3", 1, 1, 0, "{1,2}"),
        ("2 3 1", "x2*th3*xi3", 1, 1, 1, "{1,2}"),
        ("3 1 2", "th2*xi3", 1, 1, 0, "{1}"),
        ("3 2 1", "xi2*xi3", 0, 2, 0, "{1,2}"),
        ("1|2 3", "th3", 1, 0, 0, "{2}"),
        ("1|3 2", "xi3", 0, 1, 0, "{2}"),
        ("2|1 3", "x2*th3", 1, 0, 1, "{1,2}"),
        ("2|3 1", "x2*xi3", 0, 1, 1, "{1}"),
        ("3|1 2", "x3*th2", 1, 0, 1, "{1}"),
        ("3|2 1", "x3*xi2", 0, 1, 1, "{1,2}"),
        ("1 2|3", "th2", 1, 0, 0, "{1}"),
        ("1 3|2", "x3*th3", 1, 0, 1, "{2}"),
        ("2 1|3", "xi2", 0, 1, 0, "{1}"),
        ("2 3|1", "x2*x3*th3", 1, 0, 2, "{1,2}"),
        ("3 1|2", "x3*xi3", 0, 1, 1, "{2}"),
        ("3 2|1", "x2*x3*xi3", 0, 1, 2, "{1,2}"),
        ("1|2|3", "1", 0, 0, 0, "{}"),
        ("1|3|2", "x3", 0, 0, 1, "{2}"),
        ("2|1|3", "x2", 0, 0, 1, "{1}"),
        ("2|3|1", "x2*x3", 0, 0, 2, "{1}"),
        ("3|1|2", "x3^2", 0, 0, 2, "{2}"),
        ("3|2|1", "x2*x3^2", 0, 0, 3, "{1,2}"),
    ],
}
