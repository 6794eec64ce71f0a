from math import comb, factorial

import pytest

from coinv import verify
from coinv.basis import (
    BasisElement,
    alpha_sequence,
    ascent_positions,
    ascent_set,
    beta_sequence,
    count_basis,
    count_by_height,
    count_by_height_recursion,
    count_type_b,
    count_type_b_refined,
    enumerate_basis,
    hilbert_11_formula,
    hilbert_series,
    stair_q,
    stair_q_from_sets,
)
from coinv.motzkin import parse_path
from coinv.qpoly import ONE, QuvPolynomial, q_integer

from golden import HILBERT, build_poly


def test_alpha_sequence():
    assert alpha_sequence((), (), 3) == (0, 1, 2)
    assert alpha_sequence({3}, {3}, 3) == (0, 1, 0)
    assert alpha_sequence({2}, (), 3) == (0, 0, 1)
    with pytest.raises(ValueError):
        alpha_sequence({2, 3}, {2, 3}, 3)  # a down-step right after the first up
    with pytest.raises(ValueError):
        alpha_sequence({1}, (), 3)


def test_beta_sequence():
    assert beta_sequence({3, 4}, {3, 6}, 6) == (1, 3, 3, 2, 3, 4)
    assert beta_sequence((), (), 2) == (1, 3)
    with pytest.raises(ValueError):
        beta_sequence({1}, {1}, 1)  # the length-1 down-step path


def test_stair_q():
    assert stair_q(parse_path("U U U", "a")) == q_integer(1) * q_integer(2) * q_integer(3)
    assert stair_q(parse_path("U T T", "a")) == ONE
    assert stair_q(parse_path("U", "b")) == q_integer(2)
    assert stair_q_from_sets({2, 3}, (), 3, "a") == ONE
    assert stair_q_from_sets((), (), 1, "b") == q_integer(2)
    for path in (parse_path("U U D", "a"), parse_path("T U D", "b")):
        T, S = path.weight_sets()
        assert stair_q_from_sets(T, S, path.n, path.variant) == stair_q(path)


def test_enumerate_basis_small():
    names = [b.monomial_str() for b in enumerate_basis(2, "a12")]
    assert sorted(names) == ["1", "th2", "x2", "xi2"]
    assert len(enumerate_basis(3, "a12")) == 24
    names_b1 = [b.monomial_str() for b in enumerate_basis(1, "b12")]
    assert sorted(names_b1) == ["1", "th1", "x1", "xi1"]


def test_enumerate_basis_canonical_order():
    elements = enumerate_basis(3, "a12")
    assert len(set(elements)) == len(elements)
    # within one path the alpha vectors appear in lexicographic order
    by_path = {}
    for b in elements:
        by_path.setdefault((b.theta, b.xi), []).append(b.alpha)
    for alphas in by_path.values():
        assert alphas == sorted(alphas)


def test_cardinalities():
    for n in range(1, 7):
        assert count_basis(n, "a12") == (1 << (n - 1)) * factorial(n)
    for n in range(1, 5):
        assert count_basis(n, "b12") == 4**n * factorial(n)
    # streaming count agrees with materialized enumeration
    assert count_basis(5, "a12") == len(enumerate_basis(5, "a12"))


def test_variant_specializations():
    assert verify.check_specializations(5) is None


def test_hilbert_golden():
    for n, expected in HILBERT.items():
        assert hilbert_series(n, "a12") == expected


def test_hilbert_dimension_specialization():
    for n in range(1, 7):
        assert hilbert_series(n, "a12").evaluate() == (1 << (n - 1)) * factorial(n)
    for n in range(1, 5):
        assert hilbert_series(n, "b12").evaluate() == 4**n * factorial(n)
    # q = 0 keeps one element per path: the a02 weight generating function
    for n in range(1, 6):
        assert hilbert_series(n, "a12").substitute(q=0) == hilbert_series(n, "a02")
    for n in range(1, 6):
        assert hilbert_series(n, "a02").evaluate() == comb(2 * n - 1, n)


def test_hilbert_11_formula():
    assert hilbert_11_formula(2, "a") == build_poly({(0, 0): [1, 1], (1, 0): [1]})
    assert hilbert_11_formula(1, "b") == build_poly({(0, 0): [1, 1], (1, 0): [1]})
    for n in range(1, 7):
        assert hilbert_series(n, "a12").substitute(v=0) == hilbert_11_formula(n, "a")
    for n in range(1, 5):
        assert hilbert_series(n, "b12").substitute(v=0) == hilbert_11_formula(n, "b")


def test_ascent_set():
    # x_2 theta_3 at n=3
    b = BasisElement((0, 1, 0), (0, 0, 1), (0, 0, 0), "a12")
    assert ascent_positions(b.alpha, b.theta, b.xi) == (1, 2)
    assert ascent_set(b).elements == (1, 2)
    # the unit at n=3
    assert ascent_positions((0, 0, 0), (0, 0, 0), (0, 0, 0)) == ()
    # x_3 xi_3
    assert ascent_positions((0, 0, 1), (0, 0, 0), (0, 0, 1)) == (2,)


def test_count_by_height():
    assert count_by_height(3, 1) == 12
    assert count_by_height(3, -1) == 0
    assert sum(count_by_height(4, r) for r in range(0, 5)) == 8 * factorial(4)
    for n in range(1, 8):
        for r in range(0, n + 1):
            assert count_by_height_recursion(n, r) == count_by_height(n, r)
    assert verify.check_count_by_height(6) is None


def test_count_type_b():
    assert count_type_b(0) == 1
    assert count_type_b(1) == 4
    assert count_type_b_refined(1, 0, "E") == 2
    assert all(count_type_b_refined(1, r, "D") == 0 for r in range(0, 4))
    for n in range(1, 6):
        assert count_type_b(n) == 4**n * factorial(n)
        # closed forms for the refined counts
        for r in range(0, n + 1):
            assert count_type_b_refined(n, 2 * r, "E") == factorial(n - 1) * 2**n * comb(n - 1, r) * (2 * r + 1)
            assert count_type_b_refined(n, 2 * r + 1, "U") == factorial(n - 1) * 2**n * comb(n - 1, r) * (r + 1)
            assert count_type_b_refined(n, 2 * r + 1, "D") == factorial(n - 1) * 2**n * comb(n - 1, r) * (n - r - 1)
            assert count_type_b_refined(n, 2 * r + 1, "E") == 0
            assert count_type_b_refined(n, 2 * r, "U") == 0
            assert count_type_b_refined(n, 2 * r, "D") == 0
    assert verify.check_count_type_b_refined(4) is None


def test_monomial_str_and_json():
    b = BasisElement((0, 1, 2), (0, 0, 1), (0, 0, 1), "a12")
    assert b.monomial_str() == "x2*x3^2*th3*xi3"
    assert b.to_json() == {"alpha": [0, 1, 2], "theta": [0, 0, 1], "xi": [0, 0, 1]}
    assert BasisElement((0, 0), (0, 0), (0, 0), "a12").monomial_str() == "1"


def test_path_reconstruction():
    for b in enumerate_basis(3, "a12"):
        path = b.path()
        T, S = path.weight_sets()
        assert T == b.theta_set and S == b.xi_set
