from itertools import combinations
from math import comb

import pytest

from qpartitions.qcomb import gauss_binomial, poch, q_factorial, q_trinomial, truncated_limit_product
from qpartitions.qpoly import ONE, ZERO, QPoly, exact_div, from_text, mono, truncate_q

q = mono(eq=1)


def subset_oracle(k: int, n: int, e: int) -> QPoly:
    """[k; n]_{q^e} as a sum over n-subsets of {1..k} of q^{e(sum - n(n+1)/2)}."""
    if not 0 <= n <= k:
        return ZERO
    terms: dict = {}
    for s in combinations(range(1, k + 1), n):
        d = e * (sum(s) - n * (n + 1) // 2)
        terms[(0, 0, d)] = terms.get((0, 0, d), 0) + 1
    return QPoly(terms)


def test_poch_examples():
    anything = from_text("3 + a*q")
    assert poch(anything, 5, 0) == ONE
    # (1+q^3)(1+q^6) expanded by hand
    assert poch(mono(eq=3, coeff=-1), 3, 2) == from_text("1 + q^3 + q^6 + q^9")
    assert poch(mono(0, 1, 4, -1), 6, 1) == from_text("1 + b*q^4")
    with pytest.raises(ValueError):
        poch(q, 1, -1)


def test_poch_composes_multi_argument_form():
    # (-aq^2, -bq^4; q^6)_2 = (1+aq^2)(1+aq^8)(1+bq^4)(1+bq^10)
    lhs = poch(mono(1, 0, 2, -1), 6, 2) * poch(mono(0, 1, 4, -1), 6, 2)
    rhs = ONE
    for f in ("1 + a*q^2", "1 + a*q^8", "1 + b*q^4", "1 + b*q^10"):
        rhs = rhs * from_text(f)
    assert lhs == rhs


def test_gauss_binomial_examples():
    for k in range(6):
        assert gauss_binomial(k, 0, 4) == ONE
    assert gauss_binomial(2, 3, 1) == ZERO
    assert gauss_binomial(3, -1, 1) == ZERO
    assert gauss_binomial(4, 2, 1) == from_text("1 + q + 2*q^2 + q^3 + q^4")
    assert gauss_binomial(4, 2, 1) == subset_oracle(4, 2, 1)


@pytest.mark.parametrize("e", [1, 2, 3, 6])
def test_gauss_binomial_against_subset_oracle(e):
    for k in range(9):
        for n in range(-1, k + 2):
            assert gauss_binomial(k, n, e) == subset_oracle(k, n, e)


def test_gauss_binomial_recurrences_and_symmetry():
    for e in (1, 3):
        for k in range(1, 13):
            for n in range(0, k + 1):
                g = gauss_binomial(k, n, e)
                assert g == gauss_binomial(k - 1, n, e) + mono(eq=e * (k - n)) * gauss_binomial(k - 1, n - 1, e)
                assert g == gauss_binomial(k - 1, n - 1, e) + mono(eq=e * n) * gauss_binomial(k - 1, n, e)
                assert g == gauss_binomial(k, k - n, e)


def test_gauss_binomial_at_q_one():
    for k in range(13):
        for n in range(k + 1):
            assert sum(c for _, c in gauss_binomial(k, n, 2)) == comb(k, n)


def test_gauss_binomial_factorial_route():
    for e in (1, 6):
        for k in range(11):
            for n in range(k + 1):
                den = q_factorial(n, e) * q_factorial(k - n, e)
                assert exact_div(q_factorial(k, e), den) == gauss_binomial(k, n, e)


def test_q_trinomial():
    assert q_trinomial(5, 0, 0, 6) == ONE
    assert q_trinomial(1, 1, 1, 6) == ZERO
    assert q_trinomial(2, 1, 1, 1) == ONE + q
    assert q_trinomial(3, -1, 0, 1) == ZERO
    for k in range(11):
        for n in range(k + 1):
            for r in range(k - n + 1):
                den = q_factorial(n) * q_factorial(r) * q_factorial(k - n - r)
                t = q_trinomial(k, n, r, 1)
                assert exact_div(q_factorial(k), den) == t
                assert t == q_trinomial(k, r, n, 1)


def test_truncated_limit_product_examples():
    assert truncated_limit_product(1, 0) == ONE
    assert truncated_limit_product(2, 0) == ONE
    assert truncated_limit_product(1, 3) == from_text("1 + a*q^2 + q^3")
    assert truncated_limit_product(2, 1) == from_text("1 + b*q")
    with pytest.raises(ValueError):
        truncated_limit_product(3, 4)


@pytest.mark.parametrize("m", [1, 2])
def test_truncated_limit_product_is_consistent(m):
    big = truncated_limit_product(m, 30)
    for d in range(30):
        assert truncate_q(big, d) == truncated_limit_product(m, d)


def test_truncated_limit_product_direct_expansion():
    # m=2 up to q^7: factors 1+bq, 1+bq^7, 1+aq^5, 1+q^3, 1+q^6
    want = ONE
    for f in ("1 + b*q", "1 + b*q^7", "1 + a*q^5", "1 + q^3", "1 + q^6"):
        want = want * from_text(f)
    assert truncated_limit_product(2, 7) == truncate_q(want, 7)
