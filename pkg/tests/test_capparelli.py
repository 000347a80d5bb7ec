import pytest

from qpartitions import capparelli as cap
from qpartitions import partitions as pt
from qpartitions.qcomb import binom2, gauss_binomial, poch, q_trinomial
from qpartitions.qpoly import ONE, ZERO, NotDivisible, exact_div, from_text, mono, set_ab_one, shift, strip_ab

q = mono(eq=1)


def test_omega():
    assert cap.omega(1, 1, 0) == 2 and cap.omega(1, 0, 1) == 4
    assert cap.omega(2, 1, 0) == 5 and cap.omega(2, 0, 1) == 1
    for m in (1, 2):
        for i in range(21):
            for j in range(21):
                assert cap.omega(m, i, j) >= 0


def test_p_examples():
    for m in (1, 2):
        assert cap.p_closed(m, 0, 0, 0) == ONE
        assert cap.p_recursive(m, 0, 0, 0) == ONE
        assert cap.p_closed(m, 0, 1, 0) == ZERO
    assert cap.p_closed(1, 2, 0, 0) == ONE + q ** 3
    assert cap.p_closed(1, 2, 1, 1) == ZERO
    assert cap.p_closed(2, 1, 0, 1) == q
    assert cap.p_recursive(1, 1, 0, 0) == ONE
    assert cap.p_recursive(1, 1, 1, 0) == q ** 2
    assert cap.p_closed(1, 1, 1, 0) == q ** 2


def test_p_routes_agree():
    for m in (1, 2):
        for K in range(13):
            oracle = pt.oracle_by_counts(pt.P(m, K))
            for i in range(7):
                for j in range(7):
                    want = oracle.get((i, j), ZERO)
                    assert cap.p_closed(m, K, i, j) == want, (m, K, i, j)
                    assert cap.p_recursive(m, K, i, j) == want, (m, K, i, j)


def printed_odd_p(m, K, i, j):
    # odd-index product with the exponent 3(N+1+i+(-1)^m j)
    N = (K - 1) // 2
    tri = q_trinomial(N + 1, i, j, 6)
    body = shift(tri * poch(mono(eq=3, coeff=-1), 3, N + 1 - i - j), (0, 0, cap.omega(m, i, j))) if not tri.is_zero() else ZERO
    num = body * (ONE - mono(eq=3 * (N + 1 + i + (-1) ** m * j)))
    return exact_div(num, ONE - mono(eq=6 * (N + 1)))


def test_printed_odd_exponent_only_fails_for_m2():
    for K in (1, 3, 5):
        for i in range(3):
            for j in range(3):
                assert printed_odd_p(1, K, i, j) == cap.p_closed(1, K, i, j)
    # P(2, 1) with one part = 2 mod 3: the only candidate part is 1, so the class is empty
    assert cap.p_closed(2, 1, 1, 0) == ZERO
    assert printed_odd_p(2, 1, 1, 0) == q ** 5


def test_q_families_match_even_p():
    for m in (1, 2):
        for N in range(6):
            oracle = pt.oracle_by_counts(pt.Q(m, N))
            for (i, j), f in oracle.items():
                assert cap.p_closed(m, 2 * N, i, j) == f


def test_psi():
    for m in (1, 2):
        assert cap.psi(m, 0) == ONE
    assert cap.psi(2, 1) == from_text("1 + b*q")
    for m in (1, 2):
        for K in range(9):
            assert cap.psi(m, K) == pt.oracle_genfun(pt.P(m, K))


def test_psi_at_ab_one_counts_A_members():
    for m in (1, 2):
        f = set_ab_one(cap.psi(m, 6))
        assert [f.coeff((0, 0, n)) for n in range(30)] == pt.counts_by_norm(pt.P(m, 6), 29)


def test_g_initial_conditions():
    assert cap.g_recursive(1, -2) == ONE
    assert cap.g_recursive(2, -2) == ZERO
    for m in (1, 2):
        assert cap.g_recursive(m, -1) == ONE
        assert cap.g_recursive(m, 0) == ONE
    assert cap.g_recursive(1, 1) == ONE
    assert cap.g_recursive(2, 1) == from_text("1 + b*q")
    with pytest.raises(ValueError):
        cap.g_recursive(1, -3)


def test_g_routes_agree():
    for m in (1, 2):
        for K in range(19):
            rec = cap.g_recursive(m, K)
            assert rec == pt.oracle_genfun(pt.G(m, K)), (m, K)
            if K >= 1:
                assert cap.g_closed(m, K) == rec, (m, K)


def test_g_closed_small_cases():
    assert cap.g_closed_3Nm2(1, 1) == ONE
    assert cap.g_closed_3Nm2(2, 1) == from_text("1 + b*q")
    assert cap.g_closed_3Nm2(1, 0) == cap.g_recursive(1, -2)
    assert cap.g_closed_3Nm2(2, 0) == cap.g_recursive(2, -2)
    assert cap.g_closed_3Nm2(1, 3) == cap.g_recursive(1, 7)
    assert cap.g_closed_3N(1, 1) == cap.g_recursive(1, 3)
    assert cap.g_closed_3N(2, 1) == cap.g_recursive(2, 3)
    assert cap.g_closed_3Nm1(1, 1) == cap.g_recursive(1, 2)
    assert cap.g_closed_3Nm1(2, 2) == cap.g_recursive(2, 5)
    assert cap.s_poly(0) == ONE and cap.t_poly(0) == ONE


def test_g_3N_without_ab_counts_multiples_of_three():
    for m in (1, 2):
        for N in range(1, 6):
            want = ZERO
            for p in pt.members(pt.G(m, 3 * N)):
                if all(x % 3 == 0 for x in p):
                    want = want + mono(eq=p.norm)
            assert strip_ab(cap.g_closed_3N(m, N)) == want


def printed_m2_sum(N):
    out = ZERO
    for l in range(N // 2 - 1 + 1 if N >= 2 else 0):
        term = gauss_binomial(N - 1, 2 * l + 1, 3) * poch(mono(1, 0, 5, -1), 6, l) * poch(mono(0, 1, 1, -1), 6, l + 1)
        out = out + shift(term, (0, 0, 3 * binom2(N - 2 * l - 2)))
    return out


def test_printed_m2_sum_is_one_step_behind():
    for N in range(2, 8):
        assert printed_m2_sum(N) == cap.g_recursive(2, 3 * (N - 1) - 2)
        assert printed_m2_sum(N) != cap.g_recursive(2, 3 * N - 2)


def test_relation_as_written_is_not_satisfied():
    with pytest.raises(NotDivisible):
        cap.divisibility_check(1, 2)
    quotient = cap.divisibility_check(2, 2)
    assert quotient != cap.g_recursive(2, 3)
    with pytest.raises(ValueError):
        cap.divisibility_numerator(1, 1)


def test_combined_relation_holds():
    for m in (1, 2):
        for N in range(1, 8):
            lhs, rhs = cap.combined_relation_sides(m, N)
            assert lhs == rhs, (m, N)


def test_boulet_examples():
    assert cap.boulet_lhs(0, 0, 0) == ONE == cap.boulet_rhs(0, 0, 0)
    assert cap.boulet_rhs(1, 1, 1) == ZERO
    assert cap.boulet_lhs(1, 1, 1) == ZERO
    # N=2, i=1, j=0: (1+q) [2;1,0]_{q^2} = (1+q)(1+q^2)
    assert cap.boulet_rhs(2, 1, 0) == from_text("1 + q + q^2 + q^3")
    assert cap.boulet_lhs(2, 1, 0) == cap.boulet_rhs(2, 1, 0)


def test_boulet_identity():
    for N in range(7):
        for i in range(N + 1):
            for j in range(N + 1):
                assert cap.boulet_lhs(N, i, j) == cap.boulet_rhs(N, i, j), (N, i, j)


def test_generating_functions_nonnegative():
    for m in (1, 2):
        for K in range(1, 13):
            for f in (cap.psi(m, K), cap.g_recursive(m, K)):
                assert f.coeff((0, 0, 0)) == 1
                assert all(c > 0 for _, c in f)


def test_bad_m():
    with pytest.raises(ValueError):
        cap.p_closed(3, 1, 0, 0)
    with pytest.raises(ValueError):
        cap.g_closed_3N(1, 0)
