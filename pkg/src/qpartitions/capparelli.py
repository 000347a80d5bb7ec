"""Generating functions for the refined Capparelli partition families.

Closed forms and recurrences for

* ``P_{m,K}(i, j; q)``: bounded companion partitions with exactly ``i``
  parts = 2 (mod 3) and ``j`` parts = 1 (mod 3);
* ``Psi_{m,K}(a, b, q) = sum_{i,j} P_{m,K}(i, j; q) a^i b^j``;
* ``G_{m,K}(a, b, q)``: Capparelli partitions with largest part <= K;
* the Boulet-type double sum and its product side.

Every public builder returns a polynomial with nonnegative q-exponents.
"""

from __future__ import annotations

from functools import lru_cache

from .qcomb import binom2, gauss_binomial, poch, q_trinomial
from .qpoly import ONE, ZERO, QPoly, exact_div, mono, shift

__all__ = [
    "omega",
    "p_closed",
    "p_recursive",
    "psi",
    "g_recursive",
    "g_closed_3Nm2",
    "s_poly",
    "t_poly",
    "g_closed_3N",
    "g_closed_3Nm1",
    "g_closed",
    "divisibility_numerator",
    "divisibility_check",
    "combined_relation_sides",
    "boulet_lhs",
    "boulet_rhs",
]


def _check_m(m: int) -> None:
    if m not in (1, 2):
        raise ValueError("m must be 1 or 2")


def _public(p: QPoly) -> QPoly:
    low = p.min_q_exponent()
    if low is not None and low < 0:
        raise AssertionError(f"negative q-exponent {low} in a public result")
    return p


def omega(m: int, i: int, j: int) -> int:
    """``(3i + (-1)^m m) i + (3j + (-1)^(m+1) m) j``."""
    s = (-1) ** m
    return (3 * i + s * m) * i + (3 * j - s * m) * j


_MINUS_Q3 = mono(eq=3, coeff=-1)


def p_closed(m: int, K: int, i: int, j: int) -> QPoly:
    """``P_{m,K}(i, j; q)`` from the product formulas.

    Even ``K = 2N`` uses ``q^omega [N; i, j]_{q^6} (-q^3; q^3)_{N-i-j}``.  Odd
    ``K = 2N + 1`` multiplies the ``N + 1`` analogue by
    ``1 - q^{3(N+1 + (-1)^(m+1) (i-j))}`` and divides exactly by
    ``1 - q^{6(N+1)}``; a nonzero remainder raises
    :class:`~qpartitions.qpoly.NotDivisible`.

    The odd-index factor is ``1 - q^{3(N+1+i-j)}`` for m = 1 and
    ``1 - q^{3(N+1-i+j)}`` for m = 2.  Writing the m = 2 exponent as
    ``3(N+1+i+j)`` gives ``P_{2,1}(1, 0) = q^5`` for an empty class.
    """
    _check_m(m)
    if K < 0:
        raise ValueError("K must be nonnegative")
    if i < 0 or j < 0:
        return ZERO
    N, odd = divmod(K, 2)
    L = N + odd
    tri = q_trinomial(L, i, j, 6)
    if tri.is_zero():
        return ZERO
    body = shift(tri * poch(_MINUS_Q3, 3, L - i - j), (0, 0, omega(m, i, j)))
    if not odd:
        return _public(body)
    e = 3 * (N + 1 + (-1) ** (m + 1) * (i - j))
    num = body * (ONE - mono(eq=e))
    return _public(exact_div(num, ONE - mono(eq=6 * (N + 1))))


@lru_cache(maxsize=None)
def p_recursive(m: int, K: int, i: int, j: int) -> QPoly:
    """``P_{m,K}(i, j; q)`` from the four index recurrences and ``P_{m,0} = delta``."""
    _check_m(m)
    if i < 0 or j < 0:
        return ZERO
    if K == 0:
        return ONE if i == j == 0 else ZERO
    if K < 0:
        raise ValueError("K must be nonnegative")
    other = 3 - m
    if K % 2 == 1:
        N = (K - 1) // 2
        out = p_recursive(m, 2 * N, i, j)
        # the new largest part is 3N+2 (m=1, uses up an i) or 3N+1 (m=2, a j)
        if m == 1 and i > 0:
            out = out + shift(p_recursive(2, 2 * N, i - 1, j), (0, 0, 3 * N + 2))
        elif m == 2 and j > 0:
            out = out + shift(p_recursive(1, 2 * N, i, j - 1), (0, 0, 3 * N + 1))
        return out
    N = (K - 2) // 2
    return p_recursive(m, 2 * N + 1, i, j) + shift(
        p_recursive(other, 2 * N + 1, i, j), (0, 0, 3 * (N + 1))
    )


@lru_cache(maxsize=None)
def psi(m: int, K: int, i_max: int | None = None, j_max: int | None = None) -> QPoly:
    """``Psi_{m,K}(a, b, q)``; the (i, j) sum is finite, so the defaults are exact."""
    _check_m(m)
    L = (K + 1) // 2
    i_max = L if i_max is None else i_max
    j_max = L if j_max is None else j_max
    out = ZERO
    for i in range(min(i_max, L) + 1):
        for j in range(min(j_max, L - i) + 1):
            out = out + shift(p_closed(m, K, i, j), (i, j, 0))
    return out


@lru_cache(maxsize=None)
def g_recursive(m: int, K: int) -> QPoly:
    """``G_{m,K}(a, b, q)`` from the three residue recurrences, ``K >= -2``."""
    _check_m(m)
    if K < -2:
        raise ValueError("K must be >= -2")
    if K == -2:
        return ONE if m == 1 else ZERO
    if K in (-1, 0):
        return ONE
    if K == 1:
        return ONE + mono(0, 1, 1) if m == 2 else ONE
    N, r = divmod(K, 3)
    if r == 1:
        return (
            g_recursive(m, 3 * N)
            + shift(g_recursive(m, 3 * (N - 1)), (0, 1, 3 * N + 1))
            + shift(g_recursive(m, 3 * (N - 2) + 1), (1, 1, 6 * N))
        )
    if r == 0:
        return g_recursive(m, 3 * (N - 1) + 2) + shift(g_recursive(m, 3 * (N - 1)), (0, 0, 3 * N))
    return g_recursive(m, 3 * N + 1) + shift(g_recursive(m, 3 * (N - 1) + 1), (1, 0, 3 * N + 2))


def _ab_bases(m: int) -> tuple[QPoly, QPoly]:
    # -a q^2, -b q^4 for m = 1;  -a q^5, -b q for m = 2
    if m == 1:
        return mono(1, 0, 2, -1), mono(0, 1, 4, -1)
    return mono(1, 0, 5, -1), mono(0, 1, 1, -1)


def g_closed_3Nm2(m: int, N: int) -> QPoly:
    """``G_{m,3N-2}`` as a finite q-binomial sum.

    m = 1: ``sum_l (q^3)^C(N-2l,2) [N; 2l]_{q^3} (-aq^2, -bq^4; q^6)_l``.
    m = 2: ``sum_{l <= (N-1)/2} (q^3)^C(N-2l-1,2) [N; 2l+1]_{q^3}
    (-aq^5; q^6)_l (-bq; q^6)_{l+1}``.  ``N = 0`` gives ``G_{m,-2}``.
    """
    _check_m(m)
    if N < 0:
        raise ValueError("N must be nonnegative")
    ta, tb = _ab_bases(m)
    out = ZERO
    if m == 1:
        for l in range(N // 2 + 1):
            term = gauss_binomial(N, 2 * l, 3) * poch(ta, 6, l) * poch(tb, 6, l)
            out = out + shift(term, (0, 0, 3 * binom2(N - 2 * l)))
    else:
        for l in range((N - 1) // 2 + 1 if N >= 1 else 0):
            term = gauss_binomial(N, 2 * l + 1, 3) * poch(ta, 6, l) * poch(tb, 6, l + 1)
            out = out + shift(term, (0, 0, 3 * binom2(N - 2 * l - 1)))
    return _public(out)


def _st_poly(m: int, N: int) -> QPoly:
    ta, tb = _ab_bases(m)
    out = ZERO
    for l in range(N // 2 + 1):
        term = gauss_binomial(N + 1, 2 * l + 1, 3) * poch(ta, 6, l) * poch(tb, 6, l)
        out = out + shift(term, (0, 0, 3 * binom2(N - 2 * l)))
    return _public(out)


def s_poly(N: int) -> QPoly:
    """``S(a,b,q,N) = sum_l (q^3)^C(N-2l,2) [N+1; 2l+1]_{q^3} (-aq^2, -bq^4; q^6)_l``."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    return _st_poly(1, N)


def t_poly(N: int) -> QPoly:
    """``T(a,b,q,N)``: as :func:`s_poly` with bases ``-aq^5, -bq``."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    return _st_poly(2, N)


def g_closed_3N(m: int, N: int) -> QPoly:
    """``G_{1,3N} = S(N) + a q^{3N-1} S(N-1)``, ``G_{2,3N} = T(N) + b q^{3N-2} T(N-1)``."""
    _check_m(m)
    if N < 1:
        raise ValueError("N must be >= 1")
    if m == 1:
        return s_poly(N) + shift(s_poly(N - 1), (1, 0, 3 * N - 1))
    return t_poly(N) + shift(t_poly(N - 1), (0, 1, 3 * N - 2))


def g_closed_3Nm1(m: int, N: int) -> QPoly:
    """``G_{m,3N-1} = G_{m,3N-2} + a q^{3N-1} G_{m,3N-5}``, both from :func:`g_closed_3Nm2`."""
    _check_m(m)
    if N < 1:
        raise ValueError("N must be >= 1")
    return g_closed_3Nm2(m, N) + shift(g_closed_3Nm2(m, N - 1), (1, 0, 3 * N - 1))


def g_closed(m: int, K: int) -> QPoly:
    """Dispatch ``G_{m,K}``, ``K >= 1``, to the closed form for ``K mod 3``."""
    if K < 1:
        raise ValueError("K must be >= 1")
    r = K % 3
    if r == 1:
        return g_closed_3Nm2(m, (K + 2) // 3)
    if r == 0:
        return g_closed_3N(m, K // 3)
    return g_closed_3Nm1(m, (K + 1) // 3)


def divisibility_numerator(m: int, N: int) -> QPoly:
    """``G_{m,3N+1} + bq G_{m,3(N-1)+1} - ab q^{3N} (1 - q^{3N}) G_{m,3(N-2)+1}``."""
    _check_m(m)
    if N < 2:
        raise ValueError("N must be >= 2")
    g = lambda k: g_recursive(m, k)  # noqa: E731
    return (
        g(3 * N + 1)
        + shift(g(3 * (N - 1) + 1), (0, 1, 1))
        - shift((ONE - mono(eq=3 * N)) * g(3 * (N - 2) + 1), (1, 1, 3 * N))
    )


def divisibility_check(m: int, N: int) -> QPoly:
    """Quotient of :func:`divisibility_numerator` by ``1 + bq``.

    Raises :class:`~qpartitions.qpoly.NotDivisible` when the numerator is
    not a multiple of ``1 + bq``.  Callers compare the quotient with
    ``g_recursive(m, 3(N - 1))``.
    """
    return exact_div(divisibility_numerator(m, N), ONE + mono(0, 1, 1))


def combined_relation_sides(m: int, N: int) -> tuple[QPoly, QPoly]:
    """Both sides of ``q^{3N}(1+bq) G_{3(N-1)} = G_{3N+1} - G_{3(N-1)+1} - a q^{3N-1}(1+bq^{3N+1}) G_{3(N-2)+1}``."""
    _check_m(m)
    if N < 1:
        raise ValueError("N must be >= 1")
    g = lambda k: g_recursive(m, k)  # noqa: E731
    lhs = shift((ONE + mono(0, 1, 1)) * g(3 * (N - 1)), (0, 0, 3 * N))
    rhs = (
        g(3 * N + 1)
        - g(3 * (N - 1) + 1)
        - shift((ONE + mono(0, 1, 3 * N + 1)) * g(3 * (N - 2) + 1), (1, 0, 3 * N - 1))
    )
    return lhs, rhs


def boulet_lhs(N: int, i: int, j: int) -> QPoly:
    """Double sum over ``0 <= k <= l <= N`` with weight ``3k^2 + 2(N-i-j-l)k + l``, base ``q^2``."""
    out = ZERO
    for l in range(N + 1):
        outer = gauss_binomial(N, l, 2)
        for k in range(l + 1):
            f1 = gauss_binomial(N - l, i - k, 2)
            if f1.is_zero():
                continue
            f2 = gauss_binomial(N - l, j - k, 2)
            if f2.is_zero():
                continue
            w = 3 * k * k + 2 * (N - i - j - l) * k + l
            term = shift(outer * f1 * f2 * gauss_binomial(l, k, 2), (0, 0, w))
            out = out - term if k % 2 else out + term
    return _public(out)


def boulet_rhs(N: int, i: int, j: int) -> QPoly:
    """``(-q; q)_{N-i-j} [N; i, j]_{q^2}``; zero when ``i + j > N``."""
    if i < 0 or j < 0 or i + j > N:
        return ZERO
    return q_trinomial(N, i, j, 2) * poch(mono(eq=1, coeff=-1), 1, N - i - j)
