"""q-Pochhammer products, Gaussian binomials and truncated infinite products."""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .qpoly import ONE, ZERO, QPoly, mono, shift, truncate_q

__all__ = [
    "poch",
    "gauss_binomial",
    "q_trinomial",
    "q_factorial",
    "truncated_limit_product",
    "binom2",
]


def binom2(n: int) -> int:
    """C(n, 2) with the convention C(0, 2) = C(1, 2) = 0."""
    return comb(n, 2) if n >= 2 else 0


def poch(t: QPoly, d: int, L: int) -> QPoly:
    """``prod_{n=0}^{L-1} (1 - t q^{d n})``.

    >>> from .qpoly import to_text
    >>> to_text(poch(-mono(eq=3), 3, 2))
    '1 + q^3 + q^6 + q^9'
    """
    if L < 0:
        raise ValueError("poch needs L >= 0")
    out = ONE
    for n in range(L):
        out = out * (ONE - shift(t, (0, 0, d * n)))
    return out


def q_factorial(k: int, e: int = 1) -> QPoly:
    """``(q^e; q^e)_k``."""
    return poch(mono(eq=e), e, k)


@lru_cache(maxsize=None)
def gauss_binomial(k: int, n: int, e: int = 1) -> QPoly:
    """Gaussian binomial ``[k; n]`` in the variable ``q^e``; zero outside 0 <= n <= k."""
    if n < 0 or k < 0 or n > k:
        return ZERO
    if n == 0 or n == k:
        return ONE
    # [k;n] = [k-1;n-1] + q^{e n} [k-1;n]
    return gauss_binomial(k - 1, n - 1, e) + shift(gauss_binomial(k - 1, n, e), (0, 0, e * n))


def q_trinomial(k: int, n: int, r: int, e: int = 1) -> QPoly:
    """``[k; n, r] = [k; n] [k-n; r]``, zero unless k >= n + r and n, r >= 0."""
    if n < 0 or r < 0 or n + r > k:
        return ZERO
    return gauss_binomial(k, n, e) * gauss_binomial(k - n, r, e)


def truncated_limit_product(m: int, D: int) -> QPoly:
    """The a,b-refined limiting product, kept to q-degree <= D.

    For m = 1 the product is ``(-a q^2, -b q^4; q^6)_inf (-q^3; q^3)_inf``;
    for m = 2 the a- and b-bases are ``q^5`` and ``q``.
    """
    if m not in (1, 2):
        raise ValueError("m must be 1 or 2")
    if D < 0:
        raise ValueError("D must be nonnegative")
    a_base, b_base = (2, 4) if m == 1 else (5, 1)
    factors: list[QPoly] = []
    for start, step, ea, eb in ((a_base, 6, 1, 0), (b_base, 6, 0, 1), (3, 3, 0, 0)):
        e = start
        while e <= D:
            factors.append(ONE + mono(ea, eb, e))
            e += step
    out = ONE
    for f in factors:
        out = truncate_q(out * f, D)
    return out

