"""Bounded series converge to the infinite product.

Up to q^{3N}, Psi_{m,2N} and G_{m,3N} already agree with the product
(-aq^2, -bq^4; q^6)(-q^3; q^3) for m = 1 and its m = 2 analogue.
"""

from qpartitions import capparelli as cap
from qpartitions.qcomb import truncated_limit_product
from qpartitions.qpoly import to_text, truncate_q

for m in (1, 2):
    N = 3
    w = 3 * N
    prod = truncated_limit_product(m, w)
    print(f"m={m}, through q^{w}: {to_text(prod)}")
    print("  Psi agrees:", truncate_q(cap.psi(m, 2 * N), w) == prod,
          " G agrees:", truncate_q(cap.g_recursive(m, 3 * N), w) == prod)
