"""An alternating double sum that collapses to a product.

The left side sums signed products of Gaussian binomials at base q^2;
the right side is (-q; q)_{N-i-j} times a q^2-trinomial.
"""

from qpartitions import capparelli as cap
from qpartitions.qpoly import to_text

print("N=3, i=1, j=1:", to_text(cap.boulet_rhs(3, 1, 1)))
cells = [(N, i, j) for N in range(9) for i in range(N + 1) for j in range(N + 1)]
bad = [c for c in cells if cap.boulet_lhs(*c) != cap.boulet_rhs(*c)]
print(f"{len(cells)} cells checked, {len(bad)} mismatches")
