"""Three ways to get the bounded generating functions P_{m,K}(i, j; q).

The product formula, the index recurrences and direct enumeration should
always agree.  Here we print a few values and then count disagreements
over a small grid.
"""

from qpartitions import capparelli as cap
from qpartitions import partitions as pt
from qpartitions.qpoly import ZERO, to_text

print("P_{1,4}(1,0) =", to_text(cap.p_closed(1, 4, 1, 0)))
print("P_{2,5}(0,1) =", to_text(cap.p_closed(2, 5, 0, 1)))
print("Psi_{2,3}    =", to_text(cap.psi(2, 3)))

bad = 0
for m in (1, 2):
    for K in range(11):
        oracle = pt.oracle_by_counts(pt.P(m, K))
        for i in range(6):
            for j in range(6):
                want = oracle.get((i, j), ZERO)
                bad += cap.p_closed(m, K, i, j) != want or cap.p_recursive(m, K, i, j) != want
print("disagreements over m in {1,2}, K <= 10, i, j <= 5:", bad)
