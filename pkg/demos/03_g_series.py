"""Capparelli partitions with a bounded largest part.

G_{m,K}(a, b, q) is built three ways: from the residue recurrences, from
the finite q-binomial sums, and by enumeration.  The last part of the
script shows the three-term relation between consecutive G's, which is
how the quotient by 1 + bq should be read.
"""

from qpartitions import capparelli as cap
from qpartitions import partitions as pt
from qpartitions.qpoly import NotDivisible, to_text

for K in range(1, 5):
    for m in (1, 2):
        print(f"G_{{{m},{K}}} = {to_text(cap.g_recursive(m, K))}")

agree = all(cap.g_recursive(m, K) == cap.g_closed(m, K) == pt.oracle_genfun(pt.G(m, K))
            for m in (1, 2) for K in range(1, 19))
print("recurrence = closed form = enumeration for K <= 18:", agree)

for m in (1, 2):
    try:
        quo = cap.divisibility_check(m, 2)
        print(f"m={m}: quotient equals G_{{{m},3}}: {quo == cap.g_recursive(m, 3)}")
    except NotDivisible as e:
        print(f"m={m}: numerator is not a multiple of 1+bq ({e})")
    lhs, rhs = cap.combined_relation_sides(m, 2)
    print(f"m={m}: q^6 (1+bq) G_3 = G_7 - G_4 - a q^5 (1 + b q^7) G_1: {lhs == rhs}")
