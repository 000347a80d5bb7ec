"""Partitions of 19 in the three equinumerous families.

For each m the Capparelli partitions (D), the congruence partitions (C)
and the companion family (A) have the same number of members at every
norm.  This script lists all three at n = 19 and then compares the counts
for every n up to 40.
"""

from qpartitions import partitions as pt

for m in (1, 2):
    for fam in (pt.C, pt.D, pt.A):
        pc = fam(m)
        found = pt.enumerate_partitions(pc, 19)
        print(f"{pc.family}_{m}(19) = {len(found)}: " + " ".join(map(str, found)))
    print()

for m in (1, 2):
    rows = [pt.counts_by_norm(f(m), 40) for f in (pt.A, pt.C, pt.D)]
    same = rows[0] == rows[1] == rows[2]
    print(f"m={m}: counts agree for n <= 40: {same}")
    print("  ", rows[0])
