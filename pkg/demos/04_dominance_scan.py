"""Scan the dominance of Psi over G.

For each N we compare Psi_{m,2N} with G_{m,3N} and Psi_{m,2N+1} with
G_{m,3N+3-m}.  The scan reports whether every coefficient of the
difference is nonnegative and which monomial leads the difference.
"""

from qpartitions import verify as v

for m in (1, 2):
    r = v.check_dominance(m, 6)
    print(f"m={m}: {r.status}")
    for e in r.leading_terms:
        mark = "" if e["leading_matches"] else "   <- expected " + e["conjectured"]
        print(f"  N={e['N']} {e['parity']:4}  Psi_{e['psi_index']} - G_{e['g_index']}"
              f"  dominates={e['dominates']}  lowest={e['leading']}{mark}")
