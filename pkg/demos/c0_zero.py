"""
When C0 = 0
===========

With C0 = 0 the relation qYX - XY = C0 lets X and Y pass the highest weight
vector without leaving anything behind.  Every Y^n v_r is then maximal, and
complete reducibility fails already in dimension 3.
"""

from qsoa import P_T, Scalar, c0_zero_counterexample, c0_zero_verma_report, q
from qsoa.linalg import matrix_strings

module, rep = c0_zero_counterexample()
for g in ("E", "F", "K", "X", "Y"):
    print(g, matrix_strings(module[g]))

print("relations pass:", rep["relations"].all_passed)
print("submodules:", [sorted(s, reverse=True) for s in rep["lattice"]])
print(rep["verdict"])

###############################################################################
# Verma modules for C0 = 0, and p(t) = t for contrast.

for r in (Scalar(2), q**3):
    print(r, c0_zero_verma_report(r, 6)["all_passed"])

print("p = t:", c0_zero_verma_report(Scalar(2), 3, p=P_T)["y_powers_maximal"])
