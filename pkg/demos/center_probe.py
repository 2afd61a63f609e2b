"""
Probing the center
==================

Solve for the combinations of weight-zero PBW monomials that commute with
E, F, K, X and Y.  In the (2,2,2,2,2) box a second element shows up besides
the scalars; here it is checked against a Verma module, where a central
element has to act by a scalar.
"""

from qsoa import (
    P_EX,
    CentralizerQuery,
    Scalar,
    VermaElement,
    act_element,
    centralizer_basis,
)

for bounds in [(0, 0, 3, 0, 0), (1, 1, 1, 1, 1), (2, 2, 2, 2, 2)]:
    res = centralizer_basis(CentralizerQuery(P_EX, bounds))
    print(bounds, "dimension", res.dimension, f"({res.candidates} candidates)")

z = res.basis[-1]
print("z =", z)

###############################################################################
# z on a few vectors of Z(2): every image is the same multiple of the input.

r = Scalar(2)
for i, j in [(0, 0), (1, 0), (0, 1), (1, 2)]:
    v = VermaElement.basis_vector(i, j, r)
    print(f"z F^{i} Y^{j} v =", act_element(z, v, P_EX))
