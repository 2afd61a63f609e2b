"""
A worked deformation, start to finish
=====================================

Take C0 = (q - q^-1)^3 C - (q - q^-1)(q^-2 + q^2) and follow it through
the rewriting system, the alpha constants, the one finite-dimensional simple
module and the composition series of Z(q).
"""

from qsoa import (
    alpha,
    alpha_root_set,
    block_report,
    build_simple,
    composition_series,
    finite_dim_test,
    parse_center_poly,
    q,
    qpow,
    reduction_system,
    semisimplicity_check,
    verify_confluence,
    verify_module_relations,
)

p = parse_center_poly("(q - q^-1)^3*C - (q - q^-1)*(q^-2 + q^2)")
print("p(C) =", p)

###############################################################################
# The rewriting system is confluent for this p.

rep = verify_confluence(reduction_system(p))
print(f"{rep.paper_resolved}/16 listed ambiguities resolved, {len(rep.detected)} overlaps in all")

###############################################################################
# alpha_{q,m} for small m.  It vanishes at m = 2, 5 and 6.

for m in range(2, 9):
    print(m, alpha(p, q, m))

print("roots n of alpha_{q,n+1}:", sorted(alpha_root_set(p, q)))
print("roots at -q:", sorted(alpha_root_set(p, -q)))

###############################################################################
# Scan r = +-q^n for finite-dimensional simples.

for eps in (1, -1):
    for n in range(16):
        found = finite_dim_test(p, qpow(n) * eps)
        if found:
            print(f"V({'-' if eps < 0 else ''}q^{n}) is finite dimensional: first root {found[0]}, dim {found[1]}")

V = build_simple(p, q)
print("K =", [str(x) for x in V.k_eigenvalues()])
print("relations:", verify_module_relations(V, p).to_json())

###############################################################################
# Z(q) has four composition factors, and they form one block.

for f in composition_series(p, q).factors:
    print(f"V({f.weight})", "dim", f.dim)

block = block_report(p, q)
print("S =", sorted(map(str, block.S)))
print("T =", sorted(map(str, block.T)))

print(semisimplicity_check(p, 15).verdict)
