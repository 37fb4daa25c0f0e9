"""Simple algebras on V_m from the exterior square of an SL(2,p) module.

V_2 gives back sl2; V_6 gives a 7-dimensional simple algebra that satisfies
the Malcev identity but not the Jacobi identity.
"""

from iacgroups import algebra as A
from iacgroups.constructions import cg_wedge_sym_decompose, gamma_algebra
from iacgroups.field import field_make

F13 = field_make(13)
ws = cg_wedge_sym_decompose(6, F13)
print("wedge^2 V_6 =", " + ".join(f"det^{x['det']} V_{x['k']}" for x in ws["wedge_multiplicities"]))

L2 = gamma_algebra(2, field_make(7))
print("\nm=2 over F7 isomorphic to sl2:", A.isomorphism_search(L2, A.sl2(field_make(7))) is not None)

L6, checks = gamma_algebra(6, F13, report=True)
print(f"m=6 over F13: dim {L6.dim}", checks)
print("identities:", A.identity_checks(L6))
