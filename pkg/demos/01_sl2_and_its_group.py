"""sl2 over F_3 and the group of order 729 built from it.

Walks through the correspondence in both directions: build the group from the
structure constants, read the bracket back off commutators and p-th roots,
then look at how automorphisms and subspaces line up on the two sides.
"""

from iacgroups import algebra as A
from iacgroups.duality import G_of_L, L_of_G, correspondence_audit, lift_automorphism
from iacgroups.field import field_make
from iacgroups.pcgroup import group_invariants

F = field_make(3)
L = A.sl2(F)
print("sl2(F3) table, one row per pair (i, j), i < j:")
print(L.table)

G = G_of_L(L)
inv = group_invariants(G)
print(f"\n|G| = {inv['order']}, exponent {inv['exponent']}, |Z(G)| = {inv['center_order']}")

back = L_of_G(G)
print("bracket recovered from the group equals the original:", (back.table == L.table).all())

# each algebra automorphism lifts to a group automorphism
auts = A.automorphisms(L)
lifted = sum(lift_automorphism(L, G, g)[1] for g in auts)
print(f"\n{len(auts)} algebra automorphisms, {lifted} of them lift")

rep = correspondence_audit(L)
print(f"audited {rep['proper_nonzero']} proper subspaces; subalgebra <-> powerful and"
      f" ideal <-> powerfully embedded agree: {rep['agree']}")
