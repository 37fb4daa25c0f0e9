"""Four-dimensional simple IAC algebras over small fields.

For each q the census builds every exterior-square quotient structure on a
small irreducible module, merges them up to isomorphism and reports the
automorphism group order of each class.
"""

import time

from iacgroups import algebra as A
from iacgroups.constructions import agl5_algebra, dim4_census
from iacgroups.field import field_make

for q in (3, 7, 9, 11, 13):
    t = time.perf_counter()
    res = dim4_census(q)
    print(f"q={q:2d}  classes={res['class_count']}  |Aut|={res['aut_orders']}"
          f"  candidates={res['candidates']}  ({time.perf_counter() - t:.1f}s)")

# the class with 20 automorphisms, and its element orders
F = field_make(7)
auts = A.automorphisms(agl5_algebra(F))
print("\nAGL(1,5) class over F7, element orders:", A.order_profile(F, auts))

# the integer table printed for this class gives a different algebra
print("automorphisms of the printed integer table over F7:",
      A.isomorphism_search(A.th52b_algebra(F), A.th52b_algebra(F), "count_all"))
