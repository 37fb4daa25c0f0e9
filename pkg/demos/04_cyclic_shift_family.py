"""A family of simple algebras with a cyclic shift and a diagonal torus.

With b of order r modulo a prime n, and q a prime with n | q - 1, the shift A
and the diagonal B generate an irreducible group on F_q^r whose exterior
square has the natural module as a quotient.
"""

from iacgroups.constructions import family_sec6
from iacgroups.duality import round_trip

for b, n, q in ((2, 5, 11), (3, 11, 23)):
    res = family_sec6(b, n, q)
    print(f"b={b} n={n} q={q}: r={res['r']}")
    for name, ok in res["checks"].items():
        print(f"   {name}: {ok}")

w = round_trip(family_sec6(2, 5, 11)["algebra"])
print("\n".join(w.log))
