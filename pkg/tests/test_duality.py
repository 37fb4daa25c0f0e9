import numpy as np
import pytest

from iacgroups import algebra as A
from iacgroups import linalg as la
from iacgroups.constructions import family_sec6
from iacgroups.duality import (
    G_of_L,
    L_of_G,
    central_automorphism_audit,
    correspondence_audit,
    lift_automorphism,
    lift_validity,
    round_trip,
)
from iacgroups.errors import NotInvertible, NotPrimeField, TooLargeForExhaustive
from iacgroups.field import field_make
from iacgroups.pcgroup import PcGroup, direct_power

from oracles import SL2_TABLE, Collector, DictAlgebra, general_linear

F3 = field_make(3)


def test_abelian_groups():
    G = G_of_L(A.abelian_algebra(F3, 2))
    assert G.order == 81
    assert not L_of_G(G).table.any()


class CollectorGroup(PcGroup):
    """Arithmetic from the letter-by-letter collector; the stored table is zeroed."""

    def __init__(self, p, r, table):
        self.oracle = Collector(p, r, table)
        super().__init__(p, r, np.zeros((r * (r - 1) // 2, r), dtype=np.int64), check=False)

    def mul(self, a, b, a2, b2):
        single = np.ndim(a) == 1 and np.ndim(a2) == 1
        a, b, a2, b2 = (np.atleast_2d(x) for x in (a, b, a2, b2))
        n = max(len(a), len(a2))
        out = [self.oracle.mul((tuple(a[k % len(a)]), tuple(b[k % len(b)])),
                               (tuple(a2[k % len(a2)]), tuple(b2[k % len(b2)]))) for k in range(n)]
        A, B = np.array([o[0] for o in out]), np.array([o[1] for o in out])
        return (A[0], B[0]) if single else (A, B)


def test_recovered_table_uses_group_arithmetic_only():
    G = CollectorGroup(3, 3, SL2_TABLE)
    assert not G.table.any()
    assert np.array_equal(L_of_G(G).table, A.sl2(F3).table)


@pytest.mark.parametrize("L", [
    A.abelian_algebra(F3, 2),
    A.sl2(F3),
    A.sl2(field_make(5)),
    A.th52b_algebra(F3),
    family_sec6(2, 5, 11)["algebra"],
])
def test_round_trip(L):
    assert np.array_equal(L_of_G(G_of_L(L)).table, L.table)
    w = round_trip(L)
    assert w.identical
    assert "tables identical: true" in w.log


def test_extension_field_rejected():
    with pytest.raises(NotPrimeField):
        G_of_L(A.sl2(field_make(3, 2)))


def test_direct_power_dual():
    G = G_of_L(A.sl2(F3))
    assert np.array_equal(L_of_G(direct_power(G, 2)).table, A.direct_sum(A.sl2(F3), A.sl2(F3)).table)


def test_lift_identity_and_examples():
    L = A.sl2(F3)
    G = G_of_L(L)
    _, ok = lift_automorphism(L, G, np.eye(3, dtype=np.int64))
    assert ok
    aut = A.automorphisms(L)[5]
    _, ok = lift_automorphism(L, G, aut)
    assert ok
    _, ok = lift_automorphism(L, G, [[1, 1, 0], [0, 1, 0], [0, 0, 1]])
    assert not ok
    with pytest.raises(NotInvertible):
        lift_automorphism(L, G, np.zeros((3, 3), dtype=np.int64))


def test_lift_validity_equals_automorphism_over_gl3():
    L = A.sl2(F3)
    G = G_of_L(L)
    O = DictAlgebra(3, 3, SL2_TABLE)
    mats = list(general_linear(3, 3))
    assert len(mats) == 11232
    valid = lift_validity(G, np.array(mats))
    respects = np.array([O.respects(M) for M in mats])
    assert np.array_equal(valid, respects)
    assert valid.sum() == 24


def test_lifted_map_is_homomorphism():
    L = A.sl2(F3)
    G = G_of_L(L)
    C = Collector(3, 3, SL2_TABLE)
    phi, ok = lift_automorphism(L, G, A.automorphisms(L)[7])
    assert ok
    rng = np.random.default_rng(2)
    a, b = G.random_elements(40, rng)
    a2, b2 = G.random_elements(40, rng)
    pa, pb = G.mul(a, b, a2, b2)
    lhs = phi.apply(pa, pb)
    x, y = phi.apply(a, b), phi.apply(a2, b2)
    for k in range(40):
        want = C.mul((tuple(x[0][k]), tuple(x[1][k])), (tuple(y[0][k]), tuple(y[1][k])))
        assert (tuple(lhs[0][k]), tuple(lhs[1][k])) == want


def test_central_audit_small():
    rep = central_automorphism_audit(G_of_L(A.abelian_algebra(F3, 2)))
    assert rep["count"] == 81 and rep["elementary_abelian"]


def test_central_audit_sl2():
    rep = central_automorphism_audit(G_of_L(A.sl2(F3)))
    assert rep["count"] == 3**9
    assert rep["exhaustive"] and rep["elementary_abelian"] and rep["composition_central"]


def test_correspondence_audit_sl2():
    rep = correspondence_audit(A.sl2(F3))
    assert rep["proper_nonzero"] == 26
    assert rep["agree"] and rep["ideals"] == 0 and rep["powerfully_embedded"] == 0


def test_correspondence_audit_abelian():
    rep = correspondence_audit(A.abelian_algebra(F3, 2))
    proper = [r for r in rep["rows"] if 0 < r["dim"] < 2]
    assert rep["agree"] and all(r["is_ideal"] and r["powerfully_embedded"] for r in proper)


def test_correspondence_audit_budget():
    L = A.direct_sum(A.sl2(F3), A.sl2(F3))
    with pytest.raises(TooLargeForExhaustive):
        correspondence_audit(L)


def test_correspondence_audit_sl2_sum_sampled():
    L = A.direct_sum(A.sl2(F3), A.sl2(F3))
    ideals = A.semisimple_decompose(L)
    rep = correspondence_audit(L, dims=[0, 1, 6], extra=ideals, sample={2: 40, 4: 15, 5: 8})
    assert rep["agree"]
    assert rep["ideals"] == 2 and rep["powerfully_embedded"] == 2
    keys = {la.Subspace(F3, 6, np.array(r["basis"])).key() for r in rep["rows"] if r["is_ideal"]}
    assert keys >= {S.key() for S in ideals}
