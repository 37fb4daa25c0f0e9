import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from iacgroups import linalg as la
from iacgroups.constructions import (
    agl_generators,
    deleted_perm_matrices,
    deleted_perm_module,
    family_sec6,
    sl2_generators,
    vm_module,
)
from iacgroups.errors import CharacteristicDividesT, DimensionMismatch, GeneratorCountMismatch, NotInvertible
from iacgroups.field import field_make

from oracles import det as oracle_det
from oracles import rank as oracle_rank


def test_identity_solve():
    F = field_make(5)
    res = la.rref_solve(F, la.identity(F, 3))
    assert res.rank == 3 and res.kernel.shape[0] == 0


def test_zero_solve():
    F = field_make(3)
    res = la.rref_solve(F, np.zeros((2, 2), dtype=np.int64))
    assert res.rank == 0 and res.kernel.shape[0] == 2


def test_rank_one_system():
    F = field_make(5)
    M = [[1, 2], [2, 4]]
    res = la.rref_solve(F, M, [1, 2])
    assert res.rank == 1
    assert la.Subspace.span(F, res.kernel, 2) == la.Subspace.span(F, [[3, 1]], 2)
    x = res.solution
    assert F.matmul(np.array(M), x).tolist() == [1, 2]


def test_inconsistent_system():
    F = field_make(5)
    res = la.rref_solve(F, [[1, 2], [2, 4]], [1, 0])
    assert res.solution is la.NO_SOLUTION
    assert not res.solution


def test_inverse_singular():
    F = field_make(7)
    with pytest.raises(NotInvertible):
        la.inverse(F, [[1, 2], [2, 4]])


def test_wedge_of_cycle():
    F = field_make(5)
    M = np.array([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    W = la.wedge_square(F, M)
    # e0^e1 -> e1^e2, e0^e2 -> e1^e0 = -(e0^e1), e1^e2 -> e2^e0 = -(e0^e2)
    assert W.tolist() == [[0, 0, 1], [4, 0, 0], [0, 4, 0]]
    assert np.array_equal(la.wedge_square(F, F.matmul(M, M)), F.matmul(W, W))


def test_pair_index():
    d = 5
    for t, (i, j) in enumerate(la.pair_list(d)):
        assert la.pair_index(i, j, d) == t


def test_spin_examples():
    F = field_make(11)
    I = la.ModuleRep(F, [la.identity(F, 3)])
    assert la.spin([1, 0, 0], I).rank == 1
    sec = family_sec6(2, 5, 11)
    A = sec["A"]
    assert la.spin([1, 0, 0, 0], la.ModuleRep(F, [A])).rank == 4
    W = sec["module"].wedge_square()
    e01 = la.wedge_vectors(F, np.eye(4, dtype=np.int64)[0], np.eye(4, dtype=np.int64)[1])
    U = la.spin(e01, W)
    assert U == sec["U1"] and U.rank == 4


def test_spin_bad_seed():
    F = field_make(3)
    with pytest.raises(DimensionMismatch):
        la.spin([1, 0], la.ModuleRep(F, [la.identity(F, 3)]))


def test_irreducibility_examples():
    F = field_make(11)
    assert not la.is_irreducible(la.ModuleRep(F, [la.identity(F, 2)]))
    assert la.is_irreducible(family_sec6(2, 5, 11)["module"])
    F5 = field_make(5)
    # in characteristic 5 the sum of all points lies in the sum-zero module;
    # on the basis x_i - x_4 it is (1, 1, 1, 1)
    c5 = la.ModuleRep(F5, deleted_perm_matrices(agl_generators(5)[:1], F5))
    assert not la.is_irreducible(c5)
    assert la.spin([1, 1, 1, 1], c5).rank == 1
    with pytest.raises(CharacteristicDividesT):
        deleted_perm_module(agl_generators(5)[:1], F5)
    F3 = field_make(3)
    assert la.is_irreducible(deleted_perm_module(agl_generators(5)[:1], F3))


def test_hom_space_examples():
    F3 = field_make(3)
    c5 = deleted_perm_module(agl_generators(5)[:1], F3)
    assert len(la.hom_module_space(c5, c5)) == 4
    I2 = la.ModuleRep(F3, [la.identity(F3, 2)])
    assert len(la.hom_module_space(I2, I2)) == 4
    F13 = field_make(13)
    gens = sl2_generators(F13)
    V = vm_module(4, F13, gens)
    triv = la.ModuleRep(F13, [la.identity(F13, 1) for _ in gens])
    assert la.hom_module_space(V, triv) == []


def test_hom_space_generator_mismatch():
    F = field_make(3)
    a = la.ModuleRep(F, [la.identity(F, 2)])
    b = la.ModuleRep(F, [la.identity(F, 2)] * 2)
    with pytest.raises(GeneratorCountMismatch):
        la.hom_module_space(a, b)


def test_module_rejects_singular():
    F = field_make(3)
    with pytest.raises(NotInvertible):
        la.ModuleRep(F, [np.zeros((2, 2), dtype=np.int64)])


def test_all_subspaces_count():
    F = field_make(3)
    counts = [sum(1 for _ in la.all_subspaces(F, 3, [k])) for k in range(4)]
    assert counts == [1, 13, 13, 1]


def test_batch_rank_matches_single():
    F = field_make(3, 2)
    rng = np.random.default_rng(0)
    A = rng.integers(0, 9, (50, 3, 4))
    assert la.batch_rank(F, A).tolist() == [la.rank(F, M) for M in A]


def test_projective_points_cover():
    pts = np.vstack(list(la.projective_points(5, 3)))
    assert pts.shape[0] == la.projective_count(5, 3) == 31


@settings(max_examples=150, deadline=None)
@given(st.sampled_from([3, 5, 7]), st.integers(1, 4), st.integers(1, 4), st.data())
def test_rank_and_kernel_against_oracle(p, n, m, data):
    F = field_make(p)
    M = np.array(data.draw(st.lists(st.lists(st.integers(0, p - 1), min_size=m, max_size=m),
                                    min_size=n, max_size=n)))
    r = la.rank(F, M)
    assert r == oracle_rank(M.tolist(), p)
    K = la.kernel(F, M)
    assert K.shape[0] == m - r
    if K.shape[0]:
        assert not F.matmul(M, K.T).any()
    if n == m:
        assert la.det(F, M) == oracle_det(M.tolist(), p)
