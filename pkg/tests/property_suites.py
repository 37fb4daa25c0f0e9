"""The five randomized suites, 1000 cases each.

Each suite is a hypothesis test; calling one runs all of its cases and raises
on the first counterexample. test_properties.py collects them for pytest and
the acceptance run calls them directly.
"""

import numpy as np
from hypothesis import HealthCheck, given, settings, strategies as st

from iacgroups import algebra as A
from iacgroups import linalg as la
from iacgroups.field import field_make
from iacgroups.pcgroup import PcGroup

from oracles import Collector, PolyField, rank

CASES = 1000
suite = settings(max_examples=CASES, deadline=None, derandomize=True,
                 suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large])

FIELDS = [(3, 1), (5, 1), (7, 1), (13, 1), (3, 2), (5, 2), (3, 3), (7, 2)]


def _matrix(data, p, n, m=None):
    m = n if m is None else m
    return np.array(data.draw(st.lists(st.lists(st.integers(0, p - 1), min_size=m, max_size=m),
                                       min_size=n, max_size=n)), dtype=np.int64).reshape(n, m)


@suite
@given(st.sampled_from(FIELDS), st.data())
def field_axioms(pk, data):
    F = field_make(*pk)
    O = PolyField(F.p, F.modulus)
    code = st.integers(0, F.q - 1)
    a, b, c = data.draw(code), data.draw(code), data.draw(code)
    assert F.add(a, b) == F.add(b, a) and F.mul(a, b) == F.mul(b, a)
    assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, F.neg(a)) == 0 and F.mul(a, 1) == a
    if a:
        assert F.mul(a, F.inv(a)) == 1
    # against the coefficient-tuple oracle
    x, y = O.from_code(a), O.from_code(b)
    assert F.mul(a, b) == O.code(O.mul(x, y))
    assert F.add(a, b) == O.code(O.add(x, y))


@suite
@given(st.sampled_from(FIELDS), st.integers(2, 5), st.data())
def bilinear_anticommutative(pk, r, data):
    F = field_make(*pk)
    D = r * (r - 1) // 2
    L = A.ACAlgebra(F, r, np.array(data.draw(st.lists(st.integers(0, F.q - 1), min_size=D * r,
                                                          max_size=D * r))).reshape(D, r))
    vec = st.lists(st.integers(0, F.q - 1), min_size=r, max_size=r).map(np.array)
    x, y, z = data.draw(vec), data.draw(vec), data.draw(vec)
    c = data.draw(st.integers(0, F.q - 1))
    assert not L.product(x, x).any()
    assert np.array_equal(L.product(x, y), F.neg(L.product(y, x)))
    lin = F.add(x, F.mul(y, c))
    assert np.array_equal(L.product(lin, z), F.add(L.product(x, z), F.mul(L.product(y, z), c)))
    assert np.array_equal(L.product(z, lin), F.add(L.product(z, x), F.mul(L.product(z, y), c)))


@suite
@given(st.sampled_from([3, 5]), st.integers(1, 4), st.data())
def collection_associativity(p, r, data):
    D = r * (r - 1) // 2
    flat = data.draw(st.lists(st.integers(0, p - 1), min_size=D * r, max_size=D * r))
    T = np.array(flat, dtype=np.int64).reshape(D, r)
    G = PcGroup(p, r, T, check=False)
    C = Collector(p, r, {pair: tuple(T[t]) for t, pair in enumerate(la.pair_list(r))})
    vec = st.lists(st.integers(0, p - 1), min_size=r, max_size=r).map(tuple)
    u, v, w = [(data.draw(vec), data.draw(vec)) for _ in range(3)]

    def mul(x, y):
        a, b = G.mul(np.array(x[0]), np.array(x[1]), np.array(y[0]), np.array(y[1]))
        return tuple(int(t) for t in a), tuple(int(t) for t in b)

    # closed form against letter-by-letter collection
    assert mul(u, v) == C.mul(u, v)
    assert mul(mul(u, v), w) == mul(u, mul(v, w))
    # p-fold multiplication: u^p is central and equals the lift of the exponents
    x = C.identity()
    for _ in range(p):
        x = mul(x, u)
    assert x == (tuple([0] * r), u[0])
    a, b = G.power(np.array(u[0]), np.array(u[1]), p)
    assert (tuple(int(t) for t in a), tuple(int(t) for t in b)) == x


def _oracle_spin(seed, mats, p, n):
    """Independent vectors spanning every image of the seed under words in mats."""
    basis = [seed] if any(seed) else []
    frontier = list(basis)
    while frontier:
        nxt = []
        for v in frontier:
            for g in mats:
                img = [sum(v[i] * g[i][j] for i in range(n)) % p for j in range(n)]
                if rank(basis + [img], p) > len(basis):
                    basis.append(img)
                    nxt.append(img)
        frontier = nxt
    return basis


@suite
@given(st.sampled_from([3, 5, 7]), st.integers(1, 5), st.integers(1, 3), st.data())
def spin_minimality(p, n, k, data):
    F = field_make(p)
    mats = [_matrix(data, p, n) for _ in range(k)]
    seed = data.draw(st.lists(st.integers(0, p - 1), min_size=n, max_size=n))
    S = la.spin_matrices(F, seed, mats)
    # invariant and contains the seed
    assert S.is_invariant(mats) and S.contains([seed])
    # smallest such: agrees with the span of all word images
    ref = _oracle_spin(seed, [g.tolist() for g in mats], p, n)
    assert S.rank == len(ref) and (not ref or S.contains(ref))


def _invertible(data, p, n):
    """A random invertible matrix as a permuted product lower * diagonal * upper."""
    low, up = _matrix(data, p, n), _matrix(data, p, n)
    Lo = np.tril(low, -1) + np.eye(n, dtype=np.int64)
    Up = np.triu(up, 1) + np.eye(n, dtype=np.int64)
    diag = data.draw(st.lists(st.integers(1, p - 1), min_size=n, max_size=n))
    perm = data.draw(st.permutations(range(n)))
    M = (Lo * np.array(diag)) @ Up % p
    return M[list(perm)]


@suite
@given(st.sampled_from([3, 5, 7]), st.integers(1, 3), st.integers(1, 2), st.data())
def intertwiner_exactness(p, n, k, data):
    F = field_make(p)
    gens = [_invertible(data, p, n) for _ in range(k)]
    P = _invertible(data, p, n)
    Pi = la.inverse(F, P)
    V = la.ModuleRep(F, gens)
    W = la.ModuleRep(F, [F.matmul(F.matmul(Pi, g), P) for g in gens])
    H = la.hom_module_space(V, W)
    # every basis map intertwines, and the space has the dimension of the
    # solution set of the linear conditions g psi = psi h
    for psi in H:
        assert la.is_intertwiner(F, psi, V.gens, W.gens)
    rows = []
    for g, h in zip(V.gens, W.gens):
        for i in range(n):
            for j in range(n):
                # coefficient of psi[s][t] in (g psi - psi h)[i][j]
                rows.append([(int(g[i][s]) * (t == j) - (s == i) * int(h[t][j])) % p
                             for s in range(n) for t in range(n)])
    assert len(H) == n * n - rank(rows, p)
    # the change of basis itself is one of them
    Hs = la.Subspace.span(F, [psi.ravel() for psi in H], n * n)
    assert Hs.contains([P.ravel()])


SUITES = {
    "field axioms": field_axioms,
    "bilinearity / anti-commutativity": bilinear_anticommutative,
    "collection associativity oracle": collection_associativity,
    "spin / closure minimality": spin_minimality,
    "intertwiner exactness": intertwiner_exactness,
}
