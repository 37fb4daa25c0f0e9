"""Anti-commutative algebras given by structure constants.

An algebra of dimension r is stored as a D x r table (D = r(r-1)/2) whose row
``pair_index(i, j)`` is the product <e_i, e_j> for i < j. With the exterior
coordinates of :func:`linalg.wedge_vectors` the product is simply
``<x, y> = wedge(x, y) @ table``.
"""

import os
from collections import Counter
from itertools import combinations

import numpy as np

from . import linalg as la
from .errors import (
    AbelianAlgebra,
    DimensionMismatch,
    HasCenter,
    IndexOutOfRange,
    NoSmallGeneratingSet,
    NotDim3,
    NotSemisimple,
    PairNotStrictlyOrdered,
    ProductNotFull,
    SearchSpaceTooLarge,
    TooLargeForExhaustive,
)
from .field import FieldElem

SEARCH_BOUND = 10**9


def search_bound():
    """Default budget for :func:`isomorphism_search`, overridable by IACGROUPS_BUDGET."""
    env = os.environ.get("IACGROUPS_BUDGET")
    return int(float(env)) if env else SEARCH_BOUND


class ACAlgebra:
    """Anti-commutative algebra over a finite field.

    Only the products <e_i, e_j> with i < j are stored; the others follow from
    <e_i, e_i> = 0 and <e_j, e_i> = -<e_i, e_j>.
    """

    def __init__(self, field, dim, table):
        self.field = field
        self.dim = int(dim)
        T = np.array(table, dtype=np.int64).reshape(len(la.pair_list(self.dim)), self.dim)
        T.setflags(write=False)
        self.table = T
        self._cache = {}

    def __repr__(self):
        return f"ACAlgebra(dim={self.dim}, field={self.field!r})"

    def __eq__(self, other):
        return (isinstance(other, ACAlgebra) and self.field == other.field
                and self.dim == other.dim and np.array_equal(self.table, other.table))

    def __hash__(self):
        return hash((self.field.key, self.dim, self.table.tobytes()))

    def const(self, i, j):
        """The vector <e_i, e_j> for any pair of indices."""
        r = self.dim
        if not (0 <= i < r and 0 <= j < r):
            raise IndexOutOfRange(f"basis index out of range for dimension {r}")
        if i == j:
            return np.zeros(r, dtype=np.int64)
        if i < j:
            return self.table[la.pair_index(i, j, r)].copy()
        return self.field.neg(self.table[la.pair_index(j, i, r)])

    def product(self, x, y):
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        if x.shape[-1] != self.dim or y.shape[-1] != self.dim:
            raise DimensionMismatch("vector length differs from algebra dimension")
        return self.field.matmul(la.wedge_vectors(self.field, x, y), self.table)

    @property
    def products(self):
        """Tensor P with P[i, j] = <e_i, e_j>."""
        if "P" not in self._cache:
            r = self.dim
            P = np.zeros((r, r, r), dtype=np.int64)
            for t, (i, j) in enumerate(la.pair_list(r)):
                P[i, j] = self.table[t]
                P[j, i] = self.field.neg(self.table[t])
            P.setflags(write=False)
            self._cache["P"] = P
        return self._cache["P"]

    def right_mult(self, k):
        """Matrix of x -> <x, e_k> acting on row vectors."""
        return self.products[:, k, :]

    def right_mults(self):
        return [self.right_mult(k) for k in range(self.dim)]

    def ad(self, v):
        """Matrix of x -> <x, v> (stacks of v allowed)."""
        v = np.asarray(v, dtype=np.int64)
        Rs = np.stack(self.right_mults())
        return self.field.sum(self.field.mul(v[..., :, None, None], Rs), axis=-3)

    def is_abelian(self):
        return not self.table.any()

    def basis_vector(self, i):
        e = np.zeros(self.dim, dtype=np.int64)
        e[i] = 1
        return e

    def transport(self, g):
        """The algebra L' for which x -> x g is an isomorphism self -> L'.

        Its table is (wedge g)^{-1} T g.
        """
        F = self.field
        W = la.wedge_square(F, g)
        return ACAlgebra(F, self.dim, F.matmul(F.matmul(la.inverse(F, W), self.table), g))


def _entry_codes(F, c, r):
    if isinstance(c, np.ndarray) and c.dtype.kind in "iu":
        v = F.to_codes(c)
    else:
        v = F.to_codes(list(c))
    if v.shape != (r,):
        raise DimensionMismatch(f"product vector must have length {r}")
    return v


def alg_make(F, r, table):
    """Build an algebra from entries (i, j, c) with i < j.

    ``table`` may also be a dict {(i, j): c} or a dense D x r array. Entries may
    be ints (embedded mod p), FieldElems or, for a dense array, codes.
    """
    r = int(r)
    if r < 1:
        raise DimensionMismatch("dimension must be at least 1")
    D = r * (r - 1) // 2
    if isinstance(table, np.ndarray) and table.ndim == 2:
        if table.shape != (D, r):
            raise DimensionMismatch(f"dense table must be {D} x {r}")
        return ACAlgebra(F, r, F.to_codes(table))
    if isinstance(table, dict):
        items = [(i, j, c) for (i, j), c in table.items()]
    else:
        items = list(table)
    T = np.zeros((D, r), dtype=np.int64)
    for i, j, c in items:
        if not (0 <= i < r and 0 <= j < r):
            raise IndexOutOfRange(f"pair ({i}, {j}) out of range for dimension {r}")
        if i >= j:
            raise PairNotStrictlyOrdered(f"pair ({i}, {j}) must satisfy i < j")
        for x in c:
            if isinstance(x, FieldElem):
                F.check_same(x.field)
        T[la.pair_index(i, j, r)] = _entry_codes(F, c, r)
    return ACAlgebra(F, r, T)


def alg_product(L, x, y):
    return L.product(x, y)


# -- named algebras -----------------------------------------------------------------

def sl2(F):
    """sl_2 in the basis (e, h, f): <e,h> = -2e, <e,f> = h, <h,f> = -2f."""
    return alg_make(F, 3, {(0, 1): (-2, 0, 0), (0, 2): (0, 1, 0), (1, 2): (0, 0, -2)})


TH52B = {
    (0, 1): (1, 1, 5, 3),
    (0, 2): (-4, -4, 0, -2),
    (0, 3): (2, 4, -4, -2),
    (1, 2): (-3, -1, 1, 3),
    (1, 3): (2, 0, 4, 4),
    (2, 3): (-3, -5, -1, -1),
}


def th52b_algebra(F):
    """The 4-dimensional simple algebra with automorphism group AGL(1,5)."""
    return alg_make(F, 4, TH52B)


def abelian_algebra(F, r):
    return alg_make(F, r, [])


def direct_sum(L1, L2):
    """Block sum: the basis of L1 followed by the basis of L2, cross products zero."""
    L1.field.check_same(L2.field)
    r1, r2 = L1.dim, L2.dim
    r = r1 + r2
    T = np.zeros((r * (r - 1) // 2, r), dtype=np.int64)
    for t, (i, j) in enumerate(la.pair_list(r1)):
        T[la.pair_index(i, j, r), :r1] = L1.table[t]
    for t, (i, j) in enumerate(la.pair_list(r2)):
        T[la.pair_index(r1 + i, r1 + j, r), r1:] = L2.table[t]
    return ACAlgebra(L1.field, r, T)


def direct_power(L, n):
    out = L
    for _ in range(n - 1):
        out = direct_sum(out, L)
    return out


def restrict(L, S):
    """The subalgebra S (a Subspace closed under products) in the basis S.basis."""
    F = L.field
    B = S.basis
    k = B.shape[0]
    T = np.zeros((k * (k - 1) // 2, k), dtype=np.int64)
    for t, (i, j) in enumerate(la.pair_list(k)):
        prod = L.product(B[i], B[j])
        sol = la.rref_solve(F, B.T, prod).solution
        if sol is None or sol is la.NO_SOLUTION:
            raise DimensionMismatch("subspace is not closed under the product")
        T[t] = sol
    return ACAlgebra(F, k, T)


# -- subspaces ------------------------------------------------------------------------

def _as_seeds(L, S):
    if isinstance(S, la.Subspace):
        if S.n != L.dim:
            raise DimensionMismatch("subspace lives in a different dimension")
        return S.basis
    V = np.asarray(L.field.to_codes(S) if not isinstance(S, np.ndarray) else S, dtype=np.int64)
    if V.size == 0:
        return np.zeros((0, L.dim), dtype=np.int64)
    if V.ndim == 1:
        V = V[None, :]
    if V.shape[1] != L.dim:
        raise DimensionMismatch("vector length differs from algebra dimension")
    return V


def ideal_closure(L, S):
    """Smallest ideal containing the vectors S."""
    V = _as_seeds(L, S)
    if V.shape[0] == 0 or not V.any():
        return la.Subspace.zero(L.field, L.dim)
    return la.spin_matrices(L.field, V, L.right_mults())


def subspace_tests(L, S):
    if not isinstance(S, la.Subspace):
        S = la.Subspace.span(L.field, _as_seeds(L, S), L.dim)
    if S.n != L.dim:
        raise DimensionMismatch("subspace lives in a different dimension")
    B = S.basis
    k = B.shape[0]
    if k == 0:
        return {"is_subalgebra": True, "is_ideal": True}
    if k > 1:
        I, J = zip(*la.pair_list(k))
        prods = L.product(B[list(I)], B[list(J)])
        sub = S.contains(prods)
    else:
        sub = True
    ideal = S.is_invariant(L.right_mults())
    return {"is_subalgebra": bool(sub), "is_ideal": bool(ideal)}


def center(L):
    H = np.hstack(L.right_mults())
    return la.Subspace.span(L.field, la.left_kernel(L.field, H), L.dim)


def derived(L):
    """The subspace <L, L>."""
    return la.Subspace.span(L.field, L.table, L.dim)


def generated_subalgebra(L, S):
    F = L.field
    V = _as_seeds(L, S)
    if V.shape[0] == 0 or not V.any():
        return la.Subspace.zero(F, L.dim)
    B, _ = la.rref(F, V)
    while True:
        k = B.shape[0]
        if k < 2:
            break
        I, J = zip(*la.pair_list(k))
        prods = L.product(B[list(I)], B[list(J)])
        R, _ = la.rref(F, np.vstack([B, prods]))
        if R.shape[0] == k:
            break
        B = R
    B.setflags(write=False)
    return la.Subspace(F, L.dim, B)


def generating_pair_search(L, max_size=None):
    """Smallest subset of the standard basis generating L, as a list of indices."""
    r = L.dim
    top = r if max_size is None else min(max_size, r)
    for k in range(1, top + 1):
        for S in combinations(range(r), k):
            if generated_subalgebra(L, np.eye(r, dtype=np.int64)[list(S)]).rank == r:
                return list(S)
    return None


def _small_generating_set(L, max_size=3, seed=0, tries=200):
    """A generating list of at most max_size vectors, basis subsets first."""
    S = generating_pair_search(L, max_size)
    if S is not None:
        return np.eye(L.dim, dtype=np.int64)[S]
    rng = np.random.default_rng(seed)
    for k in range(2, max_size + 1):
        for _ in range(tries):
            V = rng.integers(0, L.field.q, size=(k, L.dim))
            if generated_subalgebra(L, V).rank == L.dim:
                return V
    raise NoSmallGeneratingSet(f"no generating set of size <= {max_size} found")


# -- simplicity and decomposition --------------------------------------------------

def _mult_algebra(L):
    if "mult" not in L._cache:
        L._cache["mult"] = la.matrix_algebra_basis(L.field, L.right_mults())
    return L._cache["mult"]


def _closures(L, limit):
    """Yield (points, canonical ideal bases, ranks) for all projective points."""
    F, r = L.field, L.dim
    A = _mult_algebra(L)
    if la.projective_count(F.q, r) > limit:
        raise TooLargeForExhaustive(f"{la.projective_count(F.q, r)} projective points exceed {limit}")
    for P in la.projective_points(F.q, r):
        imgs = F.matmul(P[:, None, None, :], A[None])[:, :, 0, :]
        R, ranks = la.batch_rref(F, imgs)
        yield P, R, ranks


def is_simple(L, limit=la.PROJECTIVE_LIMIT):
    """Non-abelian and every nonzero element generates L as an ideal."""
    if L.is_abelian():
        return False
    r = L.dim
    if _mult_algebra(L).shape[0] == r * r:
        return True
    for _, _, ranks in _closures(L, limit):
        if (ranks < r).any():
            return False
    return True


def is_simple_as_paper(L, limit=la.PROJECTIVE_LIMIT):
    """Like :func:`is_simple` but the 1-dimensional algebra counts as simple."""
    if L.dim == 1:
        return True
    return is_simple(L, limit)


def semisimple_decompose(L, limit=la.PROJECTIVE_LIMIT):
    """Minimal ideals of a centerless algebra, verified to give a direct decomposition."""
    F, r = L.field, L.dim
    if L.is_abelian():
        lines = [la.Subspace.span(F, L.basis_vector(i), r) for i in range(r)]
        raise AbelianAlgebra(f"abelian algebra splits into {r} lines", lines)
    if center(L).rank:
        raise HasCenter("non-abelian algebra with nonzero center")
    if _mult_algebra(L).shape[0] == r * r:
        return [la.Subspace.full(F, r)]
    seen = {}
    for _, R, ranks in _closures(L, limit):
        for k in np.unique(ranks):
            sel = R[ranks == k][:, :k]
            flat = np.unique(sel.reshape(sel.shape[0], -1), axis=0)
            for row in flat:
                B = row.reshape(k, r)
                key = (int(k), B.tobytes())
                if key not in seen:
                    B = B.copy()
                    B.setflags(write=False)
                    seen[key] = la.Subspace(F, r, B)
    ideals = sorted(seen.values(), key=lambda S: (S.rank, S.basis.tolist()))
    minimal = []
    for S in ideals:
        if not any(M <= S for M in minimal):
            minimal.append(S)
    total = la.Subspace.zero(F, r)
    for S in minimal:
        total = total + S
    if total.rank != r:
        raise NotSemisimple("minimal ideals do not span the algebra")
    for a, b in combinations(minimal, 2):
        if a.intersect(b).rank:
            raise NotSemisimple("minimal ideals intersect")
        I, J = np.meshgrid(np.arange(a.rank), np.arange(b.rank), indexing="ij")
        if L.product(a.basis[I.ravel()], b.basis[J.ravel()]).any():
            raise NotSemisimple("distinct minimal ideals do not annihilate each other")
    return minimal


# -- identities ------------------------------------------------------------------

def jacobiator(L, x, y, z):
    p = L.product
    F = L.field
    return F.add(F.add(p(p(x, y), z), p(p(y, z), x)), p(p(z, x), y))


def identity_checks(L):
    F, r = L.field, L.dim
    abelian = L.is_abelian()
    E = np.eye(r, dtype=np.int64)
    a, b, c = (g.ravel() for g in np.meshgrid(np.arange(r), np.arange(r), np.arange(r), indexing="ij"))
    jacobi = not jacobiator(L, E[a], E[b], E[c]).any()
    # the Malcev identity is quadratic in x, so x in {e_a, e_a + e_d} decides it
    xs = [E[i] for i in range(r)]
    xs += [F.add(E[i], E[j]) for i, j in combinations(range(r), 2)]
    if F.q == 3:
        xs += [F.add(E[i], F.mul(E[j], 2)) for i, j in combinations(range(r), 2)]
    X = np.array(xs)
    n = X.shape[0]
    xi, yi, zi = (g.ravel() for g in np.meshgrid(np.arange(n), np.arange(r), np.arange(r), indexing="ij"))
    x, y, z = X[xi], E[yi], E[zi]
    lhs = L.product(jacobiator(L, x, y, z), x)
    rhs = jacobiator(L, x, y, L.product(x, z))
    malcev = bool(np.array_equal(lhs, rhs))
    return {"abelian": bool(abelian), "jacobi": bool(jacobi), "malcev": malcev}


def gram_matrix_3dim(L):
    """Rows f_0 = <e_1,e_2>, f_1 = <e_2,e_0>, f_2 = <e_0,e_1> of A, with flags."""
    if L.dim != 3:
        raise NotDim3("gram matrix needs a 3-dimensional algebra")
    A = np.array([L.const(1, 2), L.const(2, 0), L.const(0, 1)])
    if la.rank(L.field, A) < 3:
        raise ProductNotFull("the products f_i are linearly dependent")
    return A, {"invertible": True, "symmetric": bool(np.array_equal(A, A.T))}


# -- isomorphisms -----------------------------------------------------------------

def is_homomorphism(L1, L2, phi):
    """phi maps L1 -> L2 (rows are images of e_i) respecting products."""
    F = L1.field
    phi = np.asarray(phi, dtype=np.int64)
    return np.array_equal(F.matmul(la.wedge_square(F, phi), L2.table), F.matmul(L1.table, phi))


def is_automorphism(L, g):
    return la.rank(L.field, g) == L.dim and is_homomorphism(L, L, g)


def _word_basis(L, S):
    """Words in the generators S whose values form a basis of L.

    A word is ('g', t) for generator t or ('p', u, v) for the product of
    earlier words u and v. Returns (words, value matrix).
    """
    F = L.field
    words = [("g", t) for t in range(len(S))]
    vals = [np.asarray(s, dtype=np.int64) for s in S]
    keep, basis = [], np.zeros((0, L.dim), dtype=np.int64)

    def add(t, v):
        nonlocal basis
        if la.rank(F, np.vstack([basis, v])) > basis.shape[0]:
            basis = np.vstack([basis, v])
            keep.append(t)

    for t, v in enumerate(vals):
        add(t, v)
    while basis.shape[0] < L.dim:
        before = basis.shape[0]
        for a, b in combinations(list(keep), 2):
            words.append(("p", a, b))
            vals.append(L.product(vals[a], vals[b]))
            add(len(words) - 1, vals[-1])
            if basis.shape[0] == L.dim:
                break
        if basis.shape[0] == before:
            raise NoSmallGeneratingSet("generators do not generate the algebra")
    return words, keep, basis


def _eval_words(L, words, keep, imgs):
    """Evaluate words on a batch of generator images imgs (K, m, r); returns (K, r, r)."""
    vals = [imgs[:, t, :] for t in range(imgs.shape[1])]
    for w in words[imgs.shape[1]:]:
        vals.append(L.product(vals[w[1]], vals[w[2]]))
    return np.stack([vals[k] for k in keep], axis=1)


def ad_invariants(L, V):
    """Conjugation invariants of x -> <x, v> for each row v of V.

    Columns: ranks of ad_v^k for k = 1..r, then traces of ad_v^k for k = 1..r.
    """
    F, r = L.field, L.dim
    V = np.asarray(V, dtype=np.int64)
    out = np.zeros((V.shape[0], 2 * r), dtype=np.int64)
    Rt = np.stack(L.right_mults(), axis=0)  # (r, r, r): Rt[k] = R_k
    for s in range(0, V.shape[0], 4096):
        v = V[s:s + 4096]
        M = F.sum(F.mul(v[:, :, None, None], Rt[None]), axis=1)
        P = M
        for k in range(r):
            out[s:s + v.shape[0], k] = la.batch_rank(F, P)
            out[s:s + v.shape[0], r + k] = F.sum(np.diagonal(P, axis1=1, axis2=2), axis=-1)
            if k + 1 < r:
                P = F.matmul(P, M)
    return out


def _invariant_table(L):
    if "inv" not in L._cache:
        L._cache["inv"] = ad_invariants(L, la.all_vectors(L.field.q, L.dim))
    return L._cache["inv"]


def _rows_equal(table, row):
    return np.all(table == row[None, :], axis=1)


def isomorphism_search(L1, L2, mode="find_one", bound=None, gens=None):
    """Search isomorphisms L1 -> L2 by backtracking over images of a small generating set.

    Modes: ``find_one`` (first isomorphism in lexicographic order of images, or
    None), ``count_all`` (number of isomorphisms) and ``find_all`` (list of all).
    Maps are r x r matrices whose row i is the image of e_i.
    """
    if mode not in ("find_one", "count_all", "find_all"):
        raise ValueError(f"unknown mode {mode!r}")
    L1.field.check_same(L2.field)
    F, r, q = L1.field, L1.dim, L1.field.q
    empty = {"find_one": None, "count_all": 0, "find_all": []}[mode]
    if L2.dim != r:
        return empty
    if bound is None:
        bound = search_bound()
    S = _small_generating_set(L1) if gens is None else np.asarray(gens, dtype=np.int64)
    m = S.shape[0]
    if q ** (r * m) > bound:
        raise SearchSpaceTooLarge(f"{q}^({r}*{m}) candidate tuples exceed the bound {bound}")
    # cheap isomorphism invariants
    if derived(L1).rank != derived(L2).rank or center(L1).rank != center(L2).rank:
        return empty
    words, keep, B1 = _word_basis(L1, S)
    B1inv = la.inverse(F, B1)

    inv2 = _invariant_table(L2)
    allv = la.all_vectors(q, r)
    w = q ** np.arange(r - 1, -1, -1, dtype=np.int64)

    def inv1(v):
        return ad_invariants(L1, np.asarray(v)[None, :])[0]

    gen_inv = [inv1(s) for s in S]
    sums = {(a, b): inv1(F.add(S[a], S[b])) for a, b in combinations(range(m), 2)}
    prods = {(a, b): inv1(L1.product(S[a], S[b])) for a, b in combinations(range(m), 2)}
    cands = []
    for t in range(m):
        c = np.nonzero(_rows_equal(inv2, gen_inv[t]))[0]
        if not S[t].any():
            c = np.array([0])
        cands.append(c)
    if any(c.size == 0 for c in cands):
        return empty

    found = []
    count = 0

    def leaves(prefix, last):
        """prefix: chosen codes for generators 0..m-2; last: candidate codes for m-1."""
        nonlocal count
        K = last.size
        imgs = np.empty((K, m, r), dtype=np.int64)
        for t, code in enumerate(prefix):
            imgs[:, t, :] = allv[code]
        imgs[:, m - 1, :] = allv[last]
        Img = _eval_words(L2, words, keep, imgs)
        phi = F.matmul(B1inv[None], Img)
        ok = la.batch_rank(F, phi) == r
        if ok.any():
            P = phi[ok]
            lhs = F.matmul(la.wedge_square(F, P), L2.table[None])
            rhs = F.matmul(L1.table[None], P)
            good = np.all((lhs == rhs).reshape(P.shape[0], -1), axis=1)
            P = P[good]
            count += P.shape[0]
            if mode != "count_all":
                found.extend(P)
        return mode == "find_one" and bool(found)

    def filter_last(prefix):
        c = cands[m - 1]
        keepmask = np.ones(c.size, dtype=bool)
        vb = allv[c]
        for a, code in enumerate(prefix):
            va = allv[code][None, :]
            keepmask &= _rows_equal(inv2[F.add(va, vb) @ w], sums[(a, m - 1)])
            keepmask &= _rows_equal(inv2[L2.product(np.broadcast_to(va, vb.shape), vb) @ w], prods[(a, m - 1)])
        return c[keepmask]

    def pair_ok(prefix, code):
        t = len(prefix)
        v = allv[code]
        for a, ca in enumerate(prefix):
            va = allv[ca]
            if not np.array_equal(inv2[F.add(va, v) @ w], sums[(a, t)]):
                return False
            if not np.array_equal(inv2[L2.product(va, v) @ w], prods[(a, t)]):
                return False
        return True

    def rec(prefix):
        if len(prefix) == m - 1:
            last = filter_last(prefix)
            if last.size:
                for s in range(0, last.size, 8192):
                    if leaves(prefix, last[s:s + 8192]):
                        return True
            return False
        for code in cands[len(prefix)]:
            if pair_ok(prefix, code) and rec(prefix + [int(code)]):
                return True
        return False

    rec([])
    if mode == "find_one":
        return found[0] if found else None
    if mode == "count_all":
        return count
    return found


def automorphisms(L, bound=None):
    return isomorphism_search(L, L, "find_all", bound)


def matrix_order(F, g):
    """Multiplicative order of an invertible matrix."""
    I = la.identity(F, g.shape[0])
    P, n = g, 1
    while not np.array_equal(P, I):
        P = F.matmul(P, g)
        n += 1
    return n


def order_profile(F, mats):
    return dict(sorted(Counter(matrix_order(F, g) for g in mats).items()))
