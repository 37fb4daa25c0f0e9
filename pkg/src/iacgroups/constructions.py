"""Explicit modules and algebras: exterior self-quotients, the 4-dimensional
census, the cyclic-shift family, polynomial modules for GL(2) and SL(2) and
their Clebsch-Gordan decompositions.
"""

from dataclasses import dataclass
from math import comb

import numpy as np

from . import linalg as la
from .algebra import (
    ACAlgebra,
    derived,
    is_automorphism,
    is_simple,
    isomorphism_search,
)
from .errors import (
    BadCongruence,
    BadHypothesis,
    CharacteristicDividesT,
    CharTooSmall,
    DegreeTooLargeForChar,
    ReducibleModule,
    UnsupportedQ,
    UnsupportedT,
)
from .field import (
    _poly_mod,
    element_of_order,
    field_of_order,
    least_irreducible,
    prime_factors,
)

# -- exterior self-quotients ---------------------------------------------------------


@dataclass(frozen=True, eq=False)
class EsqStructure:
    """A surjective intertwiner psi from the exterior square onto the module."""

    module: la.ModuleRep
    psi: np.ndarray
    algebra: ACAlgebra


def hom_space_elements(F, basis):
    """Every element of the span of ``basis`` as a stack, with its coordinates."""
    h = len(basis)
    coords = la.all_vectors(F.q, h)
    if h == 0:
        return coords, np.zeros((1, 0, 0), dtype=np.int64)
    B = np.stack(basis)
    flat = F.matmul(coords, B.reshape(h, -1))
    return coords, flat.reshape((-1,) + B.shape[1:])


def esq_candidates(rep):
    """Hom basis, and coordinates plus tables of all surjective psi: wedge V -> V."""
    F, d = rep.field, rep.dim
    if d < 2:
        raise ReducibleModule("an exterior self-quotient needs dimension at least 2")
    if not la.is_irreducible(rep):
        raise ReducibleModule("module is reducible")
    H = la.hom_module_space(rep.wedge_square(), rep)
    if not H:
        return H, np.zeros((0, 0), dtype=np.int64), np.zeros((0, d * (d - 1) // 2, d), dtype=np.int64)
    coords, psis = hom_space_elements(F, H)
    ok = la.batch_rank(F, psis) == d
    return H, coords[ok], psis[ok]


def esq_structures(rep):
    _, _, psis = esq_candidates(rep)
    return [EsqStructure(rep, psi, ACAlgebra(rep.field, rep.dim, psi)) for psi in psis]


# -- permutation modules -------------------------------------------------------------


def cycles_to_perm(t, cycles):
    """Image list of the permutation of range(t) with the given cycles."""
    img = list(range(t))
    for cyc in cycles:
        for k, x in enumerate(cyc):
            img[x] = cyc[(k + 1) % len(cyc)]
    return img


def _deleted_perm_matrix(perm):
    t = len(perm)
    M = np.zeros((t - 1, t - 1), dtype=np.int64)
    last = perm[t - 1]
    for i in range(t - 1):
        # u_i = x_i - x_{t-1} maps to u_{s(i)} - u_{s(t-1)}, with u_{t-1} = 0
        if perm[i] < t - 1:
            M[i, perm[i]] += 1
        if last < t - 1:
            M[i, last] -= 1
    return M


def deleted_perm_matrices(perms, F):
    """Matrices on the basis u_i = x_i - x_{t-1}, without the characteristic check."""
    return [F.embed(_deleted_perm_matrix(list(s))) for s in perms]


def deleted_perm_module(perms, F):
    """The (t-1)-dimensional deleted permutation module of permutations on t points."""
    perms = [list(s) for s in perms]
    t = len(perms[0])
    if t % F.p == 0:
        raise CharacteristicDividesT(f"characteristic {F.p} divides t = {t}")
    return la.ModuleRep(F, deleted_perm_matrices(perms, F))


def _small_field(t):
    """Addition and multiplication tables of F_t for any prime power t, by code."""
    p = next((d for d in range(2, t + 1) if t % d == 0), None)
    k, n = 0, t
    while n % p == 0:
        n //= p
        k += 1
    if n != 1:
        raise UnsupportedT(f"{t} is not a prime power")
    mod = least_irreducible(p, k) if k > 1 else None
    digits = [[(c // p**i) % p for i in range(k)] for c in range(t)]

    def code(coeffs):
        return sum(int(c) * p**i for i, c in enumerate(coeffs))

    add = [[code([(x + y) % p for x, y in zip(digits[a], digits[b])]) for b in range(t)] for a in range(t)]
    mul = [[0] * t for _ in range(t)]
    for a in range(t):
        for b in range(t):
            prod = [0] * (2 * k - 1)
            for i, x in enumerate(digits[a]):
                for j, y in enumerate(digits[b]):
                    prod[i + j] = (prod[i + j] + x * y) % p
            mul[a][b] = code(_poly_mod(prod, mod, p) if mod else [prod[0] % p])
    return p, k, add, mul


def agl_generators(t, with_frobenius=False):
    """Permutations of F_t (points are element codes) generating AGL(1,t) or AGammaL(1,t)."""
    if t < 2 or t > 32:
        raise UnsupportedT("t must be a prime power at most 32")
    p, k, add, mul = _small_field(t)
    g = None
    for c in range(1, t):
        x, order = c, 1
        while x != 1:
            x = mul[x][c]
            order += 1
        if order == t - 1:
            g = c
            break
    gens = [[add[x][1] for x in range(t)], [mul[g][x] for x in range(t)]]
    if with_frobenius and k > 1:
        frob = []
        for x in range(t):
            y = 1
            for _ in range(p):
                y = mul[y][x]
            frob.append(y)
        gens.append(frob)
    return gens


# -- the 4-dimensional census --------------------------------------------------------


def _matrix_has_order(F, c, n):
    I = la.identity(F, c.shape[0])
    if not np.array_equal(la.matpow(F, c, n), I):
        return False
    return all(not np.array_equal(la.matpow(F, c, n // f), I) for f in prime_factors(n))


def centralizer_generator(rep):
    """A generator of the unit group of End(V), for V absolutely or not irreducible."""
    F = rep.field
    E = la.hom_module_space(rep, rep)
    h = len(E)
    n = F.q**h - 1
    Es = np.stack(E)
    for coeffs in la.all_vectors(F.q, h)[1:]:
        c = F.sum(F.mul(coeffs[:, None, None], Es), axis=0)
        if la.rank(F, c) == rep.dim and _matrix_has_order(F, c, n):
            return c
    raise ReducibleModule("endomorphism ring is not a field")


def _coordinate_action(F, H, g):
    """Matrix of psi -> (wedge g)^{-1} psi g on hom-space coordinates."""
    hb = la.Subspace.span(F, np.stack(H).reshape(len(H), -1))
    Wi = la.inverse(F, la.wedge_square(F, g))
    imgs = [F.matmul(F.matmul(Wi, psi), g).ravel() for psi in H]
    if not hb.contains(np.array(imgs)):
        raise ReducibleModule("map does not normalize the module")
    return hb.coordinates(np.array(imgs)), hb


def _union_find_orbits(n, edges):
    parent = np.arange(n)

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for src, dst in edges:
        for a, b in zip(src.tolist(), dst.tolist()):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    return np.array([find(x) for x in range(n)])


def census_module(q):
    """The module used for q: C_5 when q = +-2 mod 5, AGL(1,5) when q = +-1 mod 5."""
    if q % 5 == 0:
        raise UnsupportedQ("characteristic 5 has no 4-dimensional simple algebras")
    try:
        F = field_of_order(q)
    except ValueError:
        raise UnsupportedQ(f"{q} is not an odd prime power")
    gens = agl_generators(5)
    if q % 5 in (2, 3):
        return F, deleted_perm_module(gens[:1], F), gens
    return F, deleted_perm_module(gens, F), gens


def dim4_census(q, bound=None):
    """Isomorphism classes of the algebras arising from the census module over F_q.

    Candidate tables are first merged along the orbits of the centralizer unit
    group and of the multiplication-by-2 map of AGL(1,5) (both act by change of
    basis, so orbits consist of isomorphic algebras); orbit representatives
    are then compared by isomorphism search.
    """
    if q > 13:
        raise UnsupportedQ("the census is limited to q <= 13")
    F, rep, perms = census_module(q)
    H, coords, psis = esq_candidates(rep)
    N = psis.shape[0]
    index = np.full(F.q ** len(H), -1, dtype=np.int64)
    codes = la.vector_codes(F.q, coords)
    index[codes] = np.arange(N)
    normalizers = [centralizer_generator(rep), F.embed(_deleted_perm_matrix(perms[1]))]
    edges = []
    for g in normalizers:
        K, _ = _coordinate_action(F, H, g)
        tgt = index[la.vector_codes(F.q, F.matmul(coords, K))]
        edges.append((np.arange(N), tgt))
    roots = _union_find_orbits(N, edges)
    orbit_reps = np.unique(roots)
    sizes = {int(r): int((roots == r).sum()) for r in orbit_reps}
    classes = []
    for r in orbit_reps:
        L = ACAlgebra(F, 4, psis[r])
        for cls in classes:
            if isomorphism_search(L, cls["algebra"], "find_one", bound) is not None:
                cls["orbit_size"] += sizes[int(r)]
                break
        else:
            classes.append({"algebra": L, "orbit_size": sizes[int(r)]})
    for cls in classes:
        cls["aut_order"] = isomorphism_search(cls["algebra"], cls["algebra"], "count_all", bound)
    classes.sort(key=lambda c: -c["aut_order"])
    return {
        "q": q,
        "class_count": len(classes),
        "representatives": [c["algebra"] for c in classes],
        "aut_orders": [c["aut_order"] for c in classes],
        "orbit_sizes": [c["orbit_size"] for c in classes],
        "candidates": N,
        "hom_dim": len(H),
    }


def agl5_algebra(F):
    """The algebra of the AGL(1,5) deleted permutation module (q = +-1 mod 5) or
    the census class with 20 automorphisms; normalized so the first nonzero
    table entry is 1."""
    gens = agl_generators(5)
    rep = la.ModuleRep(F, deleted_perm_matrices(gens, F))
    H = la.hom_module_space(rep.wedge_square(), rep)
    if len(H) != 1:
        raise UnsupportedQ("the AGL(1,5) module has no unique exterior quotient here")
    psi = _normalize(F, H[0])
    return ACAlgebra(F, 4, psi)


def _normalize(F, M):
    flat = M.ravel()
    lead = flat[np.nonzero(flat)[0][0]]
    return F.mul(M, F.inv_table[lead])


# -- the cyclic-shift family ---------------------------------------------------------


def multiplicative_order(b, n):
    x, k = b % n, 1
    while x != 1:
        x = x * b % n
        k += 1
    return k


def family_sec6(b, n, q):
    """Module <A, B>, the decomposition of its exterior square, and the algebra."""
    if n <= 1 or (b * b + b - 1) % n:
        raise BadHypothesis(f"n = {n} must be > 1 and divide b^2 + b - 1 = {b * b + b - 1}")
    if (q - 1) % n:
        raise BadHypothesis(f"n = {n} must divide q - 1 = {q - 1}")
    r = multiplicative_order(b, n)
    if r <= 1:
        raise BadHypothesis("the order of b modulo n must exceed 1")
    F = field_of_order(q)
    zeta = element_of_order(F, n)
    A = np.zeros((r, r), dtype=np.int64)
    for i in range(r):
        A[i, (i + 1) % r] = 1
    B = np.diag([(zeta ** (b**i % n)).code for i in range(r)]).astype(np.int64)
    I = la.identity(F, r)
    binv = pow(b, -1, n)
    relations = {
        "A^r = 1": np.array_equal(la.matpow(F, A, r), I),
        "B^n = 1": np.array_equal(la.matpow(F, B, n), I),
        "BA = AB^(1/b)": np.array_equal(F.matmul(B, A), F.matmul(A, la.matpow(F, B, binv))),
    }
    rep = la.ModuleRep(F, [A, B], ("A", "B"))
    pairs = la.pair_list(r)
    D = len(pairs)
    one_apart = [t for t, (i, j) in enumerate(pairs) if (j - i) % r == 1 or (i - j) % r == 1]
    rest = [t for t in range(D) if t not in one_apart]
    E = np.eye(D, dtype=np.int64)
    U1 = la.Subspace.span(F, E[one_apart], D)
    U2 = la.Subspace.span(F, E[rest], D) if rest else la.Subspace.zero(F, D)
    wedge = [la.wedge_square(F, g) for g in (A, B)]
    # psi: V -> wedge V with e_i -> e_{i+1} ^ e_{i+2}
    psi = np.zeros((r, D), dtype=np.int64)
    for i in range(r):
        j, k = (i + 1) % r, (i + 2) % r
        psi[i] = la.wedge_vectors(F, I[j], I[k])
    psi_ok = all(np.array_equal(F.matmul(g, psi), F.matmul(psi, w)) for g, w in zip((A, B), wedge))
    # the algebra: project onto U1 along U2, then invert psi
    table = np.zeros((D, r), dtype=np.int64)
    for i in range(r):
        t = int(np.nonzero(psi[i])[0][0])
        table[t] = F.mul(I[i], F.inv_table[psi[i, t]])
    L = ACAlgebra(F, r, table)
    checks = dict(relations)
    checks.update({
        "irreducible": la.is_irreducible(rep),
        "U1 invariant": U1.is_invariant(wedge),
        "U2 invariant": U2.is_invariant(wedge),
        "wedge = U1 + U2": (U1 + U2).rank == D and U1.intersect(U2).rank == 0,
        "psi intertwines": psi_ok,
        "psi onto U1": la.Subspace.span(F, psi, D) == U1,
        "simple": is_simple(L),
        "A, B automorphisms": all(is_automorphism(L, g) for g in (A, B)),
    })
    return {"r": r, "field": F, "zeta": zeta, "A": A, "B": B, "module": rep, "U1": U1, "U2": U2,
            "psi": psi, "algebra": L, "checks": checks}


def sec6_algebra(F, r):
    """<e_{i+1}, e_{i+2}> = e_i (indices mod r), all other basis products zero."""
    D = r * (r - 1) // 2
    T = np.zeros((D, r), dtype=np.int64)
    for i in range(r):
        j, k = (i + 1) % r, (i + 2) % r
        if j < k:
            T[la.pair_index(j, k, r), i] = 1
        else:
            T[la.pair_index(k, j, r), i] = F.neg(np.int64(1))
    return ACAlgebra(F, r, T)


# -- polynomial modules --------------------------------------------------------------


def _poly_mul(F, u, v):
    out = np.zeros(len(u) + len(v) - 1, dtype=np.int64)
    for i, x in enumerate(u):
        if x:
            out[i:i + len(v)] = F.add(out[i:i + len(v)], F.mul(np.int64(x), v))
    return out


def vm_matrix(F, m, g):
    """Action of g on degree-m forms, basis index i <-> X^i Y^(m-i).

    X^i Y^(m-i) maps to (g11 X + g12 Y)^i (g21 X + g22 Y)^(m-i); a polynomial
    is stored by its coefficients indexed by the power of X.
    """
    g = F.to_codes(g) if not isinstance(g, np.ndarray) else np.asarray(g, dtype=np.int64)
    u = np.array([g[0, 1], g[0, 0]], dtype=np.int64)
    w = np.array([g[1, 1], g[1, 0]], dtype=np.int64)
    M = np.zeros((m + 1, m + 1), dtype=np.int64)
    for i in range(m + 1):
        f = np.ones(1, dtype=np.int64)
        for _ in range(i):
            f = _poly_mul(F, f, u)
        for _ in range(m - i):
            f = _poly_mul(F, f, w)
        M[i] = f
    return M


class PolyModule:
    """Homogeneous polynomials of degree m in X, Y with the substitution action."""

    def __init__(self, m, field, group_gens):
        if m >= field.p:
            raise DegreeTooLargeForChar(f"degree {m} needs characteristic above {m}")
        self.m = m
        self.field = field
        self.group_gens = [field.to_codes(g) for g in group_gens]
        self.labels = tuple(f"X^{i}Y^{m - i}" for i in range(m + 1))
        self.gens = [vm_matrix(field, m, g) for g in self.group_gens]

    @property
    def dim(self):
        return self.m + 1

    def rep(self):
        return la.ModuleRep(self.field, self.gens)


def vm_module(m, F, group_gens):
    return PolyModule(m, F, group_gens).rep()


def det2(F, g):
    return F.sub(F.mul(g[0, 0], g[1, 1]), F.mul(g[0, 1], g[1, 0]))


def model_module(F, i, k, group_gens):
    """det^i tensor V_k."""
    gens = []
    for g in group_gens:
        g = F.to_codes(g)
        d = F.power(det2(F, g), i) if i else np.int64(1)
        gens.append(F.mul(d, vm_matrix(F, k, g)))
    return la.ModuleRep(F, gens)


def gl2_generators(F):
    """Generators of GL(2, p) for the prime subfield: two transvections and diag(g, 1)."""
    g = F.primitive if F.k == 1 else element_of_order(F, F.p - 1).code
    return [np.array([[1, 1], [0, 1]]), np.array([[1, 0], [1, 1]]), np.array([[g, 0], [0, 1]])]


def sl2_generators(F):
    return [np.array([[1, 1], [0, 1]]), np.array([[1, 0], [1, 1]])]


def _tensor_gens(F, m, n, group_gens):
    return [np.kron(vm_matrix(F, m, g), vm_matrix(F, n, g)) % F.q if F.k == 1
            else _kron(F, vm_matrix(F, m, g), vm_matrix(F, n, g)) for g in group_gens]


def _kron(F, a, b):
    out = F.mul(a[:, None, :, None], b[None, :, None, :])
    return out.reshape(a.shape[0] * b.shape[0], a.shape[1] * b.shape[1])


def cg_pi(m, n):
    """X1^i Y1^(m-i) X2^j Y2^(n-j) -> X^(i+j) Y^(m+n-i-j)."""
    P = np.zeros(((m + 1) * (n + 1), m + n + 1), dtype=np.int64)
    for i in range(m + 1):
        for j in range(n + 1):
            P[i * (n + 1) + j, i + j] = 1
    return P


def cg_delta(F, m, n):
    """Multiplication by X1 Y2 - Y1 X2 from V_(m-1,n-1) into V_(m,n)."""
    if m == 0 or n == 0:
        return np.zeros((0, (m + 1) * (n + 1)), dtype=np.int64)
    Dm = np.zeros((m * n, (m + 1) * (n + 1)), dtype=np.int64)
    minus = F.neg(np.int64(1))
    for i in range(m):
        for j in range(n):
            row = i * n + j
            Dm[row, (i + 1) * (n + 1) + j] = 1
            Dm[row, i * (n + 1) + j + 1] = minus
    return Dm


def cg_w_basis(F, m, n):
    """h_k = sum over i + j = k of C(m,i) C(n,j) X1^i Y1^(m-i) X2^j Y2^(n-j)."""
    W = np.zeros((m + n + 1, (m + 1) * (n + 1)), dtype=np.int64)
    for i in range(m + 1):
        for j in range(n + 1):
            W[i + j, i * (n + 1) + j] = comb(m, i) * comb(n, j) % F.p
    return W


def _summands(F, m, n):
    """Subspaces delta^i(W_(m-i,n-i)) of V_(m,n), i = 0..min(m,n), as row bases."""
    out = []
    for i in range(min(m, n) + 1):
        B = cg_w_basis(F, m - i, n - i)
        for s in range(i, 0, -1):
            # apply delta from V_(m-s, n-s) to V_(m-s+1, n-s+1)
            B = F.matmul(B, cg_delta(F, m - s + 1, n - s + 1))
        out.append(B)
    return out


def _identify(F, basis, rep, model):
    """An intertwiner from the model into rep with row space equal to span(basis)."""
    S = la.Subspace.span(F, basis, rep.dim)
    for psi in la.hom_module_space(model, rep):
        if la.rank(F, psi) == model.dim and la.Subspace.span(F, psi, rep.dim) == S:
            return psi
    return None


def cg_tensor_decompose(m, n, F, group_gens=None):
    """V_m (x) V_n as the direct sum of det^i (x) V_(m+n-2i), i = 0..m (m <= n)."""
    if m > n:
        raise ValueError("expects m <= n")
    if m + n >= F.p:
        raise CharTooSmall(f"m + n = {m + n} must be below the characteristic {F.p}")
    if group_gens is None:
        group_gens = gl2_generators(F)
    group_gens = [F.to_codes(g) for g in group_gens]
    dim = (m + 1) * (n + 1)
    rep = la.ModuleRep(F, _tensor_gens(F, m, n, group_gens))
    pi = cg_pi(m, n)
    delta = cg_delta(F, m, n)
    W = cg_w_basis(F, m, n)
    ker_pi = la.Subspace.span(F, la.left_kernel(F, pi), dim)
    im_delta = la.Subspace.span(F, delta, dim) if delta.shape[0] else la.Subspace.zero(F, dim)
    Ws = la.Subspace.span(F, W, dim)
    small = la.ModuleRep(F, [F.mul(det2(F, g), x) for g, x in
                             zip(group_gens, _tensor_gens(F, m - 1, n - 1, group_gens))]) if m else None
    checks = {
        "rank delta = mn": la.rank(F, delta) == m * n if delta.shape[0] else m * n == 0,
        "rank pi = m+n+1": la.rank(F, pi) == m + n + 1,
        "pi after delta = 0": not F.matmul(delta, pi).any() if delta.shape[0] else True,
        "im delta = ker pi": im_delta == ker_pi,
        "im delta meets W in 0": im_delta.intersect(Ws).rank == 0,
        "im delta + W = V": (im_delta + Ws).rank == dim,
        "W invariant": Ws.is_invariant(rep.gens),
        "pi intertwines": la.is_intertwiner(F, pi, rep.gens, [vm_matrix(F, m + n, g) for g in group_gens]),
        "delta intertwines": True if small is None else la.is_intertwiner(F, delta, small.gens, rep.gens),
    }
    mult = []
    summands = _summands(F, m, n)
    for i, B in enumerate(summands):
        k = m + n - 2 * i
        model = model_module(F, i, k, group_gens)
        psi = _identify(F, B, rep, model)
        mult.append({"det": i, "k": k, "dim": k + 1, "identified": psi is not None})
    total = sum(x["dim"] for x in mult)
    checks["dimension identity"] = total == dim
    checks["summands identified"] = all(x["identified"] for x in mult)
    return {"multiplicities": mult, "pi": pi, "delta": delta, "W_basis": W, "checks": checks,
            "summands": summands}


def _swap_index(m):
    idx = np.arange((m + 1) ** 2)
    i, j = idx // (m + 1), idx % (m + 1)
    return j * (m + 1) + i


def cg_wedge_sym_decompose(m, F, group_gens=None):
    """Exterior and symmetric squares of V_m inside V_m (x) V_m."""
    if 2 * m >= F.p:
        raise CharTooSmall(f"2m = {2 * m} must be below the characteristic {F.p}")
    if group_gens is None:
        group_gens = gl2_generators(F)
    dec = cg_tensor_decompose(m, m, F, group_gens)
    d = (m + 1) ** 2
    swap = _swap_index(m)
    E = np.eye(d, dtype=np.int64)
    anti = [F.sub(E[a], E[swap[a]]) for a in range(d) if a < swap[a]]
    sym = [F.add(E[a], E[swap[a]]) if a != swap[a] else E[a] for a in range(d) if a <= swap[a]]
    wedge = la.Subspace.span(F, np.array(anti), d) if anti else la.Subspace.zero(F, d)
    S2 = la.Subspace.span(F, np.array(sym), d)
    wedge_mult, sym_mult = [], []
    inside = True
    for x, B in zip(dec["multiplicities"], dec["summands"]):
        target = wedge if x["det"] % 2 else S2
        inside &= target.contains(B)
        (wedge_mult if x["det"] % 2 else sym_mult).append({k: x[k] for k in ("det", "k", "dim", "identified")})
    checks = {
        "summands in place": bool(inside),
        "wedge dimension": sum(x["dim"] for x in wedge_mult) == m * (m + 1) // 2 == wedge.rank,
        "sym dimension": sum(x["dim"] for x in sym_mult) == (m + 1) * (m + 2) // 2 == S2.rank,
        "tensor checks": all(dec["checks"].values()),
    }
    return {"wedge_multiplicities": wedge_mult, "sym_multiplicities": sym_mult, "checks": checks}


def gamma_algebra(m, F, report=False):
    """Algebra on V_m from the unique SL(2)-quotient of its exterior square."""
    if m % 4 != 2:
        raise BadCongruence(f"m = {m} is not 2 mod 4")
    if 2 * m >= F.p:
        raise CharTooSmall(f"2m = {2 * m} must be below the characteristic {F.p}")
    gens = sl2_generators(F)
    rep = vm_module(m, F, gens)
    H = la.hom_module_space(rep.wedge_square(), rep)
    if not H:
        raise BadCongruence("no intertwiner from the exterior square")
    L = ACAlgebra(F, m + 1, _normalize(F, H[0]))
    if not report:
        return L
    checks = {
        "hom dimension 1": len(H) == 1,
        "generators are automorphisms": all(is_automorphism(L, g) for g in rep.gens),
        "product onto": derived(L).rank == L.dim,
    }
    if F.p >= 5:
        checks["simple"] = is_simple(L)
    return L, checks
