"""Passing between algebras and groups, lifting automorphisms, and audits.

``L_of_G`` rebuilds the algebra from group arithmetic alone: the product of
basis vectors e_i, e_j is the a-part of the p-th root of the commutator
[g_i, g_j]. It never reads the group's stored structure tensor.
"""

from dataclasses import dataclass, field as dc_field

import numpy as np

from . import linalg as la
from .algebra import ACAlgebra, subspace_tests
from .errors import NotInvertible, RootUndefined, TooLargeForExhaustive
from .pcgroup import GroupElem, group_from_algebra, pth_power_root, subgroup_tests

CENTRAL_LIMIT = 10**6


def G_of_L(L):
    return group_from_algebra(L)


def L_of_G(G):
    r = G.r
    T = np.zeros((r * (r - 1) // 2, r), dtype=np.int64)
    for t, (i, j) in enumerate(la.pair_list(r)):
        c = GroupElem(G, *G.comm(G.g(i).a, G.g(i).b, G.g(j).a, G.g(j).b))
        if any(c.a):
            raise RootUndefined(f"[g{i + 1},g{j + 1}] is not a p-th power")
        root = pth_power_root(G, c)["root_of_central"]
        T[t] = root.a
    return ACAlgebra(G.field, r, T)


@dataclass
class DualityWitness:
    """Record of a round trip L -> G(L) -> L(G(L)); the basis map is the identity."""

    source: str
    target: str
    identical: bool
    log: list = dc_field(default_factory=list)


def round_trip(L, name="L"):
    G = G_of_L(L)
    log = [f"G of order {G.p}^{2 * G.r}", f"relations failing: {G.relation_audit()}"]
    L2 = L_of_G(G)
    same = bool(np.array_equal(L.table, L2.table))
    log.append(f"tables identical: {str(same).lower()}")
    G2 = G_of_L(L2)
    same_group = G2.pcp_text() == G.pcp_text()
    log.append(f"presentations identical: {str(same_group).lower()}")
    return DualityWitness(name, f"L(G({name}))", same and same_group, log)


# -- automorphisms ---------------------------------------------------------------

class LiftedMap:
    """Group map defined on generators by g_i -> (e_i M, 0) and z_i -> (0, e_i M).

    On a normal form g^a z^b it evaluates the product of the images. This
    agrees with (a M, b M) on the a-part; the z-part picks up the collection
    correction of the image word.
    """

    def __init__(self, G, M):
        self.G = G
        self.M = np.asarray(M, dtype=np.int64) % G.p

    def __call__(self, u):
        a, b = self.apply(np.asarray(u.a)[None], np.asarray(u.b)[None])
        return GroupElem(self.G, a[0], b[0])

    def apply(self, A, B):
        G, M, r = self.G, self.M, self.G.r
        A = np.asarray(A, dtype=np.int64)
        B = np.asarray(B, dtype=np.int64)
        ra, rb = np.zeros_like(A), np.zeros_like(B)
        zero = np.zeros_like(A)
        for i in range(r):
            gi = np.broadcast_to(M[i], A.shape)
            pa, pb = _batched_power(G, gi, zero, A[:, i])
            ra, rb = G.mul(ra, rb, pa, pb)
        # the z_i images are central, so their product is (0, b M)
        ra, rb = G.mul(ra, rb, zero, G.field.matmul(B, M))
        return ra, rb


def _batched_power(G, a, b, n):
    """Row-wise u_k^(n_k) for exponents 0 <= n_k < p."""
    ra, rb = np.zeros_like(a), np.zeros_like(b)
    for step in range(1, G.p):
        sel = n >= step
        if not sel.any():
            break
        ma, mb = G.mul(ra, rb, a, b)
        ra = np.where(sel[:, None], ma, ra)
        rb = np.where(sel[:, None], mb, rb)
    return ra, rb


def lift_validity(G, Ms):
    """For a stack of matrices, whether the generator images satisfy every relation."""
    p, r = G.p, G.r
    Ms = np.asarray(Ms, dtype=np.int64) % p
    N = Ms.shape[0]
    ok = np.ones(N, dtype=bool)
    zero = np.zeros((N, r), dtype=np.int64)
    img_g = [Ms[:, i, :] for i in range(r)]
    for i in range(r):
        # g_i^p = z_i and z_i^p = 1
        a, b = G.power_by_steps(img_g[i], zero, p)
        ok &= ~a.any(axis=1) & np.all(b == img_g[i], axis=1)
        a, b = G.power_by_steps(zero, img_g[i], p)
        ok &= ~(a.any(axis=1) | b.any(axis=1))
        for j in range(r):
            a, b = G.comm(zero, img_g[j], img_g[i], zero)
            ok &= ~(a.any(axis=1) | b.any(axis=1))
            a, b = G.comm(zero, img_g[i], zero, img_g[j])
            ok &= ~(a.any(axis=1) | b.any(axis=1))
    for t, (i, j) in enumerate(la.pair_list(r)):
        a, b = G.comm(img_g[i], zero, img_g[j], zero)
        # image of z^c is (0, c M)
        want = G.field.matmul(G.table[t][None, None, :], Ms)[:, 0, :]
        ok &= ~a.any(axis=1) & np.all(b == want, axis=1)
    return ok


def lift_automorphism(L, G, M):
    """Return (map, valid): valid iff the generator images satisfy the presentation."""
    M = np.asarray(M, dtype=np.int64) % G.p
    if la.rank(G.field, M) != G.r:
        raise NotInvertible("lifting needs an invertible matrix")
    valid = bool(lift_validity(G, M[None])[0])
    return LiftedMap(G, M), valid


def central_maps_apply(G, Z, A, B):
    """alpha_Z(a, b) = (a, b + a Z)."""
    return A, (B + G.field.matmul(A, Z)) % G.p


def central_automorphism_audit(G, limit=CENTRAL_LIMIT, samples=1000, seed=0, pair_samples=100):
    """Check the maps (a, b) -> (a, b + a Z), Z in M_r(F_p), are automorphisms.

    Exhaustive over all Z when p^(r^2) <= limit, otherwise over ``samples``
    random Z. Each map is checked as a homomorphism on random element pairs and
    through the presentation relations of its generator images.
    """
    p, r, F = G.p, G.r, G.field
    total = p ** (r * r)
    rng = np.random.default_rng(seed)
    exhaustive = total <= limit
    if exhaustive:
        Zs = la.all_vectors(p, r * r).reshape(-1, r, r)
    else:
        Zs = rng.integers(0, p, (samples, r, r))
    N = Zs.shape[0]
    valid = np.ones(N, dtype=bool)
    # relation check on generator images g_i -> (e_i, Z_i), z_i -> (0, e_i)
    E = np.eye(r, dtype=np.int64)
    zero = np.zeros((N, r), dtype=np.int64)
    for i in range(r):
        ga, gb = np.broadcast_to(E[i], (N, r)), Zs[:, i, :]
        a, b = G.power_by_steps(ga, gb, p)
        valid &= ~a.any(axis=1) & np.all(b == E[i], axis=1)
    for t, (i, j) in enumerate(la.pair_list(r)):
        a, b = G.comm(np.broadcast_to(E[i], (N, r)), Zs[:, i, :], np.broadcast_to(E[j], (N, r)), Zs[:, j, :])
        valid &= ~a.any(axis=1) & np.all(b == G.table[t], axis=1)
    # homomorphism on random element pairs, with the same pairs for every Z
    k = 4
    xa, xb = G.random_elements(k, rng)
    ya, yb = G.random_elements(k, rng)
    pa, pb = G.mul(xa, xb, ya, yb)
    for s in range(k):
        lhs = central_maps_apply(G, Zs, np.broadcast_to(pa[s], (N, r))[:, None, :],
                                 np.broadcast_to(pb[s], (N, r))[:, None, :])
        x = central_maps_apply(G, Zs, np.broadcast_to(xa[s], (N, r))[:, None, :],
                               np.broadcast_to(xb[s], (N, r))[:, None, :])
        y = central_maps_apply(G, Zs, np.broadcast_to(ya[s], (N, r))[:, None, :],
                               np.broadcast_to(yb[s], (N, r))[:, None, :])
        ra, rb = G.mul(x[0][:, 0], x[1][:, 0], y[0][:, 0], y[1][:, 0])
        valid &= np.all(ra == lhs[0][:, 0], axis=1) & np.all(rb == lhs[1][:, 0], axis=1)
    # alpha^p = id and commutation on sampled pairs
    ua, ub = G.random_elements(8, rng)
    order_ok = True
    for Z in Zs[rng.choice(N, size=min(N, 200), replace=False)]:
        a, b = ua, ub
        for _ in range(p):
            a, b = central_maps_apply(G, Z, a, b)
        order_ok &= np.array_equal(b, ub)
    commute_ok = True
    composite_central = True
    for _ in range(pair_samples):
        Z1, Z2 = Zs[rng.integers(N)], Zs[rng.integers(N)]
        s1 = central_maps_apply(G, Z2, *central_maps_apply(G, Z1, ua, ub))
        s2 = central_maps_apply(G, Z1, *central_maps_apply(G, Z2, ua, ub))
        commute_ok &= np.array_equal(s1[1], s2[1])
        # the composite is again central: it equals alpha_{Z1 + Z2}
        s3 = central_maps_apply(G, (Z1 + Z2) % p, ua, ub)
        composite_central &= np.array_equal(s1[1], s3[1]) and np.array_equal(s1[0], ua)
    count = int(valid.sum()) if exhaustive else (total if valid.all() else None)
    return {
        "count": count,
        "expected": total,
        "exhaustive": exhaustive,
        "checked": N,
        "all_valid": bool(valid.all()),
        "order_divides_p": bool(order_ok),
        "commuting": bool(commute_ok),
        "composition_central": bool(composite_central),
        "elementary_abelian": bool(valid.all() and order_ok and commute_ok),
    }


# -- correspondence audit ------------------------------------------------------

def random_subspaces(F, n, d, count, rng):
    """Up to ``count`` distinct random d-dimensional subspaces of F^n."""
    out, seen = [], set()
    tries = 0
    while len(out) < count and tries < 20 * count:
        tries += 1
        S = la.Subspace.span(F, rng.integers(0, F.q, (d, n)), n)
        if S.rank == d and S.key() not in seen:
            seen.add(S.key())
            out.append(S)
    return out


def correspondence_audit(L, G=None, dims=None, extra=(), limit=10**4, sample=None, seed=0):
    """Compare subalgebra/ideal with powerful/powerfully embedded on every subspace.

    ``dims`` restricts the subspace dimensions enumerated (at most ``limit``
    subspaces); ``extra`` adds more subspaces (for instance known ideals). ``sample`` maps a dimension to a
    number of random subspaces of that dimension, drawn instead of the full list.
    """
    if G is None:
        G = G_of_L(L)
    F, r = L.field, L.dim
    sample = dict(sample or {})
    if dims is None and sample:
        dims = []
    n_sub = la.subspace_count(F.q, r, dims)
    if n_sub > limit:
        raise TooLargeForExhaustive(f"{n_sub} subspaces exceed the audit budget {limit}")
    rng = np.random.default_rng(seed)
    subspaces = list(la.all_subspaces(F, r, dims))
    for d in sorted(sample):
        subspaces += random_subspaces(F, r, d, sample[d], rng)
    subspaces += list(extra)
    seen = set()
    rows = []
    for S in subspaces:
        if S.key() in seen:
            continue
        seen.add(S.key())
        alg = subspace_tests(L, S)
        grp = subgroup_tests(G, S)
        rows.append({
            "dim": S.rank,
            "basis": S.basis.tolist(),
            "is_subalgebra": alg["is_subalgebra"],
            "powerful": grp["powerful"],
            "is_ideal": alg["is_ideal"],
            "powerfully_embedded": grp["powerfully_embedded"],
        })
    mismatches = [row for row in rows if row["is_subalgebra"] != row["powerful"]
                  or row["is_ideal"] != row["powerfully_embedded"]]
    proper = [row for row in rows if 0 < row["dim"] < r]
    return {
        "rows": rows,
        "audited": len(rows),
        "proper_nonzero": len(proper),
        "subalgebras": sum(row["is_subalgebra"] for row in proper),
        "ideals": sum(row["is_ideal"] for row in proper),
        "powerful": sum(row["powerful"] for row in proper),
        "powerfully_embedded": sum(row["powerfully_embedded"] for row in proper),
        "mismatches": mismatches,
        "agree": not mismatches,
    }
