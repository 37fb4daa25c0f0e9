"""Groups of order p^(2r) given by a class-2 polycyclic presentation.

Generators g_1..g_r, z_1..z_r with relations

    g_i^p = z_i,  z_i^p = 1,  [z_j, g_i] = 1,  [z_i, z_j] = 1,
    [g_i, g_j] = z_1^c1 ... z_r^cr   (i < j, c = c^(i,j)).

Every element has the normal form g^a z^b with a, b in {0..p-1}^r. The
product of normal forms has the closed form

    (a, b)(a', b') = (a + a' mod p, b + b' + carry - Delta)

where carry_i = floor((a_i + a'_i) / p) and
Delta_k = sum_{i<j} a_j a'_i c_k^(i,j): moving g_i^(a'_i) left past g_j^(a_j)
produces [g_j, g_i]^(a_j a'_i). All operations below work on stacks of
exponent vectors; :class:`GroupElem` wraps a single element.
"""

import numpy as np

from . import linalg as la
from .errors import (
    DimensionMismatch,
    EvenPrime,
    InconsistentPresentation,
    NotCentral,
    NotPrime,
    NotPrimeField,
    TooLargeForExhaustive,
)
from .field import field_make, is_prime

EXHAUSTIVE_LIMIT = 10**7
PAIR_LIMIT = 4 * 10**6


class PcGroup:
    def __init__(self, p, r, table, check=True):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if p == 2:
            raise EvenPrime("the presentation needs an odd prime")
        self.p = int(p)
        self.r = int(r)
        D = self.r * (self.r - 1) // 2
        T = np.array(table, dtype=np.int64).reshape(D, self.r) % self.p
        T.setflags(write=False)
        self.table = T
        self.field = field_make(self.p)
        self._I, self._J = (np.array(x, dtype=np.int64) for x in zip(*la.pair_list(self.r))) \
            if D else (np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64))
        if check:
            bad = self.relation_audit()
            if bad:
                raise InconsistentPresentation(f"relations fail: {bad}")

    def __repr__(self):
        return f"PcGroup(p={self.p}, r={self.r})"

    @property
    def order(self):
        return self.p ** (2 * self.r)

    # -- batched arithmetic on exponent vectors ------------------------------------

    def mul(self, a, b, a2, b2):
        p = self.p
        a, b, a2, b2 = (np.asarray(x, dtype=np.int64) for x in (a, b, a2, b2))
        s = a + a2
        carry = s // p
        if len(self._I):
            w = a[..., self._J] * a2[..., self._I] % p
            delta = w @ self.table
        else:
            delta = 0
        return s % p, (b + b2 + carry - delta) % p

    def inv(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        na = (-a) % self.p
        _, beta = self.mul(a, b, na, np.zeros_like(a))
        return na, (-beta) % self.p

    def power(self, a, b, n):
        """u^n by square and multiply (n may be negative)."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if n < 0:
            a, b = self.inv(a, b)
            n = -n
        ra, rb = np.zeros_like(a), np.zeros_like(b)
        while n:
            if n & 1:
                ra, rb = self.mul(ra, rb, a, b)
            a, b = self.mul(a, b, a, b)
            n >>= 1
        return ra, rb

    def power_by_steps(self, a, b, n):
        """u^n by n - 1 successive multiplications (oracle for the closed forms)."""
        ra, rb = np.zeros_like(np.asarray(a)), np.zeros_like(np.asarray(b))
        for _ in range(n):
            ra, rb = self.mul(ra, rb, a, b)
        return ra, rb

    def comm(self, a, b, a2, b2):
        """[u, v] = u^-1 v^-1 u v."""
        ia, ib = self.inv(a, b)
        ja, jb = self.inv(a2, b2)
        x = self.mul(ia, ib, ja, jb)
        x = self.mul(*x, a, b)
        return self.mul(*x, a2, b2)

    # -- elements --------------------------------------------------------------------

    def identity(self):
        return GroupElem(self, np.zeros(self.r, dtype=np.int64), np.zeros(self.r, dtype=np.int64))

    def elem(self, a, b=None):
        a = np.asarray(a, dtype=np.int64) % self.p
        b = np.zeros(self.r, dtype=np.int64) if b is None else np.asarray(b, dtype=np.int64) % self.p
        if a.shape != (self.r,) or b.shape != (self.r,):
            raise DimensionMismatch(f"exponent vectors must have length {self.r}")
        return GroupElem(self, a, b)

    def g(self, i):
        e = np.zeros(self.r, dtype=np.int64)
        e[i] = 1
        return GroupElem(self, e, np.zeros(self.r, dtype=np.int64))

    def z(self, i):
        e = np.zeros(self.r, dtype=np.int64)
        e[i] = 1
        return GroupElem(self, np.zeros(self.r, dtype=np.int64), e)

    def all_elements(self, limit=EXHAUSTIVE_LIMIT):
        """All elements as a pair of (N, r) arrays, a-part most significant."""
        if self.order > limit:
            raise TooLargeForExhaustive(f"group of order {self.order} exceeds {limit}")
        V = la.all_vectors(self.p, 2 * self.r)
        return V[:, :self.r], V[:, self.r:]

    def random_elements(self, n, rng):
        return (rng.integers(0, self.p, (n, self.r)), rng.integers(0, self.p, (n, self.r)))

    # -- presentation --------------------------------------------------------------

    def relation_audit(self):
        """Names of the presentation relations that fail under the multiplication."""
        bad = []
        p, r = self.p, self.r
        E = np.eye(r, dtype=np.int64)
        O = np.zeros((r, r), dtype=np.int64)
        a, b = self.power_by_steps(E, O, p)
        if not (np.array_equal(a, O) and np.array_equal(b, E)):
            bad.append("gi^p = zi")
        a, b = self.power_by_steps(O, E, p)
        if a.any() or b.any():
            bad.append("zi^p = 1")
        i, j = np.meshgrid(np.arange(r), np.arange(r), indexing="ij")
        i, j = i.ravel(), j.ravel()
        a, b = self.comm(O[j], E[j], E[i], O[i])
        if a.any() or b.any():
            bad.append("[zj,gi] = 1")
        a, b = self.comm(O[i], E[i], O[j], E[j])
        if a.any() or b.any():
            bad.append("[zi,zj] = 1")
        if len(self._I):
            a, b = self.comm(E[self._I], O[self._I], E[self._J], O[self._J])
            if a.any() or not np.array_equal(b, self.table):
                bad.append("[gi,gj] = prod zk^ck")
        return bad

    def pcp_text(self):
        """The presentation as ASCII lines, generators numbered from 1."""
        p, r = self.p, self.r
        lines = [f"g{i + 1}^{p} = z{i + 1}" for i in range(r)]
        lines += [f"z{i + 1}^{p} = 1" for i in range(r)]
        lines += [f"[z{j + 1},g{i + 1}] = 1" for i in range(r) for j in range(r)]
        lines += [f"[z{i + 1},z{j + 1}] = 1" for i in range(r) for j in range(i + 1, r)]
        for t, (i, j) in enumerate(la.pair_list(r)):
            word = " ".join(f"z{k + 1}^{int(c)}" for k, c in enumerate(self.table[t]) if c) or "1"
            lines.append(f"[g{i + 1},g{j + 1}] = {word}")
        return "\n".join(lines) + "\n"


class GroupElem:
    """Element g^a z^b of a :class:`PcGroup` in normal form."""

    __slots__ = ("group", "a", "b")

    def __init__(self, group, a, b):
        self.group = group
        self.a = tuple(int(x) for x in a)
        self.b = tuple(int(x) for x in b)

    def __mul__(self, other):
        a, b = self.group.mul(self.a, self.b, other.a, other.b)
        return GroupElem(self.group, a, b)

    def inverse(self):
        return GroupElem(self.group, *self.group.inv(self.a, self.b))

    def __pow__(self, n):
        return GroupElem(self.group, *self.group.power(self.a, self.b, int(n)))

    def __eq__(self, other):
        return isinstance(other, GroupElem) and self.group is other.group and \
            self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def is_identity(self):
        return not any(self.a) and not any(self.b)

    def __repr__(self):
        return f"GroupElem(a={list(self.a)}, b={list(self.b)})"


def group_arith(G, op, u, v=None):
    """mul, inv, pow (v an integer) or comm on group elements."""
    if op == "mul":
        return u * v
    if op == "inv":
        return u.inverse()
    if op == "pow":
        return u ** int(v)
    if op == "comm":
        return GroupElem(G, *G.comm(u.a, u.b, v.a, v.b))
    raise ValueError(f"unknown operation {op!r}")


def group_from_algebra(L):
    if L.field.k != 1:
        raise NotPrimeField("the group needs an algebra over a prime field")
    return PcGroup(L.field.p, L.dim, L.table)


def pth_power_root(G, u, want_root=False):
    """u^p = (0, a) by the closed form and, for u = (0, b), the root (b, 0)."""
    power = GroupElem(G, np.zeros(G.r, dtype=np.int64), u.a)
    root = None
    if not any(u.a):
        root = GroupElem(G, u.b, np.zeros(G.r, dtype=np.int64))
    elif want_root:
        raise NotCentral("p-th roots are defined only on elements (0, b)")
    return {"power": power, "root_of_central": root}


def pth_root(G, u):
    return pth_power_root(G, u, want_root=True)["root_of_central"]


def direct_power(G, k):
    """G x ... x G (k factors) with generators of each factor numbered consecutively."""
    r = G.r
    R = r * k
    T = np.zeros((R * (R - 1) // 2, R), dtype=np.int64)
    for f in range(k):
        off = f * r
        for t, (i, j) in enumerate(la.pair_list(r)):
            T[la.pair_index(off + i, off + j, R), off:off + r] = G.table[t]
    return PcGroup(G.p, R, T)


# -- invariants ------------------------------------------------------------------

def _span(F, vectors, r):
    V = np.asarray(vectors, dtype=np.int64).reshape(-1, r)
    return la.Subspace.span(F, V, r)


def group_invariants(G, limit=EXHAUSTIVE_LIMIT):
    """Order, exponent, derived subgroup, Frattini subgroup and center by scanning G."""
    F, p, r = G.field, G.p, G.r
    A, B = G.all_elements(limit)
    pa, pb = G.power_by_steps(A, B, p)
    has_p = (pa.any(axis=1) | pb.any(axis=1))
    qa, qb = G.power_by_steps(pa, pb, p)
    if qa.any() or qb.any():
        raise InconsistentPresentation("an element has order exceeding p^2")
    exponent = p * p if has_p.any() else (p if G.order > 1 else 1)
    E = np.eye(r, dtype=np.int64)
    O = np.zeros((r, r), dtype=np.int64)
    # G' is generated by central commutators of generators (class 2)
    if len(G._I):
        ca, cb = G.comm(E[G._I], O[G._I], E[G._J], O[G._J])
        derived_a = _span(F, ca, r)
        derived = _span(F, cb, r)
    else:
        derived_a = la.Subspace.zero(F, r)
        derived = la.Subspace.zero(F, r)
    powers = _span(F, pb, r) if not pa.any() else None
    frattini = derived + powers if powers is not None else None
    # center: elements commuting with every generator
    central = np.ones(A.shape[0], dtype=bool)
    for i in range(r):
        ga = np.broadcast_to(E[i], A.shape)
        gb = np.zeros_like(B)
        ca, cb = G.comm(A, B, ga, gb)
        central &= ~(ca.any(axis=1) | cb.any(axis=1))
    center_a = _span(F, A[central], r)
    center_b = _span(F, B[central], r)
    full = la.Subspace.full(F, r)
    flags = {
        "derived_in_z_part": derived_a.rank == 0,
        "derived_eq_frattini": frattini is not None and derived == frattini,
        "frattini_eq_center": frattini == full and center_a.rank == 0 and center_b == full,
        "quotient_elementary_abelian": powers is not None,
        "frattini_elementary_abelian": True,
    }
    za, zb = G.power_by_steps(O, E, p)
    flags["frattini_elementary_abelian"] = not (za.any() or zb.any())
    return {
        "order": G.order,
        "exponent": exponent,
        "derived": derived,
        "frattini": frattini,
        "center": (center_a, center_b),
        "center_order": int(central.sum()),
        "lemma1_flags": flags,
    }


def _subgroup_elements(G, S):
    r = G.r
    coords = la.all_vectors(G.p, S.rank)
    a = G.field.matmul(coords, S.basis) if S.rank else np.zeros((1, r), dtype=np.int64)
    bs = la.all_vectors(G.p, r)
    A = np.repeat(a, bs.shape[0], axis=0)
    B = np.tile(bs, (a.shape[0], 1))
    return A, B


def _distinct_rows(p, V):
    codes = np.unique(la.vector_codes(p, V))
    return la.all_vectors(p, V.shape[1])[codes] if p ** V.shape[1] <= 1 << 20 else np.unique(V, axis=0)


def _comm_span(G, A, B, A2, B2):
    """Span of the z-parts of all commutators [x, y], x from (A, B), y from (A2, B2)."""
    F, r = G.field, G.r
    out = la.Subspace.zero(F, r)
    n2 = A2.shape[0]
    step = max(1, PAIR_LIMIT // max(n2, 1) // 8)
    nonz = False
    for s in range(0, A.shape[0], step):
        x_a, x_b = A[s:s + step], B[s:s + step]
        m = x_a.shape[0]
        ca, cb = G.comm(np.repeat(x_a, n2, 0), np.repeat(x_b, n2, 0), np.tile(A2, (m, 1)), np.tile(B2, (m, 1)))
        if ca.any():
            nonz = True
        out = out + la.Subspace.span(F, _distinct_rows(G.p, cb), r)
    return out, nonz


def subgroup_tests(G, S, limit=10**6, pair_limit=PAIR_LIMIT):
    """Powerful / powerfully embedded tests for the preimage H of S in G.

    H = {(a, b) : a in S}. Commutators are taken over all element pairs when
    the pair count is within ``pair_limit``; otherwise over generating sets of H
    and G, which gives the same subgroups because G has class 2.
    """
    F, p, r = G.field, G.p, G.r
    if not isinstance(S, la.Subspace):
        S = la.Subspace.span(F, S, r)
    if S.n != r:
        raise DimensionMismatch("subspace lives in a different dimension")
    size = p ** (S.rank + r)
    if size > limit:
        raise TooLargeForExhaustive(f"subgroup of order {size} exceeds {limit}")
    HA, HB = _subgroup_elements(G, S)
    # H^p from the elements themselves
    pa, pb = G.power_by_steps(HA, HB, p)
    if pa.any():
        raise InconsistentPresentation("p-th powers are not central")
    Hp = la.Subspace.span(F, _distinct_rows(p, pb), r)
    if size * size <= pair_limit:
        Hd, bad1 = _comm_span(G, HA, HB, HA, HB)
    else:
        gens_a = np.vstack([S.basis, np.zeros((r, r), dtype=np.int64)])
        gens_b = np.vstack([np.zeros((S.rank, r), dtype=np.int64), np.eye(r, dtype=np.int64)])
        Hd, bad1 = _comm_span(G, gens_a, gens_b, gens_a, gens_b)
    if size * G.order <= pair_limit:
        GA, GB = G.all_elements()
        HG, bad2 = _comm_span(G, HA, HB, GA, GB)
    else:
        gens_a = np.vstack([S.basis, np.zeros((r, r), dtype=np.int64)])
        gens_b = np.vstack([np.zeros((S.rank, r), dtype=np.int64), np.eye(r, dtype=np.int64)])
        E = np.eye(r, dtype=np.int64)
        GA = np.vstack([E, np.zeros((r, r), dtype=np.int64)])
        GB = np.vstack([np.zeros((r, r), dtype=np.int64), E])
        HG, bad2 = _comm_span(G, gens_a, gens_b, GA, GB)
    if bad1 or bad2:
        raise InconsistentPresentation("commutators are not central")
    return {"powerful": Hd <= Hp, "powerfully_embedded": HG <= Hp}
