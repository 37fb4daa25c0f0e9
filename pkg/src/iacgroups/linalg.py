"""Dense linear algebra over finite fields.

Conventions: vectors are rows and matrices act on the right, ``v -> v @ M``.
Matrices are numpy int64 arrays of field codes; the owning :class:`Field` is
passed alongside. The exterior-square basis is ``e_i ^ e_j`` for i < j in
lexicographic order (see :func:`pair_list`).
"""

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import combinations, product
from typing import NamedTuple, Optional

import numpy as np

from .errors import (
    DimensionMismatch,
    GeneratorCountMismatch,
    NotInvertible,
    NotSquare,
    TooLargeForExhaustive,
)

PROJECTIVE_LIMIT = 10**6
_CHUNK = 1 << 14


def identity(F, n):
    return np.eye(n, dtype=np.int64)


def zeros(n, m=None):
    return np.zeros((n, n if m is None else m), dtype=np.int64)


# -- elimination ------------------------------------------------------------------

def rref(F, M):
    """Reduced row-echelon form. Returns (R, pivots) with zero rows dropped."""
    R = np.array(M, dtype=np.int64, copy=True)
    if R.ndim != 2:
        raise DimensionMismatch("rref expects a 2-d array")
    m, n = R.shape
    pivots = []
    row = 0
    for c in range(n):
        if row == m:
            break
        nz = np.nonzero(R[row:, c])[0]
        if nz.size == 0:
            continue
        r0 = row + nz[0]
        if r0 != row:
            R[[row, r0]] = R[[r0, row]]
        R[row] = F.mul(R[row], F.inv_table[R[row, c]])
        f = R[:, c].copy()
        f[row] = 0
        if f.any():
            R = F.sub(R, F.mul(f[:, None], R[row][None, :]))
        pivots.append(c)
        row += 1
    return R[:row], pivots


def rank(F, M):
    M = np.asarray(M)
    if M.size == 0:
        return 0
    return len(rref(F, M)[1])


def kernel(F, M):
    """Basis (rows, canonical RREF) of the right kernel {x : M x^T = 0}."""
    M = np.asarray(M, dtype=np.int64)
    n = M.shape[1]
    R, piv = rref(F, M)
    free = [c for c in range(n) if c not in piv]
    K = np.zeros((len(free), n), dtype=np.int64)
    for t, f in enumerate(free):
        K[t, f] = 1
        for row, pc in enumerate(piv):
            K[t, pc] = F.neg(R[row, f])
    if len(free):
        K = rref(F, K)[0]
    return K


def left_kernel(F, M):
    """Basis of {x : x M = 0}."""
    return kernel(F, np.asarray(M).T)


class SolveResult(NamedTuple):
    rank: int
    rref: np.ndarray
    pivots: list
    kernel: np.ndarray
    solution: Optional[np.ndarray]


class NoSolution:
    """Marker for an inconsistent system."""

    def __repr__(self):
        return "NoSolution"

    def __bool__(self):
        return False


NO_SOLUTION = NoSolution()


def rref_solve(F, M, rhs=None):
    """Row-reduce M and optionally solve M X = rhs (rhs has M's row count).

    ``solution`` is a particular solution, ``NO_SOLUTION`` when inconsistent,
    or None when no rhs was given.
    """
    M = np.asarray(M, dtype=np.int64)
    R, piv = rref(F, M)
    K = kernel(F, M)
    sol = None
    if rhs is not None:
        rhs = np.asarray(rhs, dtype=np.int64)
        vec = rhs.ndim == 1
        if vec:
            rhs = rhs[:, None]
        if rhs.shape[0] != M.shape[0]:
            raise DimensionMismatch("rhs row count differs from matrix")
        n = M.shape[1]
        aug, apiv = rref(F, np.hstack([M, rhs]))
        if any(c >= n for c in apiv):
            sol = NO_SOLUTION
        else:
            X = np.zeros((n, rhs.shape[1]), dtype=np.int64)
            for row, pc in enumerate(apiv):
                X[pc] = aug[row, n:]
            sol = X[:, 0] if vec else X
    return SolveResult(len(piv), R, piv, K, sol)


def inverse(F, M):
    M = np.asarray(M, dtype=np.int64)
    n = M.shape[0]
    if M.shape != (n, n):
        raise NotSquare("inverse of a non-square matrix")
    R, piv = rref(F, np.hstack([M, identity(F, n)]))
    if len(piv) < n or piv[n - 1] != n - 1:
        raise NotInvertible("matrix is singular")
    return R[:, n:]


def det(F, M):
    R = np.array(M, dtype=np.int64, copy=True)
    n = R.shape[0]
    if R.shape != (n, n):
        raise NotSquare("determinant of a non-square matrix")
    d = np.int64(1)
    for c in range(n):
        nz = np.nonzero(R[c:, c])[0]
        if nz.size == 0:
            return 0
        r0 = c + nz[0]
        if r0 != c:
            R[[c, r0]] = R[[r0, c]]
            d = F.neg(d)
        piv = R[c, c]
        d = F.mul(d, piv)
        below = F.mul(R[c + 1:, c], F.inv_table[piv])
        R[c + 1:] = F.sub(R[c + 1:], F.mul(below[:, None], R[c][None, :]))
    return int(d)


def matpow(F, M, e):
    M = np.asarray(M, dtype=np.int64)
    if e < 0:
        M, e = inverse(F, M), -e
    out = identity(F, M.shape[0])
    while e:
        if e & 1:
            out = F.matmul(out, M)
        M = F.matmul(M, M)
        e >>= 1
    return out


def batch_rref(F, A):
    """Row-reduce a stack of matrices (N, m, n); returns (R, ranks).

    Each R[b] is the canonical RREF padded with zero rows.
    """
    R = np.array(A, dtype=np.int64, copy=True)
    N, m, n = R.shape
    ranks = np.zeros(N, dtype=np.int64)
    rows = np.arange(m)
    for c in range(n):
        mask = (R[:, :, c] != 0) & (rows[None, :] >= ranks[:, None])
        has = mask.any(axis=1)
        if not has.any():
            continue
        idx = np.nonzero(has)[0]
        first = np.argmax(mask[idx], axis=1)
        tgt = ranks[idx]
        swap = first != tgt
        if swap.any():
            si, sf, st = idx[swap], first[swap], tgt[swap]
            tmp = R[si, st].copy()
            R[si, st] = R[si, sf]
            R[si, sf] = tmp
        prow = R[idx, tgt]
        prow = F.mul(prow, F.inv_table[prow[:, c]][:, None])
        R[idx, tgt] = prow
        fac = R[idx, :, c].copy()
        fac[np.arange(idx.size), tgt] = 0
        R[idx] = F.sub(R[idx], F.mul(fac[:, :, None], prow[:, None, :]))
        ranks[idx] += 1
    return R, ranks


def batch_rank(F, A):
    A = np.asarray(A)
    if A.shape[0] == 0:
        return np.zeros(0, dtype=np.int64)
    out = np.empty(A.shape[0], dtype=np.int64)
    for s in range(0, A.shape[0], _CHUNK):
        out[s:s + _CHUNK] = batch_rref(F, A[s:s + _CHUNK])[1]
    return out


# -- enumeration ------------------------------------------------------------------

def all_vectors(q, n):
    """All of F_q^n as codes, first coordinate most significant."""
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    return np.indices((q,) * n, dtype=np.int64).reshape(n, -1).T


def vector_codes(q, V):
    """Integer code of each row, consistent with :func:`all_vectors` order."""
    V = np.asarray(V, dtype=np.int64)
    n = V.shape[-1]
    w = q ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return V @ w


def projective_count(q, n):
    return (q**n - 1) // (q - 1)


def subspace_count(q, n, dims=None):
    """Number of subspaces of F_q^n with dimension in ``dims`` (Gaussian binomials)."""
    total = 0
    for k in (range(n + 1) if dims is None else dims):
        num = den = 1
        for i in range(k):
            num *= q ** (n - i) - 1
            den *= q ** (i + 1) - 1
        total += num // den
    return total


def projective_points(q, n):
    """Iterate over chunks of normalized nonzero vectors (first nonzero entry 1)."""
    for lead in range(n):
        tail = n - lead - 1
        total = q**tail
        for s in range(0, total, _CHUNK):
            cnt = min(_CHUNK, total - s)
            codes = np.arange(s, s + cnt, dtype=np.int64)
            P = np.zeros((cnt, n), dtype=np.int64)
            P[:, lead] = 1
            for t in range(tail):
                P[:, n - 1 - t] = codes % q
                codes = codes // q
            yield P


# -- subspaces --------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Subspace:
    """Subspace of F^n stored by its canonical RREF basis."""

    field: object
    n: int
    basis: np.ndarray

    @classmethod
    def span(cls, F, vectors, n=None):
        V = np.asarray(vectors, dtype=np.int64)
        if V.size == 0:
            if n is None:
                n = V.shape[-1] if V.ndim == 2 else 0
            return cls(F, n, np.zeros((0, n), dtype=np.int64))
        if V.ndim == 1:
            V = V[None, :]
        if n is not None and V.shape[1] != n:
            raise DimensionMismatch("vector length differs from ambient dimension")
        R, _ = rref(F, V)
        R.setflags(write=False)
        return cls(F, V.shape[1], R)

    @classmethod
    def zero(cls, F, n):
        return cls(F, n, np.zeros((0, n), dtype=np.int64))

    @classmethod
    def full(cls, F, n):
        return cls(F, n, identity(F, n))

    @property
    def rank(self):
        return self.basis.shape[0]

    dim = rank

    def key(self):
        return (self.n, self.basis.tobytes())

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.field == other.field
                and self.n == other.n and np.array_equal(self.basis, other.basis))

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"Subspace(dim={self.rank}, n={self.n}, basis={self.basis.tolist()})"

    def contains(self, vectors):
        V = np.asarray(vectors, dtype=np.int64)
        if V.ndim == 1:
            V = V[None, :]
        if V.shape[1] != self.n:
            raise DimensionMismatch("vector length differs from ambient dimension")
        if V.shape[0] == 0:
            return True
        return rank(self.field, np.vstack([self.basis, V])) == self.rank

    def __le__(self, other):
        return other.contains(self.basis)

    def __add__(self, other):
        return Subspace.span(self.field, np.vstack([self.basis, other.basis]), self.n)

    def intersect(self, other):
        if self.rank == 0 or other.rank == 0:
            return Subspace.zero(self.field, self.n)
        F = self.field
        # x A = y B  <=>  (x, -y) [A; B] = 0
        K = left_kernel(F, np.vstack([self.basis, other.basis]))
        if K.shape[0] == 0:
            return Subspace.zero(F, self.n)
        return Subspace.span(F, F.matmul(K[:, :self.rank], self.basis), self.n)

    def is_invariant(self, mats):
        if self.rank == 0:
            return True
        return all(self.contains(self.field.matmul(self.basis, g)) for g in mats)

    def coordinates(self, vectors):
        """Coordinates of vectors (rows) with respect to the RREF basis."""
        V = np.asarray(vectors, dtype=np.int64)
        piv = [int(np.nonzero(row)[0][0]) for row in self.basis]
        return V[..., piv]


def all_subspaces(F, n, dims=None):
    """Enumerate every subspace of F^n of the requested dimensions in canonical RREF."""
    q = F.q
    if dims is None:
        dims = range(n + 1)
    for k in dims:
        if k == 0:
            yield Subspace.zero(F, n)
            continue
        for piv in combinations(range(n), k):
            free = [(t, c) for t in range(k) for c in range(piv[t] + 1, n) if c not in piv]
            base = np.zeros((k, n), dtype=np.int64)
            for t, c in enumerate(piv):
                base[t, c] = 1
            for vals in product(range(q), repeat=len(free)):
                B = base.copy()
                for (t, c), v in zip(free, vals):
                    B[t, c] = v
                B.setflags(write=False)
                yield Subspace(F, n, B)


# -- exterior square -------------------------------------------------------------

@lru_cache(maxsize=None)
def pair_list(d):
    return tuple((i, j) for i in range(d) for j in range(i + 1, d))


def pair_index(i, j, d):
    """Position of e_i ^ e_j (i < j) in the lexicographic exterior basis."""
    if not 0 <= i < j < d:
        raise ValueError("pair_index needs 0 <= i < j < d")
    return i * d - i * (i + 1) // 2 + (j - i - 1)


@lru_cache(maxsize=None)
def _pair_arrays(d):
    P = np.array(pair_list(d), dtype=np.int64).reshape(-1, 2)
    return P[:, 0], P[:, 1]


def wedge_square(F, M):
    """Induced action of M (or a stack of matrices) on the exterior square."""
    M = np.asarray(M, dtype=np.int64)
    d = M.shape[-1]
    if M.shape[-2] != d:
        raise NotSquare("wedge_square needs square matrices")
    I, J = _pair_arrays(d)
    Mi_k = M[..., I[:, None], I[None, :]]
    Mj_l = M[..., J[:, None], J[None, :]]
    Mi_l = M[..., I[:, None], J[None, :]]
    Mj_k = M[..., J[:, None], I[None, :]]
    return F.sub(F.mul(Mi_k, Mj_l), F.mul(Mi_l, Mj_k))


def wedge_vectors(F, x, y):
    """Coordinates of x ^ y in the exterior basis (supports stacks)."""
    x = np.asarray(x, dtype=np.int64)
    y = np.asarray(y, dtype=np.int64)
    I, J = _pair_arrays(x.shape[-1])
    return F.sub(F.mul(x[..., I], y[..., J]), F.mul(x[..., J], y[..., I]))


# -- modules ----------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class ModuleRep:
    """A module given by invertible generator matrices acting on row vectors."""

    field: object
    gens: tuple
    labels: tuple = dc_field(default=())

    def __post_init__(self):
        gens = tuple(np.array(g, dtype=np.int64) for g in self.gens)
        if not gens:
            raise DimensionMismatch("a module needs at least one generator")
        d = gens[0].shape[0]
        for g in gens:
            if g.shape != (d, d):
                raise DimensionMismatch("generators must be square of one size")
            if rank(self.field, g) != d:
                raise NotInvertible("module generators must be invertible")
            g.setflags(write=False)
        object.__setattr__(self, "gens", gens)
        object.__setattr__(self, "labels", tuple(self.labels))

    @property
    def dim(self):
        return self.gens[0].shape[0]

    def wedge_square(self):
        return ModuleRep(self.field, [wedge_square(self.field, g) for g in self.gens], self.labels)


def spin_matrices(F, seeds, mats):
    """Smallest subspace containing the seeds and mapped into itself by every matrix."""
    S = np.asarray(seeds, dtype=np.int64)
    if S.ndim == 1:
        S = S[None, :]
    n = S.shape[1]
    for g in mats:
        if g.shape != (n, n):
            raise DimensionMismatch("seed length differs from matrix size")
    B, _ = rref(F, S)
    new = B
    while new.shape[0]:
        imgs = np.vstack([F.matmul(new, g) for g in mats]) if mats else new[:0]
        R, _ = rref(F, np.vstack([B, imgs]))
        if R.shape[0] == B.shape[0]:
            break
        # only vectors outside the old span need further images
        new = R
        B = R
    B.setflags(write=False)
    return Subspace(F, n, B)


def spin(seeds, rep):
    S = np.asarray(seeds, dtype=np.int64)
    if S.ndim == 1:
        S = S[None, :]
    if S.shape[0] == 0:
        raise DimensionMismatch("spin needs at least one seed")
    if S.shape[1] != rep.dim:
        raise DimensionMismatch("seed length differs from module dimension")
    return spin_matrices(rep.field, S, list(rep.gens))


def matrix_algebra_basis(F, mats, unital=True):
    """Basis (stack of d x d matrices) of the algebra generated by ``mats``."""
    mats = [np.asarray(m, dtype=np.int64) for m in mats]
    d = mats[0].shape[0]
    seeds = [identity(F, d).ravel()] if unital else [m.ravel() for m in mats]
    I = identity(F, d)
    right = [np.kron(I, m) for m in mats]
    S = spin_matrices(F, np.array(seeds), right)
    return S.basis.reshape(-1, d, d)


def _scan_min_spin(F, alg, d, limit, stop_below=None):
    """Yield (points, spin ranks) over all projective points."""
    if projective_count(F.q, d) > limit:
        raise TooLargeForExhaustive(
            f"{projective_count(F.q, d)} projective points exceed the limit {limit}")
    for P in projective_points(F.q, d):
        imgs = F.matmul(P[:, None, None, :], alg[None, :, :, :])[:, :, 0, :]
        yield P, batch_rank(F, imgs)


def is_irreducible_matrices(F, mats, limit=PROJECTIVE_LIMIT):
    d = mats[0].shape[0]
    if d == 1:
        return True
    alg = matrix_algebra_basis(F, mats)
    if alg.shape[0] == d * d:
        # the full matrix algebra moves any nonzero vector onto all of F^d
        return True
    for _, ranks in _scan_min_spin(F, alg, d, limit):
        if (ranks < d).any():
            return False
    return True


def is_irreducible(rep, limit=PROJECTIVE_LIMIT):
    """Decide irreducibility exactly.

    A generated matrix algebra equal to Mat_d settles it at once; otherwise every
    projective point is spun and the module is reducible iff some spin is proper.
    """
    return is_irreducible_matrices(rep.field, list(rep.gens), limit)


def hom_module_space(repV, repW):
    """Basis of {psi : g_V psi = psi g_W for aligned generators} as dV x dW matrices."""
    if len(repV.gens) != len(repW.gens):
        raise GeneratorCountMismatch("modules have different generator counts")
    repV.field.check_same(repW.field)
    F = repV.field
    dV, dW = repV.dim, repW.dim
    IV, IW = identity(F, dV), identity(F, dW)
    blocks = [F.sub(np.kron(gV, IW), np.kron(IV, gW.T)) for gV, gW in zip(repV.gens, repW.gens)]
    K = kernel(F, np.vstack(blocks))
    return [k.reshape(dV, dW) for k in K]


def is_intertwiner(F, psi, gensV, gensW):
    return all(np.array_equal(F.matmul(gV, psi), F.matmul(psi, gW)) for gV, gW in zip(gensV, gensW))
