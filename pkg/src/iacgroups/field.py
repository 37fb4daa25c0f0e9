"""Exact arithmetic in F_p and small extensions F_{p^k}.

Elements are encoded as integer *codes* in ``range(q)``: the element
c_0 + c_1 x + ... + c_{k-1} x^{k-1} has code c_0 + c_1 p + ... + c_{k-1} p^{k-1}.
Bulk arithmetic works on numpy integer arrays of codes; :class:`FieldElem`
wraps a single code for scalar use.
"""

from functools import lru_cache
from itertools import product
from math import gcd

import numpy as np

from .errors import (
    DivisionByZero,
    EvenCharacteristic,
    FieldMismatch,
    NotPrime,
    OrderDoesNotDivide,
    ReducibleModulus,
)

MAX_ORDER = 1 << 16
_ADD_TABLE_LIMIT = 1024


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n):
    out, f = [], 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# -- polynomials over F_p as coefficient tuples, lowest degree first ------------

def _poly_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a, m, p):
    a = _poly_trim(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], -1, p)
    while len(a) - 1 >= dm:
        coef = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - coef * mi) % p
        a = _poly_trim(a)
    return a


def _is_irreducible(modulus, p):
    k = len(modulus) - 1
    for d in range(1, k // 2 + 1):
        for low in product(range(p), repeat=d):
            if not _poly_mod(modulus, list(low) + [1], p):
                return False
    return True


def least_irreducible(p, k):
    """Lexicographically least monic irreducible polynomial of degree k over F_p.

    Candidates are ordered by the integer sum c_i p^i of their lower coefficients.
    """
    for n in range(p**k):
        low = [(n // p**i) % p for i in range(k)]
        cand = low + [1]
        if low[0] != 0 and _is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError("no irreducible polynomial found")


class Field:
    """The finite field F_q, q = p^k, with vectorized arithmetic on code arrays."""

    def __init__(self, p, k=1, modulus=None):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if p == 2:
            raise EvenCharacteristic("characteristic 2 is not supported")
        if k < 1:
            raise ValueError("degree must be positive")
        if p**k > MAX_ORDER:
            raise ValueError(f"field order {p}^{k} exceeds {MAX_ORDER}")
        if k == 1:
            modulus = None
        else:
            if modulus is None:
                modulus = least_irreducible(p, k)
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != k + 1 or modulus[-1] != 1:
                raise ReducibleModulus(f"modulus must be monic of degree {k}")
            if not _is_irreducible(modulus, p):
                raise ReducibleModulus(f"{modulus} is reducible over F_{p}")
        self.p = p
        self.k = k
        self.modulus = modulus
        self.q = p**k
        self._build_tables()

    # -- construction ------------------------------------------------------------

    def _scalar_mul(self, a, b):
        if self.k == 1:
            return a * b % self.p
        da, db = self.digits[a], self.digits[b]
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + int(x) * int(y)) % self.p
        red = _poly_mod(prod, self.modulus, self.p)
        return sum(int(c) * self.p**i for i, c in enumerate(red))

    def _build_tables(self):
        p, k, q = self.p, self.k, self.q
        codes = np.arange(q, dtype=np.int64)
        self._pw = p ** np.arange(k, dtype=np.int64)
        self.digits = (codes[:, None] // self._pw[None, :]) % p
        self.neg_table = ((-self.digits) % p) @ self._pw
        if k > 1 and q <= _ADD_TABLE_LIMIT:
            d = self.digits
            s = (d[:, None, :] + d[None, :, :]) % p
            self.add_table = s @ self._pw
        else:
            self.add_table = None
        # exp/log tables from the least primitive element
        n = q - 1
        facs = prime_factors(n) if n > 1 else []
        for g in range(1, q):
            if all(self._scalar_pow(g, n // f) != 1 for f in facs):
                break
        self.primitive = g
        exp = np.empty(n, dtype=np.int64)
        x = 1
        for i in range(n):
            exp[i] = x
            x = self._scalar_mul(x, g)
        log = np.zeros(q, dtype=np.int64)
        log[exp] = np.arange(n, dtype=np.int64)
        self.exp_table = exp
        self.log_table = log
        inv = np.zeros(q, dtype=np.int64)
        inv[1:] = exp[(-log[1:]) % n]
        self.inv_table = inv

    def _scalar_pow(self, a, e):
        r = 1
        while e:
            if e & 1:
                r = self._scalar_mul(r, a)
            a = self._scalar_mul(a, a)
            e >>= 1
        return r

    # -- identity ----------------------------------------------------------------

    @property
    def key(self):
        return (self.p, self.k, self.modulus)

    def __eq__(self, other):
        return isinstance(other, Field) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        if self.k == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.k}, modulus={list(self.modulus)})"

    def check_same(self, other):
        if self != other:
            raise FieldMismatch(f"{self!r} vs {other!r}")

    # -- elements ----------------------------------------------------------------

    def __call__(self, n):
        """Image of the integer n under Z -> F."""
        if isinstance(n, FieldElem):
            self.check_same(n.field)
            return n
        return FieldElem(self, int(n) % self.p)

    def from_code(self, code):
        code = int(code)
        if not 0 <= code < self.q:
            raise ValueError(f"code {code} out of range for {self!r}")
        return FieldElem(self, code)

    def from_coeffs(self, coeffs):
        coeffs = list(coeffs)
        if len(coeffs) > self.k:
            raise ValueError("too many coefficients")
        return FieldElem(self, sum((int(c) % self.p) * self.p**i for i, c in enumerate(coeffs)))

    @property
    def zero(self):
        return FieldElem(self, 0)

    @property
    def one(self):
        return FieldElem(self, 1)

    @property
    def gen(self):
        """The class of x in F_p[x]/(modulus); for prime fields, 1."""
        return FieldElem(self, self.p if self.k > 1 else 1)

    def elements(self):
        return [FieldElem(self, c) for c in range(self.q)]

    def embed(self, ints):
        """Image of an integer array under Z -> F (codes of the prime subfield)."""
        return np.asarray(ints, dtype=np.int64) % self.p

    def to_codes(self, values):
        """Convert nested ints / FieldElems to a code array. Plain ints are embedded mod p."""
        if isinstance(values, np.ndarray) and values.dtype.kind in "iu":
            if self.k == 1:
                return values.astype(np.int64) % self.p
            return values.astype(np.int64)

        def conv(v):
            if isinstance(v, FieldElem):
                self.check_same(v.field)
                return v.code
            return int(v) % self.p

        def walk(v):
            if isinstance(v, (list, tuple, np.ndarray)):
                return [walk(x) for x in v]
            return conv(v)

        return np.array(walk(values), dtype=np.int64)

    # -- vectorized arithmetic on code arrays ------------------------------------

    def add(self, a, b):
        if self.k == 1:
            return (a + b) % self.p
        if self.add_table is not None:
            return self.add_table[a, b]
        return ((self.digits[a] + self.digits[b]) % self.p) @ self._pw

    def neg(self, a):
        if self.k == 1:
            return (-a) % self.p
        return self.neg_table[a]

    def sub(self, a, b):
        if self.k == 1:
            return (a - b) % self.p
        return self.add(a, self.neg_table[b])

    def mul(self, a, b):
        if self.k == 1:
            return (a * b) % self.p
        a = np.asarray(a)
        b = np.asarray(b)
        r = self.exp_table[(self.log_table[a] + self.log_table[b]) % (self.q - 1)]
        return np.where((a == 0) | (b == 0), 0, r)

    def inv(self, a):
        a = np.asarray(a)
        if np.any(a == 0):
            raise DivisionByZero("inverse of zero")
        return self.inv_table[a]

    def power(self, a, e):
        a = np.asarray(a)
        n = self.q - 1
        if e < 0:
            a = self.inv(a)
            e = -e
        if e == 0:
            return np.ones_like(a)
        r = self.exp_table[(self.log_table[a] * e) % n]
        return np.where(a == 0, 0, r)

    def sum(self, a, axis=-1):
        if self.k == 1:
            return a.sum(axis=axis) % self.p
        a = np.moveaxis(a, axis, 0)
        out = np.zeros(a.shape[1:], dtype=np.int64)
        for x in a:
            out = self.add(out, x)
        return out

    def matmul(self, a, b):
        """Matrix product of code arrays (supports numpy broadcasting over leading axes)."""
        if self.k == 1:
            return (a @ b) % self.p
        a = np.asarray(a)
        b = np.asarray(b)
        if a.ndim == 1:
            return self.matmul(a[None, :], b)[..., 0, :]
        if b.ndim == 1:
            return self.matmul(a, b[:, None])[..., 0]
        out = None
        for t in range(a.shape[-1]):
            term = self.mul(a[..., :, t:t + 1], b[..., t:t + 1, :])
            out = term if out is None else self.add(out, term)
        if out is None:
            lead = np.broadcast_shapes(a.shape[:-2], b.shape[:-2])
            out = np.zeros(lead + (a.shape[-2], b.shape[-1]), dtype=np.int64)
        return out

    def order_of(self, code):
        if code == 0:
            raise DivisionByZero("zero has no multiplicative order")
        n = self.q - 1
        return n // gcd(int(self.log_table[code]), n)


@lru_cache(maxsize=None)
def _cached_field(p, k, modulus):
    return Field(p, k, modulus)


def field_make(p, k=1, modulus=None):
    """Return the validated field F_{p^k}; identical inputs give the identical object."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p == 2:
        raise EvenCharacteristic("characteristic 2 is not supported")
    if modulus is not None:
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise ReducibleModulus(f"modulus must be monic of degree {k}")
        if k > 1 and not _is_irreducible(modulus, p):
            raise ReducibleModulus(f"{list(modulus)} is reducible over F_{p}")
    elif k > 1:
        modulus = least_irreducible(p, k)
    if k == 1:
        modulus = None
    return _cached_field(p, k, modulus)


def field_of_order(q):
    for p in range(3, q + 1, 2):
        if is_prime(p) and q % p == 0:
            k, n = 0, q
            while n % p == 0:
                n //= p
                k += 1
            if n != 1:
                break
            return field_make(p, k)
    raise ValueError(f"{q} is not an odd prime power")


class FieldElem:
    """Immutable element of a :class:`Field`."""

    __slots__ = ("field", "code")

    def __init__(self, field, code):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "code", int(code))

    def __setattr__(self, name, value):
        raise AttributeError("FieldElem is immutable")

    @property
    def coeffs(self):
        return tuple(int(c) for c in self.field.digits[self.code])

    def _other(self, other):
        if isinstance(other, FieldElem):
            self.field.check_same(other.field)
            return other.code
        if isinstance(other, (int, np.integer)):
            return int(other) % self.field.p
        return NotImplemented

    def _wrap(self, code):
        return FieldElem(self.field, int(code))

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.field.add(np.int64(self.code), np.int64(o)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.field.sub(np.int64(self.code), np.int64(o)))

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.field.sub(np.int64(o), np.int64(self.code)))

    def __neg__(self):
        return self._wrap(self.field.neg(np.int64(self.code)))

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.field.mul(np.int64(self.code), np.int64(o)))

    __rmul__ = __mul__

    def inverse(self):
        if self.code == 0:
            raise DivisionByZero("inverse of zero")
        return self._wrap(self.field.inv_table[self.code])

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self * FieldElem(self.field, o).inverse()

    def __pow__(self, e):
        if self.code == 0:
            if e < 0:
                raise DivisionByZero("negative power of zero")
            return self._wrap(1 if e == 0 else 0)
        return self._wrap(self.field.power(np.int64(self.code), int(e)))

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.field == other.field and self.code == other.code
        if isinstance(other, (int, np.integer)):
            return self.code == int(other) % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.field.key, self.code))

    def __bool__(self):
        return self.code != 0

    def __int__(self):
        if self.field.k != 1:
            raise TypeError("only prime-field elements convert to int")
        return self.code

    def __repr__(self):
        if self.field.k == 1:
            return f"{self.code}"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if i == 0 else (f"{c}*x" if i == 1 else f"{c}*x^{i}"))
        return " + ".join(terms) or "0"

    def order(self):
        return self.field.order_of(self.code)


def field_arith(op, a, b=None):
    """Apply one of add/sub/mul/inv/pow/neg to field elements."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    if op == "inv":
        return a.inverse()
    if op == "pow":
        return a ** int(b)
    raise ValueError(f"unknown operation {op!r}")


def element_of_order(F, n):
    """Least element (by code) of multiplicative order exactly n."""
    if n < 1 or (F.q - 1) % n:
        raise OrderDoesNotDivide(f"{n} does not divide {F.q - 1}")
    N = F.q - 1
    logs = F.log_table[1:]
    orders = N // np.gcd(logs, N)
    codes = np.nonzero(orders == n)[0] + 1
    return F.from_code(codes.min())
