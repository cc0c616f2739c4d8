"""Arithmetic in binary fields F_{2^n}.

Field elements are plain Python ints: bit i is the coordinate of x^i in
the polynomial basis fixed by the modulus. Addition is XOR and has no
function of its own. Binary polynomials used as moduli are also ints
(bit i = coefficient of x^i); the ``gf2x_*`` helpers work on those.

For n <= 20 a context carries log/antilog tables, built on first use,
which make scalar multiplication a pair of list lookups and let the
uniformity code multiply whole numpy arrays at once.
"""

from __future__ import annotations

from functools import cached_property, lru_cache

import numpy as np
from sympy import factorint

from .errors import DegenerateEquation, DivisionByZero, ModulusError, OrderError

MAX_DEGREE = 64
TABLE_DEGREE = 20


# -- F_2[x] helpers ---------------------------------------------------------

def gf2x_mul(a: int, b: int) -> int:
    """Carryless product of two binary polynomials."""
    if a.bit_length() < b.bit_length():
        a, b = b, a
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def gf2x_mod(a: int, m: int) -> int:
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


def gf2x_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, gf2x_mod(a, b)
    return a


def gf2x_is_irreducible(f: int) -> bool:
    """Ben-Or test: f has no factor of degree <= deg(f)/2."""
    n = f.bit_length() - 1
    if n < 1:
        return False
    if n == 1:
        return True
    if not f & 1:
        return False
    xp = 2  # x^(2^i) mod f
    for _ in range(n // 2):
        xp = gf2x_mod(gf2x_mul(xp, xp), f)
        if gf2x_gcd(f, xp ^ 2) != 1:
            return False
    return True


@lru_cache(maxsize=None)
def smallest_irreducible(n: int) -> int:
    """Irreducible degree-n binary polynomial with the smallest encoding
    among those with a nonzero constant term."""
    for enc in range(2**n + 1, 2 ** (n + 1), 2):
        if gf2x_is_irreducible(enc):
            return enc
    raise ModulusError(f"no irreducible polynomial of degree {n}")  # unreachable


def _prime_factors(k: int) -> list[int]:
    return sorted(factorint(k))


# -- field context ------------------------------------------------------------

class FieldCtx:
    """A concrete field F_{2^n}. Immutable once built.

    Use :func:`mk_field` rather than calling this directly; it applies the
    degree limit and caches contexts.
    """

    __slots__ = ("n", "modulus", "q", "mask", "__dict__")

    def __init__(self, n: int, modulus: int):
        if modulus.bit_length() - 1 != n:
            raise ModulusError(f"modulus {modulus:#x} does not have degree {n}")
        if not modulus & 1:
            raise ModulusError(f"modulus {modulus:#x} is divisible by x")
        if not gf2x_is_irreducible(modulus):
            raise ModulusError(f"modulus {modulus:#x} is reducible")
        self.n = n
        self.modulus = modulus
        self.q = 1 << n
        self.mask = self.q - 1

    def __reduce__(self):
        return (_cached_field, (self.n, self.modulus))

    def __repr__(self):
        return f"FieldCtx(n={self.n}, modulus={self.modulus:#x})"

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and (self.n, self.modulus) == (other.n, other.modulus)

    def __hash__(self):
        return hash((self.n, self.modulus))

    @property
    def has_tables(self) -> bool:
        return self.n <= TABLE_DEGREE

    # -- tables (lazy) --

    @cached_property
    def _tables(self):
        g = self.primitive_element
        q1 = self.q - 1
        # g^i for i < q-1, built in blocks of B with one vectorised product per block row
        B = 1 << ((self.n + 1) // 2)
        head = [1]
        for _ in range(B - 1):
            head.append(self._mul_slow(head[-1], g))
        gB = self._mul_slow(head[-1], g)
        rows = [1]
        for _ in range((q1 + B - 1) // B - 1):
            rows.append(self._mul_slow(rows[-1], gB))
        exp = self.mul_array(
            np.array(rows, dtype=np.int64)[:, None], np.array(head, dtype=np.int64)[None, :], _raw=True
        ).ravel()[:q1]
        log = np.zeros(self.q, dtype=np.int64)
        log[exp] = np.arange(q1, dtype=np.int64)
        exp2 = np.concatenate([exp, exp])
        return log, exp2, log.tolist(), exp2.tolist()

    @property
    def log(self) -> np.ndarray:
        """Discrete log base the primitive element (log[0] is meaningless)."""
        return self._tables[0]

    @property
    def antilog(self) -> np.ndarray:
        """antilog[i] = g^i for 0 <= i < 2(q-1)."""
        return self._tables[1]

    # -- scalar arithmetic --

    def _mul_slow(self, a: int, b: int) -> int:
        return gf2x_mod(gf2x_mul(a, b), self.modulus)

    def mul(self, a: int, b: int) -> int:
        if not a or not b:
            return 0
        if self.n <= TABLE_DEGREE:
            _, _, log, exp = self._tables
            return exp[log[a] + log[b]]
        return gf2x_mod(gf2x_mul(a, b), self.modulus)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if self.n <= TABLE_DEGREE:
            if e == 0:
                return 1
            if not a:
                return 0
            _, _, log, exp = self._tables
            return exp[(log[a] * e) % (self.q - 1)]
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return r

    def inv(self, a: int) -> int:
        if not a:
            raise DivisionByZero("inverse of zero")
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def sqrt(self, a: int) -> int:
        """Unique square root, a^(2^(n-1))."""
        for _ in range(self.n - 1):
            a = self.mul(a, a)
        return a

    @cached_property
    def trace_mask(self) -> int:
        """Tr(a) = parity(a & trace_mask): trace is F_2-linear."""
        mask = 0
        for i in range(self.n):
            t = 0
            a = 1 << i
            for _ in range(self.n):
                t ^= a
                a = self.mul(a, a)
            if t:  # t is 0 or 1
                mask |= 1 << i
        return mask

    def trace(self, a: int) -> int:
        return (a & self.trace_mask).bit_count() & 1

    # -- vectorised arithmetic --

    def mul_array(self, a, b, _raw=False):
        """Elementwise product of integer arrays (broadcasting)."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.n <= TABLE_DEGREE and not _raw:
            log, exp = self.log, self.antilog
            a, b = np.broadcast_arrays(a, b)
            out = exp[log[a] + log[b]]
            out[(a == 0) | (b == 0)] = 0
            return out
        if self.n > 31:
            raise ValueError("vectorised multiplication needs n <= 31")
        a, b = np.broadcast_arrays(a, b)
        acc = np.zeros(a.shape, dtype=np.int64)
        a = a.copy()
        top = np.int64(self.q)
        red = np.int64(self.modulus)
        for i in range(self.n):
            acc ^= np.where((b >> i) & 1, a, 0)
            a <<= 1
            a ^= np.where(a & top, red, 0)
        return acc

    # -- structure --

    @cached_property
    def primitive_element(self) -> int:
        """Generator of F_q^* with the smallest encoding."""
        q1 = self.q - 1
        if q1 == 1:
            return 1
        cofactors = [q1 // p for p in _prime_factors(q1)]
        g = 2
        while True:
            if all(self._pow_slow(g, c) != 1 for c in cofactors):
                return g
            g += 1

    def _pow_slow(self, a, e):
        r = 1
        while e:
            if e & 1:
                r = self._mul_slow(r, a)
            e >>= 1
            a = self._mul_slow(a, a)
        return r

    def elements(self) -> range:
        return range(self.q)


@lru_cache(maxsize=256)
def _cached_field(n: int, modulus: int) -> FieldCtx:
    return FieldCtx(n, modulus)


def mk_field(n: int, modulus: int | None = None, *, max_degree: int = MAX_DEGREE) -> FieldCtx:
    """Return F_{2^n}, by default with the smallest irreducible modulus.

    >>> hex(mk_field(3).modulus)
    '0xb'
    """
    if not 1 <= n <= max_degree:
        raise ModulusError(f"degree {n} outside 1..{max_degree}")
    if modulus is None:
        modulus = smallest_irreducible(n)
    return _cached_field(n, modulus)


def parse_field(spec: str) -> FieldCtx:
    """Parse "n" or "n:modulushex"."""
    n, _, mod = spec.partition(":")
    return mk_field(int(n), int(mod, 16) if mod else None)


def format_elem(a: int) -> str:
    return format(a, "x")


def parse_elem(ctx: FieldCtx, s: str) -> int:
    a = int(s, 16)
    if not 0 <= a < ctx.q:
        raise ValueError(f"{s} is not an element of F_2^{ctx.n}")
    return a


# -- operations ---------------------------------------------------------------

def fq_mul(ctx: FieldCtx, a: int, b: int) -> int:
    return ctx.mul(a, b)


def fq_inv(ctx: FieldCtx, a: int) -> int:
    return ctx.inv(a)


def fq_trace(ctx: FieldCtx, a: int) -> int:
    """Absolute trace a + a^2 + ... + a^(2^(n-1)), as 0 or 1."""
    return ctx.trace(a)


@lru_cache(maxsize=256)
def _as_basis(ctx: FieldCtx):
    # echelon basis of the image of z -> z^2 + z, each vector paired with a preimage
    basis = {}
    for i in range(ctx.n):
        z = 1 << i
        v = ctx.mul(z, z) ^ z
        while v:
            top = v.bit_length() - 1
            if top not in basis:
                basis[top] = (v, z)
                break
            bv, bz = basis[top]
            v ^= bv
            z ^= bz
    return basis


def solve_artin_schreier(ctx: FieldCtx, alpha: int, beta: int) -> int | None:
    """A root of x^2 + alpha*x = beta in F_q, or None.

    Substitutes x = alpha*z and solves z^2 + z = beta/alpha^2 as an F_2-linear
    system. Of the two roots x and x + alpha, the smaller encoding is returned.
    """
    if not alpha:
        raise DegenerateEquation("x^2 = beta is not an Artin-Schreier equation")
    ainv = ctx.inv(alpha)
    c = ctx.mul(beta, ctx.mul(ainv, ainv))
    basis = _as_basis(ctx)
    z = 0
    while c:
        top = c.bit_length() - 1
        if top not in basis:
            return None
        bv, bz = basis[top]
        c ^= bv
        z ^= bz
    x = ctx.mul(alpha, z)
    return min(x, x ^ alpha)


def element_of_order(ctx: FieldCtx, t: int) -> int:
    """Element of exact multiplicative order t: g^((q-1)/t) for the smallest
    primitive element g.

    Above degree 64 factoring q-1 can get expensive, so there the result is
    h^((q-1)/t) for the smallest h for which that power has order exactly t.
    """
    q1 = ctx.q - 1
    if t < 1 or q1 % t:
        raise OrderError(f"{t} does not divide 2^{ctx.n} - 1")
    if ctx.n <= MAX_DEGREE:
        return ctx.pow(ctx.primitive_element, q1 // t)
    checks = [t // p for p in _prime_factors(t)] if t > 1 else []
    h = 2 if ctx.q > 2 else 1
    while True:
        gamma = ctx.pow(h, q1 // t)
        if all(ctx.pow(gamma, c) != 1 for c in checks):
            return gamma
        h += 1


def multiplicative_order(ctx: FieldCtx, a: int) -> int:
    if not a:
        raise DivisionByZero("zero has no multiplicative order")
    order = ctx.q - 1
    for p in _prime_factors(order) if order > 1 else []:
        while order % p == 0 and ctx.pow(a, order // p) == 1:
            order //= p
    return order


def embedding(small: FieldCtx, big: FieldCtx):
    """Return a field homomorphism small -> big (needs small.n | big.n).

    The image of x is the smallest-encoding root of small's modulus in big.
    """
    if big.n % small.n:
        raise ValueError("no embedding: degrees do not divide")
    mod = small.modulus

    def ev(r):
        acc = 0
        for i in range(small.n, -1, -1):
            acc = big.mul(acc, r) ^ ((mod >> i) & 1)
        return acc

    rho = next(r for r in range(big.q) if ev(r) == 0)
    powers = [1]
    for _ in range(small.n - 1):
        powers.append(big.mul(powers[-1], rho))

    def embed(a: int) -> int:
        out = 0
        i = 0
        while a:
            if a & 1:
                out ^= powers[i]
            a >>= 1
            i += 1
        return out

    return embed
