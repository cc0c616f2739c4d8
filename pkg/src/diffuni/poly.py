"""Dense univariate polynomials over F_{2^n}.

Coefficients are stored in ascending order of degree. Text I/O uses the
opposite order (highest degree first), e.g. ``"1,0,0,0,0,0,0,0"`` is x^7.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import DivisionByZero, UndefinedResultant, ZeroPolynomial
from .field import FieldCtx, parse_elem


class FqPoly:
    """Immutable polynomial over a :class:`FieldCtx`.

    ``coeffs[i]`` is the coefficient of x^i; the leading coefficient is
    nonzero, and the zero polynomial has ``coeffs == ()``.
    """

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs: Iterable[int] = ()):
        c = list(coeffs)
        while c and not c[-1]:
            c.pop()
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("FqPoly is immutable")

    def __reduce__(self):
        return (FqPoly, (self.ctx, self.coeffs))

    # -- constructors --

    @classmethod
    def monomial(cls, ctx, k, c=1):
        return cls(ctx, [0] * k + [c])

    @classmethod
    def from_top(cls, ctx, top: Sequence[int]):
        """Build from coefficients listed highest degree first."""
        return cls(ctx, reversed(list(top)))

    # -- basic properties --

    @property
    def degree(self) -> int:
        """Degree, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def top(self, length: int | None = None) -> list[int]:
        """Coefficients highest degree first, left-padded to ``length``."""
        c = list(reversed(self.coeffs))
        if length is not None:
            c = [0] * (length - len(c)) + c
        return c

    def __eq__(self, other):
        if not isinstance(other, FqPoly):
            return NotImplemented
        return self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ctx, self.coeffs))

    def __repr__(self):
        return f"FqPoly({format_poly(self)!r}, n={self.ctx.n})"

    def __bool__(self):
        return bool(self.coeffs)

    # -- arithmetic --

    def __add__(self, other: "FqPoly") -> "FqPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] ^= c
        return FqPoly(self.ctx, out)

    __sub__ = __add__

    def scale(self, c: int) -> "FqPoly":
        mul = self.ctx.mul
        return FqPoly(self.ctx, [mul(c, a) for a in self.coeffs])

    def shift(self, k: int) -> "FqPoly":
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return FqPoly(self.ctx, [0] * k + list(self.coeffs))

    def __mul__(self, other: "FqPoly") -> "FqPoly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return FqPoly(self.ctx)
        mul = self.ctx.mul
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] ^= mul(ai, bj)
        return FqPoly(self.ctx, out)

    def __pow__(self, e: int) -> "FqPoly":
        r = FqPoly(self.ctx, [1])
        a = self
        while e:
            if e & 1:
                r = r * a
            e >>= 1
            if e:
                a = a * a
        return r

    def __divmod__(self, other: "FqPoly"):
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        ctx = self.ctx
        mul = ctx.mul
        r = list(self.coeffs)
        db = other.degree
        b = other.coeffs
        linv = ctx.inv(other.lead)
        qt = [0] * max(len(r) - db, 0)
        for k in range(len(r) - 1, db - 1, -1):
            c = r[k]
            if not c:
                continue
            c = mul(c, linv)
            qt[k - db] = c
            for j in range(db + 1):
                if b[j]:
                    r[k - db + j] ^= mul(c, b[j])
        return FqPoly(ctx, qt), FqPoly(ctx, r[:db] if db > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x: int) -> int:
        mul = self.ctx.mul
        acc = 0
        for c in reversed(self.coeffs):
            acc = mul(acc, x) ^ c
        return acc

    def monic(self) -> "FqPoly":
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no monic form")
        return self.scale(self.ctx.inv(self.lead))


# -- serialization --------------------------------------------------------------

def format_poly(f: FqPoly) -> str:
    if f.is_zero():
        return "0"
    return ",".join(format(c, "x") for c in f.top())


def parse_poly(ctx: FieldCtx, s: str) -> FqPoly:
    return FqPoly.from_top(ctx, [parse_elem(ctx, t.strip()) for t in s.split(",")])


# -- operations -----------------------------------------------------------------

def taylor_shift(f: FqPoly, alpha: int) -> FqPoly:
    """f(x + alpha).

    C(i, j) is odd exactly when the bits of j are a subset of those of i
    (Lucas), so coefficient i feeds coefficient j for submasks j of i.
    """
    ctx = f.ctx
    if not alpha or f.degree < 1:
        return f
    mul = ctx.mul
    apow = [1]
    for _ in range(f.degree):
        apow.append(mul(apow[-1], alpha))
    out = [0] * len(f.coeffs)
    for i, c in enumerate(f.coeffs):
        if not c:
            continue
        j = i
        while True:
            out[j] ^= mul(c, apow[i - j])
            if j == 0:
                break
            j = (j - 1) & i
    return FqPoly(ctx, out)


def derivative(f: FqPoly) -> FqPoly:
    """Formal derivative; in characteristic 2 only odd powers survive."""
    c = f.coeffs
    return FqPoly(f.ctx, [c[k] if k & 1 else 0 for k in range(1, len(c))])


def hasse2(f: FqPoly) -> FqPoly:
    """Second Hasse-Schmidt derivative: x^k -> C(k,2) x^(k-2), and C(k,2) is
    odd iff k = 2 or 3 mod 4."""
    c = f.coeffs
    return FqPoly(f.ctx, [c[k] if k & 2 else 0 for k in range(2, len(c))])


def poly_gcd(a: FqPoly, b: FqPoly) -> FqPoly:
    """Monic gcd (zero if both are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def resultant(f: FqPoly, g: FqPoly) -> int:
    """Res_x(f, g) by the Euclidean remainder sequence.

    Uses Res(f, g) = lc(g)^(deg f - deg r) Res(g, r) for r = f mod g, and
    Res(f, c) = c^deg(f) for a constant c. Signs vanish in characteristic 2.
    """
    ctx = f.ctx
    if f.is_zero() and g.is_zero():
        raise UndefinedResultant("resultant of two zero polynomials")
    if f.is_zero() or g.is_zero():
        other = g if f.is_zero() else f
        return 1 if other.degree == 0 else 0
    acc = 1
    while True:
        if g.degree == 0:
            return ctx.mul(acc, ctx.pow(g.lead, f.degree))
        if f.degree == 0:
            return ctx.mul(acc, ctx.pow(f.lead, g.degree))
        r = f % g
        if r.is_zero():
            return 0
        acc = ctx.mul(acc, ctx.pow(g.lead, f.degree - r.degree))
        f, g = g, r


def poly_sqrt(f: FqPoly) -> FqPoly:
    """Square root of a polynomial with only even-degree terms."""
    ctx = f.ctx
    c = f.coeffs
    if any(c[k] for k in range(1, len(c), 2)):
        raise ValueError("polynomial is not a square")
    return FqPoly(ctx, [ctx.sqrt(c[k]) for k in range(0, len(c), 2)])


def radical(f: FqPoly) -> FqPoly:
    """Monic product of the distinct irreducible factors of f."""
    if f.is_zero():
        raise ZeroPolynomial("radical of zero")
    f = f.monic()
    if f.degree <= 0:
        return f
    df = derivative(f)
    if df.is_zero():
        return radical(poly_sqrt(f))
    w = poly_gcd(f, df)
    u = f // w  # every irreducible factor of odd multiplicity, once
    if w.degree == 0:
        return u
    rw = radical(w)
    return (u * rw // poly_gcd(u, rw)).monic()


def is_squarefree(f: FqPoly) -> bool:
    df = derivative(f)
    if df.is_zero():
        return f.degree <= 0
    return poly_gcd(f, df).degree == 0


def powmod(base: FqPoly, e: int, mod: FqPoly) -> FqPoly:
    r = FqPoly(base.ctx, [1]) % mod
    b = base % mod
    while e:
        if e & 1:
            r = (r * b) % mod
        e >>= 1
        if e:
            b = (b * b) % mod
    return r


def _split_roots(r: FqPoly, out: list[int]):
    # r is monic, squarefree and splits into distinct linear factors over F_q
    ctx = r.ctx
    if r.degree == 0:
        return
    if r.degree == 1:
        out.append(r.coeff(0))
        return
    x = FqPoly(ctx, [0, 1])
    # Tr(delta*x) mod r takes values in F_2 on each root; some basis delta separates two roots
    for i in range(ctx.n):
        y = x.scale(1 << i) % r
        t = y
        for _ in range(ctx.n - 1):
            y = (y * y) % r
            t = t + y
        h = poly_gcd(r, t)
        if 0 < h.degree < r.degree:
            _split_roots(h, out)
            _split_roots(r // h, out)
            return
    raise AssertionError("trace splitting failed")  # distinct roots always separate


def roots_in_field(f: FqPoly) -> list[int]:
    """Sorted list of the distinct roots of f lying in its base field.

    Computes gcd(f, x^q - x) and splits it with trace maps.
    """
    if f.is_zero():
        raise ZeroPolynomial("every element is a root of zero")
    ctx = f.ctx
    if f.degree <= 0:
        return []
    x = FqPoly(ctx, [0, 1])
    fm = f.monic()
    xq = x % fm
    for _ in range(ctx.n):
        xq = (xq * xq) % fm
    r = poly_gcd(fm, xq + x)
    out: list[int] = []
    _split_roots(r, out)
    return sorted(out)


def roots_brute_force(f: FqPoly) -> list[int]:
    """Roots by evaluating at every field element."""
    if f.is_zero():
        raise ZeroPolynomial("every element is a root of zero")
    return [a for a in range(f.ctx.q) if f(a) == 0]


def charpoly(ctx: FieldCtx, mat: list[list[int]]) -> FqPoly:
    """Characteristic polynomial det(yI + M) of a square matrix over F_q.

    Hessenberg reduction followed by the usual recurrence; exact over any
    field.
    """
    n = len(mat)
    H = [list(row) for row in mat]
    mul, inv = ctx.mul, ctx.inv
    for m in range(1, n - 1):
        piv = next((i for i in range(m, n) if H[i][m - 1]), None)
        if piv is None:
            continue
        if piv != m:
            H[piv], H[m] = H[m], H[piv]
            for row in H:
                row[piv], row[m] = row[m], row[piv]
        pinv = inv(H[m][m - 1])
        for i in range(m + 1, n):
            u = mul(H[i][m - 1], pinv)
            if not u:
                continue
            Hi, Hm = H[i], H[m]
            for j in range(n):
                Hi[j] ^= mul(u, Hm[j])
            for row in H:
                row[m] ^= mul(u, row[i])
    # p[k] = charpoly of the leading k x k block
    p = [FqPoly(ctx, [1])]
    for k in range(n):
        pk = p[k].shift(1) + p[k].scale(H[k][k])
        prod = 1
        for i in range(1, k + 1):
            prod = mul(prod, H[k - i + 1][k - i])
            if not prod:
                break
            pk = pk + p[k - i].scale(mul(prod, H[k - i][k]))
        p.append(pk)
    return p[n]


def mult_matrix(g: FqPoly, h: FqPoly) -> list[list[int]]:
    """Matrix of u -> g*u on F_q[x]/(h) in the basis 1, x, ..., x^(deg h - 1).

    Column j is the image of x^j.
    """
    r = h.degree
    cols = []
    cur = g % h
    x = FqPoly(g.ctx, [0, 1])
    for _ in range(r):
        cols.append([cur.coeff(i) for i in range(r)])
        cur = (cur * x) % h
    return [[cols[j][i] for j in range(r)] for i in range(r)]
