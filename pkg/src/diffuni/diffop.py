"""The derivative D_a f(x) = f(x) + f(x+a) and its decomposition through
T_a(x) = x(x+a).

Because D_a f is invariant under x -> x + a, it factors as g(T_a(x)) for a
unique g = L_a f. Coefficients of f and g are named from the top in this
module's docstrings: f = sum a_j x^(m-j) and g = sum b_i y^(d-i), so a_0 and
b_0 are the leading coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegenerateLeading, NotTAlphaInvariant, UnsupportedDegree, ZeroDirection
from .poly import FqPoly, taylor_shift


def d_alpha(f: FqPoly, alpha: int) -> FqPoly:
    if not alpha:
        raise ZeroDirection("D_0 f is identically zero")
    return f + taylor_shift(f, alpha)


def talpha(ctx, alpha: int) -> FqPoly:
    """x^2 + alpha*x."""
    return FqPoly(ctx, [0, alpha, 1])


def compose_talpha(g: FqPoly, alpha: int) -> FqPoly:
    """g(x^2 + alpha*x)."""
    t = talpha(g.ctx, alpha)
    acc = FqPoly(g.ctx)
    for c in reversed(g.coeffs):
        acc = acc * t + FqPoly(g.ctx, [c])
    return acc


def half_degree(m: int) -> int:
    """d = (m-1)/2 for odd m, (m-2)/2 for even m."""
    return (m - 1) // 2 if m & 1 else (m - 2) // 2


@dataclass(frozen=True)
class LAlphaResult:
    g: FqPoly
    b_top: tuple[int, ...]  # b_0 .. b_d, b_0 multiplies y^d
    d: int

    def b(self, i: int) -> int:
        return self.b_top[i]


def _peel(D: FqPoly, alpha: int) -> FqPoly:
    ctx = D.ctx
    t = talpha(ctx, alpha)
    powers = [FqPoly(ctx, [1])]
    out = [0] * (D.degree // 2 + 1 if D.degree >= 0 else 0)
    while not D.is_zero():
        if D.degree & 1:
            raise NotTAlphaInvariant(f"odd leading degree {D.degree} while peeling")
        k = D.degree // 2
        while len(powers) <= k:
            powers.append(powers[-1] * t)
        b = D.lead
        out[k] = b
        D = D + powers[k].scale(b)
    return FqPoly(ctx, out)


def l_alpha(f: FqPoly, alpha: int) -> LAlphaResult:
    """The unique g of degree <= d with g(x^2 + alpha*x) = D_alpha f.

    Built by peeling: the leading term b*x^(2k) of what is left of D_alpha f
    is removed with b*T^k. The result is checked by recomposition.
    """
    D = d_alpha(f, alpha)
    g = _peel(D, alpha)
    if compose_talpha(g, alpha) != D:
        raise NotTAlphaInvariant("recomposition does not reproduce D_alpha f")
    d = half_degree(max(f.degree, 0))
    return LAlphaResult(g, tuple(g.top(d + 1)), d)


def l_alpha_poly(f: FqPoly, alpha: int) -> FqPoly:
    """L_alpha f without the recomposition check (hot loops)."""
    return _peel(d_alpha(f, alpha), alpha)


def b_ratio(f: FqPoly, alpha: int) -> int:
    """b_1/b_0 from the closed forms, by m mod 8 (a_j from the top of f):

    =====  ====================================
    m%8    b_1/b_0
    =====  ====================================
    3      alpha^2 + (a_1 alpha + a_2)/a_0
    7      (a_1 alpha + a_2)/a_0
    0      (a_2 alpha + a_3)/a_1
    4      alpha^2 + (a_0 alpha^3 + a_2 alpha + a_3)/a_1
    =====  ====================================
    """
    ctx = f.ctx
    m = f.degree
    if m < 7 or m % 4 not in (0, 3):
        raise UnsupportedDegree(f"closed form needs m >= 7 and m = 0, 3 mod 4 (got {m})")
    a = f.top()
    mul = ctx.mul
    a2 = mul(alpha, alpha)
    r = m % 8
    if r in (3, 7):
        if not a[0]:
            raise DegenerateLeading("a_0 = 0")
        out = ctx.div(mul(a[1], alpha) ^ a[2], a[0])
        return out ^ a2 if r == 3 else out
    if not a[1]:
        raise DegenerateLeading("a_1 = 0")
    if r == 0:
        return ctx.div(mul(a[2], alpha) ^ a[3], a[1])
    num = mul(a[0], mul(a2, alpha)) ^ mul(a[2], alpha) ^ a[3]
    return a2 ^ ctx.div(num, a[1])


def trace_criterion(f: FqPoly, alpha: int) -> int:
    """Tr(b_1 / (b_0 alpha^2)) with b_0, b_1 read off L_alpha f.

    0 means x^2 + alpha*x = b_1/b_0 has a root in F_q.
    """
    ctx = f.ctx
    res = l_alpha(f, alpha)
    b0, b1 = res.b_top[0], res.b_top[1]
    if not b0:
        raise DegenerateLeading("b_0 = 0")
    ainv = ctx.inv(alpha)
    return ctx.trace(ctx.mul(ctx.div(b1, b0), ctx.mul(ainv, ainv)))


def solve_triangular(f: FqPoly, alpha: int) -> list[int]:
    """b_0..b_d from the triangular system obtained by matching the
    coefficients of x^(2(d-k)) in g(T_alpha) and D_alpha f.

    Independent of the peeling route; used as a cross-check.
    """
    from math import comb

    ctx = f.ctx
    m = f.degree
    d = half_degree(m)
    mul = ctx.mul
    apow = [1]
    for _ in range(m + 1):
        apow.append(mul(apow[-1], alpha))
    asc = f.coeffs  # asc[i] = a_{m-i}
    b: list[int] = []
    for k in range(d + 1):
        j = 2 * d - 2 * k
        rhs = 0
        for i in range(j + 1, m + 1):
            if comb(i, j) & 1:
                rhs ^= mul(apow[i - j], asc[i])
        for s in range(max(0, 2 * k - d), k):
            if comb(d - s, 2 * k - 2 * s) & 1:
                rhs ^= mul(apow[2 * k - 2 * s], b[s])
        b.append(rhs)
    return b
