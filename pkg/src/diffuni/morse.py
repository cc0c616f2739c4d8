"""Morse certification of polynomials in characteristic 2.

A polynomial g is Morse when (a) its critical points (roots of g') are
non-degenerate, i.e. g' and the Hasse-Schmidt derivative g^[2] have no
common root, (b) its critical values are pairwise distinct, and (c) its
degree is odd. All three are decided over the algebraic closure without
leaving F_q: (a) by a gcd, (b) by squarefreeness of the critical-value
polynomial V(y) = prod over distinct critical points tau of (y + g(tau)).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .diffop import l_alpha_poly
from .bounds import cond_a_bound, cond_b_bound, morse_alpha_bound  # noqa: F401
from .errors import NotAPolynomialMap, UnsupportedDegree
from .poly import (
    FqPoly,
    charpoly,
    derivative,
    hasse2,
    mult_matrix,
    poly_gcd,
    poly_sqrt,
    radical,
)


@dataclass(frozen=True)
class MorseReport:
    cond_a: bool
    cond_b: bool
    cond_c: bool
    # (a): gcd(g', g^[2]); (b): repeated part of V
    witness_a: FqPoly | None = None
    witness_b: FqPoly | None = None

    @property
    def is_morse(self) -> bool:
        return self.cond_a and self.cond_b and self.cond_c


def critical_value_poly(g: FqPoly) -> FqPoly | None:
    """V(y) = prod (y + g(tau)) over the distinct roots tau of g'.

    g' lies in F_q[x^2], so its distinct roots are those of the radical of
    its square root h. V is the characteristic polynomial of multiplication
    by g on F_q[x]/(rad h), which equals Res_x(rad h, y + g) up to a unit.
    Returns None when g' is identically zero.
    """
    dg = derivative(g)
    if dg.is_zero():
        return None
    h = poly_sqrt(dg)
    if h.degree == 0:
        return FqPoly(g.ctx, [1])
    hr = radical(h)
    return charpoly(g.ctx, mult_matrix(g, hr))


def is_morse(g: FqPoly) -> MorseReport:
    if g.degree < 1:
        raise NotAPolynomialMap("constant polynomial")
    cond_c = bool(g.degree & 1)

    dg = derivative(g)
    g2 = hasse2(g)
    if dg.degree == 0:
        cond_a, wa = True, None
    else:
        common = poly_gcd(dg, g2)
        cond_a = common.degree == 0
        wa = None if cond_a else common

    V = critical_value_poly(g)
    if V is None:
        cond_b, wb = False, FqPoly(g.ctx)
    elif V.degree <= 1:
        cond_b, wb = True, None
    else:
        dV = derivative(V)
        if dV.is_zero():
            cond_b, wb = False, radical(V)
        else:
            rep = poly_gcd(V, dV)
            cond_b = rep.degree == 0
            wb = None if cond_b else rep
    return MorseReport(cond_a, cond_b, cond_c, wa, wb)


@dataclass
class MorseScan:
    count: int
    bad_alphas: list[int]
    a_failures: list[int] = field(default_factory=list)
    b_failures: list[int] = field(default_factory=list)

    def __iter__(self):  # count, bad = count_non_morse_alphas(f)
        return iter((self.count, self.bad_alphas))


def _scan_chunk(f: FqPoly, alphas):
    out = []
    for a in alphas:
        rep = is_morse(l_alpha_poly(f, a))
        if not rep.is_morse:
            out.append((a, rep.cond_a, rep.cond_b))
    return out


def count_non_morse_alphas(f: FqPoly, workers: int = 1) -> MorseScan:
    """All alpha in F_q^* for which L_alpha f is not Morse, ascending."""
    m = f.degree
    if m < 7 or m % 4 != 3:
        raise UnsupportedDegree(f"need m >= 7 and m = 3 mod 4, got {m}")
    alphas = range(1, f.ctx.q)
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        chunks = [alphas[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(workers) as ex:
            bad = [r for part in ex.map(_scan_chunk, [f] * workers, chunks) for r in part]
        bad.sort()
    else:
        bad = _scan_chunk(f, alphas)
    return MorseScan(
        count=len(bad),
        bad_alphas=[a for a, _, _ in bad],
        a_failures=[a for a, ca, _ in bad if not ca],
        b_failures=[a for a, _, cb in bad if not cb],
    )
