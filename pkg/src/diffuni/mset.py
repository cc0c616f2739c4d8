"""Membership in the set M of odd exponents m for which L_1(x^m) has
distinct critical values.

The decision uses the roots-of-unity criterion: with t the odd part of
m - 1, m is in M unless two t-th roots of unity z1, z2 (both != 1) with
z1 not in {z2, 1/z2} satisfy ((1 + z1)/(1 + z2))^t = 1. A non-member
verdict carries such a pair as a certificate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from sympy import isprime, n_order

from .diffop import l_alpha
from .errors import FieldTooLarge, IneligiblePrime, NotOdd, NotOddPrime
from .field import FieldCtx, element_of_order, mk_field
from .morse import is_morse
from .poly import FqPoly

# ord_t(2) reaches 196 for the primes below 200
MAX_ROOT_FIELD_DEGREE = 256


@dataclass(frozen=True)
class Witness:
    i: int
    j: int
    zeta1: int
    zeta2: int
    n0: int
    modulus: int

    @property
    def ctx(self) -> FieldCtx:
        return mk_field(self.n0, self.modulus, max_degree=MAX_ROOT_FIELD_DEGREE)


@dataclass(frozen=True)
class MVerdict:
    m: int
    member: bool
    t: int
    n0: int
    witness: Witness | None = None


def odd_part(k: int) -> int:
    while k and k % 2 == 0:
        k //= 2
    return k


def root_field_degree(m: int) -> int:
    """Degree of the field holding the (m-1)-th roots of unity."""
    t = odd_part(m - 1)
    return 1 if t == 1 else int(n_order(2, t))


@lru_cache(maxsize=None)
def condition_xm(m: int) -> MVerdict:
    """Decide the roots-of-unity condition for m (m need not be odd).

    Instead of testing all t^2 pairs, (1 + z)^t is computed once per root
    and equal values are compared, which finds the same pairs. The
    reported witness is the lexicographically smallest (i, j) with
    z1 = g^i, z2 = g^j for the element g of order t.
    """
    if m < 3:
        raise ValueError(f"m must be >= 3, got {m}")
    t = odd_part(m - 1)
    if t == 1:
        return MVerdict(m, True, t, 1)
    n0 = int(n_order(2, t))
    if n0 > MAX_ROOT_FIELD_DEGREE:
        raise FieldTooLarge(n0, MAX_ROOT_FIELD_DEGREE)
    ctx = mk_field(n0, max_degree=MAX_ROOT_FIELD_DEGREE)
    gamma = element_of_order(ctx, t)
    zetas = [1]
    for _ in range(t - 1):
        zetas.append(ctx.mul(zetas[-1], gamma))
    groups: dict[int, list[int]] = {}
    for i in range(1, t):
        groups.setdefault(ctx.pow(1 ^ zetas[i], t), []).append(i)
    for i in range(1, t):
        for j in groups[ctx.pow(1 ^ zetas[i], t)]:
            if j != i and (i + j) % t:
                w = Witness(i, j, zetas[i], zetas[j], n0, ctx.modulus)
                return MVerdict(m, False, t, n0, w)
    return MVerdict(m, True, t, n0)


def check_witness(w: Witness, t: int) -> bool:
    """Re-verify a non-membership certificate from scratch."""
    ctx = w.ctx
    z1, z2 = w.zeta1, w.zeta2
    if 1 in (z1, z2) or z1 == z2 or ctx.mul(z1, z2) == 1:
        return False
    ratio = ctx.div(1 ^ z1, 1 ^ z2)
    return all(ctx.pow(z, t) == 1 for z in (z1, z2, ratio))


def in_M(m: int) -> MVerdict:
    if m % 2 == 0 or m < 3:
        raise NotOdd(f"M contains odd integers >= 3 only, got {m}")
    return condition_xm(m)


def in_M_by_definition(m: int) -> bool:
    """Membership straight from the definition: do the critical values of
    L_1(x^m) over F_2 differ pairwise (over the algebraic closure)?"""
    if m % 2 == 0 or m < 3:
        raise NotOdd(f"M contains odd integers >= 3 only, got {m}")
    f2 = mk_field(1)
    g = l_alpha(FqPoly.monomial(f2, m), 1).g
    return is_morse(g).cond_b


def scan_M(limit: int) -> list[MVerdict]:
    return [in_M(m) for m in range(3, limit, 2)]


def l_prime_ok(l: int) -> bool:
    """2^(l-1) != 1 mod l^2, and l+1 satisfies the roots-of-unity condition."""
    if l % 2 == 0 or not isprime(l):
        raise NotOddPrime(f"{l} is not an odd prime")
    return pow(2, l - 1, l * l) != 1 and condition_xm(l + 1).member


def scan_l_primes(limit: int) -> list[tuple[int, bool]]:
    return [(l, l_prime_ok(l)) for l in range(3, limit, 2) if isprime(l)]


# -- families -----------------------------------------------------------------

@dataclass(frozen=True)
class FamilyMember:
    m: int
    mod8: int
    provenance: str
    expected_mod8: int | None = None
    flagged: bool = field(default=False)


def _member(m, prov, expected=None):
    r = m % 8
    return FamilyMember(m, r, prov, expected, expected is not None and r != expected)


def gen_families(
    kind: str,
    *,
    l: int | None = None,
    kmin: int | None = None,
    kmax: int = 5,
    smax: int = 3,
    cap: int | None = None,
    variant: str = "abstract",
) -> list[FamilyMember]:
    """Exponents from the known infinite subfamilies of M.

    kind is one of pow2 (2^k+1), two_pows (2^k+2^s+1, k >= s >= 1),
    l_power (2^s l^k+1), first_family (2 l^(2k+1)+1 for l = 3 mod 4,
    claimed = 7 mod 8) and second_family (claimed = 3 mod 8; 2 l^k+1 for
    l = 1 mod 8). For l = 7 mod 8 the second family is printed in two ways
    in the literature: ``variant="abstract"`` gives 2 l^(2k)+1 and
    ``variant="corollary"`` gives 2 l^(2k+1)+1.
    Residues mod 8 are computed; entries that miss the claimed residue are
    kept with ``flagged=True``.
    """
    out: list[FamilyMember] = []
    if kind in ("l_power", "first_family", "second_family"):
        if l is None:
            raise ValueError(f"{kind} needs a prime l")
        if not l_prime_ok(l):
            raise IneligiblePrime(f"l = {l} fails the lifting hypotheses")
        if kind == "first_family" and l % 4 != 3:
            raise ValueError(f"first family needs l = 3 mod 4, got {l}")
        if kind == "second_family" and l % 8 not in (1, 7):
            raise ValueError(f"second family needs l = 1 or 7 mod 8, got {l}")

    if kind == "pow2":
        for k in range(kmin if kmin is not None else 1, kmax + 1):
            out.append(_member(2**k + 1, f"2^{k}+1"))
    elif kind == "two_pows":
        for k in range(kmin if kmin is not None else 1, kmax + 1):
            for s in range(1, k + 1):
                out.append(_member(2**k + 2**s + 1, f"2^{k}+2^{s}+1"))
    elif kind == "l_power":
        for k in range(kmin if kmin is not None else 1, kmax + 1):
            for s in range(1, smax + 1):
                out.append(_member(2**s * l**k + 1, f"2^{s}*{l}^{k}+1"))
    elif kind == "first_family":
        for k in range(kmin if kmin is not None else 0, kmax + 1):
            out.append(_member(2 * l ** (2 * k + 1) + 1, f"2*{l}^(2*{k}+1)+1", 7))
    elif kind == "second_family":
        if l % 8 == 7 and variant == "abstract":
            for k in range(kmin if kmin is not None else 1, kmax + 1):
                out.append(_member(2 * l ** (2 * k) + 1, f"2*{l}^(2*{k})+1", 3))
        elif l % 8 == 7:
            for k in range(kmin if kmin is not None else 0, kmax + 1):
                out.append(_member(2 * l ** (2 * k + 1) + 1, f"2*{l}^(2*{k}+1)+1", 3))
        else:
            for k in range(kmin if kmin is not None else 1, kmax + 1):
                out.append(_member(2 * l**k + 1, f"2*{l}^{k}+1", 3))
    else:
        raise ValueError(f"unknown family kind {kind!r}")

    if cap is not None:
        out = [e for e in out if e.m <= cap]
    return sorted(out, key=lambda e: (e.m, e.provenance))
