"""Explicit constants: how many alphas can spoil the Morse property, and a
concrete field size past which the Chebotarev estimate guarantees a
simply-splitting D_alpha f + beta.

Everything is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .errors import ScaleError, UnsupportedDegree

MAX_D = 25


def _check_degree(m: int):
    if m < 7 or m % 4 != 3:
        raise UnsupportedDegree(f"need m >= 7 and m = 3 mod 4, got {m}")


def morse_alpha_bound(m: int) -> int:
    """(m-3)(5m^2+28m+7)/64, the most alphas for which L_alpha f can fail to
    be Morse when m is in the set M."""
    _check_degree(m)
    num = (m - 3) * (5 * m * m + 28 * m + 7)
    assert num % 64 == 0
    return num // 64


def cond_a_bound(m: int) -> int:
    """Most alphas with a degenerate critical point: m(m-3)."""
    _check_degree(m)
    return m * (m - 3)


def cond_b_bound(m: int) -> int:
    """Most alphas with colliding critical values: (5m-1)(m-3)(m-7)/64."""
    _check_degree(m)
    num = (5 * m - 1) * (m - 3) * (m - 7)
    assert num % 64 == 0
    return num // 64


@dataclass(frozen=True)
class BoundReport:
    m: int
    d: int
    morse_alpha_bound: int
    d_omega_cap: int  # d! 2^d
    genus_cap: int  # D (2d-3)/2 + 1
    min_n: int
    min_n_chebotarev: int  # smallest n meeting the point-count inequality alone
    min_n_morse: int  # smallest n with 2^(n-1) > bound + 1

    def as_dict(self):
        return dict(self.__dict__)


def chebotarev_slack(n: int, D: int, G: int, rounding: str = "ceil") -> int:
    """q - 2((D+G) s2 + D s4 + D + G) - D, with s2, s4 powers of two
    bracketing q^(1/2), q^(1/4). Nonnegative means the inequality holds."""
    if rounding == "ceil":
        s2, s4 = 1 << -(-n // 2), 1 << -(-n // 4)
    else:
        s2, s4 = 1 << (n // 2), 1 << (n // 4)
    q = 1 << n
    return q - 2 * ((D + G) * s2 + D * s4 + D + G) - D


def constants(m: int) -> tuple[int, int, int]:
    """(d, D, G) for degree m."""
    d = (m - 1) // 2
    D = factorial(d) << d
    G = D * (2 * d - 3) // 2 + 1
    return d, D, G


def min_n_guarantee(m: int, rounding: str = "ceil") -> BoundReport:
    """Smallest n with both a positive Chebotarev count and enough alphas
    that are Morse and pass the trace test.

    With ``rounding="ceil"`` the square and fourth roots of q are replaced
    by the next power of two, which keeps the answer a valid guarantee.
    ``"floor"`` gives a lower bracket and is only for comparison.
    """
    _check_degree(m)
    d, D, G = constants(m)
    if d > MAX_D:
        raise ScaleError(f"d = {d} exceeds {MAX_D}")
    B = morse_alpha_bound(m)
    n_cheb = 1
    while chebotarev_slack(n_cheb, D, G, rounding) < 0:
        n_cheb += 1
    n_morse = 1
    while (1 << (n_morse - 1)) <= B + 1:
        n_morse += 1
    return BoundReport(
        m=m,
        d=d,
        morse_alpha_bound=B,
        d_omega_cap=D,
        genus_cap=G,
        min_n=max(n_cheb, n_morse),
        min_n_chebotarev=n_cheb,
        min_n_morse=n_morse,
    )
