"""Differential uniformity and difference distribution tables.

The polynomial is evaluated once on all of F_q; a DDT row for alpha is
then the histogram of F[x ^ alpha] ^ F[x], computed for blocks of alphas
at a time with numpy.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .diffop import d_alpha
from .errors import ScaleError, ZeroDirection
from .field import FieldCtx
from .poly import FqPoly, roots_in_field

MAX_N = 28
BLOCK_CELLS = 1 << 22


def _check_scale(ctx: FieldCtx):
    if ctx.n > MAX_N:
        raise ScaleError(f"DDT over F_2^{ctx.n} is beyond the supported n <= {MAX_N}")


def value_table(f: FqPoly) -> np.ndarray:
    """f(x) for every x in F_q, indexed by the encoding of x."""
    ctx = f.ctx
    _check_scale(ctx)
    xs = np.arange(ctx.q, dtype=np.int64)
    acc = np.zeros(ctx.q, dtype=np.int64)
    for c in reversed(f.coeffs):
        acc = ctx.mul_array(acc, xs)
        acc ^= c
    return acc


def ddt_row_array(f: FqPoly, alpha: int, table: np.ndarray | None = None) -> np.ndarray:
    """Dense row: entry beta counts x with f(x + alpha) + f(x) = beta."""
    if not alpha:
        raise ZeroDirection("DDT rows need alpha != 0")
    F = value_table(f) if table is None else table
    xs = np.arange(f.ctx.q, dtype=np.int64)
    return np.bincount(F[xs ^ alpha] ^ F, minlength=f.ctx.q)


def ddt_row(f: FqPoly, alpha: int) -> dict[int, int]:
    """Nonzero entries of the DDT row for alpha, as {beta: count}."""
    row = ddt_row_array(f, alpha)
    return {int(b): int(row[b]) for b in np.flatnonzero(row)}


@dataclass
class DeltaResult:
    delta: int
    achieving_pairs: int
    per_alpha_max: dict[int, int]
    # True when the scan stopped early; achieving_pairs is then a lower bound
    partial: bool = False


def _row_stats(F: np.ndarray, alphas: np.ndarray, q: int):
    xs = np.arange(q, dtype=np.int64)
    D = F[xs[None, :] ^ alphas[:, None]] ^ F[None, :]
    D += (np.arange(len(alphas), dtype=np.int64) * q)[:, None]
    counts = np.bincount(D.ravel(), minlength=len(alphas) * q).reshape(len(alphas), q)
    rmax = counts.max(axis=1)
    rcnt = (counts == rmax[:, None]).sum(axis=1)
    return rmax, rcnt


def delta(f: FqPoly, exact_pairs: bool = False) -> DeltaResult:
    """delta(f) = max over alpha != 0 and beta of the DDT entry.

    For odd deg f = m >= 3 no entry can exceed min(m-1, q); unless
    ``exact_pairs`` is set the scan stops after the block of alphas in
    which that ceiling is reached.
    """
    ctx = f.ctx
    q = ctx.q
    F = value_table(f)
    m = f.degree
    ceiling = min(m - 1, q) if m >= 3 and m & 1 else q
    block = max(1, BLOCK_CELLS // q)
    best, pairs = 0, 0
    per_alpha: dict[int, int] = {}
    partial = False
    for start in range(1, q, block):
        alphas = np.arange(start, min(start + block, q), dtype=np.int64)
        rmax, rcnt = _row_stats(F, alphas, q)
        per_alpha.update(zip(alphas.tolist(), rmax.tolist()))
        bmax = int(rmax.max())
        if bmax > best:
            best, pairs = bmax, 0
        if bmax == best:
            pairs += int(rcnt[rmax == best].sum())
        if not exact_pairs and best >= ceiling and start + block < q:
            partial = True
            break
    return DeltaResult(best, pairs, per_alpha, partial)


def achieving_fraction(f: FqPoly) -> Fraction:
    """Share of (alpha, beta) in F_q^* x F_q attaining delta(f), out of q^2."""
    res = delta(f, exact_pairs=True)
    return Fraction(res.achieving_pairs, f.ctx.q ** 2)


def splits_simply(f: FqPoly, alpha: int, beta: int) -> bool:
    """Does D_alpha f + beta have deg(D_alpha f) distinct roots in F_q?"""
    D = d_alpha(f, alpha) + FqPoly(f.ctx, [beta])
    if D.degree < 1:
        return False
    return len(roots_in_field(D)) == D.degree


def delta_of_tables(F: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """delta and achieving-pair count for many functions at once.

    F has shape (N, q); row k is the value table of the k-th function.
    """
    N, q = F.shape
    xs = np.arange(q, dtype=np.int64)
    off = (np.arange(N, dtype=np.int64) * q)[:, None]
    best = np.zeros(N, dtype=np.int64)
    pairs = np.zeros(N, dtype=np.int64)
    for a in range(1, q):
        D = (F[:, xs ^ a] ^ F) + off
        counts = np.bincount(D.ravel(), minlength=N * q).reshape(N, q)
        rmax = counts.max(axis=1)
        rcnt = (counts == rmax[:, None]).sum(axis=1)
        up = rmax > best
        pairs[up] = 0
        best = np.maximum(best, rmax)
        eq = rmax == best
        pairs[eq] += rcnt[eq]
    return best, pairs
