"""Differential uniformity and the share of pairs that attain it."""

from diffuni import FqPoly, achieving_fraction, ddt_row, delta, mk_field, splits_simply

for n, m in [(3, 3), (5, 3), (3, 7), (6, 7), (8, 7)]:
    ctx = mk_field(n)
    f = FqPoly.monomial(ctx, m)
    res = delta(f, exact_pairs=True)
    print(f"x^{m} over F_{ctx.q}: delta={res.delta}, pairs={res.achieving_pairs}, "
          f"fraction={achieving_fraction(f)}")

ctx = mk_field(3)
f = FqPoly.monomial(ctx, 7)
print("DDT row alpha=1 of x^7 over F_8:", ddt_row(f, 1))
print("D_1 x^7 + 0 splits simply:", splits_simply(f, 1, 0))
