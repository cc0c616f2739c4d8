"""Morse certification of L_alpha f and the count of bad alpha."""

import random

from diffuni import FqPoly, count_non_morse_alphas, is_morse, l_alpha, mk_field, morse_alpha_bound

ctx = mk_field(8)
x7 = FqPoly.monomial(ctx, 7)
print("L_1 x^7 =", l_alpha(x7, 1).g, "->", is_morse(l_alpha(x7, 1).g))
print("bad alpha for x^7 over F_256:", count_non_morse_alphas(x7).count)

rnd = random.Random(5)
for m in (7, 11, 19):
    worst = 0
    for _ in range(20):
        f = FqPoly(ctx, [rnd.randrange(ctx.q) for _ in range(m)] + [rnd.randrange(1, ctx.q)])
        scan = count_non_morse_alphas(f)
        worst = max(worst, scan.count)
    print(f"m={m}: worst count over 20 random f = {worst}, bound {morse_alpha_bound(m)}")
