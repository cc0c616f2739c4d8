"""D_alpha f = g(x(x + alpha)): build g = L_alpha f and check the identities."""

import random

from diffuni import FqPoly, compose_talpha, d_alpha, derivative, hasse2, l_alpha, mk_field

ctx = mk_field(8)
rnd = random.Random(1)
f = FqPoly(ctx, [rnd.randrange(ctx.q) for _ in range(11)] + [1])
alpha = 0x53

res = l_alpha(f, alpha)
print("f         =", f)
print("D_alpha f =", d_alpha(f, alpha))
print("g         =", res.g, " (degree", res.d, ")")
print("b_0, b_1  =", res.b_top[0], res.b_top[1])

D = d_alpha(f, alpha)
dg = compose_talpha(derivative(res.g), alpha)
print("round trip g(T_alpha) == D_alpha f:", compose_talpha(res.g, alpha) == D)
print("D' == alpha * g'(T_alpha):", derivative(D) == dg.scale(alpha))
print(
    "D^[2] == g'(T_alpha) + alpha^2 g^[2](T_alpha):",
    hasse2(D) == dg + compose_talpha(hasse2(res.g), alpha).scale(ctx.mul(alpha, alpha)),
)
