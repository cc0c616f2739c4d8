"""Explicit bounds: bad-alpha count and the smallest n that is guaranteed."""

from diffuni import min_n_guarantee, morse_alpha_bound

for m in (7, 11, 19, 23):
    rep = min_n_guarantee(m)
    print(f"m={m}: morse bound {morse_alpha_bound(m)}, min n {rep.min_n}", rep.as_dict())
