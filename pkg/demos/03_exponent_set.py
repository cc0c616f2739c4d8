"""Membership in M, the l-prime list and the known families."""

from diffuni import gen_families, in_M, scan_l_primes, scan_M

non = [v.m for v in scan_M(200) if not v.member]
print("non-members below 200:", non)

v = in_M(15)
print("15 in M:", v.member, "witness", v.witness)

print("primes l < 200 failing the criterion:", [l for l, ok in scan_l_primes(200) if not ok])

for kind, kw in [("pow2", {}), ("two_pows", {"kmax": 4}), ("first_family", {"l": 3, "kmax": 2})]:
    ms = [(e.m, e.mod8, in_M(e.m).member) for e in gen_families(kind, **kw)]
    print(kind, "(m, m mod 8, in M):", ms)
