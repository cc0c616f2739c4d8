from dataclasses import replace

import pytest

from diffuni.errors import FieldTooLarge, IneligiblePrime, NotOdd, NotOddPrime
from diffuni.field import element_of_order, mk_field
from diffuni.harness import MEMBERS_7_MOD_8, NON_MEMBERS_BELOW_200
from diffuni.mset import (
    MAX_ROOT_FIELD_DEGREE,
    check_witness,
    condition_xm,
    gen_families,
    in_M,
    in_M_by_definition,
    l_prime_ok,
    odd_part,
    root_field_degree,
    scan_l_primes,
    scan_M,
)


def brute_witness(m):
    """All-pairs search for the smallest (i, j), straight from the criterion."""
    t = odd_part(m - 1)
    if t == 1:
        return None
    ctx = mk_field(root_field_degree(m), max_degree=MAX_ROOT_FIELD_DEGREE)
    g = element_of_order(ctx, t)
    for i in range(1, t):
        for j in range(1, t):
            z1, z2 = ctx.pow(g, i), ctx.pow(g, j)
            if z1 == z2 or ctx.mul(z1, z2) == 1:
                continue
            if ctx.pow(ctx.div(1 ^ z1, 1 ^ z2), t) == 1:
                return i, j
    return None


def test_condition_xm_examples():
    assert condition_xm(4).member
    v = condition_xm(8)
    assert not v.member and v.t == 7 and v.n0 == 3
    for k in range(1, 11):
        assert condition_xm(2**k + 2).member


def test_in_M_examples():
    assert in_M(7).member
    assert not in_M(15).member
    assert in_M(9).member
    with pytest.raises(NotOdd):
        in_M(8)
    with pytest.raises(NotOdd):
        in_M(1)


def test_scan_examples():
    def non(limit):
        return [v.m for v in scan_M(limit) if not v.member]

    assert non(200) == list(NON_MEMBERS_BELOW_200)
    assert non(10) == []
    assert non(16) == [15]
    assert [v.m for v in scan_M(12)] == [3, 5, 7, 9, 11]


def test_members_7_mod_8():
    assert sorted(v.m for v in scan_M(200) if v.member and v.m % 8 == 7) == list(MEMBERS_7_MOD_8)


def test_l_prime_examples():
    assert l_prime_ok(3)
    assert not l_prime_ok(7)
    assert not l_prime_ok(1093)
    assert [l for l, ok in scan_l_primes(10) if not ok] == [7]
    assert [l for l, ok in scan_l_primes(200) if not ok] == [7, 31, 73, 89, 127]
    for bad in (2, 9, 15, 1):
        with pytest.raises(NotOddPrime):
            l_prime_ok(bad)


def test_l_prime_ok_implies_condition():
    for l, ok in scan_l_primes(200):
        if ok:
            assert condition_xm(l + 1).member


@pytest.mark.parametrize("m", [v.m for v in scan_M(200) if not v.member])
def test_witnesses_recheck(m):
    v = in_M(m)
    assert v.witness is not None
    assert check_witness(v.witness, v.t)
    assert v.witness.n0 == v.n0


@pytest.mark.parametrize("m", list(range(3, 80, 2)) + [8, 10, 16, 22])
def test_witness_is_lexicographically_first(m):
    v = condition_xm(m)
    w = brute_witness(m)
    assert v.member == (w is None)
    if w:
        assert (v.witness.i, v.witness.j) == w


def test_check_witness_rejects_trivial_pairs():
    v = condition_xm(15)
    w = v.witness
    assert not check_witness(replace(w, zeta2=w.zeta1), v.t)
    assert not check_witness(replace(w, zeta2=w.ctx.inv(w.zeta1)), v.t)


def test_definition_route_agrees():
    for m in range(3, 130, 2):
        assert in_M_by_definition(m) == in_M(m).member, m


def test_doubling_law():
    for m in range(3, 122, 2):
        assert in_M(m).member == in_M(2 * m - 1).member, m


@pytest.mark.parametrize("l", [3, 5, 11])
def test_lifting_spot_check(l):
    assert l_prime_ok(l)
    assert condition_xm(l * l + 1).member


def test_field_too_large_is_reported():
    # t = 1019 is prime with ord_t(2) = 1018
    with pytest.raises(FieldTooLarge) as exc:
        condition_xm(1020)
    assert exc.value.degree == 1018


def test_family_examples():
    fam = gen_families("first_family", l=3, kmax=2)
    assert [e.m for e in fam] == [7, 55, 487]
    assert all(e.mod8 == 7 and not e.flagged for e in fam)
    assert 17 in [e.m for e in gen_families("pow2", kmin=4, kmax=4)]
    assert in_M(17).member
    sec = gen_families("second_family", l=17, kmax=1)
    assert [(e.m, e.mod8) for e in sec] == [(35, 3)]
    with pytest.raises(IneligiblePrime):
        gen_families("first_family", l=7)
    with pytest.raises(ValueError):
        gen_families("first_family", l=5)
    with pytest.raises(ValueError):
        gen_families("second_family", l=3)


def test_second_family_variants():
    # 23 = 7 mod 8: the two printed exponents give different residues
    abstract = gen_families("second_family", l=23, kmax=2)
    assert all(e.mod8 == 3 and not e.flagged for e in abstract)
    corollary = gen_families("second_family", l=23, kmax=1, variant="corollary")
    assert all(e.mod8 == 7 and e.flagged for e in corollary)


def test_generated_members_are_in_M():
    out = []
    out += gen_families("pow2", kmax=9)
    out += gen_families("two_pows", kmax=7)
    for l in (3, 5, 11):
        out += gen_families("l_power", l=l, kmax=2, smax=3)
    out += gen_families("first_family", l=3, kmax=1)
    out += gen_families("first_family", l=11, kmax=0)
    out += gen_families("second_family", l=17, kmax=2)
    out += gen_families("second_family", l=23, kmax=1)
    checked = 0
    for e in out:
        if e.m % 2 == 0:
            continue
        try:
            v = in_M(e.m)
        except FieldTooLarge:
            continue
        assert v.member, e
        checked += 1
    assert checked > 30
