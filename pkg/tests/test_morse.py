import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import elems, fields, polys
from diffuni.bounds import cond_a_bound, cond_b_bound, morse_alpha_bound
from diffuni.diffop import d_alpha, l_alpha
from diffuni.errors import NotAPolynomialMap, UnsupportedDegree
from diffuni.field import embedding, mk_field
from diffuni.morse import count_non_morse_alphas, critical_value_poly, is_morse
from diffuni.poly import FqPoly, derivative, hasse2, poly_gcd, poly_sqrt, radical, resultant, roots_in_field

F8 = mk_field(3)


def P(ctx, *top):
    return FqPoly.from_top(ctx, top)


def test_examples():
    rep = is_morse(P(F8, 1, 0, 1, 1))
    assert (rep.cond_a, rep.cond_b, rep.cond_c) == (True, True, True) and rep.is_morse
    rep = is_morse(P(F8, 1, 0, 0, 0))
    assert not rep.cond_a and rep.witness_a == FqPoly.monomial(F8, 1)
    assert not is_morse(P(F8, 1, 0, 0)).cond_c
    with pytest.raises(NotAPolynomialMap):
        is_morse(P(F8, 4))


def test_bound_values():
    assert morse_alpha_bound(7) == 28
    assert morse_alpha_bound(11) == 115
    with pytest.raises(UnsupportedDegree):
        count_non_morse_alphas(FqPoly.monomial(F8, 9))


@pytest.mark.parametrize("n", [3, 4, 6, 8])
def test_x7_has_no_bad_alpha(n):
    ctx = mk_field(n)
    assert count_non_morse_alphas(FqPoly.monomial(ctx, 7)).count == 0


@given(st.data())
def test_condition_a_gcd_vs_resultant(data):
    ctx = data.draw(fields(1, 6))
    g = data.draw(polys(ctx, 2, 12))
    if data.draw(st.booleans()):
        # plant a degenerate critical point at a random tau
        tau = data.draw(elems(ctx))
        g = g * FqPoly(ctx, [tau, 1]) ** 3
    dg, g2 = derivative(g), hasse2(g)
    if dg.degree >= 1 and not g2.is_zero():
        assert is_morse(g).cond_a == (resultant(dg, g2) != 0)


@given(st.data())
def test_critical_value_poly_is_resultant(data):
    ctx = data.draw(fields(1, 8))
    g = data.draw(polys(ctx, 2, 14))
    V = critical_value_poly(g)
    dg = derivative(g)
    if dg.degree < 1:
        return
    hr = radical(poly_sqrt(dg))
    for y in [data.draw(elems(ctx)) for _ in range(4)]:
        assert V(y) == resultant(hr, g + FqPoly(ctx, [y]))


@pytest.mark.parametrize("n", [1, 2])
def test_condition_b_against_critical_values(n):
    # critical points found in F_{2^(6n)}, where every factor of degree <= 3 splits
    ctx = mk_field(n)
    rnd = random.Random(n)
    seen = set()
    for _ in range(150):
        deg = rnd.choice([3, 5, 6, 7])
        g = FqPoly(ctx, [rnd.randrange(ctx.q) for _ in range(deg)] + [rnd.randrange(1, ctx.q)])
        dg = derivative(g)
        if dg.degree < 1:
            continue
        hr = radical(poly_sqrt(dg))
        if hr.degree > 3:
            continue
        distinct, found = oracles.critical_values_distinct(list(g.coeffs), n, ctx.modulus, 6 * n)
        assert found == hr.degree
        assert is_morse(g).cond_b == distinct
        seen.add(distinct)
    assert seen == {True, False}


@given(st.data())
def test_morse_is_conjunction(data):
    ctx = data.draw(fields(1, 8))
    rep = is_morse(data.draw(polys(ctx, 1, 12)))
    assert rep.is_morse == (rep.cond_a and rep.cond_b and rep.cond_c)


def _common_root_in(ctx, big, a, b):
    emb = embedding(ctx, big)
    A, B = FqPoly(big, map(emb, a.coeffs)), FqPoly(big, map(emb, b.coeffs))
    return bool(roots_in_field(poly_gcd(A, B))) if not (A.is_zero() and B.is_zero()) else True


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_transfer_to_d_alpha(n):
    ctx, big = mk_field(n), mk_field(2 * n)
    rnd = random.Random(100 + n)
    for _ in range(25):
        m = rnd.choice([7, 11])
        f = FqPoly(ctx, [rnd.randrange(ctx.q) for _ in range(m)] + [rnd.randrange(1, ctx.q)])
        for a in rnd.sample(range(1, ctx.q), min(ctx.q - 1, 6)):
            g = l_alpha(f, a).g
            D = d_alpha(f, a)
            dg, g2 = derivative(g), hasse2(g)
            dD, D2 = derivative(D), hasse2(D)
            fails_a = not is_morse(g).cond_a
            # over the closure: the gcds are nonconstant together
            assert fails_a == (poly_gcd(dD, D2).degree >= 1)
            # a common root tau in F_q lifts to x with x^2 + a x = tau in F_{q^2}
            if _common_root_in(ctx, ctx, dg, g2):
                assert _common_root_in(ctx, big, dD, D2)
            if _common_root_in(ctx, big, dD, D2):
                assert fails_a


@pytest.mark.parametrize("m", [7, 9, 11, 13, 15])
def test_alpha_homothety_for_monomials(m):
    ctx = mk_field(8)
    f = FqPoly.monomial(ctx, m)
    verdicts = {is_morse(l_alpha(f, a).g).is_morse for a in range(1, ctx.q)}
    assert len(verdicts) == 1


@pytest.mark.parametrize("m", [7, 11])
def test_scan_bounds_small(m):
    ctx = mk_field(6)
    rnd = random.Random(m)
    for _ in range(5):
        f = FqPoly(ctx, [rnd.randrange(ctx.q) for _ in range(m)] + [rnd.randrange(1, ctx.q)])
        scan = count_non_morse_alphas(f)
        assert scan.count <= morse_alpha_bound(m)
        assert len(scan.a_failures) <= cond_a_bound(m)
        assert len(scan.b_failures) <= cond_b_bound(m)
        assert scan.bad_alphas == sorted(scan.bad_alphas)
        count, bad = scan
        assert count == len(bad)


def test_parallel_scan_matches_serial():
    ctx = mk_field(5)
    f = P(ctx, 1, 3, 0, 7, 1, 0, 9, 2, 5, 0, 4, 1)
    assert count_non_morse_alphas(f, workers=2) == count_non_morse_alphas(f)
