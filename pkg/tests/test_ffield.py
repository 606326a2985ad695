import pytest
from hypothesis import given, settings, strategies as st

from digitclass.errors import DomainError, InvariantViolation
from digitclass.ffield import (
    PolyFq,
    all_polys,
    digit_sum,
    digit_sum_fast,
    ff_expand,
    irreducibles,
    is_irreducible,
    poly,
    poly_add,
    poly_divmod,
    poly_gcd,
    poly_mul,
    poly_powmod,
    poly_sub,
    vanishing_sum_record,
)


def rand_poly(q, max_deg):
    return st.lists(st.integers(min_value=0, max_value=q - 1),
                    min_size=0, max_size=max_deg + 1).map(lambda cs: poly(q, cs))


@given(st.sampled_from([2, 3, 5]), st.data())
@settings(max_examples=150)
def test_divmod_invariant(q, data):
    u = data.draw(rand_poly(q, 6))
    v = data.draw(rand_poly(q, 4))
    if v.is_zero:
        with pytest.raises(DomainError):
            poly_divmod(u, v)
        return
    quot, rem = poly_divmod(u, v)
    assert poly_add(poly_mul(quot, v), rem) == u
    assert rem.deg < v.deg


@given(st.sampled_from([2, 3, 5]), st.data())
@settings(max_examples=100)
def test_gcd_divides_both(q, data):
    u = data.draw(rand_poly(q, 5))
    v = data.draw(rand_poly(q, 5))
    g = poly_gcd(u, v)
    if g.is_zero:
        assert u.is_zero and v.is_zero
        return
    assert poly_divmod(u, g)[1].is_zero
    assert poly_divmod(v, g)[1].is_zero
    assert g.is_monic


def test_canonical_form_enforced():
    with pytest.raises(DomainError):
        PolyFq(3, (1, 0))
    with pytest.raises(DomainError):
        PolyFq(3, (4,))
    assert poly(3, [1, 0]) == PolyFq(3, (1,))


def test_irreducible_counts():
    # number of monic irreducibles of degree d over F_q: (1/d) sum mu(e) q^(d/e)
    expected = {(2, 1): 2, (2, 2): 1, (2, 3): 2, (2, 4): 3,
                (3, 1): 3, (3, 2): 3, (3, 3): 8, (5, 2): 10}
    for (q, d), count in expected.items():
        got = sum(1 for f in all_polys(q, d, monic=True) if is_irreducible(f))
        assert got == count, (q, d)


def test_ff_expand_example():
    # 1/(x^2+x+1) in base x over F_2: digits 0, 1, 1 with period 3
    P = poly(2, [1, 1, 1])
    B = poly(2, [0, 1])
    e = ff_expand(P, B)
    assert e.period == 3
    assert [str(d) for d in e.digits] == ["0", "1", "1"]
    assert digit_sum(e).is_zero


def test_ff_expand_rejects_common_factor():
    P = poly(2, [0, 1])
    with pytest.raises(DomainError):
        ff_expand(P, poly(2, [0, 1, 1]))  # x divides x^2 + x


def test_literal_matches_fast_path():
    for q in (2, 3):
        for P in irreducibles(q, 3):
            for B in all_polys(q, 2, monic=False):
                one = poly(q, [1])
                if poly_gcd(P, poly_sub(B, one)).deg != 0:
                    continue
                if poly_divmod(B, P)[1].is_zero:
                    continue
                assert digit_sum(ff_expand(P, B)) == digit_sum_fast(P, B)


def test_noncoprime_base_gives_nonzero_sum():
    # P | B - 1: the expansion is the constant digit (B-1)/P, so the sum
    # over a period cannot vanish
    P = poly(3, [0, 1])
    B = poly(3, [1, 1])
    rec = vanishing_sum_record(P, B)
    assert not rec.coprime_to_B_minus_1
    assert not rec.digit_sum.is_zero
    assert rec.passed


def test_powmod_matches_repeated_multiplication():
    P = poly(5, [2, 0, 1, 1])
    B = poly(5, [3, 1])
    acc = poly(5, [1])
    for e in range(8):
        assert poly_powmod(B, e, P) == poly_divmod(acc, P)[1]
        acc = poly_mul(acc, B)
