import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from digitclass.arith import is_prime, mult_order
from digitclass.digits import (
    DigitString,
    complement_symmetric,
    digit_at,
    digit_residue_congruence,
    expand,
    prefix_floor,
    repeating_value,
    rotate,
    string_value,
)
from digitclass.errors import DomainError


def coprime_pairs():
    return (
        st.tuples(st.integers(min_value=3, max_value=3000),
                  st.integers(min_value=2, max_value=100))
        .filter(lambda t: math.gcd(t[1], t[0]) == 1 and t[0] > 1)
    )


def test_expand_frozen_examples():
    assert expand(7, 10).digits == (1, 4, 2, 8, 5, 7)
    assert expand(5, 3).digits == (0, 1, 2, 1)
    assert expand(7, 2).digits == (0, 0, 1)
    assert expand(7, 3).digits == (0, 1, 0, 2, 1, 2)


def test_expand_rejects_common_factor():
    with pytest.raises(DomainError):
        expand(4, 2)


@given(coprime_pairs())
@settings(max_examples=200)
def test_expand_reconstructs_fraction(t):
    m, n = t
    e = expand(m, n)
    assert e.period == mult_order(n, m)
    assert e.as_fraction() == Fraction(1, m)
    assert all(0 <= a < n for a in e.digits)


@given(coprime_pairs(), st.integers(min_value=1, max_value=10**9))
@settings(max_examples=120)
def test_digit_at_matches_expansion(t, k):
    m, n = t
    e = expand(m, n)
    assert digit_at(m, n, k) == e.digits[(k - 1) % e.period]


@given(coprime_pairs())
@settings(max_examples=100)
def test_residues_follow_power_orbit(t):
    m, n = t
    e = expand(m, n)
    assert e.residues() == tuple(pow(n, k, m) for k in range(1, e.period + 1))


def test_string_value_example():
    assert string_value(DigitString(10, (1, 4, 2, 8, 5, 7))) == 758241


@given(coprime_pairs(), st.integers(min_value=0, max_value=50))
@settings(max_examples=100)
def test_rotate_value(t, k):
    m, n = t
    e = expand(m, n)
    s = rotate(e, k)  # raises InvariantViolation internally on mismatch
    assert repeating_value(s) == Fraction(pow(n, k, m), m)


@given(coprime_pairs(), st.integers(min_value=0, max_value=60))
@settings(max_examples=100)
def test_prefix_floor(t, d):
    m, n = t
    assert prefix_floor(m, n, d) == n**d // m


@given(coprime_pairs())
@settings(max_examples=150)
def test_digit_residue_congruence_everywhere(t):
    m, n = t
    assert digit_residue_congruence(expand(m, n))


@given(coprime_pairs())
@settings(max_examples=150)
def test_complement_symmetry_prime_even_order(t):
    m, n = t
    e = expand(m, n)
    if not is_prime(m) or e.period % 2 != 0 or (n + 1) % m == 0:
        return
    assert complement_symmetric(e)


def test_complement_symmetry_rejects_odd_period():
    with pytest.raises(DomainError):
        complement_symmetric(expand(7, 2))
