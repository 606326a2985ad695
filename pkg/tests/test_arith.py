import math

from hypothesis import given, settings, strategies as st

from digitclass.arith import (
    euler_phi,
    factorize,
    is_prime,
    is_primitive_root,
    is_squarefree,
    jacobi,
    mult_order,
    pow_mod,
    primes_in,
    smallest_primitive_roots,
)
from digitclass.errors import DomainError

import pytest


SMALL_PRIMES = [2, 3, 5, 7, 11, 13, 10007, 104729, 2**31 - 1]
SMALL_COMPOSITES = [1, 4, 9, 91, 561, 1105, 2**31 - 3, 3215031751]


def test_is_prime_known_values():
    for p in SMALL_PRIMES:
        assert is_prime(p)
    for c in SMALL_COMPOSITES:
        assert not is_prime(c)


def test_primes_in_matches_naive():
    def naive(lo, hi):
        return [k for k in range(lo, hi + 1) if is_prime(k)]

    assert list(primes_in(2, 100)) == naive(2, 100)
    assert list(primes_in(10**6, 10**6 + 200)) == naive(10**6, 10**6 + 200)
    assert list(primes_in(50, 40)) == []


@given(st.integers(min_value=2, max_value=10**9))
@settings(max_examples=120)
def test_factorize_roundtrip(n):
    f = factorize(n)
    prod = 1
    for p, e in f.pairs:
        assert is_prime(p)
        prod *= p**e
    assert prod == n
    assert tuple(sorted(f.primes)) == f.primes


@given(st.integers(min_value=1, max_value=10**5))
@settings(max_examples=60)
def test_euler_phi_matches_count(n):
    assert euler_phi(n) == sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


@given(st.integers(min_value=3, max_value=5000), st.integers(min_value=2, max_value=5000))
@settings(max_examples=150)
def test_mult_order_postcondition(m, n):
    if math.gcd(n, m) != 1:
        with pytest.raises(DomainError):
            mult_order(n, m)
        return
    t = mult_order(n, m)
    assert pow(n, t, m) == 1
    if t > 1:
        for p in factorize(t).primes:
            assert pow(n, t // p, m) != 1


def test_primitive_roots_known():
    assert smallest_primitive_roots(7, 5) == [3, 5]
    assert smallest_primitive_roots(23, 5) == [5, 7, 10, 11, 14]
    assert is_primitive_root(10, 7)
    assert not is_primitive_root(2, 7)


def test_jacobi_known_values():
    assert jacobi(2, 15) == 1
    assert jacobi(2, 7) == 1
    assert jacobi(3, 7) == -1
    assert jacobi(21, 15) == 0


@given(st.integers(min_value=0, max_value=10**6),
       st.integers(min_value=1, max_value=10**4))
@settings(max_examples=100)
def test_jacobi_matches_legendre_product(a, k):
    n = 2 * k + 1
    expected = 1
    for p, e in factorize(n).pairs:
        if p == n and e == 1 and is_prime(n):
            pass
        legendre = pow(a, (p - 1) // 2, p)
        legendre = -1 if legendre == p - 1 else legendre
        expected *= legendre**e
    assert jacobi(a, n) == expected


@given(st.integers(min_value=0, max_value=10**5), st.integers(min_value=0, max_value=300),
       st.integers(min_value=1, max_value=10**6))
@settings(max_examples=100)
def test_pow_mod_matches_builtin(b, e, m):
    assert pow_mod(b, e, m) == pow(b, e, m)


@given(st.integers(min_value=2, max_value=10**5))
@settings(max_examples=80)
def test_is_squarefree(n):
    assert is_squarefree(n) == all(e == 1 for _, e in factorize(n).pairs)
