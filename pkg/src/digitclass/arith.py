"""Exact modular and multiplicative arithmetic primitives.

Everything here is pure and exact; Python integers give us arbitrary
precision so no overflow handling is needed anywhere.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from .errors import DomainError

# Deterministic Miller-Rabin witness set, correct for all inputs < 3.3e24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

DEFAULT_SEGMENT = 1 << 20


def mod_reduce(g: int, n: int) -> int:
    """Least non-negative residue of g modulo n (works for negative g)."""
    if n < 1:
        raise DomainError(f"modulus must be >= 1, got {n}")
    return g % n


def pow_mod(b: int, e: int, m: int) -> int:
    if m < 1:
        raise DomainError(f"modulus must be >= 1, got {m}")
    if e < 0:
        raise DomainError("negative exponent")
    return pow(b, e, m)


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if m % p == 0:
            return m == p
    d = m - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, m)
        if x == 1 or x == m - 1:
            continue
        for _ in range(r - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int) -> int:
    """A nontrivial factor of composite n (Brent's cycle variant)."""
    if n % 2 == 0:
        return 2
    seed = 1
    while True:
        seed += 1
        y, c, m_blk = seed % n, seed % n + 1, 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m_blk, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m_blk
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as a sorted tuple of (prime, exponent) pairs."""

    pairs: tuple[tuple[int, int], ...]

    @property
    def value(self) -> int:
        out = 1
        for p, e in self.pairs:
            out *= p**e
        return out

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.pairs)

    def divisors(self) -> list[int]:
        divs = [1]
        for p, e in self.pairs:
            divs = [d * p**i for d in divs for i in range(e + 1)]
        return sorted(divs)


def factorize(x: int) -> Factorization:
    if x < 2:
        raise DomainError(f"factorize needs x >= 2, got {x}")
    counts: dict[int, int] = {}
    rest = x
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47):
        while rest % p == 0:
            counts[p] = counts.get(p, 0) + 1
            rest //= p
    stack = [rest] if rest > 1 else []
    while stack:
        n = stack.pop()
        if n == 1:
            continue
        if is_prime(n):
            counts[n] = counts.get(n, 0) + 1
            continue
        d = _pollard_brent(n)
        stack.append(d)
        stack.append(n // d)
    return Factorization(tuple(sorted(counts.items())))


def euler_phi(m: int) -> int:
    if m == 1:
        return 1
    out = 1
    for p, e in factorize(m).pairs:
        out *= p ** (e - 1) * (p - 1)
    return out


def mult_order(n: int, m: int) -> int:
    """Least t >= 1 with n^t = 1 mod m.

    Starts from phi(m) and strips prime factors while the power stays 1,
    so no iteration over the whole group is needed.
    """
    if m < 2:
        raise DomainError(f"modulus must be >= 2, got {m}")
    if math.gcd(n, m) != 1:
        raise DomainError(f"gcd({n}, {m}) != 1, order undefined")
    t = euler_phi(m)
    for p in factorize(t).primes if t > 1 else ():
        while t % p == 0 and pow(n, t // p, m) == 1:
            t //= p
    return t


def is_primitive_root(n: int, m: int) -> bool:
    if not is_prime(m):
        raise DomainError(f"{m} is not prime")
    if math.gcd(n, m) != 1:
        raise DomainError(f"gcd({n}, {m}) != 1")
    if m == 2:
        return True
    t = m - 1
    for p in factorize(t).primes:
        if pow(n, t // p, m) == 1:
            return False
    return True


def smallest_primitive_roots(m: int, count: int) -> list[int]:
    """Up to `count` smallest primitive roots n with 1 < n < m."""
    roots = []
    for n in range(2, m):
        if math.gcd(n, m) == 1 and is_primitive_root(n, m):
            roots.append(n)
            if len(roots) == count:
                break
    return roots


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n); equals the Legendre symbol for prime n."""
    if n < 1 or n % 2 == 0:
        raise DomainError(f"Jacobi symbol needs odd n >= 1, got {n}")
    a %= n
    result = 1
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _small_sieve(limit: int) -> list[int]:
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i in range(limit + 1) if sieve[i]]


def primes_in(lo: int, hi: int, segment: int = DEFAULT_SEGMENT) -> Iterator[int]:
    """Primes in [lo, hi], ascending, via a segmented sieve.

    Memory stays O(segment + sqrt(hi)) so hi can reach ~1e9.
    """
    if lo > hi:
        return
    lo = max(lo, 2)
    base = _small_sieve(math.isqrt(hi))
    start = lo
    while start <= hi:
        end = min(start + segment - 1, hi)
        block = bytearray([1]) * (end - start + 1)
        for p in base:
            if p * p > end:
                break
            first = max(p * p, ((start + p - 1) // p) * p)
            block[first - start :: p] = bytearray(len(block[first - start :: p]))
        for i, flag in enumerate(block):
            if flag:
                yield start + i
        start = end + 1


def is_squarefree(x: int) -> bool:
    if x < 1:
        raise DomainError(f"need x >= 1, got {x}")
    if x == 1:
        return True
    return all(e == 1 for _, e in factorize(x).pairs)
