"""Base-n digit expansions of 1/m and their string/rotation structure.

The digits a_1, a_2, ... of 1/m in base n are produced by the remainder
recurrence r_k = n*r_{k-1} mod m, a_k = (n*r_{k-1} - r_k)/m with r_0 = 1,
which is equivalent to the closed form a_k = (n*[n^(k-1)]_m - [n^k]_m)/m
but a full period cheaper.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, InvariantViolation, ResourceLimitError

DEFAULT_DIGIT_CAP = 10**8


@dataclass(frozen=True)
class DigitString:
    """A finite string of base-n digits, a_1 first."""

    base: int
    digits: tuple[int, ...]

    def __post_init__(self):
        if self.base < 2:
            raise DomainError(f"base must be >= 2, got {self.base}")
        if len(self.digits) < 1:
            raise DomainError("empty digit string")
        if any(not 0 <= d < self.base for d in self.digits):
            raise DomainError("digit out of range for base")


@dataclass(frozen=True)
class DigitExpansion:
    """One full period of the base-n expansion of 1/m."""

    m: int
    n: int
    period: int
    digits: tuple[int, ...]

    def as_fraction(self) -> Fraction:
        """Value of the purely periodic expansion; always equals 1/m."""
        return repeating_value(DigitString(self.n, self.digits))

    def residues(self) -> tuple[int, ...]:
        """[n^k]_m for k = 1..period, recovered from the digit recurrence."""
        out = []
        r = 1
        for a in self.digits:
            r = self.n * r - a * self.m
            out.append(r)
        return tuple(out)


@lru_cache(maxsize=64)  # scans revisit the same (m, n) for several p
def expand(m: int, n: int, cap: int = DEFAULT_DIGIT_CAP) -> DigitExpansion:
    """Full-period expansion of 1/m in base n (gcd(n, m) = 1 required)."""
    if m < 2 or n < 2:
        raise DomainError(f"need m >= 2 and n >= 2, got m={m} n={n}")
    if math.gcd(n, m) != 1:
        raise DomainError(f"gcd({n}, {m}) != 1: expansion is not purely periodic")
    digits = []
    r = 1
    while True:
        t = n * r
        r = t % m
        digits.append((t - r) // m)
        if r == 1:
            break
        if len(digits) >= cap:
            raise ResourceLimitError(f"period of 1/{m} base {n} exceeds cap {cap}")
    return DigitExpansion(m=m, n=n, period=len(digits), digits=tuple(digits))


def digit_at(m: int, n: int, k: int) -> int:
    """a_k(m) via the closed form (n*[n^(k-1)]_m - [n^k]_m)/m."""
    if m < 2 or n < 2 or math.gcd(n, m) != 1:
        raise DomainError(f"invalid (m, n) = ({m}, {n})")
    if k < 1:
        raise DomainError(f"digit index must be >= 1, got {k}")
    rprev = pow(n, k - 1, m)
    return (n * rprev - (n * rprev) % m) // m


def string_value(s: DigitString) -> int:
    """(a_1,...,a_l)_n = (1/n) * sum a_k n^k; a_1 is least significant here."""
    return sum(a * s.base ** (k - 1) for k, a in enumerate(s.digits, start=1))


def repeating_value(s: DigitString) -> Fraction:
    """Value of the purely periodic expansion 0.(a_1 a_2 ... a_l) repeating."""
    l = len(s.digits)
    num = 0
    for a in s.digits:
        num = num * s.base + a
    return Fraction(num, s.base**l - 1)


def rotate(e: DigitExpansion, t: int) -> DigitString:
    """Left-rotation by t places; the result's value is {n^t/m} exactly."""
    if t < 0:
        raise DomainError(f"rotation count must be >= 0, got {t}")
    t %= e.period
    rotated = DigitString(e.n, e.digits[t:] + e.digits[:t])
    expected = Fraction(pow(e.n, t, e.m), e.m)
    if repeating_value(rotated) != expected:
        raise InvariantViolation(
            f"rotation of 1/{e.m} base {e.n} by {t} does not equal {{n^t/m}}"
        )
    return rotated


def prefix_floor(m: int, n: int, d: int) -> int:
    """floor(n^d/m), computed from the digit prefix sum and cross-checked."""
    if m < 2 or n < 2 or math.gcd(n, m) != 1:
        raise DomainError(f"invalid (m, n) = ({m}, {n})")
    if d < 0:
        raise DomainError(f"need d >= 0, got {d}")
    total = 0
    r = 1
    for _ in range(d):
        t = n * r
        r = t % m
        total = total * n + (t - r) // m
    floor_side = n**d // m
    if total != floor_side:
        raise InvariantViolation(
            f"digit prefix sum {total} != floor(n^d/m) {floor_side} "
            f"for (m, n, d) = ({m}, {n}, {d})"
        )
    return total


def complement_symmetric(e: DigitExpansion) -> bool:
    """a_k + a_{k + T/2} = n - 1 for every k (half-period complement).

    Expected to hold when m is prime, the period T is even, and
    n != -1 mod m; for other inputs the return value is just data.
    """
    if e.period % 2 != 0:
        raise DomainError(f"period {e.period} is odd; no half-period pairing")
    half = e.period // 2
    return all(
        e.digits[k] + e.digits[k + half] == e.n - 1 for k in range(half)
    )


def digit_residue_congruence(e: DigitExpansion) -> bool:
    """m * a_k = -[n^k]_m mod n for every k in the period (exact identity
    from the division step, so this holds for all coprime m, n)."""
    m, n = e.m, e.n
    return all(
        (m * a + r) % n == 0 for a, r in zip(e.digits, e.residues())
    )
