"""Quadratic characters, sigma tables, Gamma/c_k sums and B1 machinery.

A factored odd real character chi = chi1 * chi2 of modulus D = n*m is
represented by `CharPair`; chi1 is the Jacobi symbol mod n (odd because
n = 3 mod 4) and chi2 the Legendre symbol mod m (even because
m = 1 mod 4).

Two conventions for the counts sigma(a, +-1) coexist on purpose: the
"residue" convention counts l in [1, m] by residue class and chi2 value,
the "digit" convention counts indices k in [1, m-1] by the class of
m*a_k(m) mod n and the parity of k.  The two differ by a -> -a mod n in
general and only the residue convention makes the class-number formula
close; both are computed so the disagreement stays measurable.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .arith import factorize, is_prime, is_primitive_root, is_squarefree, jacobi
from .digits import expand
from .errors import DomainError, InvariantViolation

ALPHAS = (-1, 0, 1)

# Coefficient matrix of the n=3 linear system tying the four independent
# sigma counts to floor((m-1)/3) and (m-1)/2; rank 3, kernel spanned by
# NULLITY_VECTOR.
MATRIX_A = np.array(
    [[1, 1, 0, 0], [0, 0, 1, 1], [2, 0, 1, 0], [0, 2, 0, 1]], dtype=np.int64
)
NULLITY_VECTOR = np.array([1, -1, -2, 2], dtype=np.int64)


@dataclass(frozen=True)
class CharPair:
    """A factored odd quadratic character of modulus D = n*m."""

    n: int
    m: int

    def __post_init__(self):
        if self.n < 3 or self.n % 2 == 0 or self.n % 4 != 3:
            raise DomainError(f"n must be odd, >= 3 and = 3 mod 4, got {self.n}")
        if not is_squarefree(self.n):
            raise DomainError(f"n must be squarefree, got {self.n}")
        if not is_prime(self.m) or self.m % 4 != 1:
            raise DomainError(f"m must be a prime = 1 mod 4, got {self.m}")
        if math.gcd(self.n, self.m) != 1:
            raise DomainError(f"gcd(n, m) != 1 for ({self.n}, {self.m})")

    @property
    def D(self) -> int:
        return self.n * self.m

    def chi1(self, a: int) -> int:
        return jacobi(a, self.n)

    def chi2(self, a: int) -> int:
        return jacobi(a, self.m)

    def chi(self, a: int) -> int:
        return self.chi1(a) * self.chi2(a)


@lru_cache(maxsize=256)
def _legendre_table(p: int) -> np.ndarray:
    """chi(a) for a in [0, p) as int8, chi the Legendre symbol mod p."""
    t = np.full(p, -1, dtype=np.int8)
    t[0] = 0
    k = np.arange(1, (p - 1) // 2 + 1, dtype=np.int64)
    t[np.mod(k * k, p)] = 1
    return t


def quadratic_char_table(D: int) -> np.ndarray:
    """jacobi(a, D) for a in [0, D) as an int8 array (D odd squarefree)."""
    if D % 2 == 0 or not is_squarefree(D):
        raise DomainError(f"need odd squarefree D, got {D}")
    idx = np.arange(D, dtype=np.int64)
    chi = np.ones(D, dtype=np.int8)
    for p in factorize(D).primes:
        chi = chi * _legendre_table(p)[idx % p]
    return chi


@dataclass(frozen=True)
class BernoulliValue:
    """B1 of a character, as an exact rational."""

    value: Fraction

    def __post_init__(self):
        if self.value.denominator < 1:
            raise InvariantViolation("non-normalized rational")


def b1_direct(D: int, chi=None) -> Fraction:
    """B1(chi) = (1/D) sum_{a=1}^{D} chi(a)*a, exact.

    With chi omitted the quadratic character jacobi(., D) is used and the
    sum is evaluated from a sieved character table; an explicit chi is
    evaluated pointwise.
    """
    if D < 1:
        raise DomainError(f"modulus must be >= 1, got {D}")
    if chi is None:
        table = quadratic_char_table(D).astype(np.int64)
        total = int(np.dot(table, np.arange(D, dtype=np.int64)))
    else:
        total = sum(chi(a) * a for a in range(1, D + 1))
    return Fraction(total, D)


def sigma_res_count(n: int, m: int, a: int, alpha: int) -> int:
    """#{1 <= l <= m : chi2(l) = alpha, l = a mod n} (residue convention)."""
    if alpha not in ALPHAS:
        raise DomainError(f"alpha must be in {ALPHAS}, got {alpha}")
    a %= n
    count = 0
    for l in range(1, m + 1):
        if l % n == a and jacobi(l, m) == alpha:
            count += 1
    return count


def sigma01_fast(m: int) -> int:
    """sigma(0, 1) for n = 3: multiples of 3 in [1, m] that are QRs mod m.

    Counts j <= (m-1)/2 with j^2 mod m divisible by 3; each quadratic
    residue appears exactly once among these squares.
    """
    if not is_prime(m):
        raise DomainError(f"m must be prime, got {m}")
    k = np.arange(1, (m - 1) // 2 + 1, dtype=np.int64)
    return int(np.count_nonzero(np.mod(k * k, m) % 3 == 0))


def sigma_digit_count(n: int, m: int, a: int, parity_sign: int) -> int:
    """Digit-parity convention: count k in [1, m-1] with m*a_k(m) = a mod n.

    parity_sign +1 selects even k, -1 odd k.  Needs n to be a primitive
    root mod m so the digit sequence has period m - 1.
    """
    if parity_sign not in (-1, 1):
        raise DomainError(f"parity sign must be +-1, got {parity_sign}")
    if not is_primitive_root(n % m, m):
        raise DomainError(f"{n} is not a primitive root mod {m}")
    a %= n
    e = expand(m, n)
    want_even = parity_sign == 1
    count = 0
    for k, d in enumerate(e.digits, start=1):
        if (k % 2 == 0) == want_even and (m * d) % n == a:
            count += 1
    return count


@dataclass(frozen=True)
class SigmaTable:
    """All sigma counts for one pair, in both conventions."""

    pair: CharPair
    res: dict
    digit: dict

    def row_sum_report(self) -> list[tuple[int, int, int, bool]]:
        """Per class a: (a, sigma(a,1)+sigma(a,-1), printed two-case value,
        match flag).  The printed formula floor(m/n)+1 for a != 0 fails on
        classes past [m]_n, which is exactly what this report surfaces."""
        n, m = self.pair.n, self.pair.m
        out = []
        for a in range(n):
            actual = self.res[(a, 1)] + self.res[(a, -1)]
            printed = m // n + (1 if a != 0 else 0)
            out.append((a, actual, printed, actual == printed))
        return out


def sigma_table(pair: CharPair) -> SigmaTable:
    n, m = pair.n, pair.m
    res = {(a, alpha): 0 for a in range(n) for alpha in ALPHAS}
    chi2 = _legendre_table(m)
    for l in range(1, m + 1):
        res[(l % n, int(chi2[l % m]))] += 1
    digit: dict = {}
    if is_primitive_root(n % m, m):
        digit = {(a, s): 0 for a in range(n) for s in (-1, 1)}
        e = expand(m, n)
        for k, d in enumerate(e.digits, start=1):
            digit[((m * d) % n, 1 if k % 2 == 0 else -1)] += 1
    return SigmaTable(pair=pair, res=res, digit=digit)


def gamma(pair: CharPair, alpha: int) -> int:
    """Gamma_alpha = sum over a in [1, nm] with chi2(a) = alpha of chi1(a)*a."""
    if alpha not in ALPHAS:
        raise DomainError(f"alpha must be in {ALPHAS}, got {alpha}")
    n, m = pair.n, pair.m
    chi2 = _legendre_table(m)
    total = 0
    for a in range(1, n * m + 1):
        if int(chi2[a % m]) == alpha:
            total += jacobi(a, n) * a
    return total


def c_k(pair: CharPair, k: int, alpha: int) -> int:
    """c_k(alpha), computed by both printed routes, which must agree.

    Direct route: sum over a in [1, m] with chi2(a) = alpha of chi1(a + k*m).
    Sigma route:  sum over a in [1, n] of chi1(a + k*[m]_n) * sigma(a, alpha).
    """
    if alpha not in ALPHAS:
        raise DomainError(f"alpha must be in {ALPHAS}, got {alpha}")
    n, m = pair.n, pair.m
    chi2 = _legendre_table(m)
    direct = sum(
        jacobi(a + k * m, n) for a in range(1, m + 1) if int(chi2[a % m]) == alpha
    )
    table = sigma_table(pair)
    mr = m % n
    via_sigma = sum(
        jacobi(a + k * mr, n) * table.res[(a % n, alpha)] for a in range(1, n + 1)
    )
    if direct != via_sigma:
        raise InvariantViolation(
            f"c_k routes disagree for (n={n}, m={m}, k={k}, alpha={alpha}): "
            f"{direct} != {via_sigma}"
        )
    return direct


def general_theorem_rhs(
    pair: CharPair, factor: int | Fraction, convention: str = "residue"
) -> Fraction:
    """(factor/n) * sum_alpha alpha * sum_k k * c_k(alpha).

    The prefactor is a parameter (candidates 1 and 2) because the printed
    2/n does not survive a desk evaluation; the scan calibrates it.
    """
    n, m = pair.n, pair.m
    table = sigma_table(pair)
    if convention == "residue":
        counts = table.res
    elif convention == "digit":
        if not table.digit:
            raise DomainError(
                f"digit convention needs {n} to be a primitive root mod {m}"
            )
        counts = table.digit
    else:
        raise DomainError(f"unknown sigma convention {convention!r}")
    mr = m % n
    total = 0
    for alpha in (-1, 1):
        inner = 0
        for k in range(n):
            ck = sum(
                jacobi(a + k * mr, n) * counts[(a % n, alpha)] for a in range(1, n + 1)
            )
            inner += k * ck
        total += alpha * inner
    return Fraction(factor) * Fraction(total, n)


def n3_sigma_vector(m: int) -> np.ndarray:
    """(x1, x2, x3, x4) = (sigma(0,1), sigma(0,-1), sigma(1,1), sigma(1,-1))
    for n = 3; satisfies MATRIX_A @ x = (floor((m-1)/3), floor((m-1)/3),
    (m-1)/2, (m-1)/2) whenever 3 is a primitive root mod m."""
    return np.array(
        [
            sigma_res_count(3, m, 0, 1),
            sigma_res_count(3, m, 0, -1),
            sigma_res_count(3, m, 1, 1),
            sigma_res_count(3, m, 1, -1),
        ],
        dtype=np.int64,
    )
