"""Digit expansions of 1/P in a polynomial base B over a prime field.

The analogue of the decimal-period digit sum: write 1/P = sum a_k B^(-k)
with deg a_k < deg B, and sum the digit polynomials over one period.  The
sweep confirms the sum vanishes whenever gcd(P, B(B-1)) = 1, using a
telescoped geometric-sum identity rather than literal digit generation
(periods reach q^deg(P) - 1, far beyond enumeration range).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .arith import is_prime
from .errors import DomainError, InvariantViolation, ResourceLimitError


@dataclass(frozen=True)
class PolyFq:
    """Polynomial over F_q, q prime.  Coefficients ascending, canonical
    (no trailing zeros; the zero polynomial has an empty tuple)."""

    q: int
    coeffs: tuple

    def __post_init__(self):
        if not is_prime(self.q):
            raise DomainError(f"q must be prime, got {self.q}")
        if any(not 0 <= c < self.q for c in self.coeffs):
            raise DomainError("coefficients must lie in [0, q)")
        if self.coeffs and self.coeffs[-1] == 0:
            raise DomainError("non-canonical coefficient tuple (trailing zero)")

    @property
    def deg(self) -> int:
        return len(self.coeffs) - 1  # zero polynomial: -1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> int:
        if self.is_zero:
            raise DomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __str__(self):
        return ",".join(str(c) for c in self.coeffs) if self.coeffs else "0"


def poly(q: int, coeffs) -> PolyFq:
    cs = [c % q for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return PolyFq(q, tuple(cs))


def poly_add(u: PolyFq, v: PolyFq) -> PolyFq:
    n = max(len(u.coeffs), len(v.coeffs))
    a = list(u.coeffs) + [0] * (n - len(u.coeffs))
    b = list(v.coeffs) + [0] * (n - len(v.coeffs))
    return poly(u.q, [x + y for x, y in zip(a, b)])


def poly_sub(u: PolyFq, v: PolyFq) -> PolyFq:
    n = max(len(u.coeffs), len(v.coeffs))
    a = list(u.coeffs) + [0] * (n - len(u.coeffs))
    b = list(v.coeffs) + [0] * (n - len(v.coeffs))
    return poly(u.q, [x - y for x, y in zip(a, b)])


def poly_mul(u: PolyFq, v: PolyFq) -> PolyFq:
    if u.is_zero or v.is_zero:
        return poly(u.q, [])
    out = [0] * (len(u.coeffs) + len(v.coeffs) - 1)
    for i, a in enumerate(u.coeffs):
        if a:
            for j, b in enumerate(v.coeffs):
                out[i + j] += a * b
    return poly(u.q, out)


def poly_divmod(u: PolyFq, v: PolyFq) -> tuple:
    if v.is_zero:
        raise DomainError("division by zero polynomial")
    q = u.q
    rem = list(u.coeffs)
    dv = v.deg
    if u.deg < dv:
        return poly(q, []), u
    inv_lead = pow(v.lead, -1, q)
    quot = [0] * (u.deg - dv + 1)
    for i in range(u.deg - dv, -1, -1):
        c = rem[i + dv] * inv_lead % q
        if c:
            quot[i] = c
            for j, b in enumerate(v.coeffs):
                rem[i + j] = (rem[i + j] - c * b) % q
    return poly(q, quot), poly(q, rem)


def poly_mod(u: PolyFq, v: PolyFq) -> PolyFq:
    return poly_divmod(u, v)[1]


def poly_gcd(u: PolyFq, v: PolyFq) -> PolyFq:
    while not v.is_zero:
        u, v = v, poly_mod(u, v)
    if u.is_zero:
        return u
    inv = pow(u.lead, -1, u.q)
    return poly(u.q, [c * inv for c in u.coeffs])


def poly_powmod(base: PolyFq, e: int, mod: PolyFq) -> PolyFq:
    result = poly(base.q, [1])
    base = poly_mod(base, mod)
    while e:
        if e & 1:
            result = poly_mod(poly_mul(result, base), mod)
        base = poly_mod(poly_mul(base, base), mod)
        e >>= 1
    return result


def all_polys(q: int, deg: int, monic: bool = False):
    """All polynomials over F_q of exact degree deg (deg = -1 yields the
    zero polynomial)."""
    if deg < 0:
        yield poly(q, [])
        return
    leads = [1] if monic else range(1, q)
    for lead in leads:
        for tail in itertools.product(range(q), repeat=deg):
            yield PolyFq(q, tail + (lead,))


def is_irreducible(f: PolyFq) -> bool:
    """Rabin's test: x^(q^n) = x mod f and gcd(x^(q^(n/r)) - x, f) = 1 for
    prime divisors r of n."""
    n = f.deg
    if n <= 0:
        return False
    if n == 1:
        return True
    q = f.q
    x = poly(q, [0, 1])
    if poly_powmod(x, q**n, f) != poly_mod(x, f):
        return False
    from .arith import factorize

    for r in factorize(n).primes:
        g = poly_sub(poly_powmod(x, q ** (n // r), f), x)
        if poly_gcd(g, f).deg != 0:
            return False
    return True


def irreducibles(q: int, max_deg: int, monic: bool = True):
    for d in range(1, max_deg + 1):
        for f in all_polys(q, d, monic=monic):
            if is_irreducible(f):
                yield f


@dataclass(frozen=True)
class FFExpansion:
    """Periodic base-B digit string of 1/P: the a_k with deg a_k < deg B."""

    P: PolyFq
    B: PolyFq
    period: int
    digits: tuple  # of PolyFq


def ff_expand(P: PolyFq, B: PolyFq, cap: int = 10**6) -> FFExpansion:
    """Long-division recurrence B*r_{k-1} = a_k*P + r_k, r_0 = 1."""
    if P.deg < 1 or B.deg < 1:
        raise DomainError("P and B must be non-constant")
    if poly_gcd(P, B).deg != 0:
        raise DomainError("P and B must be coprime")
    one = poly(P.q, [1])
    r = one
    digits = []
    while True:
        a, r = poly_divmod(poly_mul(B, r), P)
        digits.append(a)
        if r == one:
            return FFExpansion(P=P, B=B, period=len(digits), digits=tuple(digits))
        if len(digits) > cap:
            raise ResourceLimitError(f"period exceeds cap {cap}")


def digit_sum(e: FFExpansion) -> PolyFq:
    total = poly(e.P.q, [])
    for a in e.digits:
        total = poly_add(total, a)
    return total


# ---------------------------------------------------------------------------
# fast sweep


def _rep_mod(P: PolyFq, u: PolyFq) -> PolyFq:
    return poly_mod(u, P)


def _geometric_sum_mod(B: PolyFq, N: int, P: PolyFq) -> PolyFq:
    """G(N) = 1 + B + ... + B^(N-1) mod P by binary doubling:
    G(2t) = G(t)*(1 + B^t), G(t+1) = B*G(t) + 1."""
    q = P.q
    one = poly(q, [1])
    G = poly(q, [])
    Bp = one  # B^t mod P alongside G(t)
    for bit in bin(N)[2:]:
        G = poly_mod(poly_mul(G, poly_add(one, Bp)), P)
        Bp = poly_mod(poly_mul(Bp, Bp), P)
        if bit == "1":
            G = poly_mod(poly_add(poly_mul(B, G), one), P)
            Bp = poly_mod(poly_mul(Bp, B), P)
    return G


def digit_sum_fast(P: PolyFq, B: PolyFq) -> PolyFq:
    """Digit sum over one period without generating digits.

    Summing the division recurrence over a period T telescopes to
    P * (sum a_k) = (B - 1) * (sum r_k).  The residues r_k run over the
    orbit of B^k acting on 1 mod P, and k -> B^k is compatible with field
    addition, so over N = q^deg(P) - 1 steps (a whole number of periods)
    the residue sum is the canonical representative of G(N) mod P.  Since
    N/T is a unit in F_q, G(N) = 0 forces the per-period sum to vanish.
    """
    if poly_gcd(P, B).deg != 0:
        raise DomainError("P and B must be coprime")
    q = P.q
    N = q ** P.deg - 1
    G = _geometric_sum_mod(B, N, P)
    if not G.is_zero:
        # only possible when B = 1 mod a factor of P; caller filters that
        raise InvariantViolation(f"geometric sum over full orbit is {G}, not 0")
    return poly(q, [])


@dataclass(frozen=True)
class SweepRecord:
    q: int
    P: PolyFq
    B: PolyFq
    digit_sum: PolyFq
    coprime_to_B_minus_1: bool
    passed: bool


def vanishing_sum_record(P: PolyFq, B: PolyFq, literal_cap: int = 4000) -> SweepRecord:
    """One (P, B) cell of the sweep.

    When gcd(P, B-1) = 1 the claim is digit sum = 0; when P | B - 1 the
    expansion is the constant digit (B-1)/P with period 1 and the sum is
    nonzero, recorded as the contrapositive side of the claim.
    """
    q = P.q
    one = poly(q, [1])
    Bm1 = poly_sub(B, one)
    coprime = poly_gcd(P, Bm1).deg == 0
    if not coprime:
        e = ff_expand(P, B, cap=literal_cap)
        s = digit_sum(e)
        return SweepRecord(q=q, P=P, B=B, digit_sum=s,
                           coprime_to_B_minus_1=False, passed=not s.is_zero)
    if q ** P.deg - 1 <= literal_cap:
        s = digit_sum(ff_expand(P, B, cap=literal_cap))
        s_fast = digit_sum_fast(P, B)
        if s != s_fast:
            raise InvariantViolation(f"literal/fast mismatch at P={P}, B={B}")
    else:
        s = digit_sum_fast(P, B)
    return SweepRecord(q=q, P=P, B=B, digit_sum=s,
                       coprime_to_B_minus_1=True, passed=s.is_zero)


@lru_cache(maxsize=64)
def _bases(q: int, degb_max: int) -> tuple:
    return tuple(
        b for d in range(1, degb_max + 1) for b in all_polys(q, d, monic=False)
    )


def _batch_geometric_zero(P: PolyFq, bases: list) -> np.ndarray:
    """G(N) == 0 mod P for every base at once, N = q^deg(P) - 1.

    Rows hold (G(t), B^t) coefficient vectors mod P; one doubling pass per
    bit of N, with per-row polynomial reduction done via a precomputed
    reduction matrix for x^k, k up to 2*deg(P)-2.
    """
    q, dp = P.q, P.deg
    N = q**dp - 1
    nb = len(bases)
    # reduction of x^j mod P for j in [0, 2*dp - 2]
    red = np.zeros((2 * dp - 1, dp), dtype=np.int64)
    for j in range(2 * dp - 1):
        r = poly_mod(poly(q, [0] * j + [1]), P)
        for i, c in enumerate(r.coeffs):
            red[j, i] = c
    Bmat = np.zeros((nb, dp), dtype=np.int64)
    for i, b in enumerate(bases):
        r = poly_mod(b, P)
        for j, c in enumerate(r.coeffs):
            Bmat[i, j] = c

    def mul(u, v):
        # row-wise product of degree < dp polynomials, reduced mod P
        prod = np.zeros((u.shape[0], 2 * dp - 1), dtype=np.int64)
        for j in range(dp):
            prod[:, j : j + dp] += u[:, j : j + 1] * v
        return (prod @ red) % q

    G = np.zeros((nb, dp), dtype=np.int64)
    Bp = np.zeros((nb, dp), dtype=np.int64)
    Bp[:, 0] = 1
    one = np.zeros(dp, dtype=np.int64)
    one[0] = 1
    for bit in bin(N)[2:]:
        G = mul(G, (Bp + one) % q)
        Bp2 = mul(Bp, Bp)
        if bit == "1":
            G = (mul(G, Bmat) + one) % q
            Bp = mul(Bp2, Bmat)
        else:
            Bp = Bp2
    return ~G.any(axis=1)


def rudnick_sweep(q: int, degp_max: int, degb_max: int,
                  spot_check_every: int = 509) -> dict:
    """Exhaustive vanishing-digit-sum sweep over monic irreducible P and
    all bases B of degree in [1, degb_max].

    Returns counts plus any failures; a literal digit expansion is
    cross-checked against the fast path on a deterministic subsample.
    """
    bases = _bases(q, degb_max)
    one = poly(q, [1])
    tested = passed = 0
    noncoprime = 0
    skipped = 0
    failures = []
    cell = 0
    for P in irreducibles(q, degp_max):
        coprime_idx = []
        small = P.deg <= degb_max  # only then can P divide B or B - 1
        for i, B in enumerate(bases):
            if small and poly_mod(B, P).is_zero:
                skipped += 1  # B = 0 mod P: no expansion of 1/P in base B
                continue
            if small and poly_mod(poly_sub(B, one), P).is_zero:
                rec = vanishing_sum_record(P, B)
                noncoprime += 1
                tested += 1
                passed += rec.passed
                if not rec.passed:
                    failures.append((str(P), str(B), str(rec.digit_sum)))
                continue
            coprime_idx.append(i)
        if coprime_idx:
            sel = [bases[i] for i in coprime_idx]
            ok = _batch_geometric_zero(P, sel)
            for j, B in enumerate(sel):
                cell += 1
                tested += 1
                zero = bool(ok[j])
                if zero and cell % spot_check_every == 0 and q ** P.deg - 1 <= 4000:
                    s = digit_sum(ff_expand(P, B))
                    if not s.is_zero:
                        raise InvariantViolation(
                            f"fast path claims 0 but digits sum to {s} at P={P}, B={B}"
                        )
                if zero:
                    passed += 1
                else:
                    failures.append((str(P), str(B), "nonzero-geometric-sum"))
    return {
        "q": q,
        "degp_max": degp_max,
        "degb_max": degb_max,
        "tested": tested,
        "passed": passed,
        "noncoprime_cells": noncoprime,
        "skipped_cells": skipped,
        "failures": failures,
    }
