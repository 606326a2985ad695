"""Class-number oracles for quadratic fields.

The enumeration of reduced binary quadratic forms is the trust anchor of
the whole artifact: everything in the character-sum layer is ultimately
validated against it.  Definite forms are enumerated one discriminant at
a time (auditable) or in bulk over all discriminants below a bound (for
range scans); indefinite forms are counted as cycles under the classical
reduction neighbor operator.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .arith import is_prime, is_primitive_root, is_squarefree
from .charsums import b1_direct, sigma01_fast
from .errors import DomainError, InvariantViolation, ResourceLimitError


@dataclass(frozen=True)
class QuadForm:
    """Primitive integral binary quadratic form a*x^2 + b*x*y + c*y^2."""

    a: int
    b: int
    c: int

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def is_primitive(self) -> bool:
        return math.gcd(math.gcd(self.a, self.b), self.c) == 1


@dataclass(frozen=True)
class ClassNumberResult:
    discriminant: int
    h: int
    method: str
    h_narrow: int | None = None
    fundamental_unit_norm: int | None = None

    def __post_init__(self):
        if self.h < 1:
            raise InvariantViolation(f"class number must be >= 1, got {self.h}")


def _check_imag_domain(D: int) -> None:
    if D < 3 or D % 4 != 3:
        raise DomainError(f"need D = 3 mod 4 and D >= 3, got {D}")
    if not is_squarefree(D):
        raise DomainError(f"need squarefree D, got {D}")


def reduced_forms_imag(D: int) -> list[QuadForm]:
    """All reduced primitive forms of discriminant -D (|b| <= a <= c,
    b >= 0 when |b| = a or a = c)."""
    _check_imag_domain(D)
    forms = []
    for a in range(1, math.isqrt(D // 3) + 1):
        for b in range(-a + 1, a + 1):
            if (b * b + D) % (4 * a) != 0:
                continue
            c = (b * b + D) // (4 * a)
            if c < a:
                continue
            if b < 0 and (-b == a or a == c):
                continue
            form = QuadForm(a, b, c)
            if form.is_primitive():
                forms.append(form)
    return forms


def class_number_imag(D: int) -> ClassNumberResult:
    """h(D): reduced-form count for the imaginary field Q(sqrt(-D))."""
    return ClassNumberResult(
        discriminant=-D, h=len(reduced_forms_imag(D)), method="form-enumeration"
    )


def class_numbers_imag_upto(limit: int) -> np.ndarray:
    """counts[D] = number of reduced forms of discriminant -D for all
    0 < D <= limit, by one sweep over reduced (a, b, c) triples.

    Primitivity is not filtered, so entries are class numbers only for
    fundamental -D (in particular for squarefree D = 3 mod 4, where no
    imprimitive form of discriminant -D exists).
    """
    if limit < 3:
        raise DomainError(f"limit must be >= 3, got {limit}")
    counts = np.zeros(limit + 1, dtype=np.int32)
    for a in range(1, math.isqrt(limit // 3) + 1):
        step = 4 * a
        for b in range(a + 1):
            cmax = (limit + b * b) // step
            if cmax < a:
                continue
            first = step * a - b * b
            sl = counts[first : step * cmax - b * b + 1 : step]
            if b == 0 or b == a:
                sl += 1
            else:
                sl += 2
                counts[first] -= 1  # c == a: only b >= 0 is reduced
    return counts


def class_number_via_character(D: int) -> ClassNumberResult:
    """h(D) from the character-sum route h = -B1(jacobi(., D))."""
    _check_imag_domain(D)
    b1 = b1_direct(D)
    h = -b1
    if h.denominator != 1 or h <= 0:
        raise InvariantViolation(f"-B1({D}) = {h} is not a positive integer")
    return ClassNumberResult(discriminant=-D, h=int(h), method="character-sum")


# --- real quadratic fields -------------------------------------------------


def _reduced_indef(a: int, b: int, D: int) -> bool:
    """0 < b < sqrt(D) and sqrt(D) - b < 2|a| < sqrt(D) + b, exactly."""
    if b <= 0 or b * b >= D:
        return False
    t = 2 * abs(a)
    if (t + b) ** 2 <= D:
        return False
    if t > b and (t - b) ** 2 >= D:
        return False
    return True


def _rho_step(form: QuadForm, D: int, root: int) -> QuadForm:
    """Reduction neighbor: (a, b, c) -> (c, r, (r^2 - D)/(4c)) with
    r = -b mod 2|c| placed in (sqrt(D) - 2|c|, sqrt(D))."""
    c = form.c
    t = 2 * abs(c)
    r = -form.b + t * ((root + form.b) // t)
    return QuadForm(c, r, (r * r - D) // (4 * c))


def reduced_cycles_real(D: int, cap: int = 10**6) -> list[list[QuadForm]]:
    """Cycles of reduced indefinite forms of discriminant D > 0."""
    root = math.isqrt(D)
    if root * root == D:
        raise DomainError(f"discriminant {D} is a perfect square")
    forms = set()
    for b in range(1, root + 1):
        if (D - b * b) % 4 != 0:
            continue
        N = (b * b - D) // 4  # = a*c < 0
        leads: set[int] = set()
        for d in range(1, math.isqrt(-N) + 1):
            if N % d == 0:
                leads.update((d, -d, -N // d, N // d))
        for s in leads:
            form = QuadForm(s, b, N // s)
            if _reduced_indef(s, b, D) and form.is_primitive():
                forms.add(form)
    cycles = []
    seen: set[QuadForm] = set()
    steps = 0
    for start in sorted(forms, key=lambda f: (f.a, f.b, f.c)):
        if start in seen:
            continue
        cycle = []
        f = start
        while f not in seen:
            seen.add(f)
            cycle.append(f)
            f = _rho_step(f, D, root)
            steps += 1
            if steps > cap:
                raise ResourceLimitError(f"cycle enumeration exceeded {cap} steps")
        cycles.append(cycle)
    return cycles


def fundamental_unit_norm(m: int) -> int:
    """Norm of the fundamental unit of Q(sqrt(m)): -1 iff the continued
    fraction of sqrt(m) has odd period."""
    a0 = math.isqrt(m)
    if a0 * a0 == m:
        raise DomainError(f"{m} is a perfect square")
    p, q, period = 0, 1, 0
    a = a0
    while True:
        p = a * q - p
        q = (m - p * p) // q
        period += 1
        if q == 1:
            return -1 if period % 2 == 1 else 1
        a = (a0 + p) // q


def class_number_real(m: int) -> ClassNumberResult:
    """h_>(m) for prime m = 1 mod 4 (field discriminant m).

    Cycle counting yields the narrow class number h+; the wide h is h+
    or h+/2 depending on the fundamental unit norm.
    """
    if not is_prime(m) or m % 4 != 1:
        raise DomainError(f"need a prime m = 1 mod 4, got {m}")
    h_narrow = len(reduced_cycles_real(m))
    norm = fundamental_unit_norm(m)
    h = h_narrow if norm == -1 else h_narrow // 2
    return ClassNumberResult(
        discriminant=m,
        h=h,
        method="cycle-count",
        h_narrow=h_narrow,
        fundamental_unit_norm=norm,
    )


def scholz_check(m: int) -> dict:
    """Divisibility predicates tying sigma(0,1) to 3-divisibility of h_>(m).

    Requires m prime = 1 mod 4 with 3 a primitive root (hence m = 3k+2).
    Predicate 1: k != 2*sigma(0,1) mod 3 implies 3 does not divide h_>(m).
    Predicate 2: k = 2*sigma(0,1) mod 3^s implies 3^(s-1) divides h_>(m).
    """
    if not is_prime(m) or m % 4 != 1:
        raise DomainError(f"need a prime m = 1 mod 4, got {m}")
    if not is_primitive_root(3, m):
        raise DomainError(f"3 is not a primitive root mod {m}")
    if m % 3 != 2:
        raise DomainError(f"m = 2 mod 3 expected, got {m}")
    k = (m - 2) // 3
    sigma01 = sigma01_fast(m)
    h_real = class_number_real(m)
    h_imag3m = class_number_imag(3 * m)
    p1_applicable = (k - 2 * sigma01) % 3 != 0
    p1_pass = (not p1_applicable) or h_real.h % 3 != 0
    p2 = {}
    for s in (1, 2, 3):
        applicable = (k - 2 * sigma01) % 3**s == 0
        p2[s] = {
            "applicable": applicable,
            "pass": (not applicable) or h_real.h % 3 ** (s - 1) == 0,
        }
    return {
        "m": m,
        "k": k,
        "sigma01": sigma01,
        "h_real": h_real.h,
        "h_real_narrow": h_real.h_narrow,
        "unit_norm": h_real.fundamental_unit_norm,
        "h_imag_3m": h_imag3m.h,
        "predicate1_applicable": p1_applicable,
        "predicate1_pass": p1_pass,
        "predicate2": p2,
    }
