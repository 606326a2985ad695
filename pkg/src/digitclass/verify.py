"""One evaluator per theorem/proposition/corollary, returning structured
records.  Nothing here asserts a result a priori: pass=false is data, and
the step-level evaluators exist precisely to localize which displayed
congruence of a proof breaks down on a given tuple.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .arith import factorize, is_prime, is_primitive_root, mult_order
from .charsums import CharPair, general_theorem_rhs, sigma01_fast, sigma_res_count
from .classnum import class_number_imag, class_numbers_imag_upto
from .digits import expand
from .errors import DomainError


def _fmt(x) -> str:
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, bool):
        return "true" if x else "false"
    return str(x)


@dataclass(frozen=True)
class VerificationRecord:
    """Outcome of one theorem check on one input tuple."""

    check: str
    m: int | None
    n: int | None
    p: int | None
    lhs: object
    rhs: object
    passed: bool
    aux: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "check": self.check,
            "m": None if self.m is None else str(self.m),
            "n": None if self.n is None else str(self.n),
            "p": None if self.p is None else str(self.p),
            "lhs": _fmt(self.lhs),
            "rhs": _fmt(self.rhs),
            "pass": self.passed,
            "aux": {k: _fmt(v) for k, v in sorted(self.aux.items())},
        }


@dataclass(frozen=True)
class WeightedDigitSum:
    """S = sum over one period of a_k(m) * n^(T-k) * k, reduced mod p and p^2."""

    m: int
    n: int
    p: int
    value_mod_p: int
    value_mod_p2: int

    def __post_init__(self):
        if self.value_mod_p != self.value_mod_p2 % self.p:
            raise DomainError("inconsistent residues")


@lru_cache(maxsize=4096)
def _h_imag(D: int) -> int:
    return class_number_imag(D).h


# Range scans reuse one bulk form-count table per worker instead of
# re-enumerating forms for every discriminant.
_H_TABLE = None
_H_TABLE_LIMIT = 0


def h_imag_cached(D: int, table_limit: int = 0) -> int:
    global _H_TABLE, _H_TABLE_LIMIT
    if table_limit > _H_TABLE_LIMIT:
        _H_TABLE = class_numbers_imag_upto(table_limit)
        _H_TABLE_LIMIT = table_limit
    if _H_TABLE is not None and D <= _H_TABLE_LIMIT:
        return int(_H_TABLE[D])
    return _h_imag(D)


def _require_prime_3mod4(m: int) -> None:
    if not is_prime(m) or m % 4 != 3:
        raise DomainError(f"m must be a prime = 3 mod 4, got {m}")


def _require_girstmair(m: int, n: int) -> None:
    _require_prime_3mod4(m)
    if m == 3:
        # the B1 <-> h link behind the theorem needs unit group order 2,
        # which fails for discriminant -3
        raise DomainError("m = 3 is outside the theorem's scope")
    if n < 2 or math.gcd(n, m) != 1:
        raise DomainError(f"need a base n >= 2 coprime to m, got {n}")
    if not is_primitive_root(n % m, m):
        raise DomainError(f"{n} is not a primitive root mod {m}")


def s_mod(m: int, n: int, p: int) -> WeightedDigitSum:
    """S streamed termwise mod p^2 (never materialized exactly)."""
    if math.gcd(n, m) != 1:
        raise DomainError(f"gcd({n}, {m}) != 1")
    if not is_prime(p) or p == 2:
        raise DomainError(f"p must be an odd prime, got {p}")
    e = expand(m, n)
    p2 = p * p
    total = 0
    power = 1  # n^(T-k) for k = T down to 1
    for k in range(e.period, 0, -1):
        total = (total + e.digits[k - 1] * power * k) % p2
        power = power * n % p2
    return WeightedDigitSum(m=m, n=n, p=p, value_mod_p=total % p, value_mod_p2=total)


def check_girstmair(m: int, n: int) -> VerificationRecord:
    """Alternating digit sum over the full period against (n+1)*h(m)."""
    _require_girstmair(m, n)
    e = expand(m, n)
    lhs = sum(a if k % 2 == 0 else -a for k, a in enumerate(e.digits, start=1))
    h = h_imag_cached(m)
    rhs = (n + 1) * h
    return VerificationRecord(
        check="girstmair", m=m, n=n, p=None, lhs=lhs, rhs=rhs, passed=lhs == rhs,
        aux={"h": h, "period": e.period},
    )


def check_ram_thanga(m: int, n: int) -> VerificationRecord:
    """((n-1)/2)*((m-1)/2 - h(m)) against the half-period digit sum."""
    _require_prime_3mod4(m)
    if n < 2 or math.gcd(n, m) != 1:
        raise DomainError(f"need a base n >= 2 coprime to m, got {n}")
    q = (m - 1) // 2
    if mult_order(n, m) != q:
        raise DomainError(f"order of {n} mod {m} is not (m-1)/2")
    h = h_imag_cached(m)
    lhs = Fraction(n - 1, 2) * (q - h)
    e = expand(m, n)
    rhs = sum(e.digits)
    return VerificationRecord(
        check="ram-thanga", m=m, n=n, p=None, lhs=lhs, rhs=rhs,
        passed=lhs == rhs, aux={"h": h, "q": q},
    )


def _prop_s_preconditions(m: int, n: int, p: int, part: int) -> None:
    _require_prime_3mod4(m)
    if n < 2 or math.gcd(n, m) != 1 or not is_primitive_root(n % m, m):
        raise DomainError(f"{n} must be a base >= 2 that is a primitive root mod {m}")
    if not is_prime(p) or p == 2:
        raise DomainError(f"p must be an odd prime, got {p}")
    if part == 1:
        if (n + 1) % p != 0 or (n + 1) % (p * p) == 0:
            raise DomainError(f"need p || (n+1) for part 1, got p={p}, n={n}")
    elif part == 2:
        if (n - 1) % p != 0:
            raise DomainError(f"need p | (n-1) for part 2, got p={p}, n={n}")
    else:
        raise DomainError(f"part must be 1 or 2, got {part}")


def check_prop_s(m: int, n: int, p: int, part: int) -> VerificationRecord:
    """m*S against 1 - m - m*h(m) (part 1, p || n+1) or 1 - m + m*q
    (part 2, p | n-1), mod p."""
    _prop_s_preconditions(m, n, p, part)
    s = s_mod(m, n, p)
    lhs = m * s.value_mod_p % p
    q = (m - 1) // 2
    aux = {"S_mod_p": s.value_mod_p, "q": q}
    if part == 1:
        h = h_imag_cached(m)
        rhs = (1 - m - m * h) % p
        aux["h"] = h
    else:
        rhs = (1 - m + m * q) % p
    return VerificationRecord(
        check=f"prop-s-part{part}", m=m, n=n, p=p, lhs=lhs, rhs=rhs,
        passed=lhs == rhs, aux=aux,
    )


def _main_prime_preconditions(m: int, n: int, p: int) -> None:
    if not is_prime(p) or p == 2:
        raise DomainError(f"p must be an odd prime, got {p}")
    if (n + 1) % p != 0 or (n + 1) % (p * p) == 0:
        raise DomainError(f"need p || (n+1), got p={p}, n={n}")
    _require_girstmair(m, n)


def check_main_prime(m: int, n: int, p: int) -> VerificationRecord:
    """The printed product (m-5)(m+1) mod p, with the sibling variant
    (m-1)(m+5) and m mod p carried in aux."""
    _main_prime_preconditions(m, n, p)
    printed = (m - 5) * (m + 1) % p
    sibling = (m - 1) * (m + 5) % p
    return VerificationRecord(
        check="main-prime", m=m, n=n, p=p, lhs=printed, rhs=0,
        passed=printed == 0,
        aux={"m_mod_p": m % p, "printed_product": printed, "sibling_product": sibling},
    )


def check_proof_steps_s3(m: int, n: int, p: int) -> list[VerificationRecord]:
    """Every displayed congruence in the weighted-sum proof chain, each as
    its own record so a failure is localized to a specific step."""
    _main_prime_preconditions(m, n, p)
    e = expand(m, n)
    digits = e.digits
    res = e.residues()
    q = (m - 1) // 2
    h = h_imag_cached(m)
    s = s_mod(m, n, p)
    S = s.value_mod_p

    def rec(name, lhs, rhs, aux=None):
        return VerificationRecord(
            check=name, m=m, n=n, p=p, lhs=lhs % p, rhs=rhs % p,
            passed=lhs % p == rhs % p, aux=aux or {},
        )

    out = []

    # {n^k/m} + {n^(k+q)/m} = 1 for every k <= q (exact, recorded mod-free)
    pairing_ok = all(res[k - 1] + res[k + q - 1] == m for k in range(1, q + 1))
    out.append(
        VerificationRecord(
            check="s3-pairing", m=m, n=n, p=p, lhs=int(pairing_ok), rhs=1,
            passed=pairing_ok,
        )
    )

    # sum_{k=1}^{m-1} (-1)^k [n^k]_m = -m*h(m): exact over the unit range;
    # the printed upper limit k = m is recorded separately.
    alt_units = sum(r if k % 2 == 0 else -r for k, r in enumerate(res, start=1))
    out.append(
        VerificationRecord(
            check="s3-alt-residue-units", m=m, n=n, p=None,
            lhs=alt_units, rhs=-m * h, passed=alt_units == -m * h, aux={"h": h},
        )
    )
    alt_printed = alt_units - n % m  # k = m term: m odd, [n^m]_m = [n]_m
    out.append(
        VerificationRecord(
            check="s3-alt-residue-printed", m=m, n=n, p=None,
            lhs=alt_printed, rhs=-m * h, passed=alt_printed == -m * h, aux={"h": h},
        )
    )

    alt_digits_half = sum(
        a if k % 2 == 0 else -a for k, a in enumerate(digits[:q], start=1)
    )
    alt_digits_full = sum(a if k % 2 == 0 else -a for k, a in enumerate(digits, start=1))
    alt_weighted_half = sum(
        a * k if k % 2 == 0 else -a * k for k, a in enumerate(digits[:q], start=1)
    )

    # Lemma 5 alternating corollary: full alternating sum = (n+1)h = 0 mod p
    out.append(rec("s3-lemma5-alternating", alt_digits_full, 0, {"exact": alt_digits_full}))
    # Eq "Second term"
    out.append(rec("s3-second-term", alt_digits_half, 1))
    # Eq "First term" as printed, with the rederived right side in aux
    first_rhs_printed = -2 * m * q - 2 * q + 2 - m * h - m
    first_rhs_rederived = -m * h + m + 2 * m * q - 2 * q
    out.append(
        rec(
            "s3-first-term",
            2 * m * alt_weighted_half,
            first_rhs_printed,
            {"rederived_rhs_mod_p": first_rhs_rederived % p},
        )
    )
    # Eq "Multline"
    out.append(rec("s3-multline", S, 2 * alt_weighted_half + q * alt_digits_half - 3 * q - 1))
    # Eq "Congruence 1" (2q = m-1 holds exactly; the congruence is the rest)
    out.append(rec("s3-congruence1", m - 1, -m * (h + S)))
    # final display of the proof, as printed
    out.append(rec("s3-final", m * S, 1 - m * h - 5 * q - m * q - m))
    return out


def check_class_number_main(
    m: int, n: int, factor: int = 1, convention: str = "residue"
) -> VerificationRecord:
    """h(nm) from the form oracle against -(factor/n)*sum alpha k c_k.

    aux records the rhs under every (factor, convention) combination so a
    scan can calibrate which one closes the theorem.
    """
    if not is_prime(m) or m % 4 != 1:
        raise DomainError(f"m must be a prime = 1 mod 4, got {m}")
    pair = CharPair(n=n, m=m)  # validates n = 3 mod 4, squarefree, coprime
    if not is_primitive_root(n % m, m):
        raise DomainError(f"{n} is not a primitive root mod {m}")
    lhs = h_imag_cached(n * m)
    aux = {}
    matches = []
    for f in (1, 2):
        for conv in ("residue", "digit"):
            val = -general_theorem_rhs(pair, f, conv)
            aux[f"rhs_factor{f}_{conv}"] = val
            if val == lhs:
                matches.append(f"factor{f}-{conv}")
    aux["matches"] = ",".join(matches) if matches else "none"
    rhs = -general_theorem_rhs(pair, factor, convention)
    return VerificationRecord(
        check="class-number-main", m=m, n=n, p=None, lhs=lhs, rhs=rhs,
        passed=lhs == rhs, aux=aux,
    )


def check_corollary1(m: int, h_table_limit: int = 0) -> VerificationRecord:
    """h(3m) = 2k - 4*sigma(0,1) for m = 3k+2 with 3 a primitive root."""
    if not is_prime(m) or m % 4 != 1:
        raise DomainError(f"m must be a prime = 1 mod 4, got {m}")
    if not is_primitive_root(3, m):
        raise DomainError(f"3 is not a primitive root mod {m}")
    k = (m - 2) // 3
    sigma01 = sigma01_fast(m)
    lhs = h_imag_cached(3 * m, table_limit=h_table_limit)
    rhs = 2 * k - 4 * sigma01
    return VerificationRecord(
        check="cor1", m=m, n=3, p=None, lhs=lhs, rhs=rhs, passed=lhs == rhs,
        aux={"k": k, "sigma01": sigma01},
    )


def qualifying_cor1_m(m_min: int, m_max: int):
    """Primes m = 1 mod 4 in [m_min, m_max) with 3 a primitive root."""
    from .arith import primes_in

    for m in primes_in(max(m_min, 5), m_max - 1):
        if m % 4 == 1 and m % 3 == 2 and is_primitive_root(3, m):
            yield m


def corollary3_stats(m_min: int, m_max: int) -> dict:
    """Deviation delta(m) = sigma(0,1) - m/6 over qualifying m, with the
    normalized statistic |delta|/(sqrt(m)*ln(m))."""
    rows = []
    for m in qualifying_cor1_m(m_min, m_max):
        sigma01 = sigma01_fast(m)
        delta = Fraction(6 * sigma01 - m, 6)
        normalized = abs(float(delta)) / (math.sqrt(m) * math.log(m))
        rows.append({"m": m, "sigma01": sigma01, "delta": delta, "normalized": normalized})
    if not rows:
        return {"count": 0, "rows": [], "max_normalized": None, "mean_normalized": None}
    norms = [r["normalized"] for r in rows]
    return {
        "count": len(rows),
        "rows": rows,
        "max_normalized": max(norms),
        "mean_normalized": sum(norms) / len(norms),
    }


def calibrate_class_number_main(n_values, m_max: int) -> dict:
    """Failure counts for every (factor, convention) combination over all
    qualifying (n, m) tuples; names the winning combination."""
    combos = {
        (f, conv): {"tested": 0, "failed": 0, "first_fail": None}
        for f in (1, 2)
        for conv in ("residue", "digit")
    }
    from .arith import primes_in

    for n in n_values:
        for m in primes_in(5, m_max - 1):
            if m % 4 != 1 or math.gcd(n, m) != 1 or not is_primitive_root(n % m, m):
                continue
            pair = CharPair(n=n, m=m)
            lhs = h_imag_cached(n * m, table_limit=max(n_values) * m_max)
            for (f, conv), slot in combos.items():
                val = -general_theorem_rhs(pair, f, conv)
                slot["tested"] += 1
                if val != lhs:
                    slot["failed"] += 1
                    if slot["first_fail"] is None:
                        slot["first_fail"] = (n, m)
    winners = [key for key, slot in combos.items() if slot["tested"] and not slot["failed"]]
    return {
        "combos": {
            f"factor{f}-{conv}": dict(slot) for (f, conv), slot in combos.items()
        },
        "winners": [f"factor{f}-{conv}" for f, conv in winners],
        "winning_factors": sorted({f for f, _ in winners}),
    }
