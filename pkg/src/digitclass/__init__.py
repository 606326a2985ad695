"""Digit expansions of 1/m, quadratic character sums, and class numbers,
with batch verification of the congruences connecting them."""

from .arith import (
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
from .charsums import CharPair, b1_direct, sigma_table, sigma01_fast
from .classnum import (
    class_number_imag,
    class_number_real,
    class_number_via_character,
    fundamental_unit_norm,
    reduced_forms_imag,
    scholz_check,
)
from .digits import DigitExpansion, digit_at, expand, repeating_value, string_value
from .errors import DigitclassError, DomainError, InvariantViolation, ResourceLimitError
from .ffield import PolyFq, ff_expand, poly, rudnick_sweep
from .scan import ScanConfig, run_scan
from .verify import (
    VerificationRecord,
    check_class_number_main,
    check_corollary1,
    check_girstmair,
    check_main_prime,
    check_proof_steps_s3,
    check_prop_s,
    check_ram_thanga,
    corollary3_stats,
    s_mod,
)

__version__ = "0.1.0"

__all__ = [
    "CharPair",
    "DigitExpansion",
    "DigitclassError",
    "DomainError",
    "InvariantViolation",
    "PolyFq",
    "ResourceLimitError",
    "ScanConfig",
    "VerificationRecord",
    "b1_direct",
    "check_class_number_main",
    "check_corollary1",
    "check_girstmair",
    "check_main_prime",
    "check_proof_steps_s3",
    "check_prop_s",
    "check_ram_thanga",
    "class_number_imag",
    "class_number_real",
    "class_number_via_character",
    "corollary3_stats",
    "digit_at",
    "euler_phi",
    "expand",
    "factorize",
    "ff_expand",
    "fundamental_unit_norm",
    "is_prime",
    "is_primitive_root",
    "is_squarefree",
    "jacobi",
    "mult_order",
    "poly",
    "pow_mod",
    "primes_in",
    "reduced_forms_imag",
    "repeating_value",
    "rudnick_sweep",
    "run_scan",
    "s_mod",
    "scholz_check",
    "sigma01_fast",
    "sigma_table",
    "smallest_primitive_roots",
    "string_value",
]
