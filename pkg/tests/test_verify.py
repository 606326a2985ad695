import json
from fractions import Fraction

import pytest

from digitclass.errors import DomainError
from digitclass.verify import (
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


def test_s_mod_anchor():
    s = s_mod(7, 10, 11)
    assert s.value_mod_p == 6
    assert s.value_mod_p2 % 11 == 6


def test_s_mod_rejects_bad_inputs():
    with pytest.raises(DomainError):
        s_mod(9, 3, 11)
    with pytest.raises(DomainError):
        s_mod(7, 10, 4)


def test_girstmair_anchor():
    rec = check_girstmair(7, 10)
    assert rec.passed and rec.lhs == 11 and rec.rhs == 11


def test_girstmair_domain():
    with pytest.raises(DomainError):
        check_girstmair(8, 10)
    with pytest.raises(DomainError):
        check_girstmair(3, 2)  # excluded: the character-sum link needs m > 3
    with pytest.raises(DomainError):
        check_girstmair(7, 2)  # not a primitive root


def test_ram_thanga_anchor():
    rec = check_ram_thanga(7, 2)
    assert rec.passed and rec.lhs == Fraction(1) and rec.rhs == 1


def test_prop_s_anchors():
    rec1 = check_prop_s(7, 10, 11, part=1)
    assert rec1.passed and rec1.lhs == 9
    rec2 = check_prop_s(7, 10, 3, part=2)
    assert rec2.passed
    with pytest.raises(DomainError):
        check_prop_s(7, 10, 5, part=1)  # 5 does not divide 11


def test_main_prime_19_10_11():
    rec = check_main_prime(19, 10, 11)
    assert not rec.passed
    assert rec.aux["m_mod_p"] == 8
    assert rec.aux["printed_product"] == 5


def test_main_prime_passing_tuple():
    # m = 5 mod p or m = -1 mod p makes the printed product vanish
    rec = check_main_prime(131, 10, 11)  # 131 = 10 mod 11
    assert rec.passed


def test_proof_steps_localize_discrepancy():
    steps = {r.check: r for r in check_proof_steps_s3(7, 10, 11)}
    assert steps["s3-pairing"].passed
    assert steps["s3-alt-residue-units"].passed
    assert not steps["s3-alt-residue-printed"].passed
    assert steps["s3-lemma5-alternating"].passed
    assert steps["s3-second-term"].passed
    assert not steps["s3-first-term"].passed
    assert steps["s3-multline"].passed
    assert steps["s3-congruence1"].passed
    assert not steps["s3-final"].passed


def test_first_term_rederived_rhs_matches():
    for m, n, p in ((7, 10, 11), (19, 10, 11), (23, 10, 11)):
        steps = {r.check: r for r in check_proof_steps_s3(m, n, p)}
        rec = steps["s3-first-term"]
        assert rec.lhs == rec.aux["rederived_rhs_mod_p"]


def test_corollary1_anchors():
    rec5 = check_corollary1(5)
    assert rec5.passed and rec5.lhs == 2 and rec5.rhs == 2
    rec17 = check_corollary1(17)
    assert rec17.passed and rec17.lhs == 2
    assert rec17.aux["sigma01"] == 2


def test_class_number_main_calibrated_combo():
    rec = check_class_number_main(5, 3)
    assert rec.passed and rec.lhs == 2 and rec.rhs == 2
    assert rec.aux["matches"] == "factor1-residue"


def test_class_number_main_wrong_factor_fails():
    rec = check_class_number_main(5, 3, factor=2)
    assert not rec.passed


def test_corollary3_stats_small_range():
    stats = corollary3_stats(1000, 3000)
    assert stats["count"] > 0
    assert stats["max_normalized"] < 2.0


def test_record_roundtrip():
    rec = check_girstmair(7, 10)
    row = json.loads(json.dumps(rec.to_json_dict()))
    assert row == rec.to_json_dict()
    assert row["m"] == "7" and row["pass"] is True
    assert set(row) == {"check", "m", "n", "p", "lhs", "rhs", "pass", "aux"}
