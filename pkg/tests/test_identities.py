"""Factorization identities, the integer inverse, and determinant reports."""
import json
from fractions import Fraction

import pytest

from recpascal import (
    CheckReport,
    ExactnessError,
    binomial,
    check_grg,
    check_integrality,
    check_l_inverse_column,
    check_ldl,
    check_von_szily,
    check_von_szily_upto,
    d_matrix,
    det_bareiss,
    det_comparison,
    det_r_inverse_formula,
    equal,
    from_rows,
    g_matrix,
    identity,
    invert_rational,
    invert_unit_lower_triangular,
    l_matrix,
    matmul,
    r_inverse_00,
    r_inverse_via_factorization,
    reciprocal_pascal,
    super_catalan,
)
from recpascal.identities import _first_mismatch

from oracles import det_cofactor


def rows(m):
    return [list(r) for r in m]


def test_check_report_requires_consistency():
    with pytest.raises(ValueError):
        CheckReport("x", 1, True, (0, 0, 1, 2), 0.0)
    with pytest.raises(ValueError):
        CheckReport("x", 1, False, None, 0.0)


def test_check_report_json_field_order():
    rep = CheckReport("grg", 3, True, None, 0.0015)
    obj = rep.to_json()
    assert list(obj) == ["name", "n", "passed", "counterexample", "elapsed_ms"]
    assert obj["elapsed_ms"] == 1.5
    assert json.dumps(obj)  # serializable


def test_check_report_json_counterexample():
    rep = CheckReport("ldl", (2, 3), False, (0, 1, Fraction(1, 2), 3), 0.0)
    obj = rep.to_json()
    assert obj["n"] == [2, 3]
    assert obj["counterexample"] == {"i": 0, "j": 1, "expected": "1/2", "actual": "3"}


def test_first_mismatch_locates_first_difference():
    a = from_rows([[1, 2], [3, 4]])
    b = from_rows([[1, 2], [5, 4]])
    assert _first_mismatch(a, a) is None
    assert _first_mismatch(a, b) == (1, 0, 3, 5)
    with pytest.raises(ValueError):
        _first_mismatch(a, from_rows([[1]]))


def test_grg_pinned_sizes():
    for n in (1, 2, 3, 16):
        rep = check_grg(n)
        assert rep.passed and rep.name == "grg" and rep.n == n


def test_grg_product_literally():
    g = g_matrix(3)
    product = matmul(matmul(g, reciprocal_pascal(3)), g)
    assert rows(product) == [[1, 2, 6], [2, 2, 4], [6, 4, 6]]


def test_ldl_pinned_sizes():
    for n in (1, 2, 3, 24):
        assert check_ldl(n).passed


def test_ldl_product_literally():
    l = l_matrix(3)
    product = matmul(matmul(l, d_matrix(3)), l.T)
    assert rows(product) == [[1, 2, 6], [2, 2, 4], [6, 4, 6]]


def test_von_szily_base_case():
    rep = check_von_szily(0, 0)
    assert rep.passed and rep.n == (0, 0)


def test_von_szily_small_terms():
    # at (1, 1) the two-sided sum is -1 + 4 - 1 = 2
    assert check_von_szily(1, 1).passed
    assert super_catalan(1, 1) == 2


def test_von_szily_asymmetric_pair():
    assert check_von_szily(12, 7).passed


def test_von_szily_rejects_negative_indices():
    with pytest.raises(ValueError):
        check_von_szily(-1, 2)


def test_von_szily_sum_stable_under_widened_range():
    # terms beyond |k| = max(m, n) vanish, so widening must not change the sum
    for m, n in ((0, 0), (1, 1), (3, 5), (12, 7)):
        bound = max(m, n) + 7
        total = sum(
            (-1 if k & 1 else 1) * binomial(2 * m, m + k) * binomial(2 * n, n - k)
            for k in range(-bound, bound + 1)
        )
        assert total == super_catalan(m, n)


def test_von_szily_upto_aggregates():
    rep = check_von_szily_upto(8)
    assert rep.passed and rep.name == "vonszily" and rep.n == 8


def test_l_inverse_column_pinned_sizes():
    for n in (1, 3, 8, 64):
        rep = check_l_inverse_column(n)
        assert rep.passed and rep.name == "parity"


def test_l_inverse_column_matches_full_inverse():
    linv = invert_unit_lower_triangular(l_matrix(8))
    assert [linv[i, 0] for i in range(8)] == list(d_matrix(8).diag)


def test_r_inverse_pinned():
    assert rows(r_inverse_via_factorization(1)) == [[1]]
    assert rows(r_inverse_via_factorization(2)) == [[-1, 2], [2, -2]]


def test_r_inverse_matches_oracle_and_is_integer():
    for n in range(1, 13):
        rinv = r_inverse_via_factorization(n)
        assert all(isinstance(x, int) for x in rinv.flat)
        r = reciprocal_pascal(n)
        assert equal(rinv, invert_rational(r))
        assert equal(matmul(r, rinv), identity(n))


def test_r_inverse_00_pinned():
    assert r_inverse_00(1) == 1
    assert r_inverse_00(2) == -1
    assert r_inverse_00(3) == 1


def test_r_inverse_00_alternates_and_matches_the_matrix():
    for n in range(1, 25):
        closed = r_inverse_00(n)
        assert closed == (-1 if (n - 1) & 1 else 1)
        assert closed == r_inverse_via_factorization(n)[0, 0]


def test_det_formula_pinned():
    assert det_r_inverse_formula(1) == -1
    assert det_r_inverse_formula(2) == -2
    assert det_r_inverse_formula(3) == 36


def test_det_comparison_pinned():
    expected = {
        1: (Fraction(-1), Fraction(1), True, False),
        2: (Fraction(-2), Fraction(-2), True, True),
        3: (Fraction(36), Fraction(-36), True, False),
    }
    for n, (formula, oracle, mag, sign) in expected.items():
        cmp = det_comparison(n)
        assert cmp["formula"] == formula
        assert cmp["oracle"] == oracle
        assert cmp["magnitude_match"] is mag
        assert cmp["sign_match"] is sign


def test_det_comparison_sign_pattern_follows_parity_of_n():
    # magnitudes agree everywhere; the closed form's sign is wrong exactly
    # at odd n, where the oracle sign is (-1)^(n(n-1)/2)
    for n in range(1, 17):
        cmp = det_comparison(n)
        assert cmp["magnitude_match"] is True
        assert cmp["sign_match"] is (n % 2 == 0), n
        oracle_negative = (n * (n - 1) // 2) % 2 == 1
        assert (cmp["oracle"] < 0) is oracle_negative


def test_det_oracle_agrees_with_cofactor_expansion():
    for n in range(1, 9):
        inv = invert_rational(reciprocal_pascal(n))
        assert det_bareiss(inv) == det_cofactor(inv)


def test_integrality_pinned_sizes():
    for n in (1, 2, 12):
        rep = check_integrality(n)
        assert rep.passed and rep.name == "integrality"


def test_factorization_inverse_rejects_nothing_silently():
    # demotion through to_integer raises on any fractional entry
    with pytest.raises(ExactnessError):
        from recpascal import to_integer
        to_integer(from_rows([[Fraction(1, 3)]]))
