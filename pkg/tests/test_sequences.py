"""b-file round-trips, matrix readings, and catalogued-sequence crosschecks."""
import random

import pytest
from hypothesis import given, strategies as st

from recpascal import (
    SequenceRecord,
    antidiagonal_sequence,
    binomial,
    crosscheck,
    det_inverse_sequence,
    det_r_inverse_formula,
    emit_bfile,
    from_rows,
    generated_sequence,
    identity,
    invert_unit_lower_triangular,
    l_matrix,
    load_reference_bfile,
    parse_bfile,
    pascal_matrix,
    sign_pattern,
    super_catalan,
    super_catalan_candidates,
    triangle_rows_sequence,
)


def test_record_coerces_terms_to_tuple():
    rec = SequenceRecord("A000984", 0, [1, 2, 6])
    assert rec.terms == (1, 2, 6)


def test_record_rejects_empty():
    with pytest.raises(ValueError):
        SequenceRecord("A000984", 0, ())


def test_emit_pinned():
    rec = SequenceRecord("X", 5, (10, -20, 30))
    assert emit_bfile(rec) == "5 10\n6 -20\n7 30\n"


def test_parse_round_trip():
    rec = SequenceRecord("A060739", 1, (1, -2, -36))
    again = parse_bfile(emit_bfile(rec), oeis_id="A060739")
    assert again == rec


def test_parse_skips_comments_and_blanks():
    text = "# a comment\n\n0 1\n1 2\n# interior comment\n2 6\n"
    rec = parse_bfile(text, oeis_id="A000984")
    assert rec.offset == 0 and rec.terms == (1, 2, 6)


def test_parse_negative_offset_and_values():
    rec = parse_bfile("-2 5\n-1 -7\n0 0\n")
    assert rec.offset == -2 and rec.terms == (5, -7, 0)


def test_parse_rejects_malformed_line():
    with pytest.raises(ValueError, match="line 2"):
        parse_bfile("0 1\n1 two\n")
    with pytest.raises(ValueError, match="line 1"):
        parse_bfile("0 1 extra\n")


def test_parse_rejects_index_gap():
    with pytest.raises(ValueError, match="line 3"):
        parse_bfile("0 1\n1 2\n3 20\n")
    with pytest.raises(ValueError, match="does not follow"):
        parse_bfile("0 1\n0 1\n")


def test_parse_rejects_empty_input():
    with pytest.raises(ValueError, match="no terms"):
        parse_bfile("# nothing here\n")


def test_round_trip_100_randomized_records():
    rng = random.Random(20260823)
    for _ in range(100):
        offset = rng.randint(-10, 90)
        terms = tuple(
            rng.randint(-10**30, 10**30) for _ in range(rng.randint(1, 40))
        )
        rec = SequenceRecord("T", offset, terms)
        assert parse_bfile(emit_bfile(rec), oeis_id="T") == rec


@given(
    st.integers(-50, 50),
    st.lists(st.integers(-10**40, 10**40), min_size=1, max_size=30),
)
def test_round_trip_property(offset, terms):
    rec = SequenceRecord("T", offset, tuple(terms))
    assert parse_bfile(emit_bfile(rec), oeis_id="T") == rec


def test_triangle_reading_pinned():
    assert triangle_rows_sequence(identity(2)) == [1, 0, 1]
    assert triangle_rows_sequence(l_matrix(3)) == [1, 2, 1, 6, 4, 1]
    linv = invert_unit_lower_triangular(l_matrix(3))
    assert triangle_rows_sequence(linv) == [1, -2, 1, 2, -4, 1]


def test_triangle_reading_rejects_hidden_entries():
    with pytest.raises(ValueError, match=r"\(0, 1\)"):
        triangle_rows_sequence(pascal_matrix(3))
    # with validation off, the reading simply drops them
    assert triangle_rows_sequence(pascal_matrix(3), triangular=False) == [
        1, 1, 2, 1, 3, 6,
    ]


def test_antidiagonal_reading_pinned():
    assert antidiagonal_sequence(from_rows([[1, 1], [1, 2]])) == [1, 1, 1, 2]
    assert antidiagonal_sequence(pascal_matrix(3)) == [1, 1, 1, 1, 2, 1, 3, 3, 6]


def test_readings_reject_non_square():
    with pytest.raises(ValueError):
        triangle_rows_sequence(from_rows([[1, 0, 0], [1, 1, 0]]))
    with pytest.raises(ValueError):
        antidiagonal_sequence(from_rows([[1, 2, 3]]))


def test_det_inverse_sequence_pinned():
    rec = det_inverse_sequence(3)
    assert rec.oeis_id == "A060739" and rec.offset == 1
    assert rec.terms == (1, -2, -36)


def test_det_inverse_sequence_matches_formula_magnitudes():
    rec = det_inverse_sequence(16)
    for n in range(1, 17):
        assert abs(rec.terms[n - 1]) == abs(det_r_inverse_formula(n)), n


def test_crosscheck_passes_on_identical_records():
    rec = SequenceRecord("A000984", 0, tuple(binomial(2 * m, m) for m in range(10)))
    rep = crosscheck(rec, rec)
    assert rep.passed and rep.n == 10 and rep.name == "crosscheck:A000984"


def test_crosscheck_reports_first_bad_index():
    ref = SequenceRecord("X", 0, (1, 2, 6, 20, 70))
    bad = SequenceRecord("X", 0, (1, 2, 6, 21, 70))
    rep = crosscheck(ref, bad)
    assert not rep.passed
    assert rep.counterexample == (3, 0, 20, 21)


def test_crosscheck_uses_the_overlap_only():
    ref = SequenceRecord("X", 0, (1, 2, 6, 20))
    gen = SequenceRecord("X", 2, (6, 20, 70))
    rep = crosscheck(ref, gen)
    assert rep.passed and rep.n == 2


def test_crosscheck_rejects_disjoint_ranges():
    with pytest.raises(ValueError, match="overlap"):
        crosscheck(SequenceRecord("X", 0, (1,)), SequenceRecord("X", 5, (1,)))


def test_crosscheck_magnitude_only_mode():
    ref = SequenceRecord("A060739", 1, (1, 2, 36))
    gen = det_inverse_sequence(3)
    assert not crosscheck(ref, gen).passed
    assert crosscheck(ref, gen, magnitude_only=True).passed


def test_sign_pattern():
    assert sign_pattern((1, -2, -36, 0)) == "+--0"
    assert sign_pattern(det_inverse_sequence(8).terms) == "+--++--+"


def test_generated_central_binomials():
    rec = generated_sequence("A000984", 6)
    assert rec.offset == 0 and rec.terms == (1, 2, 6, 20, 70, 252)


def test_generated_pascal_antidiagonals_match_triangle_rows():
    # complete antidiagonals of the square array are exactly the triangle rows
    rec = generated_sequence("A007318", 8)
    expected = tuple(binomial(d, i) for d in range(8) for i in range(d + 1))
    assert rec.terms == expected


def test_generated_triangle_sequences():
    rec = generated_sequence("A094527", 3)
    assert rec.terms == (1, 2, 1, 6, 4, 1)
    rec = generated_sequence("A110162", 3)
    assert rec.terms == (1, -2, 1, 2, -4, 1)


def test_generated_det_sequence():
    assert generated_sequence("A060739", 3).terms == (1, -2, -36)


def test_generated_rejects_unknown_and_unasserted_ids():
    with pytest.raises(ValueError):
        generated_sequence("A000001", 5)
    with pytest.raises(ValueError, match="A068555"):
        generated_sequence("A068555", 5)


def test_vendored_reference_crosscheck():
    reference = load_reference_bfile("A000984")
    assert reference.offset == 0
    assert len(reference.terms) >= 21
    generated = generated_sequence("A000984", 21)
    rep = crosscheck(reference, generated)
    assert rep.passed and rep.n == 21


def test_vendored_reference_pinned_tail():
    reference = load_reference_bfile("A000984")
    assert reference.terms[20] == 137846528820


def test_super_catalan_candidates_structure():
    cands = super_catalan_candidates(4)
    assert set(cands) == {"rows", "antidiagonals", "halved_antidiagonals"}
    assert cands["rows"].terms[:4] == (1, 2, 6, 20)
    assert cands["antidiagonals"].terms == (1, 2, 2, 6, 2, 6, 20, 4, 4, 20)
    # halved reading drops row/column 0; every remaining value is even
    assert cands["halved_antidiagonals"].terms == (1, 2, 2, 5, 3, 5)
    for m in range(1, 6):
        for n in range(1, 6):
            assert super_catalan(m, n) % 2 == 0


def test_super_catalan_candidates_rejects_tiny_sizes():
    with pytest.raises(ValueError):
        super_catalan_candidates(1)


def test_triangle_prefix_nesting():
    prev = []
    for n in range(1, 21):
        cur = triangle_rows_sequence(l_matrix(n))
        assert cur[: len(prev)] == prev
        prev = cur
