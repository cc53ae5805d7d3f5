"""Integer sequence plumbing: b-file emit/parse, triangle and antidiagonal
readings of matrices, and exact cross-checks against reference term files.

A b-file is the OEIS interchange format: one "index value" pair per line,
indices consecutive, '#' starting a comment line.  The format carries no
sequence id, so records track the id alongside the terms.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from importlib import resources

from .combinatorics import ExactnessError, exact_div
from .identities import CheckReport
from .linalg import det_bareiss, invert_rational, invert_unit_lower_triangular
from .matrices import g_matrix, l_matrix, pascal_matrix, reciprocal_pascal, super_catalan_matrix

#: ids of the catalogued sequences this package can generate terms for.
GENERATED_IDS = ("A000984", "A007318", "A094527", "A110162", "A060739")


@dataclass(frozen=True)
class SequenceRecord:
    """A run of consecutive integer sequence terms; offset indexes terms[0]."""

    oeis_id: str
    offset: int
    terms: tuple

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        if not self.terms:
            raise ValueError("a sequence record needs at least one term")


def emit_bfile(rec: SequenceRecord) -> str:
    """Render a record as b-file text, one "index value" pair per line."""
    return "".join(f"{rec.offset + i} {t}\n" for i, t in enumerate(rec.terms))


def parse_bfile(text: str, oeis_id: str = "") -> SequenceRecord:
    """Parse b-file text; '#' comment lines and blank lines are skipped.

    Indices must be consecutive.  Malformed or out-of-order lines raise
    ValueError naming the offending line number.
    """
    offset = 0
    prev = None
    terms = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        fields = stripped.split()
        if len(fields) != 2:
            raise ValueError(f"line {lineno}: expected 'index value', got {line!r}")
        try:
            idx, value = int(fields[0]), int(fields[1])
        except ValueError:
            raise ValueError(f"line {lineno}: expected 'index value', got {line!r}") from None
        if prev is None:
            offset = idx
        elif idx != prev + 1:
            raise ValueError(f"line {lineno}: index {idx} does not follow {prev}")
        prev = idx
        terms.append(value)
    if not terms:
        raise ValueError("no terms found")
    return SequenceRecord(oeis_id, offset, tuple(terms))


def load_reference_bfile(oeis_id: str) -> SequenceRecord:
    """Load a reference b-file shipped with the package (currently A000984)."""
    name = f"b{oeis_id[1:]}.txt"
    text = resources.files("recpascal").joinpath("data").joinpath(name).read_text()
    return parse_bfile(text, oeis_id=oeis_id)


def triangle_rows_sequence(m, triangular: bool = True) -> list:
    """Flatten a square matrix by triangle rows: row i contributes columns 0..i.

    With triangular=True (the default), any nonzero entry above the diagonal
    is an error, since the reading would silently drop it.
    """
    rows, cols = m.shape
    if rows != cols:
        raise ValueError(f"square matrix required, got shape {m.shape}")
    if triangular:
        for i in range(rows):
            for j in range(i + 1, cols):
                if m[i, j] != 0:
                    raise ValueError(f"nonzero entry above the diagonal at ({i}, {j})")
    out = []
    for i in range(rows):
        out.extend(m[i, j] for j in range(i + 1))
    return out


def antidiagonal_sequence(m) -> list:
    """Flatten a square matrix along antidiagonals: (0,0), (0,1), (1,0), ...

    Within an antidiagonal the row index ascends.  Antidiagonals past the
    main one are truncated by the matrix boundary.
    """
    rows, cols = m.shape
    if rows != cols:
        raise ValueError(f"square matrix required, got shape {m.shape}")
    n = rows
    out = []
    for d in range(2 * n - 1):
        for i in range(max(0, d - n + 1), min(d, n - 1) + 1):
            out.append(m[i, d - i])
    return out


def det_inverse_sequence(max_n: int) -> SequenceRecord:
    """Determinants of the integer inverse for sizes 1..max_n, indexed by size.

    Each determinant comes from the elimination oracle and is asserted to be
    an exact integer.
    """
    if max_n < 1:
        raise ValueError(f"need max_n >= 1, got {max_n}")
    terms = []
    for n in range(1, max_n + 1):
        d = det_bareiss(invert_rational(reciprocal_pascal(n)))
        if d.denominator != 1:
            raise ExactnessError(f"determinant for size {n} is not an integer: {d}")
        terms.append(int(d))
    return SequenceRecord("A060739", 1, tuple(terms))


def crosscheck(
    reference: SequenceRecord, generated: SequenceRecord, magnitude_only: bool = False
) -> CheckReport:
    """Term-by-term comparison over the overlapping index range.

    magnitude_only compares absolute values, for catalogued sequences whose
    sign convention is not pinned down; sign_pattern exists to inspect the
    signs themselves.  The report's n is the number of indices compared.
    """
    start = time.perf_counter()
    lo = max(reference.offset, generated.offset)
    hi = min(reference.offset + len(reference.terms), generated.offset + len(generated.terms))
    if lo >= hi:
        raise ValueError("index ranges do not overlap")
    mismatch = None
    for idx in range(lo, hi):
        e = reference.terms[idx - reference.offset]
        a = generated.terms[idx - generated.offset]
        if magnitude_only:
            e, a = abs(e), abs(a)
        if e != a:
            mismatch = (idx, 0, e, a)
            break
    return CheckReport(
        f"crosscheck:{reference.oeis_id}",
        hi - lo,
        mismatch is None,
        mismatch,
        time.perf_counter() - start,
    )


def sign_pattern(terms) -> str:
    """One character per term: '+', '-', or '0'."""
    return "".join("+" if t > 0 else "-" if t < 0 else "0" for t in terms)


def generated_sequence(oeis_id: str, n: int) -> SequenceRecord:
    """Generate this package's terms for one of the catalogued sequence ids.

    n is the generating matrix size (for A000984, the number of terms).
    Square arrays are read by complete antidiagonals only, so flat indices
    line up with the catalogued triangle readings.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if oeis_id == "A000984":
        return SequenceRecord(oeis_id, 0, g_matrix(n).diag)
    if oeis_id == "A007318":
        flat = antidiagonal_sequence(pascal_matrix(n))[: n * (n + 1) // 2]
        return SequenceRecord(oeis_id, 0, tuple(flat))
    if oeis_id == "A094527":
        return SequenceRecord(oeis_id, 0, tuple(triangle_rows_sequence(l_matrix(n))))
    if oeis_id == "A110162":
        linv = invert_unit_lower_triangular(l_matrix(n))
        return SequenceRecord(oeis_id, 0, tuple(triangle_rows_sequence(linv)))
    if oeis_id == "A060739":
        return det_inverse_sequence(n)
    if oeis_id == "A068555":
        raise ValueError(
            "A068555 has no asserted reading; use super_catalan_candidates instead"
        )
    raise ValueError(f"no generator mapped to {oeis_id!r}")


def super_catalan_candidates(n: int) -> dict:
    """Candidate readings of the super Catalan array for A068555.

    None of the readings is asserted to match the catalogued sequence; they
    are emitted side by side for inspection.  The halved reading drops row
    and column 0 (every remaining value is even) and halves what is left.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    s = super_catalan_matrix(n)
    flat_rows = [s[i, j] for i in range(n) for j in range(n)]
    anti = antidiagonal_sequence(s)[: n * (n + 1) // 2]
    sub = s[1:, 1:]
    halved = [exact_div(x, 2) for x in antidiagonal_sequence(sub)[: (n - 1) * n // 2]]
    return {
        "rows": SequenceRecord("A068555", 0, tuple(flat_rows)),
        "antidiagonals": SequenceRecord("A068555", 0, tuple(anti)),
        "halved_antidiagonals": SequenceRecord("A068555", 0, tuple(halved)),
    }
