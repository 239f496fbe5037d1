"""Seed-condition checking and girth-12 family extension.

A (3,L) seed that is girth-12 at some circulant size Q, has p1[v] <= p2[v]
column-wise, and whose row-2 value gap (largest minus second largest)
dominates the row-1 maximum, stays girth-12 at every circulant size
P >= 2 * p2_max + 1.  That bound is tight: at P = 2 * p2_max the columns
0 and argmax(row 2) close an 8-cycle between block-rows 0 and 2.

"Second largest" is read over the multiset of row-2 values: a repeated
maximum makes the gap zero, which fails the condition for any nontrivial
row 1.  This is the conservative reading; it keeps the extension guarantee
airtight for every pair of distinct column choices.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .errors import FamilyVerificationError
from .girth import CycleWitness, find_cycle, girth_fast
from .matrices import ExponentMatrix, QcCode, canonical_check, matrix_to_json


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of the three seed conditions plus the derived bound."""

    cond1_girth12: bool
    cond2_elementwise: bool
    cond3_gap: bool
    p2_max: int
    p2_second: int
    p1_max: int
    min_p: int

    @property
    def all_pass(self) -> bool:
        return self.cond1_girth12 and self.cond2_elementwise and self.cond3_gap

    def to_json_dict(self) -> dict:
        return {
            "cond1_girth12": self.cond1_girth12,
            "cond2_elementwise": self.cond2_elementwise,
            "cond3_gap": self.cond3_gap,
            "p2_max": self.p2_max,
            "p2_second": self.p2_second,
            "p1_max": self.p1_max,
            "min_P": self.min_p,
        }


def _row_extremes(matrix: ExponentMatrix) -> tuple[int, int, int]:
    """(p1_max, p2_max, p2_second); second largest over the multiset."""
    row1, row2 = matrix.entries[1], matrix.entries[2]
    ordered = sorted(row2, reverse=True)
    p2_second = ordered[1] if len(ordered) >= 2 else ordered[0]
    return max(row1), ordered[0], p2_second


def check_seed_conditions(matrix: ExponentMatrix, q: int) -> ConditionReport:
    """Evaluate the three extension conditions for a seed at size Q.

    Requires a canonical (3,L) matrix with all entries < Q; the guarantee
    this report certifies is specific to column weight three.
    """
    if matrix.rows != 3:
        raise ValueError(
            f"seed conditions apply to (3,L) matrices only, got {matrix.rows} rows"
        )
    report = canonical_check(matrix)
    if not report.passed:
        raise ValueError(f"seed not canonical: {', '.join(report.failures)}")
    if q < 2:
        raise ValueError(f"Q must be >= 2, got {q}")
    if matrix.max_entry >= q:
        raise ValueError(f"entry {matrix.max_entry} is >= Q={q}")

    p1_max, p2_max, p2_second = _row_extremes(matrix)
    cond1 = girth_fast(matrix, q).girth == 12
    cond2 = all(a <= b for a, b in zip(matrix.entries[1], matrix.entries[2]))
    cond3 = (p2_max - p2_second) >= p1_max
    return ConditionReport(
        cond1_girth12=cond1,
        cond2_elementwise=cond2,
        cond3_gap=cond3,
        p2_max=p2_max,
        p2_second=p2_second,
        p1_max=p1_max,
        min_p=2 * p2_max + 1,
    )


def extend_family(
    matrix: ExponentMatrix,
    q: int,
    p_lo: int,
    p_hi: int,
    verify: bool | None = None,
    *,
    threads: int = 1,
) -> list[QcCode]:
    """One code per circulant size in [p_lo, p_hi], all girth 12.

    The seed must pass :func:`check_seed_conditions` at Q and p_lo must be
    at or above the certified bound.  With *verify* (defaulting to on for
    ranges of at most 1000 members) every member is independently re-checked
    by the fast girth computation; a failure aborts with the offending P.
    Verification runs over a thread pool when *threads* > 1 and results are
    collected in ascending-P order either way.
    """
    report = check_seed_conditions(matrix, q)
    if not report.all_pass:
        raise ValueError(
            "seed fails the extension conditions: "
            + ", ".join(
                name
                for name, ok in (
                    ("girth-12 at Q", report.cond1_girth12),
                    ("element-wise row order", report.cond2_elementwise),
                    ("row-2 gap", report.cond3_gap),
                )
                if not ok
            )
        )
    if p_lo < report.min_p:
        raise ValueError(
            f"P range starts below the certified extension bound: "
            f"{p_lo} < min_P={report.min_p}"
        )
    if p_hi < p_lo:
        raise ValueError(f"empty range: {p_hi} < {p_lo}")

    sizes = range(p_lo, p_hi + 1)
    if verify is None:
        verify = len(sizes) <= 1000

    if verify:
        def girth_at(p: int) -> int | None:
            return girth_fast(matrix, p).girth

        if threads > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                girths = list(pool.map(girth_at, sizes))
        else:
            girths = [girth_at(p) for p in sizes]
        for p, g in zip(sizes, girths):
            if g != 12:
                raise FamilyVerificationError(p, g)

    return [QcCode(matrix, p) for p in sizes]


def tightness_witness(matrix: ExponentMatrix) -> CycleWitness:
    """The 8-cycle showing the extension bound is tight at P = 2 * p2_max.

    With a unique row-2 maximum at column x != 0, block-rows 0 and 2 and
    columns 0 and x close an 8-cycle whose exponent sum is exactly
    2 * p2_max.  Without a unique off-zero maximum that construction is
    undefined, so the generic length-8 search takes over at the same
    modulus.
    """
    if matrix.rows != 3:
        raise ValueError("tightness witness applies to (3,L) matrices only")
    if not canonical_check(matrix).passed:
        raise ValueError("matrix must be canonical")
    row2 = matrix.entries[2]
    p2_max = max(row2)
    modulus = 2 * p2_max
    if modulus < 2:
        raise ValueError("row 2 is all zero; no tightness modulus exists")
    max_cols = [v for v, e in enumerate(row2) if e == p2_max]
    if len(max_cols) == 1 and max_cols[0] != 0:
        x = max_cols[0]
        return CycleWitness(
            length=8, row_seq=(0, 2, 0, 2), col_seq=(0, x, 0, x), modulus=modulus
        )
    witness = find_cycle(matrix, modulus, 8)
    if witness is None:
        raise ValueError(
            f"no 8-cycle found at P={modulus}; the direct construction needs a "
            "unique row-2 maximum away from column 0"
        )
    return witness


def family_manifest(
    matrix: ExponentMatrix,
    q: int,
    codes: list[QcCode],
    *,
    label: str | None = None,
) -> dict:
    """JSON-ready manifest: seed, Q, bound and one entry per member."""
    report = check_seed_conditions(matrix, q)
    return {
        "seed": matrix_to_json(matrix, label),
        "Q": q,
        "min_P": report.min_p,
        "members": [
            {"P": code.circulant_size, "N": code.block_length, "girth": 12}
            for code in codes
        ],
    }
