"""Reader/writer for the alist sparse-matrix interchange format.

Layout (positions are 1-indexed, lines newline-terminated, single spaces):

    N M                      columns then rows
    max_col_weight max_row_weight
    N column weights
    M row weights
    N lines: row positions of each column, zero-padded to max_col_weight
    M lines: column positions of each row, zero-padded to max_row_weight
"""

from __future__ import annotations

from .matrices import SparseBinaryMatrix


def export_alist(matrix: SparseBinaryMatrix) -> str:
    """Serialize to alist text; empty rows/columns pad with zeros."""
    col_supports = matrix.column_supports()
    col_weights = [len(s) for s in col_supports]
    row_weights = [len(s) for s in matrix.row_supports]
    max_col = max(col_weights)
    max_row = max(row_weights)

    def padded(support, width):
        vals = [str(i + 1) for i in support] + ["0"] * (width - len(support))
        return " ".join(vals)

    lines = [
        f"{matrix.n_cols} {matrix.n_rows}",
        f"{max_col} {max_row}",
        " ".join(str(w) for w in col_weights),
        " ".join(str(w) for w in row_weights),
    ]
    lines.extend(padded(s, max_col) for s in col_supports)
    lines.extend(padded(s, max_row) for s in matrix.row_supports)
    return "\n".join(lines) + "\n"


def _int_fields(line: str, what: str) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError as e:
        raise ValueError(f"alist: non-integer token in {what}: {line!r}") from e


def import_alist(text: str) -> SparseBinaryMatrix:
    """Parse alist text back into a SparseBinaryMatrix.

    Strict: weights must match the listed positions and the column lists
    must agree with the row lists.  Positions may appear unsorted but not
    duplicated.
    """
    lines = text.splitlines()
    if len(lines) < 4:
        raise ValueError("alist: fewer than 4 header lines")
    n, m = _parse_pair(lines[0], "size line")
    max_col, max_row = _parse_pair(lines[1], "weight line")
    if n < 1 or m < 1:
        raise ValueError("alist: matrix dimensions must be positive")
    col_weights = _int_fields(lines[2], "column weights")
    row_weights = _int_fields(lines[3], "row weights")
    if len(col_weights) != n or len(row_weights) != m:
        raise ValueError("alist: weight list length mismatch")
    if col_weights and max(col_weights) > max_col:
        raise ValueError("alist: column weight exceeds declared maximum")
    if row_weights and max(row_weights) > max_row:
        raise ValueError("alist: row weight exceeds declared maximum")
    if len(lines) < 4 + n + m:
        raise ValueError("alist: truncated support lists")

    col_supports = [
        _parse_support(lines[4 + j], col_weights[j], m, f"column {j + 1}")
        for j in range(n)
    ]
    row_supports = [
        _parse_support(lines[4 + n + i], row_weights[i], n, f"row {i + 1}")
        for i in range(m)
    ]

    matrix = SparseBinaryMatrix(
        m, n, tuple(tuple(sorted(s)) for s in row_supports)
    )
    derived_cols = [tuple(s) for s in matrix.column_supports()]
    if derived_cols != [tuple(sorted(s)) for s in col_supports]:
        raise ValueError("alist: column lists disagree with row lists")
    return matrix


def _parse_pair(line: str, what: str) -> tuple[int, int]:
    fields = _int_fields(line, what)
    if len(fields) != 2:
        raise ValueError(f"alist: expected two integers in {what}: {line!r}")
    return fields[0], fields[1]


def _parse_support(line: str, weight: int, bound: int, what: str) -> list[int]:
    fields = _int_fields(line, what)
    positions = [f for f in fields if f != 0]
    if len(positions) != weight:
        raise ValueError(
            f"alist: {what} lists {len(positions)} positions, expected {weight}"
        )
    if any(f < 0 for f in fields):
        raise ValueError(f"alist: negative position in {what}")
    zero_based = []
    seen = set()
    for f in positions:
        if f > bound:
            raise ValueError(f"alist: position {f} out of range in {what}")
        if f in seen:
            raise ValueError(f"alist: duplicate position {f} in {what}")
        seen.add(f)
        zero_based.append(f - 1)
    return zero_based
