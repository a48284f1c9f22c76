"""Helpers for finite operation tables indexed by 0..n-1."""

from typing import List, Optional, Sequence, Tuple

from .errors import RangeError, SizeMismatch

Table = Tuple[Tuple[int, ...], ...]
Perm = Tuple[int, ...]


def freeze(table: Sequence[Sequence[int]]) -> Table:
    """Return an immutable copy of a table."""
    return tuple(tuple(int(v) for v in row) for row in table)


def check_table(
    table: Sequence[Sequence[int]],
    rows: int,
    cols: int,
    bound: int,
    name: str = "table",
) -> Table:
    """Validate shape and entry range of a table.

    Args:
        table: Row-major table
        rows: Expected row count
        cols: Expected column count
        bound: Entries must lie in [0, bound)
        name: Name used in error messages

    Returns:
        Frozen copy of the table

    Raises:
        SizeMismatch: If the shape is wrong
        RangeError: If an entry is out of range
    """
    if len(table) != rows:
        raise SizeMismatch(f"{name} has {len(table)} rows, expected {rows}")
    for i, row in enumerate(table):
        if len(row) != cols:
            raise SizeMismatch(
                f"{name} row {i} has {len(row)} entries, expected {cols}", witness=[i]
            )
        for j, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < bound:
                raise RangeError(
                    f"{name}[{i}][{j}] = {v!r} outside [0, {bound})", witness=[i, j]
                )
    return freeze(table)


def is_permutation(values: Sequence[int]) -> bool:
    n = len(values)
    return sorted(values) == list(range(n))


def inverse_permutation(values: Sequence[int]) -> Perm:
    inverse = [0] * len(values)
    for i, v in enumerate(values):
        inverse[v] = i
    return tuple(inverse)


def column(table: Table, j: int) -> Perm:
    return tuple(row[j] for row in table)


def invert_columns(table: Table) -> Optional[Table]:
    """Invert every column map i -> table[i][j].

    Returns:
        inv with inv[j][table[i][j]] = i, or None if some column is not a
        permutation
    """
    cols = len(table[0]) if table else 0
    result: List[Perm] = []
    for j in range(cols):
        col = column(table, j)
        if not is_permutation(col):
            return None
        result.append(inverse_permutation(col))
    return tuple(result)


def relabel(table: Table, perm: Sequence[int]) -> Table:
    """Transport a binary operation along the bijection perm.

    The result T' satisfies T'[perm[a]][perm[b]] = perm[T[a][b]].
    """
    n = len(table)
    inverse = inverse_permutation(perm)
    return tuple(
        tuple(perm[table[inverse[i]][inverse[j]]] for j in range(n)) for i in range(n)
    )


def cycle_type(perm: Sequence[int]) -> Tuple[int, ...]:
    """Cycle lengths of a permutation, sorted in decreasing order."""
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = perm[x]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))
