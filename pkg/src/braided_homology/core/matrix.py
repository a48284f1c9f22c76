"""Exact integer matrices over Python ints."""

from typing import Iterable, Iterator, List, Sequence, Tuple


class IntMatrix:
    """Dense rows x cols matrix of arbitrary-precision integers.

    Instances are treated as values: every operation returns a new matrix.
    """

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, entries: Sequence[Sequence[int]], rows: int = -1, cols: int = -1):
        data = [list(map(int, row)) for row in entries]
        self.rows = len(data) if rows < 0 else rows
        if cols < 0:
            cols = len(data[0]) if data else 0
        self.cols = cols
        if len(data) != self.rows or any(len(r) != self.cols for r in data):
            raise ValueError(f"inconsistent dimensions for {self.rows}x{self.cols} matrix")
        self._data = data

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls([[0] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n, n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> "IntMatrix":
        return cls([[c[i] for c in columns] for i in range(rows)], rows, len(columns))

    def __getitem__(self, index: Tuple[int, int]) -> int:
        i, j = index
        return self._data[i][j]

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def to_lists(self) -> List[List[int]]:
        return [row[:] for row in self._data]

    def row(self, i: int) -> List[int]:
        return self._data[i][:]

    def column(self, j: int) -> List[int]:
        return [row[j] for row in self._data]

    def columns(self) -> Iterator[List[int]]:
        for j in range(self.cols):
            yield self.column(j)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            [[self._data[i][j] for i in range(self.rows)] for j in range(self.cols)],
            self.cols,
            self.rows,
        )

    def is_zero(self) -> bool:
        return all(v == 0 for row in self._data for v in row)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        odata = other._data
        result = []
        for row in self._data:
            acc = [0] * other.cols
            for k, a in enumerate(row):
                if a:
                    orow = odata[k]
                    for j, b in enumerate(orow):
                        if b:
                            acc[j] += a * b
            result.append(acc)
        return IntMatrix(result, self.rows, other.cols)

    def apply(self, vector: Sequence[int]) -> List[int]:
        """Matrix-vector product."""
        return [sum(a * v for a, v in zip(row, vector) if a) for row in self._data]

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        self._same_shape(other)
        return IntMatrix(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)],
            self.rows,
            self.cols,
        )

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        self._same_shape(other)
        return IntMatrix(
            [[a - b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)],
            self.rows,
            self.cols,
        )

    def __neg__(self) -> "IntMatrix":
        return self.scale(-1)

    def scale(self, c: int) -> "IntMatrix":
        return IntMatrix([[c * a for a in row] for row in self._data], self.rows, self.cols)

    def hstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.rows != other.rows:
            raise ValueError("row counts differ")
        return IntMatrix(
            [r + s for r, s in zip(self._data, other._data)],
            self.rows,
            self.cols + other.cols,
        )

    def select_columns(self, indices: Iterable[int]) -> "IntMatrix":
        idx = list(indices)
        return IntMatrix([[row[j] for j in idx] for row in self._data], self.rows, len(idx))

    def select_rows(self, indices: Iterable[int]) -> "IntMatrix":
        idx = list(indices)
        return IntMatrix([self._data[i][:] for i in idx], len(idx), self.cols)

    def reduce_mod(self, k: int) -> "IntMatrix":
        return IntMatrix([[a % k for a in row] for row in self._data], self.rows, self.cols)

    def determinant(self) -> int:
        """Exact determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = self.to_lists()
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
                if swap is None:
                    return 0
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def to_text(self) -> str:
        """Plain-text export: one row per line, entries space-separated."""
        return "\n".join(" ".join(str(v) for v in row) for row in self._data)

    def _same_shape(self, other: "IntMatrix") -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, tuple(tuple(r) for r in self._data)))

    def __repr__(self) -> str:
        return f"IntMatrix({self.rows}x{self.cols})"
