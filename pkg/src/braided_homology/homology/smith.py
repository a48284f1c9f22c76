"""Smith normal form over the integers, with optional transform tracking.

Pivoting picks the entry of least absolute value in the active block; after
a pivot clears its row and column, a repair pass restores d_t | (rest of the
block) by folding an offending row into the pivot row.
"""

from dataclasses import dataclass
from math import gcd
from typing import List, Optional, Sequence, Tuple

from ..core.errors import RangeError
from ..core.matrix import IntMatrix
from ..core.report import IdentityReport


@dataclass
class SmithForm:
    """U·A·V = D with U, V unimodular and d_1 | d_2 | ... on the diagonal of D.

    U, V (and V⁻¹) are None when transforms were not requested.
    """

    D: IntMatrix
    invariants: List[int]
    U: Optional[IntMatrix] = None
    V: Optional[IntMatrix] = None
    V_inv: Optional[IntMatrix] = None

    @property
    def rank(self) -> int:
        return len(self.invariants)

    def as_tuple(self) -> Tuple[Optional[IntMatrix], IntMatrix, Optional[IntMatrix]]:
        return self.U, self.D, self.V


class _Reducer:
    def __init__(self, A: IntMatrix, transforms: bool, inverse: bool):
        self.a = A.to_lists()
        self.m, self.n = A.rows, A.cols
        self.u = IntMatrix.identity(self.m).to_lists() if transforms else None
        self.v = IntMatrix.identity(self.n).to_lists() if transforms else None
        self.vi = IntMatrix.identity(self.n).to_lists() if transforms and inverse else None

    # elementary operations, mirrored on the transforms

    def swap_rows(self, i: int, j: int) -> None:
        if i == j:
            return
        a = self.a
        a[i], a[j] = a[j], a[i]
        if self.u is not None:
            self.u[i], self.u[j] = self.u[j], self.u[i]

    def swap_cols(self, i: int, j: int) -> None:
        if i == j:
            return
        for row in self.a:
            row[i], row[j] = row[j], row[i]
        if self.v is not None:
            for row in self.v:
                row[i], row[j] = row[j], row[i]
        if self.vi is not None:
            self.vi[i], self.vi[j] = self.vi[j], self.vi[i]

    def add_row(self, target: int, source: int, q: int) -> None:
        """row_target += q * row_source."""
        rt, rs = self.a[target], self.a[source]
        for j, x in enumerate(rs):
            if x:
                rt[j] += q * x
        if self.u is not None:
            ut, us = self.u[target], self.u[source]
            for j, x in enumerate(us):
                if x:
                    ut[j] += q * x

    def add_col(self, target: int, source: int, q: int) -> None:
        """col_target += q * col_source."""
        for row in self.a:
            x = row[source]
            if x:
                row[target] += q * x
        if self.v is not None:
            for row in self.v:
                x = row[source]
                if x:
                    row[target] += q * x
        if self.vi is not None:
            # V' = V·E with E = I + q e_source e_targetᵀ, so V'⁻¹ = (I - q e_source e_targetᵀ)·V⁻¹
            rs, rt = self.vi[source], self.vi[target]
            for j, x in enumerate(rt):
                if x:
                    rs[j] -= q * x

    def negate_row(self, i: int) -> None:
        self.a[i] = [-x for x in self.a[i]]
        if self.u is not None:
            self.u[i] = [-x for x in self.u[i]]

    # reduction

    def _min_entry(self, t: int) -> Optional[Tuple[int, int]]:
        best: Optional[Tuple[int, int]] = None
        best_abs = 0
        for i in range(t, self.m):
            row = self.a[i]
            for j in range(t, self.n):
                x = row[j]
                if x and (best is None or abs(x) < best_abs):
                    best, best_abs = (i, j), abs(x)
                    if best_abs == 1:
                        return best
        return best

    def _min_in_cross(self, t: int) -> Tuple[int, int]:
        a = self.a
        best, best_abs = (t, t), abs(a[t][t]) if a[t][t] else None
        for i in range(t + 1, self.m):
            x = a[i][t]
            if x and (best_abs is None or abs(x) < best_abs):
                best, best_abs = (i, t), abs(x)
        for j in range(t + 1, self.n):
            x = a[t][j]
            if x and (best_abs is None or abs(x) < best_abs):
                best, best_abs = (t, j), abs(x)
        return best

    def _non_divisible(self, t: int) -> Optional[int]:
        p = self.a[t][t]
        if abs(p) == 1:
            return None
        for i in range(t + 1, self.m):
            row = self.a[i]
            for j in range(t + 1, self.n):
                if row[j] % p:
                    return i
        return None

    def reduce(self) -> List[int]:
        a = self.a
        invariants: List[int] = []
        for t in range(min(self.m, self.n)):
            pivot = self._min_entry(t)
            if pivot is None:
                break
            self.swap_rows(t, pivot[0])
            self.swap_cols(t, pivot[1])
            while True:
                clean = True
                p = a[t][t]
                for i in range(t + 1, self.m):
                    if a[i][t]:
                        self.add_row(i, t, -(a[i][t] // p))
                        clean = clean and a[i][t] == 0
                for j in range(t + 1, self.n):
                    if a[t][j]:
                        self.add_col(j, t, -(a[t][j] // p))
                        clean = clean and a[t][j] == 0
                if clean:
                    bad = self._non_divisible(t)
                    if bad is None:
                        break
                    self.add_row(t, bad, 1)
                    continue
                i, j = self._min_in_cross(t)
                self.swap_rows(t, i)
                self.swap_cols(t, j)
            if a[t][t] < 0:
                self.negate_row(t)
            invariants.append(a[t][t])
        return invariants


def smith_normal_form(A: IntMatrix, transforms: bool = True, inverse: bool = False) -> SmithForm:
    """Deterministic SNF.

    Args:
        A: Integer matrix
        transforms: Track U and V
        inverse: Also track V⁻¹ (needed for cocycle coordinates)

    Returns:
        SmithForm with invariants d_1 | d_2 | ... (nonzero diagonal entries)
    """
    reducer = _Reducer(A, transforms, inverse)
    invariants = reducer.reduce()
    D = IntMatrix(reducer.a, A.rows, A.cols)
    return SmithForm(
        D=D,
        invariants=invariants,
        U=IntMatrix(reducer.u, A.rows, A.rows) if reducer.u is not None else None,
        V=IntMatrix(reducer.v, A.cols, A.cols) if reducer.v is not None else None,
        V_inv=IntMatrix(reducer.vi, A.cols, A.cols) if reducer.vi is not None else None,
    )


def invariant_factors(A: IntMatrix) -> List[int]:
    """Nonzero invariant factors of A, in divisibility order."""
    return smith_normal_form(A, transforms=False).invariants


def matrix_rank(A: IntMatrix) -> int:
    return len(invariant_factors(A))


def check_smith(A: IntMatrix, form: SmithForm) -> IdentityReport:
    """Recompute U·A·V, the unimodularity of U and V, and the divisibility chain."""
    report = IdentityReport("smith_normal_form")
    if form.U is None or form.V is None:
        report.record(False, reason="transforms not tracked")
        return report
    report.record(form.U @ A @ form.V == form.D, check="U·A·V = D")
    report.record(abs(form.U.determinant()) == 1, check="det U = ±1")
    report.record(abs(form.V.determinant()) == 1, check="det V = ±1")
    if form.V_inv is not None:
        report.record(form.V @ form.V_inv == IntMatrix.identity(A.cols), check="V·V⁻¹ = I")
    D = form.D
    diagonal_only = all(
        D[i, j] == 0 for i in range(D.rows) for j in range(D.cols) if i != j
    )
    report.record(diagonal_only, check="D diagonal")
    chain = form.invariants
    report.record(all(d > 0 for d in chain), check="d_i > 0")
    report.record(all(chain[i + 1] % chain[i] == 0 for i in range(len(chain) - 1)), check="d_i | d_(i+1)")
    return report


def solve_mod(M: IntMatrix, h: Sequence[int], k: int) -> Optional[List[int]]:
    """A solution x of M·x ≡ h (mod k), or None.

    With U·M·V = D, substitute x = V·y and solve d_i·y_i ≡ (U·h)_i one
    coordinate at a time.
    """
    if k < 1:
        raise RangeError(f"modulus must be positive, got {k}", witness={"modulus": k})
    form = smith_normal_form(M.reduce_mod(k))
    assert form.U is not None and form.V is not None
    c = form.U.apply([x % k for x in h])
    y = [0] * M.cols
    for i, ci in enumerate(c):
        ci %= k
        if i < form.rank:
            d = form.invariants[i] % k
            g = gcd(d, k)
            if ci % g:
                return None
            kk = k // g
            y[i] = (ci // g) * pow(d // g, -1, kk) % kk if kk > 1 else 0
        elif ci:
            return None
    return [x % k for x in form.V.apply(y)]
