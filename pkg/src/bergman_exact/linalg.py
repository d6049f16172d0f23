"""Exact linear algebra over Q or Q(i).

Everything here is generic in the scalar type: any exact field element with
``+ - * /`` and a truthiness test for zero works (``Fraction`` and
``GaussianRational`` are the ones used).  Pivoting is deterministic: for each
column the first still-unused row, in the original row order, with a nonzero
entry is chosen.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatch, SingularMatrix


def _exact(v):
    # plain ints would turn into floats under "/"; floats are never accepted
    if isinstance(v, bool) or isinstance(v, float):
        raise TypeError(f"expected an exact scalar, got {v!r}")
    return Fraction(v) if isinstance(v, int) else v


class ExactLU:
    """Sparse LU factorisation of a square matrix, reusable for many right-hand sides.

    ``rows`` is a list of ``{column: value}`` dicts.  Raises ``SingularMatrix`` if
    some column has no available pivot.
    """

    def __init__(self, size: int, rows: Sequence[dict]):
        if len(rows) != size:
            raise DimensionMismatch(f"{len(rows)} rows for a {size}x{size} matrix")
        self.size = size
        work = [{c: _exact(v) for c, v in row.items() if v} for row in rows]
        col_rows: list[set] = [set() for _ in range(size)]
        for r, row in enumerate(work):
            for c in row:
                if not 0 <= c < size:
                    raise DimensionMismatch(f"column {c} out of range")
                col_rows[c].add(r)
        used = [False] * size
        ops: list[tuple[int, int, object]] = []
        pivot_row = [0] * size
        for c in range(size):
            candidates = sorted(r for r in col_rows[c] if not used[r])
            if not candidates:
                raise SingularMatrix(f"no pivot in column {c}: matrix is singular")
            p = candidates[0]
            used[p] = True
            pivot_row[c] = p
            prow = work[p]
            piv = prow[c]
            for r in candidates[1:]:
                row = work[r]
                factor = row[c] / piv
                ops.append((r, p, factor))
                for k, v in prow.items():
                    new = row.get(k)
                    new = -factor * v if new is None else new - factor * v
                    if new:
                        if k not in row:
                            col_rows[k].add(r)
                        row[k] = new
                    else:
                        row.pop(k, None)
                        col_rows[k].discard(r)
                # exact arithmetic: the pivot column entry cancels to zero
                assert c not in row
        self._ops = ops
        self._pivot_row = pivot_row
        self._u = work

    @classmethod
    def from_dense(cls, A: Sequence[Sequence]) -> "ExactLU":
        n = len(A)
        for row in A:
            if len(row) != n:
                raise DimensionMismatch("matrix is not square")
        return cls(n, [{c: v for c, v in enumerate(row) if v} for row in A])

    def solve(self, b: Sequence) -> list:
        if len(b) != self.size:
            raise DimensionMismatch(f"right-hand side has length {len(b)}, expected {self.size}")
        y = [_exact(v) for v in b]
        for r, p, factor in self._ops:
            if y[p]:
                y[r] = y[r] - factor * y[p]
        sol = [0] * self.size
        for c in range(self.size - 1, -1, -1):
            row = self._u[self._pivot_row[c]]
            acc = y[self._pivot_row[c]]
            for k, v in row.items():
                if k != c and sol[k]:
                    acc = acc - v * sol[k]
            sol[c] = acc / row[c] if acc else acc
        return sol

    def determinant(self):
        det = Fraction(1)
        for c in range(self.size):
            det = self._u[self._pivot_row[c]][c] * det
        return det * _permutation_sign(self._pivot_row)


def _permutation_sign(perm: Sequence[int]) -> int:
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def solve_exact(A: Sequence[Sequence], b: Sequence) -> list:
    """Exact solution of the square system ``A x = b``."""
    if len(A) != len(b):
        raise DimensionMismatch("matrix and right-hand side disagree in size")
    if not A:
        return []
    return ExactLU.from_dense(A).solve(b)


def determinant(A: Sequence[Sequence]):
    if not A:
        return Fraction(1)
    try:
        return ExactLU.from_dense(A).determinant()
    except SingularMatrix:
        return Fraction(0)


def rref(A: Sequence[Sequence]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form and pivot columns of a (possibly rectangular) matrix."""
    M = [[_exact(v) for v in row] for row in A]
    if not M:
        return M, []
    nrows, ncols = len(M), len(M[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if M[i][c]), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        piv = M[r][c]
        M[r] = [v / piv if v else v for v in M[r]]
        for i in range(nrows):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [a - f * b if b else a for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    return M, pivots


def rank(A: Sequence[Sequence]) -> int:
    return len(rref(A)[1])


def nullspace(A: Sequence[Sequence], ncols: int | None = None) -> list[list]:
    """Basis of ``{v : A v = 0}``, one vector per free column, in column order."""
    if not A:
        if ncols is None:
            raise ValueError("ncols is required for an empty matrix")
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    R, pivots = rref(A)
    ncols = len(A[0])
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(R, pivots):
            if row[f]:
                v[pc] = -row[f]
        basis.append(v)
    return basis
