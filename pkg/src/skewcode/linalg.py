"""Dense exact linear algebra over the package's finite fields.

Matrices are tiny (tens of rows), so everything is straightforward Gaussian
elimination with deterministic pivoting: the pivot for each column is the
first row with a nonzero entry.  Entries are element codes (ints); the field
object supplies the arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch
from .skewpoly import power_function


@dataclass
class Matrix:
    field: object
    rows: int
    cols: int
    entries: list  # row-major element codes, length rows * cols

    @staticmethod
    def from_rows(field, row_lists) -> "Matrix":
        rows = len(row_lists)
        cols = len(row_lists[0]) if rows else 0
        flat = []
        for r in row_lists:
            if len(r) != cols:
                raise DimensionMismatch("ragged row lengths")
            flat.extend(r)
        return Matrix(field, rows, cols, flat)

    @staticmethod
    def zero(field, rows, cols) -> "Matrix":
        return Matrix(field, rows, cols, [0] * (rows * cols))

    @staticmethod
    def identity(field, n) -> "Matrix":
        m = Matrix.zero(field, n, n)
        for i in range(n):
            m[i, i] = 1
        return m

    def __getitem__(self, rc):
        r, c = rc
        return self.entries[r * self.cols + c]

    def __setitem__(self, rc, v):
        r, c = rc
        self.entries[r * self.cols + c] = v

    def row(self, r):
        return self.entries[r * self.cols : (r + 1) * self.cols]

    def col(self, c):
        return self.entries[c :: self.cols]

    def copy(self) -> "Matrix":
        return Matrix(self.field, self.rows, self.cols, list(self.entries))

    def transpose(self) -> "Matrix":
        out = Matrix.zero(self.field, self.cols, self.rows)
        for r in range(self.rows):
            for c in range(self.cols):
                out[c, r] = self[r, c]
        return out

    def submatrix_cols(self, col_indices) -> "Matrix":
        out = Matrix.zero(self.field, self.rows, len(col_indices))
        for r in range(self.rows):
            base = r * self.cols
            for j, c in enumerate(col_indices):
                out[r, j] = self.entries[base + c]
        return out

    def submatrix_rows(self, row_indices) -> "Matrix":
        return Matrix.from_rows(self.field, [self.row(r) for r in row_indices])

    def hstack(self, other) -> "Matrix":
        if self.rows != other.rows:
            raise DimensionMismatch("hstack row mismatch")
        return Matrix.from_rows(
            self.field, [self.row(r) + other.row(r) for r in range(self.rows)]
        )

    def vstack(self, other) -> "Matrix":
        if self.cols != other.cols:
            raise DimensionMismatch("vstack column mismatch")
        return Matrix(
            self.field,
            self.rows + other.rows,
            self.cols,
            self.entries + other.entries,
        )

    def matmul(self, other) -> "Matrix":
        if self.cols != other.rows:
            raise DimensionMismatch("matmul inner dimension mismatch")
        F = self.field
        out = Matrix.zero(F, self.rows, other.cols)
        for i in range(self.rows):
            for k in range(self.cols):
                a = self[i, k]
                if a == 0:
                    continue
                base = k * other.cols
                obase = i * other.cols
                for j in range(other.cols):
                    b = other.entries[base + j]
                    if b:
                        out.entries[obase + j] = F.add(
                            out.entries[obase + j], F.mul(a, b)
                        )
        return out

    def matvec(self, vec) -> list:
        if len(vec) != self.cols:
            raise DimensionMismatch("matvec length mismatch")
        F = self.field
        out = [0] * self.rows
        for i in range(self.rows):
            base = i * self.cols
            acc = 0
            for j, v in enumerate(vec):
                if v and self.entries[base + j]:
                    acc = F.add(acc, F.mul(self.entries[base + j], v))
            out[i] = acc
        return out

    # -- elimination

    def echelonize(self):
        """In-place reduced row echelon form; returns the pivot column list."""
        F = self.field
        pivots = []
        r = 0
        for c in range(self.cols):
            if r == self.rows:
                break
            pr = next(
                (i for i in range(r, self.rows) if self[i, c] != 0), None
            )
            if pr is None:
                continue
            if pr != r:
                for j in range(self.cols):
                    self[r, j], self[pr, j] = self[pr, j], self[r, j]
            inv = F.inv(self[r, c])
            for j in range(self.cols):
                self[r, j] = F.mul(self[r, j], inv)
            for i in range(self.rows):
                if i != r and self[i, c] != 0:
                    f = self[i, c]
                    for j in range(self.cols):
                        self[i, j] = F.sub(self[i, j], F.mul(f, self[r, j]))
            pivots.append(c)
            r += 1
        return pivots

    def rank(self) -> int:
        return len(self.copy().echelonize())

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise DimensionMismatch("inverse of non-square matrix")
        aug = self.hstack(Matrix.identity(self.field, self.rows))
        pivots = aug.echelonize()
        if pivots != list(range(self.rows)):
            return None
        return aug.submatrix_cols(list(range(self.rows, 2 * self.rows)))

    def solve(self, rhs):
        """One solution x of self @ x = rhs, or None if inconsistent."""
        if len(rhs) != self.rows:
            raise DimensionMismatch("rhs length mismatch")
        aug = self.hstack(Matrix.from_rows(self.field, [[v] for v in rhs]))
        pivots = aug.echelonize()
        if self.cols in pivots:
            return None
        x = [0] * self.cols
        for r, c in enumerate(pivots):
            x[c] = aug[r, self.cols]
        return x

    def nullspace(self) -> list:
        """Basis vectors of the right kernel (deterministic order)."""
        red = self.copy()
        pivots = red.echelonize()
        F = self.field
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for fc in free:
            v = [0] * self.cols
            v[fc] = 1
            for r, pc in enumerate(pivots):
                v[pc] = F.neg(red[r, fc])
            basis.append(v)
        return basis

    def to_json(self):
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [
                [int(v) for v in self.row(r)] for r in range(self.rows)
            ],
        }

    @staticmethod
    def from_json(field, obj) -> "Matrix":
        m = Matrix.from_rows(field, obj["entries"])
        if m.rows != obj["rows"] or m.cols != obj["cols"]:
            raise DimensionMismatch("matrix JSON shape mismatch")
        return m

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols} over {self.field})"


def flatten_matrix(tower, mat: Matrix) -> Matrix:
    """Expand an F_q matrix to the (rows*m) x cols matrix over F_{q0}.

    Each extension entry is replaced by its m power-basis coordinates,
    stacked vertically; ranks over F_{q0} of column sets are preserved
    in the sense used by erasure-pattern checks.
    """
    m = tower.m
    out = Matrix.zero(tower.base, mat.rows * m, mat.cols)
    for r in range(mat.rows):
        for c in range(mat.cols):
            for i, d in enumerate(tower.flatten(mat[r, c])):
                out[r * m + i, c] = d
    return out


def skew_vandermonde(tower, d: int, points) -> Matrix:
    """d x n matrix with entry (i, j) = N_i(points[j])."""
    rows = []
    for i in range(d):
        rows.append([power_function(tower, i, a) for a in points])
    return Matrix.from_rows(tower.ext, rows)


def moore_matrix(tower, points, d=None) -> Matrix:
    """d x n matrix with entry (i, j) = sigma^i(points[j])."""
    if d is None:
        d = len(points)
    rows = []
    for i in range(d):
        rows.append([tower.frobenius(a, i) for a in points])
    return Matrix.from_rows(tower.ext, rows)
