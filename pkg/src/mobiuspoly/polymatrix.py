"""Square matrices of integer polynomials indexed by a labeled basis.

The basis is a tuple of element labels (a poset's linear extension, when
the matrix represents an incidence element).  Multiplication requires the
two operands to share a basis, so mixing layouts is rejected rather than
silently reinterpreted.
"""

from __future__ import annotations

from .errors import InputError
from .polynomial import IntPolynomial, ONE, ZERO


class PolyMatrix:
    """Immutable n x n matrix of IntPolynomial entries."""

    __slots__ = ("basis", "rows")

    def __init__(self, basis, rows):
        basis = tuple(basis)
        n = len(basis)
        rows = tuple(
            tuple(e if isinstance(e, IntPolynomial) else IntPolynomial.constant(e) for e in row)
            for row in rows
        )
        if len(rows) != n or any(len(row) != n for row in rows):
            raise InputError(f"matrix rows do not form an {n}x{n} square")
        self.basis = basis
        self.rows = rows

    @classmethod
    def identity(cls, basis) -> "PolyMatrix":
        n = len(basis)
        return cls(basis, tuple(
            tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)
        ))

    @property
    def n(self) -> int:
        return len(self.basis)

    def entry(self, i: int, j: int) -> IntPolynomial:
        return self.rows[i][j]

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        if self.basis != other.basis:
            raise InputError(
                f"matrix dimension/basis mismatch: {self.n} vs {other.n} elements"
            )
        n = self.n
        a, b = self.rows, other.rows
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = ZERO
                for k in range(n):
                    aik = a[i][k]
                    if aik.is_zero():
                        continue
                    bkj = b[k][j]
                    if bkj.is_zero():
                        continue
                    acc = acc + aik * bkj
                row.append(acc)
            out.append(tuple(row))
        return PolyMatrix(self.basis, tuple(out))

    def inverse_unitriangular(self) -> "PolyMatrix":
        """Invert an upper-triangular matrix with all-1 diagonal.

        Back substitution over the integer-polynomial ring; exact, no
        division ever occurs because the diagonal is 1.
        """
        n = self.n
        a = self.rows
        for i in range(n):
            if a[i][i] != ONE:
                raise InputError(
                    f"not unitriangular: diagonal entry at {self.basis[i]!r} is {a[i][i]}"
                )
            for j in range(i):
                if not a[i][j].is_zero():
                    raise InputError(
                        f"not unitriangular: nonzero entry below the diagonal at "
                        f"({self.basis[i]!r}, {self.basis[j]!r})"
                    )
        inv = [[ZERO] * n for _ in range(n)]
        for i in range(n):
            inv[i][i] = ONE
            for j in range(i + 1, n):
                acc = ZERO
                for k in range(i, j):
                    bik = inv[i][k]
                    akj = a[k][j]
                    if bik.is_zero() or akj.is_zero():
                        continue
                    acc = acc + bik * akj
                inv[i][j] = -acc
        return PolyMatrix(self.basis, tuple(tuple(row) for row in inv))

    def kron(self, other: "PolyMatrix") -> "PolyMatrix":
        """Kronecker product; basis is left-major lexicographic pair labels."""
        basis = tuple(f"({a},{b})" for a in self.basis for b in other.basis)
        na, nb = self.n, other.n
        out = []
        for i in range(na):
            for k in range(nb):
                row = []
                for j in range(na):
                    aij = self.rows[i][j]
                    for l in range(nb):
                        row.append(ZERO if aij.is_zero() else aij * other.rows[k][l])
                out.append(tuple(row))
        return PolyMatrix(basis, tuple(out))

    def sum_entries(self) -> IntPolynomial:
        acc = ZERO
        for row in self.rows:
            for e in row:
                acc = acc + e
        return acc

    def evaluate(self, x: int) -> tuple:
        """Entrywise evaluation at an integer, e.g. x=1 for the classical matrix."""
        return tuple(tuple(e(x) for e in row) for row in self.rows)

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.basis == other.basis and self.rows == other.rows

    def __repr__(self):
        return f"PolyMatrix(n={self.n})"


def kronecker(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    return a.kron(b)
