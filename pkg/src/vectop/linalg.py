"""Exact linear algebra over any field model and the lattice of subspaces.

A "field" here is anything with ``zero``, ``one`` and a ``__call__`` that
coerces ints/rationals into it: :data:`~vectop.arith.QQ`,
:class:`~vectop.arith.PrimeField` or a :class:`~vectop.fields.FieldModel`.
Matrices are plain sequences of row sequences.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

from .errors import DimensionError, ModelMismatchError

__all__ = [
    "rref", "rank", "Subspace", "subspace_from_generators", "subspace_sum",
    "subspace_intersect", "subspace_contains", "subspace_equal",
    "left_kernel", "mat_mul", "transpose",
]


def rref(rows: Sequence[Sequence], ncols: int, field) -> tuple[list[tuple], tuple[int, ...]]:
    """Gauss-Jordan elimination.

    Returns the nonzero rows of the reduced row echelon form and the pivot
    columns.  The pivot in each column is the first nonzero entry at or
    below the current row.
    """
    m = [[field(x) for x in row] for row in rows]
    for row in m:
        if len(row) != ncols:
            raise DimensionError(f"row of length {len(row)} in a {ncols}-column matrix")
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        for i in range(r, len(m)):
            if m[i][c]:
                break
        else:
            continue
        m[r], m[i] = m[i], m[r]
        inv = field.one / m[r][c]
        prow = m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r:
                f = m[i][c]
                if f:
                    m[i] = [a - f * b for a, b in zip(m[i], prow)]
        pivots.append(c)
        r += 1
    return [tuple(row) for row in m[:r]], tuple(pivots)


def rank(rows: Sequence[Sequence], ncols: int, field) -> int:
    return len(rref(rows, ncols, field)[1])


def transpose(rows: Sequence[Sequence], ncols: int) -> list[tuple]:
    return [tuple(row[j] for row in rows) for j in range(ncols)]


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence], field) -> list[tuple]:
    """Product of an r x k and a k x c matrix; ``b`` must have at least one row."""
    bt = list(zip(*b))
    out = []
    for row in a:
        out_row = []
        for col in bt:
            acc = field.zero
            for x, y in zip(row, col):
                if x and y:
                    acc = acc + x * y
            out_row.append(acc)
        out.append(tuple(out_row))
    return out


@dataclass(frozen=True)
class Subspace:
    """Subspace of field^n stored as its RREF basis.

    Two subspaces are equal exactly when their canonical bases coincide, so
    ``==`` and ``hash`` are structural.
    """

    field: Any
    n: int
    basis: tuple[tuple, ...]
    pivots: tuple[int, ...]

    @classmethod
    def from_generators(cls, field, n: int, gens: Sequence[Sequence] = ()) -> Subspace:
        if n < 0:
            raise DimensionError("ambient dimension must be non-negative")
        basis, pivots = rref(gens, n, field)
        return cls(field, n, tuple(basis), pivots)

    @classmethod
    def zero(cls, field, n: int) -> Subspace:
        return cls(field, n, (), ())

    @classmethod
    def full(cls, field, n: int) -> Subspace:
        rows = tuple(tuple(field.one if i == j else field.zero for j in range(n)) for i in range(n))
        return cls(field, n, rows, tuple(range(n)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def _check(self, other: Subspace):
        if self.n != other.n:
            raise DimensionError(f"ambient dimensions {self.n} and {other.n} differ")
        if not (self.field is other.field or self.field == other.field):
            raise ModelMismatchError("subspaces over different fields")

    def reduce(self, v: Sequence) -> tuple:
        """Subtract the basis combination that clears ``v`` on the pivot columns."""
        if len(v) != self.n:
            raise DimensionError(f"vector of length {len(v)} in dimension {self.n}")
        w = [self.field(x) for x in v]
        for row, p in zip(self.basis, self.pivots):
            c = w[p]
            if c:
                w = [a - c * b for a, b in zip(w, row)]
        return tuple(w)

    def contains_vector(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    def __contains__(self, v) -> bool:
        return self.contains_vector(v)

    def contains(self, other: Subspace) -> bool:
        self._check(other)
        if other.dim > self.dim:
            return False
        return all(self.contains_vector(row) for row in other.basis)

    def __ge__(self, other: Subspace) -> bool:
        return self.contains(other)

    def __le__(self, other: Subspace) -> bool:
        return other.contains(self)

    def __add__(self, other: Subspace) -> Subspace:
        self._check(other)
        return Subspace.from_generators(self.field, self.n, self.basis + other.basis)

    def __and__(self, other: Subspace) -> Subspace:
        """Zassenhaus: row-reduce [[A, A], [B, 0]]; rows with zero left half span the meet."""
        self._check(other)
        n, f = self.n, self.field
        if self.is_zero() or other.is_zero():
            return Subspace.zero(f, n)
        zeros = (f.zero,) * n
        block = [row + row for row in self.basis] + [row + zeros for row in other.basis]
        reduced, pivots = rref(block, 2 * n, f)
        meet = [row[n:] for row, p in zip(reduced, pivots) if p >= n]
        return Subspace.from_generators(f, n, meet)

    def extend(self, field) -> Subspace:
        """The same generators read over a larger field (e.g. K-subspace into D)."""
        return Subspace.from_generators(field, self.n, [[field(x) for x in row] for row in self.basis])

    def image(self, matrix: Sequence[Sequence], n_out: int) -> Subspace:
        """Row space of ``basis @ matrix.T`` -- the image under v -> matrix v."""
        if self.is_zero():
            return Subspace.zero(self.field, n_out)
        mt = [[self.field(matrix[i][j]) for i in range(n_out)] for j in range(self.n)]
        return Subspace.from_generators(self.field, n_out, mat_mul(self.basis, mt, self.field))

    def __repr__(self):
        rows = ";".join(",".join(str(x) for x in row) for row in self.basis)
        return f"Subspace(n={self.n}, basis=[{rows}])"


def subspace_from_generators(field, n: int, gens: Sequence[Sequence] = ()) -> Subspace:
    return Subspace.from_generators(field, n, gens)


def subspace_sum(s1: Subspace, s2: Subspace) -> Subspace:
    return s1 + s2


def subspace_intersect(s1: Subspace, s2: Subspace) -> Subspace:
    return s1 & s2


def subspace_contains(s1: Subspace, s2: Subspace) -> bool:
    """True iff ``s2`` is contained in ``s1``."""
    return s1.contains(s2)


def subspace_equal(s1: Subspace, s2: Subspace) -> bool:
    s1._check(s2)
    return s1.basis == s2.basis


def left_kernel(rows: Sequence[Sequence], ncols: int, field) -> Subspace:
    """Canonical basis of {c : c M = 0} for an r x ``ncols`` matrix M."""
    r = len(rows)
    aug = [
        [field(x) for x in row] + [field.one if i == j else field.zero for j in range(r)]
        for i, row in enumerate(rows)
    ]
    reduced, pivots = rref(aug, ncols + r, field)
    kernel = [row[ncols:] for row, p in zip(reduced, pivots) if p >= ncols]
    return Subspace.from_generators(field, r, kernel)
