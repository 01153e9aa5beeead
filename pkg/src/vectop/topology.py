"""Compatible topologies on K^n, represented by subspaces of D^n.

A compatible topology T on X = K^n is stored as the subspace S of the
scalar-extended space it corresponds to: S = {0} is the finest (norm)
topology, S = D^n the indiscrete one.  Coarser topologies have larger
subspaces, so every lattice and order question about topologies is a
linear-algebra question about S with the order reversed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionError, ModelError, ModelMismatchError
from .fields import FieldElement, FieldModel, ValEnclosure
from .linalg import Subspace, left_kernel, rank

__all__ = [
    "CompatibleTopology", "LinearMap", "NeighborhoodQuery", "Relation",
    "Verdict", "topology_from_subspace", "corresponding_subspace",
    "topology_join", "topology_meet", "topology_compare", "rational_points",
    "is_hausdorff", "closure_of_zero", "separated_quotient", "is_continuous",
    "in_neighborhood", "q_linear_independent", "finest", "indiscrete",
]

DEFAULT_PRECISION_CAP = 64


class Relation(str, enum.Enum):
    EQUAL = "equal"
    FINER = "finer"
    COARSER = "coarser"
    INCOMPARABLE = "incomparable"


class Verdict(str, enum.Enum):
    TRUE = "true"
    FALSE = "false"
    UNDECIDED = "boundary-undecidable"

    def __bool__(self):
        if self is Verdict.UNDECIDED:
            raise ValueError("boundary-undecidable verdict has no truth value")
        return self is Verdict.TRUE


@dataclass(frozen=True)
class CompatibleTopology:
    model: FieldModel
    n: int
    subspace: Subspace

    def __post_init__(self):
        if self.subspace.n != self.n:
            raise DimensionError(f"subspace lives in dimension {self.subspace.n}, not {self.n}")
        if self.subspace.field is not self.model:
            raise ModelMismatchError("subspace is not over the topology's field model")

    @property
    def S(self) -> Subspace:
        return self.subspace

    def __repr__(self):
        return f"CompatibleTopology(n={self.n}, S={self.subspace!r})"


@dataclass(frozen=True)
class LinearMap:
    """K-linear map K^n_in -> K^n_out given by an n_out x n_in matrix."""

    model: FieldModel
    matrix: tuple[tuple, ...]
    n_in: int
    n_out: int

    @classmethod
    def from_rows(cls, model: FieldModel, rows: Sequence[Sequence], n_in: int | None = None) -> LinearMap:
        rows = [[model(x) for x in row] for row in rows]
        if n_in is None:
            if not rows:
                raise DimensionError("cannot infer the domain dimension of an empty matrix")
            n_in = len(rows[0])
        for row in rows:
            if len(row) != n_in:
                raise DimensionError("ragged matrix")
            for x in row:
                if not model.in_base(x):
                    raise ModelError(f"map entry {x} is not in the base field")
        return cls(model, tuple(tuple(r) for r in rows), n_in, len(rows))

    @classmethod
    def identity(cls, model: FieldModel, n: int) -> LinearMap:
        return cls.from_rows(model, [[1 if i == j else 0 for j in range(n)] for i in range(n)], n)

    def __matmul__(self, other: LinearMap) -> LinearMap:
        """Composition ``self o other``."""
        if other.n_out != self.n_in:
            raise DimensionError("cannot compose maps of mismatched dimensions")
        z = self.model.zero
        rows = []
        for i in range(self.n_out):
            row = []
            for j in range(other.n_in):
                acc = z
                for k in range(self.n_in):
                    acc = acc + self.matrix[i][k] * other.matrix[k][j]
                row.append(acc)
            rows.append(row)
        return LinearMap.from_rows(self.model, rows, other.n_in)


@dataclass(frozen=True)
class NeighborhoodQuery:
    center: tuple
    point: tuple
    eps: Fraction
    cap: int = DEFAULT_PRECISION_CAP

    def __post_init__(self):
        if not Fraction(self.eps) > 0:
            raise ValueError("radius must be positive")
        if len(self.center) != len(self.point):
            raise DimensionError("center and point have different lengths")
        if self.cap < 1:
            raise ValueError("precision cap must be positive")


def _same(t1: CompatibleTopology, t2: CompatibleTopology):
    if t1.model is not t2.model:
        raise ModelMismatchError("topologies over different field models")
    if t1.n != t2.n:
        raise DimensionError(f"dimensions {t1.n} and {t2.n} differ")


def topology_from_subspace(model: FieldModel, n: int, gens: Sequence[Sequence] = ()) -> CompatibleTopology:
    """The topology whose corresponding subspace is spanned by ``gens``."""
    for g in gens:
        if len(g) != n:
            raise DimensionError(f"generator of length {len(g)} in dimension {n}")
    return CompatibleTopology(model, n, Subspace.from_generators(model, n, gens))


def finest(model: FieldModel, n: int) -> CompatibleTopology:
    return CompatibleTopology(model, n, Subspace.zero(model, n))


def indiscrete(model: FieldModel, n: int) -> CompatibleTopology:
    return CompatibleTopology(model, n, Subspace.full(model, n))


def corresponding_subspace(t: CompatibleTopology) -> Subspace:
    return t.subspace


def topology_join(t1: CompatibleTopology, t2: CompatibleTopology) -> CompatibleTopology:
    """Coarsest topology finer than both: intersect the subspaces."""
    _same(t1, t2)
    return CompatibleTopology(t1.model, t1.n, t1.subspace & t2.subspace)


def topology_meet(t1: CompatibleTopology, t2: CompatibleTopology) -> CompatibleTopology:
    _same(t1, t2)
    return CompatibleTopology(t1.model, t1.n, t1.subspace + t2.subspace)


def topology_compare(t1: CompatibleTopology, t2: CompatibleTopology) -> Relation:
    """How ``t1`` relates to ``t2``; ``FINER`` means t1 has more open sets."""
    _same(t1, t2)
    s1, s2 = t1.subspace, t2.subspace
    le, ge = s2.contains(s1), s1.contains(s2)
    if le and ge:
        return Relation.EQUAL
    if le:
        return Relation.FINER
    if ge:
        return Relation.COARSER
    return Relation.INCOMPARABLE


def rational_points(s: Subspace) -> Subspace:
    """S intersected with K^n, as a subspace over the base field K.

    With B the RREF basis of S, any v in S is c B where c holds v's pivot
    coordinates; for v rational c must be rational and the a^k parts of
    c B must vanish for k >= 1.
    """
    model = s.field
    base = model.base
    d = model.degree
    if s.is_zero():
        return Subspace.zero(base, s.n)
    b0 = [[x.coords[0] for x in row] for row in s.basis]
    block = [
        [x.coords[k] for k in range(1, d) for x in row]
        for row in s.basis
    ]
    coeffs = left_kernel(block, s.n * (d - 1), base)
    gens = []
    for c in coeffs.basis:
        gens.append([sum((ci * row[j] for ci, row in zip(c, b0)), base.zero) for j in range(s.n)])
    return Subspace.from_generators(base, s.n, gens)


def closure_of_zero(t: CompatibleTopology) -> Subspace:
    """The K-subspace cl{0} of X, i.e. the rational points of S."""
    return rational_points(t.subspace)


def is_hausdorff(t: CompatibleTopology) -> bool:
    return closure_of_zero(t).is_zero()


def separated_quotient(t: CompatibleTopology) -> tuple[int, CompatibleTopology]:
    """Quotient of X by cl{0}, with coordinates the non-pivot columns of cl{0}."""
    z = closure_of_zero(t)
    model = t.model
    keep = [j for j in range(t.n) if j not in set(z.pivots)]
    zd = z.extend(model)
    rows = [zd.reduce(row) for row in t.subspace.basis]
    gens = [[row[j] for j in keep] for row in rows]
    return len(keep), topology_from_subspace(model, len(keep), gens)


def is_continuous(lmap: LinearMap, tx: CompatibleTopology, ty: CompatibleTopology) -> bool:
    """L is continuous iff its extension carries S_X into S_Y."""
    if lmap.model is not tx.model or tx.model is not ty.model:
        raise ModelMismatchError("map and topologies use different field models")
    if lmap.n_in != tx.n or lmap.n_out != ty.n:
        raise DimensionError(
            f"map {lmap.n_in}->{lmap.n_out} does not fit topologies on dimensions {tx.n}->{ty.n}")
    img = tx.subspace.image(lmap.matrix, lmap.n_out)
    return ty.subspace.contains(img)


def in_neighborhood(t: CompatibleTopology, q: NeighborhoodQuery) -> Verdict:
    """Decide whether ``q.point`` lies in the basic eps-neighborhood of ``q.center``.

    The basic neighborhood is {y : ||P(y - x)|| < eps}, where P kills S along
    the coordinate complement of S's pivot columns and the norm is the sum of
    absolute values of coordinates.
    """
    model, s = t.model, t.subspace
    if len(q.center) != t.n:
        raise DimensionError(f"vectors of length {len(q.center)} in dimension {t.n}")
    diff = []
    for a, b in zip(q.point, q.center):
        a, b = model(a), model(b)
        if not (model.in_base(a) and model.in_base(b)):
            raise ModelError("neighborhood queries take points of K^n")
        diff.append(a - b)
    eps = Fraction(q.eps)
    if rational_points(s).extend(model).contains_vector(diff):
        return Verdict.TRUE
    w = [x for x in s.reduce(diff) if x]
    for precision in range(1, q.cap + 1):
        total = ValEnclosure.point(0)
        for x in w:
            total = total + model.valuation(x, precision)
        if total.upper < eps:
            return Verdict.TRUE
        if total.lower >= eps:
            return Verdict.FALSE
    return Verdict.UNDECIDED


def q_linear_independent(elems: Sequence[FieldElement]) -> bool:
    """Whether the elements are linearly independent over the base field."""
    if not elems:
        return True
    model = elems[0].model
    for e in elems:
        if e.model is not model:
            raise ModelMismatchError("elements of different field models")
    rows = [e.coords for e in elems]
    return rank(rows, model.degree, model.base) == len(elems)
