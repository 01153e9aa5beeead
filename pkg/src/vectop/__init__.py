"""Compatible topologies on finite-dimensional vector spaces over valued fields.

Every compatible topology on K^n is identified with a subspace of D^n, D a
computable subfield of the completion of K; lattice operations, the
Hausdorff test, continuity of linear maps and neighbourhood membership are
then exact linear algebra.
"""

from .arith import QQ, Poly, PrimeField, PrimeFieldElem, Rat
from .errors import (
    CapExceededError, DimensionError, ModelError, ModelMismatchError,
    VectopError, ZeroDivisorError,
)
from .fields import (
    ArchimedeanModel, FieldElement, FieldModel, PadicModel, PrimeFieldModel,
    ValEnclosure, decompose, hensel_lift, model_create, refine_interval, valuation,
)
from .linalg import (
    Subspace, left_kernel, rref, subspace_contains, subspace_equal,
    subspace_from_generators, subspace_intersect, subspace_sum,
)
from .topology import (
    CompatibleTopology, LinearMap, NeighborhoodQuery, Relation, Verdict,
    closure_of_zero, corresponding_subspace, finest, in_neighborhood, indiscrete,
    is_continuous, is_hausdorff, q_linear_independent, rational_points,
    separated_quotient, topology_compare, topology_from_subspace, topology_join,
    topology_meet,
)

__version__ = "0.1.0"
