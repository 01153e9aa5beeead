"""
Two different Hausdorff topologies on Q x Q
===========================================

Over K = Q with the ordinary absolute value the completion is R, and the
plane Q^2 carries more than one Hausdorff compatible topology.  Besides the
product topology there is the topology pulled back along
(p, q) -> p + q*sqrt(2).  Here both are built as subspaces of Q(sqrt 2)^2
and compared.
"""

from fractions import Fraction
from math import isqrt

from vectop import (
    NeighborhoodQuery, finest, in_neighborhood, is_hausdorff, model_create,
    topology_compare, topology_from_subspace,
)

# Q(sqrt 2) inside R: the root of x^2 - 2 isolated in [1, 2]
K = model_create("arch", minpoly=[-2, 0, 1], interval=(1, 2))
a = K.gen

# The product topology is the finest one: its subspace is {0}.
T_P = finest(K, 2)

# p + q*sqrt(2) vanishes on the line spanned by (sqrt 2, -1).
T_f = topology_from_subspace(K, 2, [[a, -1]])
print("subspace of T_f:", T_f.subspace)
print("T_P Hausdorff:", is_hausdorff(T_P), " T_f Hausdorff:", is_hausdorff(T_f))
print("T_P relative to T_f:", topology_compare(T_P, T_f).value)

# The point (p0, 1) with p0 = -floor(10^m sqrt 2)/10^m is close to 0 for T_f
# but never close for the product topology.
for m in (1, 3, 6):
    p0 = -Fraction(isqrt(2 * 10 ** (2 * m)), 10 ** m)  # floor(10^m sqrt 2) exactly
    y = (K(p0), K(1))
    zero = (K(0), K(0))
    eps = Fraction(1, 10 ** (m - 1))
    near_f = in_neighborhood(T_f, NeighborhoodQuery(zero, y, eps)).value
    near_p = in_neighborhood(T_P, NeighborhoodQuery(zero, y, Fraction(1))).value
    print(f"m={m}: (p0,1) in T_f-ball(eps={eps}): {near_f};  in T_P-ball(1): {near_p}")
