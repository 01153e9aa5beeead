"""
The lattice of compatible topologies
====================================

Finer topologies have smaller subspaces.  Joins intersect subspaces, meets
add them, and non-Hausdorff topologies split off their closure of zero.
"""

from fractions import Fraction

from vectop import (
    closure_of_zero, is_hausdorff, separated_quotient, topology_compare,
    topology_from_subspace, topology_join, topology_meet, model_create,
)

K = model_create("arch", minpoly=[-2, 0, 1], interval=(1, 2))
a = K.gen

T1 = topology_from_subspace(K, 3, [[1, a, 0]])
T2 = topology_from_subspace(K, 3, [[1, 0, a]])
print("T1 vs T2:", topology_compare(T1, T2).value)

# the join is finer than both, the meet coarser than both
J, M = topology_join(T1, T2), topology_meet(T1, T2)
print("join subspace:", J.subspace, "| meet subspace:", M.subspace)
print("join vs T1:", topology_compare(J, T1).value, "| meet vs T1:", topology_compare(M, T1).value)

# The meet's plane contains (1, a, 0) - (1, 0, a) = a (0, 1, -1): a rational
# direction, so the meet is not Hausdorff.
print("meet Hausdorff:", is_hausdorff(M))
print("closure of zero in the meet:", closure_of_zero(M))

dim, Q = separated_quotient(M)
print(f"separated quotient: dimension {dim}, subspace {Q.subspace}, Hausdorff {is_hausdorff(Q)}")

# A rational line gives the most degenerate non-Hausdorff case.
R = topology_from_subspace(K, 2, [[1, Fraction(1, 2)]])
print("closure of zero for span{(1, 1/2)}:", closure_of_zero(R))
