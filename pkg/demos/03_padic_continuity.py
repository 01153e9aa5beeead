"""
p-adic completions and continuity of linear maps
================================================

Over Q with the 5-adic absolute value, x^2 + 1 has a root i in Z_5 with
i = 2 (mod 5).  Lifting it certifies the embedding Q(i) -> Q_5, and then the
same subspace machinery decides continuity of linear maps.
"""

from vectop import (
    LinearMap, finest, hensel_lift, is_continuous, is_hausdorff, model_create,
    topology_from_subspace, valuation,
)

Q5 = model_create("padic", p=5, minpoly=[1, 0, 1], residue=2)
i = Q5.gen

print("i mod 5^k:", [hensel_lift(Q5, k) for k in range(1, 7)])
for x in (i - 2, i - 7, i + 2, Q5(50)):
    print(f"|{x}|_5 =", valuation(x).lower)

T = topology_from_subspace(Q5, 2, [[1, i]])
print("span{(1, i)} Hausdorff:", is_hausdorff(T))

swap = LinearMap.from_rows(Q5, [[0, 1], [1, 0]])
# swap sends (1, i) to (i, 1) = i (1, -i), so it lands on the conjugate line
T_conj = topology_from_subspace(Q5, 2, [[1, -i]])
print("swap: T -> T      continuous:", is_continuous(swap, T, T))
print("swap: T -> T_conj continuous:", is_continuous(swap, T, T_conj))
print("identity: finest -> T continuous:", is_continuous(LinearMap.identity(Q5, 2), finest(Q5, 2), T))
