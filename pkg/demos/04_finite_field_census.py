"""
Counting topologies over a finite field
=======================================

For a finite field with the discrete topology, compatible topologies on F_q^n
are in bijection with subspaces, so their number is a sum of Gaussian
binomials.  For tiny cases every family of subsets can be checked directly.
"""

from vectop.finite import (
    count_subspaces, enumerate_compatible_topologies, enumerate_subspaces,
    strip_topology_finite,
)

for q in (2, 3, 5):
    print(f"q={q}:", [count_subspaces(q, n) for n in range(6)])

for p, n in [(2, 1), (3, 1), (2, 2)]:
    tops = enumerate_compatible_topologies(p, n)
    strips = {strip_topology_finite(p, n, s).opens for s in enumerate_subspaces(p, n)}
    same = {t.opens for t in tops} == strips
    print(f"F_{p}^{n}: {len(tops)} compatible topologies; "
          f"all are subspace-saturated topologies: {same}")
    for t in tops:
        print("   opens:", sorted(bin(u)[2:].zfill(p ** n) for u in t.opens))
