"""Brute-force ground truth over F_p^n.

Points of F_p^n are numbered by their base-p digits (coordinate 0 is the
least significant digit).  A set of points is an int bitmask and a
topology is a frozenset of such masks.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product

from .arith import PrimeField, is_prime
from .errors import CapExceededError
from .linalg import Subspace

__all__ = [
    "FiniteTopology", "count_subspaces", "gaussian_binomial",
    "enumerate_subspaces", "enumerate_compatible_topologies",
    "strip_topology_finite", "closure_of_zero_finite",
    "zero_neighborhood_core", "subspace_points", "SUBSPACE_CAP",
    "TOPOLOGY_INSTANCES",
]

SUBSPACE_CAP = 5 ** 4
TOPOLOGY_INSTANCES = {(2, 1), (3, 1), (2, 2)}


def _check_prime(q):
    if not is_prime(q):
        raise ValueError(f"{q} is not prime")


def gaussian_binomial(n: int, d: int, q: int) -> int:
    """Number of d-dimensional subspaces of F_q^n."""
    def prod(k):
        out = 1
        for i in range(1, k + 1):
            out *= q ** i - 1
        return out
    num, den = prod(n), prod(d) * prod(n - d)
    assert num % den == 0
    return num // den


def count_subspaces(q: int, n: int) -> int:
    _check_prime(q)
    if n < 0:
        raise ValueError("dimension must be non-negative")
    return sum(gaussian_binomial(n, d, q) for d in range(n + 1))


@dataclass(frozen=True)
class FiniteTopology:
    p: int
    n: int
    opens: frozenset

    @property
    def point_count(self) -> int:
        return self.p ** self.n

    @property
    def full(self) -> int:
        return (1 << self.point_count) - 1


def _points(p, n):
    return [tuple((i // p ** k) % p for k in range(n)) for i in range(p ** n)]


def _index(v, p):
    return sum(int(c) * p ** k for k, c in enumerate(v))


def _tables(p, n):
    pts = _points(p, n)
    add = [[_index([(a + b) % p for a, b in zip(u, v)], p) for v in pts] for u in pts]
    scale = [[_index([(c * a) % p for a in u], p) for u in pts] for c in range(p)]
    return pts, add, scale


def enumerate_subspaces(p: int, n: int) -> list[Subspace]:
    """All subspaces of F_p^n, found by growing spans one vector at a time.

    Independent of the counting formula: spans are built as explicit point
    sets and deduplicated as sets.  Order: by dimension, then by canonical
    basis.
    """
    _check_prime(p)
    if p ** n > SUBSPACE_CAP:
        raise CapExceededError(f"p^n = {p ** n} exceeds the enumeration cap {SUBSPACE_CAP}")
    pts, add, scale = _tables(p, n)
    zero = frozenset([0])
    seen = {zero: ()}
    layer = [zero]
    while layer:
        nxt = []
        for span in layer:
            covered = set(span)
            for v in range(len(pts)):
                if v in covered:
                    continue
                new = frozenset(add[u][scale[c][v]] for u in span for c in range(p))
                covered |= new
                if new not in seen:
                    seen[new] = seen[span] + (v,)
                    nxt.append(new)
        layer = nxt
    field = PrimeField(p)
    subs = [Subspace.from_generators(field, n, [pts[v] for v in gens]) for gens in seen.values()]
    return sorted(subs, key=lambda s: (s.dim, [[int(x) for x in row] for row in s.basis]))


def subspace_points(p: int, n: int, s: Subspace) -> int:
    """Bitmask of the points lying in ``s``."""
    mask = 0
    for coeffs in product(range(p), repeat=s.dim):
        v = [0] * n
        for c, row in zip(coeffs, s.basis):
            for j, x in enumerate(row):
                v[j] = (v[j] + c * int(x)) % p
        mask |= 1 << _index(v, p)
    return mask


def strip_topology_finite(p: int, n: int, s: Subspace) -> FiniteTopology:
    """Topology whose opens are the S-saturated sets (unions of cosets of S)."""
    pts, add, _ = _tables(p, n)
    smask = subspace_points(p, n, s)
    members = [i for i in range(len(pts)) if smask >> i & 1]
    cosets, assigned = [], 0
    for x in range(len(pts)):
        if assigned >> x & 1:
            continue
        c = 0
        for y in members:
            c |= 1 << add[x][y]
        cosets.append(c)
        assigned |= c
    opens = set()
    for choice in product((0, 1), repeat=len(cosets)):
        u = 0
        for bit, c in zip(choice, cosets):
            if bit:
                u |= c
        opens.add(u)
    return FiniteTopology(p, n, frozenset(opens))


def _image(mask, table_row_for, npts):
    out = 0
    for x in range(npts):
        if mask >> x & 1:
            out |= 1 << table_row_for(x)
    return out


def _is_compatible(opens: list[int], p, npts, add, scale) -> bool:
    opens_set = set(opens)
    for u in opens:
        for v in opens:
            if u | v not in opens_set or u & v not in opens_set:
                return False
    # addition: each open U containing x+y has opens V containing x, W containing y with V+W in U
    sums = {}
    for v in opens:
        for w in opens:
            s = 0
            for x in range(npts):
                if v >> x & 1:
                    for y in range(npts):
                        if w >> y & 1:
                            s |= 1 << add[x][y]
            sums[v, w] = s
    for x in range(npts):
        for y in range(npts):
            z = add[x][y]
            vs = [v for v in opens if v >> x & 1]
            ws = [w for w in opens if w >> y & 1]
            for u in opens:
                if u >> z & 1 and not any(sums[v, w] & ~u == 0 for v in vs for w in ws):
                    return False
    # scalar multiplication with K discrete: a.x in U open needs an open V containing x with a.V in U
    for a in range(p):
        images = {v: _image(v, lambda x: scale[a][x], npts) for v in opens}
        for x in range(npts):
            ax = scale[a][x]
            vs = [v for v in opens if v >> x & 1]
            for u in opens:
                if u >> ax & 1 and not any(images[v] & ~u == 0 for v in vs):
                    return False
    return True


def _scan(args):
    p, n, start, stop = args
    pts, add, scale = _tables(p, n)
    npts = len(pts)
    full = (1 << npts) - 1
    nsub = 1 << npts
    found = []
    for fam in range(start, stop):
        # bit k of fam says whether subset k is open
        if not (fam & 1 and fam >> full & 1):
            continue
        opens = [k for k in range(nsub) if fam >> k & 1]
        if _is_compatible(opens, p, npts, add, scale):
            found.append(frozenset(opens))
    return found


def enumerate_compatible_topologies(p: int, n: int, workers: int = 1) -> list[FiniteTopology]:
    """Every family of subsets of F_p^n satisfying the open-set axioms and
    making addition and scalar multiplication continuous.

    The 2^(p^n) candidate families are split into contiguous ranges; with
    ``workers > 1`` ranges are scanned in parallel and merged in range order.
    """
    if (p, n) not in TOPOLOGY_INSTANCES:
        raise CapExceededError(f"(p, n) = ({p}, {n}) is not one of {sorted(TOPOLOGY_INSTANCES)}")
    total = 1 << (1 << p ** n)
    chunks = max(workers, 1) * 4
    step = -(-total // chunks)
    ranges = [(p, n, lo, min(lo + step, total)) for lo in range(0, total, step)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as ex:
            parts = list(ex.map(_scan, ranges))
    else:
        parts = [_scan(r) for r in ranges]
    return [FiniteTopology(p, n, fam) for part in parts for fam in part]


def zero_neighborhood_core(t: FiniteTopology) -> int:
    """Intersection of all open sets containing the origin (point 0)."""
    core = t.full
    for u in t.opens:
        if u & 1:
            core &= u
    return core


def closure_of_zero_finite(t: FiniteTopology) -> int:
    """Points x every open neighbourhood of which contains the origin."""
    mask = 0
    for x in range(t.point_count):
        if all(u & 1 for u in t.opens if u >> x & 1):
            mask |= 1 << x
    return mask
