"""Exit criteria.  Each test prints one PASS/FAIL line (visible without ``-s``)."""

import random
import time
from fractions import Fraction as F

import pytest

from vectop.arith import QQ
from vectop.fields import model_create
from vectop.finite import (
    closure_of_zero_finite, count_subspaces, enumerate_compatible_topologies,
    enumerate_subspaces, strip_topology_finite, subspace_points,
)
from vectop.linalg import Subspace
from vectop.topology import (
    LinearMap, NeighborhoodQuery, Relation, Verdict, closure_of_zero,
    corresponding_subspace, finest, in_neighborhood, is_continuous, is_hausdorff,
    q_linear_independent, topology_compare, topology_from_subspace, topology_join,
    topology_meet,
)


@pytest.fixture
def report(capsys):
    def _report(name, ok, detail=""):
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} [{name}] {detail}".rstrip())
        assert ok, detail
    return _report


def sqrt2_model():
    return model_create("arch", minpoly=[-2, 0, 1], interval=(1, 2))


def rand_rat(rng, span=4):
    return F(rng.randint(-span, span), rng.choice([1, 1, 2, 3]))


def rand_elem(model, rng, rational=False):
    if rational or rng.random() < 0.3:
        return model(rand_rat(rng))
    return model.from_coords([rand_rat(rng), rand_rat(rng)])


def rand_subspace(model, rng, n):
    rows = []
    for _ in range(rng.randint(0, n)):
        rational = rng.random() < 0.25
        rows.append([rand_elem(model, rng, rational) for _ in range(n)])
    return Subspace.from_generators(model, n, rows)


# 1 ---------------------------------------------------------------------------

def test_counting_equivalence(report):
    start = time.perf_counter()
    failures = []
    for q in (2, 3, 5):
        for n in range(5):
            if q ** n > 625:
                continue
            if count_subspaces(q, n) != len(enumerate_subspaces(q, n)):
                failures.append((q, n))
    specific = (count_subspaces(2, 2), count_subspaces(3, 2), count_subspaces(2, 3)) == (5, 6, 16)
    elapsed = time.perf_counter() - start
    report("counting equivalence", not failures and specific and elapsed < 10,
           f"mismatches={failures} specific={specific} time={elapsed:.2f}s")


# 2 ---------------------------------------------------------------------------

def test_bijection_at_finite_scale(report):
    expected = {(2, 1): 2, (3, 1): 2, (2, 2): 5}
    problems = []
    timings = {}
    for (p, n), count in expected.items():
        start = time.perf_counter()
        tops = enumerate_compatible_topologies(p, n)
        timings[p, n] = time.perf_counter() - start
        if len(tops) != count:
            problems.append(f"({p},{n}) gave {len(tops)}")
        strips = {strip_topology_finite(p, n, s).opens: s for s in enumerate_subspaces(p, n)}
        if {t.opens for t in tops} != set(strips) or len(strips) != count:
            problems.append(f"({p},{n}) set mismatch")
            continue
        for t in tops:
            if closure_of_zero_finite(t) != subspace_points(p, n, strips[t.opens]):
                problems.append(f"({p},{n}) closure mismatch")
    ok = not problems and timings[2, 2] < 120
    report("bijection at finite scale", ok, f"problems={problems} time(2,2)={timings[2, 2]:.2f}s")


# 3 ---------------------------------------------------------------------------

def test_worked_examples_over_q_sqrt2(report):
    k = sqrt2_model()
    a = k.gen
    start = time.perf_counter()
    line = topology_from_subspace(k, 2, [[1, a]])
    rat = topology_from_subspace(k, 2, [[1, F(1, 2)]])
    checks = {
        "hausdorff(1,sqrt2)": is_hausdorff(line),
        "not hausdorff(1,1/2)": not is_hausdorff(rat),
        "closure(1,1/2)": closure_of_zero(rat) == Subspace.from_generators(QQ, 2, [[1, F(1, 2)]]),
        "qli(1,sqrt2)": q_linear_independent([k(1), a]),
    }
    elapsed = time.perf_counter() - start
    report("worked examples over Q(sqrt2)", all(checks.values()) and elapsed < 1,
           f"{checks} time={elapsed:.3f}s")


# 4 ---------------------------------------------------------------------------

def test_main_theorem_property_suite(report):
    k = sqrt2_model()
    rng = random.Random(20261015)
    failures = []
    finer_eq = {Relation.FINER, Relation.EQUAL}
    for case in range(500):
        n = rng.randint(1, 4)
        s1, s2, s3 = (rand_subspace(k, rng, n) for _ in range(3))
        t1, t2, t3 = (topology_from_subspace(k, n, s.basis) for s in (s1, s2, s3))

        def check(name, ok):
            if not ok:
                failures.append((case, name))

        for s, t in ((s1, t1), (s2, t2), (s3, t3)):
            check("round-trip", corresponding_subspace(t) == s)
        big = s1 + s2
        check("order inversion", topology_compare(t1, topology_from_subspace(k, n, big.basis)) in finer_eq)
        rel = topology_compare(t1, t2)
        want = {(True, True): Relation.EQUAL, (True, False): Relation.FINER,
                (False, True): Relation.COARSER, (False, False): Relation.INCOMPARABLE}
        check("compare", rel is want[s2.contains(s1), s1.contains(s2)])
        check("commutative", s1 + s2 == s2 + s1 and s1 & s2 == s2 & s1)
        check("associative", (s1 + s2) + s3 == s1 + (s2 + s3) and (s1 & s2) & s3 == s1 & (s2 & s3))
        check("absorption", s1 + (s1 & s2) == s1 and s1 & (s1 + s2) == s1)
        check("idempotent", s1 + s1 == s1 and s1 & s1 == s1)
        low = s1 & s3
        check("modular", low + (s2 & s3) == (low + s2) & s3)
        check("dimension", s1.dim + s2.dim == (s1 + s2).dim + (s1 & s2).dim)
        j, m = topology_join(t1, t2), topology_meet(t1, t2)
        check("join=intersection", j.subspace == s1 & s2)
        check("meet=sum", m.subspace == s1 + s2)
        check("join is upper bound", topology_compare(j, t1) in finer_eq and topology_compare(j, t2) in finer_eq)
        if topology_compare(t3, t1) in finer_eq and topology_compare(t3, t2) in finer_eq:
            check("join is least", topology_compare(t3, j) in finer_eq)
        check("hausdorff consistency", is_hausdorff(t1) == closure_of_zero(t1).is_zero())
    report("main-theorem property suite (500 cases)", not failures, f"failures={failures[:5]}")


# 5 ---------------------------------------------------------------------------

def rand_map(k, rng, n_out, n_in):
    return LinearMap.from_rows(k, [[k(rand_rat(rng, 3)) for _ in range(n_in)] for _ in range(n_out)], n_in)


def test_continuity_criterion_suite(report):
    k = sqrt2_model()
    a = k.gen
    rng = random.Random(7)
    failures = []
    ident = LinearMap.identity(k, 2)
    line = topology_from_subspace(k, 2, [[1, a]])
    fixed = (is_continuous(ident, line, line), is_continuous(ident, finest(k, 2), line),
             not is_continuous(ident, line, finest(k, 2)))
    if not all(fixed):
        failures.append(("identity cases", fixed))
    for case in range(200):
        nx, ny, nz = (rng.randint(1, 3) for _ in range(3))
        l1, l2 = rand_map(k, rng, ny, nx), rand_map(k, rng, nz, ny)
        sx = rand_subspace(k, rng, nx)
        sy = sx.image(l1.matrix, ny) + rand_subspace(k, rng, ny)
        sz = sy.image(l2.matrix, nz) + rand_subspace(k, rng, nz)
        tx, ty, tz = (topology_from_subspace(k, s.n, s.basis) for s in (sx, sy, sz))
        if not is_continuous(LinearMap.identity(k, nx), tx, tx):
            failures.append((case, "reflexive"))
        if not (is_continuous(l1, tx, ty) and is_continuous(l2, ty, tz)):
            failures.append((case, "constructed pair"))
        if not is_continuous(l2 @ l1, tx, tz):
            failures.append((case, "composition"))
        finer_x = topology_from_subspace(k, nx, sx.basis[:rng.randint(0, sx.dim)])
        coarser_y = topology_from_subspace(k, ny, (sy + rand_subspace(k, rng, ny)).basis)
        if not is_continuous(l1, finer_x, coarser_y):
            failures.append((case, "monotone"))
        # arbitrary target: compare against the dimension test dim(S_Y + L S_X) == dim S_Y
        ry = rand_subspace(k, rng, ny)
        try_t = topology_from_subspace(k, ny, ry.basis)
        oracle = (ry + sx.image(l1.matrix, ny)).dim == ry.dim
        if is_continuous(l1, tx, try_t) != oracle:
            failures.append((case, "oracle"))
    report("continuity criterion suite (200 triples)", not failures, f"failures={failures[:5]}")


# 6 ---------------------------------------------------------------------------

def test_hensel_certification(report):
    k = model_create("padic", p=5, minpoly=[1, 0, 1], residue=2)
    first = [k.hensel_lift(j) for j in (1, 2, 3, 4)]
    lifts_ok = all((k.hensel_lift(j) ** 2 + 1) % 5 ** j == 0 for j in range(1, 31))
    report("Hensel certification", first == [2, 7, 57, 182] and lifts_ok,
           f"first={first} m(a_k)=0 mod 5^k for k<=30: {lifts_ok}")


# 7 ---------------------------------------------------------------------------

def _query(k, x, y, eps, cap=64):
    return NeighborhoodQuery(tuple(k(v) for v in x), tuple(k(v) for v in y), F(eps), cap)


def test_neighborhood_soundness(report):
    k = sqrt2_model()
    a = k.gen
    rng = random.Random(1234)
    failures = []
    undecided = 0
    for case in range(100):
        if case % 5 == 0:
            # |r1 - sqrt2| + |r2 - sqrt2| = r1 - r2 exactly: a genuine boundary
            t = topology_from_subspace(k, 3, [[1, a, a]])
            r1 = F(rng.randint(150, 300), 100)
            r2 = F(rng.randint(0, 140), 100)
            x = [rand_rat(rng) for _ in range(3)]
            y = [x[0] + 1, x[1] + r1, x[2] + r2]
            eps = r1 - r2
        else:
            n = rng.randint(1, 3)
            s = rand_subspace(k, rng, n)
            t = topology_from_subspace(k, n, s.basis)
            x = [rand_rat(rng) for _ in range(n)]
            y = [rand_rat(rng) for _ in range(n)]
            eps = F(rng.randint(1, 40), 8)
        v = in_neighborhood(t, _query(k, x, y, eps))
        shift = [rand_rat(rng) for _ in x]
        moved = in_neighborhood(t, _query(k, [p + q for p, q in zip(x, shift)],
                                          [p + q for p, q in zip(y, shift)], eps))
        if moved is not v:
            failures.append((case, "translation"))
        for z in closure_of_zero(t).basis:
            c = rand_rat(rng)
            if in_neighborhood(t, _query(k, x, [p + c * q for p, q in zip(y, z)], eps)) is not v:
                failures.append((case, "closure-of-zero"))
        if v is Verdict.TRUE and in_neighborhood(t, _query(k, x, y, eps * 2)) is not Verdict.TRUE:
            failures.append((case, "monotone up"))
        if v is Verdict.FALSE and in_neighborhood(t, _query(k, x, y, eps / 2)) is not Verdict.FALSE:
            failures.append((case, "monotone down"))
        if v is Verdict.UNDECIDED:
            undecided += 1
            up = in_neighborhood(t, _query(k, x, y, eps + F(1, 1000)))
            down = in_neighborhood(t, _query(k, x, y, eps - F(1, 1000)))
            if (up, down) != (Verdict.TRUE, Verdict.FALSE):
                failures.append((case, "perturbation", up, down))
    report("neighborhood soundness (100 queries)", not failures and undecided >= 20,
           f"undecided={undecided} failures={failures[:5]}")
