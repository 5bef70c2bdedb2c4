"""Self-check suite behind ``flaglct verify``.

Each check is a callable that raises ``AssertionError`` on failure.  A
:class:`~flaglct.errors.CapExceeded` raised inside a check marks it skipped.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction

from .errors import CapExceeded
from .flag import (
    FlagVariety,
    anticanonical_coefficients,
    fibration,
    pairing_matrix,
    schubert_cells,
)
from .lct import QDivisor, fiber_thresholds, global_lct, lct_b_stable, scale
from .roots import Weight, build_root_system, coroot, pairing, subsets
from .weyl import (
    DEFAULT_CAP,
    duality_involution,
    enumerate_bruteforce,
    enumerate_group,
    group_order,
    inversion_count,
    longest_element,
    minimal_coset_reps,
    right_multiply,
)

DEFAULT_TYPES = ("A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2")


@dataclass
class CheckResult:
    name: str
    status: str  # "pass" | "fail" | "skipped"
    seconds: float
    detail: str = ""


def root_orbit_oracle(rs):
    """All roots as the orbit of the simple roots under simple reflections (naive BFS)."""
    seen = set(rs.simple_roots)
    frontier = list(seen)
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(rs.rank):
                u = rs.reflect(i, v)
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return seen


def check_roots(rs):
    assert root_orbit_oracle(rs) == set(rs.all_roots), "root closure differs from orbit oracle"
    assert all(tuple(-x for x in r) in set(rs.all_roots) for r in rs.all_roots), "negation symmetry"
    pos = set(rs.positive_roots)
    assert len(pos) * 2 == len(rs.all_roots)
    assert all((r in pos) != (tuple(-x for x in r) in pos) for r in rs.all_roots)
    A = rs.cartan_matrix
    assert all(A[i][i] == 2 for i in range(rs.rank))
    assert all(A[i][j] in (0, -1, -2, -3) for i in range(rs.rank) for j in range(rs.rank) if i != j)


def check_weights(rs):
    for a in range(1, rs.rank + 1):
        omega = Weight.fundamental(rs, a)
        back = Weight.from_root_coords(rs, omega.root_coords())
        assert back == omega, "weight basis round trip"
        for b in range(1, rs.rank + 1):
            bvee = coroot(rs, rs.simple_roots[b - 1])
            via_roots = sum(Fraction(c) * x for c, x in zip(rs.cartan_apply(omega.root_coords()), bvee))
            assert via_roots == int(a == b), f"<omega_{a}, alpha_{b}^vee> = {via_roots}"
    two_rho = [sum(col) for col in zip(*rs.positive_roots)]
    for b in range(1, rs.rank + 1):
        assert pairing(tuple(two_rho), coroot(rs, rs.simple_roots[b - 1])) == 2


def check_weyl_order(rs, cap=DEFAULT_CAP, allow_large=False):
    order, poly = enumerate_bruteforce(rs, cap=cap, allow_large=allow_large)
    assert order == group_order(rs), f"|W| brute force {order} != orbit chain {group_order(rs)}"
    assert poly == poly[::-1], "Poincare polynomial is not palindromic"
    assert len(poly) - 1 == len(rs.positive_roots) == longest_element(rs).length


def check_lengths(rs, cap=DEFAULT_CAP, allow_large=False):
    for w in enumerate_group(rs, cap=cap, allow_large=allow_large):
        n = inversion_count(w)
        assert n == w._length, "sign-flip length differs from BFS depth"
        for i in range(rs.rank):
            assert abs(inversion_count(right_multiply(w, i)) - n) == 1


def check_cosets(rs, cap=DEFAULT_CAP, allow_large=False):
    full = group_order(rs)
    for I in subsets(rs.rank):
        X = FlagVariety(rs, I)
        table = minimal_coset_reps(rs, I, cap=cap, allow_large=allow_large)
        assert len(table) * group_order(rs, I) == full, f"|W^P||W_P| != |W| for I={sorted(I)}"
        cells = schubert_cells(X, cap=cap, allow_large=allow_large)
        betti = cells.betti
        assert sum(betti) == len(table) and betti == betti[::-1], f"Betti numbers for I={sorted(I)}"
        reps = set(table.representatives)
        images = set()
        dim = X.dimension
        for w in table:
            u = duality_involution(w, I)
            assert u in reps and u.length == dim - w.length, f"duality for I={sorted(I)}"
            images.add(u)
        assert images == reps, "duality is not a bijection"


def check_pairings(rs):
    for I in subsets(rs.rank):
        X = FlagVariety(rs, I)
        m = pairing_matrix(X)
        r = len(X.omitted)
        assert m == [[int(i == j) for j in range(r)] for i in range(r)], f"pairing matrix for I={sorted(I)}"


def check_fibrations(rs):
    for I in subsets(rs.rank):
        X = FlagVariety(rs, I)
        for a in X.omitted:
            f = fibration(X, a)
            assert X.dimension == f.base.dimension + f.fiber_dimension


def check_anticanonical(rs):
    X = FlagVariety(rs, frozenset())
    assert set(anticanonical_coefficients(X).values()) == {2}
    assert global_lct(X).value == Fraction(1, 2)


def check_thresholds(rs, samples=50, seed=0):
    rng = random.Random(seed)
    for _ in range(samples):
        I = rng.choice(subsets(rs.rank)[:-1])
        X = FlagVariety(rs, I)
        D = QDivisor({a: Fraction(rng.randint(0, 12), rng.randint(1, 6)) for a in X.omitted})
        c = Fraction(rng.randint(1, 100), rng.randint(1, 10))
        base = lct_b_stable(X, D)
        scaled = lct_b_stable(X, scale(D, c))
        assert scaled.value * c == base.value
        assert base.klt == (base.value > 1) and base.lc == (base.value >= 1)
        assert min(fiber_thresholds(X, D).values()) == base.value


def suite(types=DEFAULT_TYPES):
    checks = []
    for name in types:
        rs = build_root_system(name)
        checks += [
            (f"{name}: roots", lambda rs=rs: check_roots(rs)),
            (f"{name}: weights", lambda rs=rs: check_weights(rs)),
            (f"{name}: weyl order", lambda rs=rs: check_weyl_order(rs)),
            (f"{name}: lengths", lambda rs=rs: check_lengths(rs)),
            (f"{name}: cosets and duality", lambda rs=rs: check_cosets(rs)),
            (f"{name}: divisor-curve pairing", lambda rs=rs: check_pairings(rs)),
            (f"{name}: fibrations", lambda rs=rs: check_fibrations(rs)),
            (f"{name}: anticanonical", lambda rs=rs: check_anticanonical(rs)),
            (f"{name}: thresholds", lambda rs=rs: check_thresholds(rs)),
        ]
    return checks


def run(types=DEFAULT_TYPES):
    results = []
    for name, fn in suite(types):
        t = time.perf_counter()
        try:
            fn()
            status, detail = "pass", ""
        except CapExceeded as exc:
            status, detail = "skipped", str(exc)
        except AssertionError as exc:
            status, detail = "fail", str(exc) or "assertion failed"
        results.append(CheckResult(name, status, time.perf_counter() - t, detail))
    return results
