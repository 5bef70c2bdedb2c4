from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from flaglct import DomainError
from flaglct.flag import FlagVariety, fibration, flag_variety
from flaglct.lct import (
    EXACT,
    INFINITE,
    LOWER_BOUND,
    QDivisor,
    fiber_thresholds,
    global_lct,
    hwang_fiber_threshold,
    lct_b_stable,
    lct_lower_bound_general,
    parse_rational,
    scale,
)
from flaglct.roots import build_root_system, subsets, valid_types

ALL_TYPES = [f"{t}{n}" for t, n in valid_types()]


def test_b_stable_examples():
    X = flag_variety("A3", levi=[])
    r = lct_b_stable(X, QDivisor({1: 2, 2: 2, 3: 2}))
    assert r.value == Fraction(1, 2) and r.exactness == EXACT
    assert not r.klt and not r.lc
    r = lct_b_stable(X, QDivisor({}))
    assert r.value is INFINITE and r.klt and r.lc
    r = lct_b_stable(X, QDivisor({1: Fraction(1, 3), 2: Fraction(3, 4), 3: Fraction(2, 3)}))
    assert r.value == Fraction(4, 3) and r.klt and r.lc


def test_negative_coefficient_rejected():
    with pytest.raises(DomainError, match="effective"):
        QDivisor({1: Fraction(-1, 2)})


def test_divisor_must_live_on_omitted_nodes():
    with pytest.raises(DomainError):
        lct_b_stable(flag_variety("A3", omit=[2]), QDivisor({1: 1}))


def test_lower_bound_examples():
    X = flag_variety("B3", levi=[])
    r = lct_lower_bound_general(X, QDivisor({1: Fraction(3, 4), 3: Fraction(1, 2)}))
    assert (r.value, r.exactness, r.klt) == (Fraction(4, 3), LOWER_BOUND, True)
    r = lct_lower_bound_general(X, QDivisor({2: 1}))
    assert r.value == 1 and not r.klt and r.lc
    assert lct_lower_bound_general(X, QDivisor({})).value is INFINITE


def test_boundary_verdicts():
    X = flag_variety("A1", levi=[])
    one = lct_b_stable(X, QDivisor({1: 1}))
    assert one.value == 1 and one.lc and not one.klt


def test_scale_examples():
    X = flag_variety("A2", levi=[])
    D = QDivisor({1: Fraction(3, 4), 2: Fraction(1, 5)})
    assert lct_b_stable(X, scale(D, 1)) == lct_b_stable(X, D)
    assert lct_b_stable(X, scale(D, 2)).value == Fraction(2, 3)
    for bad in (0, -1, Fraction(-1, 3)):
        with pytest.raises(DomainError):
            scale(D, bad)
    assert lct_b_stable(X, scale(QDivisor({}), 3)).value is INFINITE


def test_global_lct_examples():
    for name in ALL_TYPES:
        g = global_lct(flag_variety(name, levi=[]))
        assert g.value == Fraction(1, 2) and not g.derived_extension
    assert global_lct(flag_variety("A1", levi=[])).value == Fraction(1, 2)
    g = global_lct(flag_variety("A3", omit=[2]))
    assert g.value == Fraction(1, 4) and g.derived_extension
    assert global_lct(flag_variety("A3", levi=[1, 2, 3])).value is INFINITE


def test_fiber_threshold_formula():
    assert hwang_fiber_threshold("A1", 1) == 1
    assert hwang_fiber_threshold("A3", 5) == Fraction(1, 5)
    for bad in (0, -2, Fraction(1, 2), True):
        with pytest.raises(DomainError):
            hwang_fiber_threshold("A1", bad)


def test_fiber_threshold_composition():
    X = flag_variety("A3", levi=[])
    th = fiber_thresholds(X, QDivisor({2: 2}))
    assert th[2] == Fraction(1, 2)
    assert th[1] is INFINITE and th[3] is INFINITE
    th = fiber_thresholds(X, QDivisor({1: Fraction(3, 7)}))
    assert th[1] == Fraction(7, 3)


def test_infinite_ordering():
    assert INFINITE > 10**9 and INFINITE >= 1 and not INFINITE < 1
    assert Fraction(7, 2) < INFINITE
    assert INFINITE / 3 is INFINITE and 3 * INFINITE is INFINITE
    assert INFINITE != float("inf")


def test_parse_rational():
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational(" 5 ") == 5
    for bad in ("x", "1/0", "1/2/3", ""):
        with pytest.raises(ValueError):
            parse_rational(bad)


positive_rationals = st.fractions(min_value=Fraction(1, 1000), max_value=10, max_denominator=1000)
coefficients = st.fractions(min_value=0, max_value=10, max_denominator=100)


@st.composite
def variety_and_divisor(draw):
    name = draw(st.sampled_from(["A1", "A2", "A3", "A4", "B2", "B3", "C3", "C4", "D4", "G2", "F4"]))
    rs = build_root_system(name)
    I = draw(st.sampled_from(subsets(rs.rank)[:-1]))
    X = FlagVariety(rs, I)
    D = QDivisor({a: draw(coefficients) for a in X.omitted})
    return X, D


@settings(max_examples=300, deadline=None)
@given(xd=variety_and_divisor(), c=positive_rationals)
def test_scaling_law(xd, c):
    X, D = xd
    assert lct_b_stable(X, scale(D, c)).value * c == lct_b_stable(X, D).value


@settings(max_examples=300, deadline=None)
@given(xd=variety_and_divisor(), extra=st.data())
def test_monotone_and_verdicts(xd, extra):
    X, D = xd
    E = QDivisor({a: extra.draw(coefficients) for a in X.omitted})
    r, r2 = lct_b_stable(X, D), lct_b_stable(X, D + E)
    assert r2.value <= r.value
    for res in (r, r2):
        assert res.klt == (res.value > 1) and res.lc == (res.value >= 1)
        assert (res.value is INFINITE) == all(a == 0 for a in (D + E if res is r2 else D).coefficients.values())


@settings(max_examples=300, deadline=None)
@given(xd=variety_and_divisor())
def test_two_routes_agree(xd):
    # 1/max a versus min over fibres of 1/k for the restricted divisor
    X, D = xd
    value = lct_b_stable(X, D).value
    via_fibres = min(fiber_thresholds(X, D).values(), default=INFINITE)
    assert value == via_fibres
    for b in X.omitted:
        if D[b] > 0 and D[b].denominator == 1:
            fib = fibration(X, b)
            assert fiber_thresholds(X, D)[b] == hwang_fiber_threshold(fib.fiber_type, D[b].numerator)
