import pytest

from flaglct import CapExceeded, DomainError
from flaglct.roots import build_root_system, subsets
from flaglct.weyl import (
    duality_involution,
    enumerate_bruteforce,
    enumerate_group,
    from_word,
    group_order,
    identity,
    inversion_count,
    is_minimal,
    longest_element,
    minimal_coset_reps,
    right_multiply,
    simple_reflection,
)

from oracles import (
    dihedral_order,
    grassmannian_style_betti,
    signed_permutation_count,
    symmetric_group_poincare,
)

RANK_LE_4 = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4"]


def test_simple_reflection_examples():
    a2 = build_root_system("A2")
    s1, s2 = simple_reflection(a2, 1), simple_reflection(a2, 2)
    assert (s1 * s1).is_identity()
    assert (s1 * s2).length == 2
    assert s1.act((1, 0)) == (-1, 0)
    assert simple_reflection(build_root_system("A1"), 1).matrix == ((-1,),)
    with pytest.raises(DomainError):
        simple_reflection(a2, 3)


@pytest.mark.parametrize("name", RANK_LE_4 + ["D5", "E6"])
def test_simple_reflection_permutes_positive_roots(name):
    rs = build_root_system(name)
    pos = set(rs.positive_roots)
    for a in range(1, rs.rank + 1):
        s = simple_reflection(rs, a)
        alpha = rs.simple_roots[a - 1]
        assert s.act(alpha) == tuple(-x for x in alpha)
        assert {s.act(b) for b in pos - {alpha}} == pos - {alpha}
        assert {s.act(b) for b in rs.all_roots} == set(rs.all_roots)


def test_length_examples():
    assert identity(build_root_system("A3")).length == 0
    # frozen from the oracle BFS: maximum word length in W(A2), W(B2)
    assert longest_element(build_root_system("A2")).length == 3
    assert longest_element(build_root_system("B2")).length == 4


def test_longest_element_examples():
    a3 = build_root_system("A3")
    assert longest_element(a3, set()).is_identity()
    w0 = longest_element(build_root_system("A2"))
    assert w0.length == 3 and (w0 * w0).is_identity()
    w = longest_element(a3, {1, 3})
    assert w.length == 2 and w == simple_reflection(a3, 1) * simple_reflection(a3, 3)


@pytest.mark.parametrize("name", RANK_LE_4 + ["A5", "D5"])
def test_longest_length_equals_positive_roots(name):
    rs = build_root_system(name)
    w0 = longest_element(rs)
    assert w0.length == len(rs.positive_roots)
    assert (w0 * w0).is_identity()


@pytest.mark.parametrize("name", ["A3", "B3", "G2"])
def test_sign_flip_length_matches_bfs_word_length(name):
    rs = build_root_system(name)
    for w in enumerate_group(rs):
        assert inversion_count(w) == w._length
        assert len(w.reduced_word()) == w._length
        assert from_word(rs, w.reduced_word()) == w


@pytest.mark.parametrize("name", ["A3", "B3", "G2", "D4"])
def test_length_changes_by_one(name):
    rs = build_root_system(name)
    for w in enumerate_group(rs):
        for i in range(rs.rank):
            assert abs(inversion_count(right_multiply(w, i)) - inversion_count(w)) == 1


def test_brute_force_orders():
    assert enumerate_bruteforce(build_root_system("A3"))[0] == 24 == sum(symmetric_group_poincare(4))
    assert enumerate_bruteforce(build_root_system("A3"))[1] == symmetric_group_poincare(4)
    assert enumerate_bruteforce(build_root_system("A4"))[1] == symmetric_group_poincare(5)
    assert enumerate_bruteforce(build_root_system("G2"))[0] == dihedral_order(6) == 12
    assert enumerate_bruteforce(build_root_system("B3"))[0] == signed_permutation_count(3) == 48
    assert enumerate_bruteforce(build_root_system("C3"))[0] == 48
    assert enumerate_bruteforce(build_root_system("D4"))[0] == signed_permutation_count(4, even=True)
    assert enumerate_bruteforce(build_root_system("F4"))[0] == 1152


@pytest.mark.parametrize("name", RANK_LE_4)
def test_poincare_polynomial_palindromic(name):
    rs = build_root_system(name)
    order, poly = enumerate_bruteforce(rs)
    assert poly == poly[::-1]
    assert sum(poly) == order == group_order(rs)


def test_group_order_without_enumeration():
    assert group_order(build_root_system("E6")) == 51840
    assert group_order(build_root_system("E8")) == 696729600


def test_cap_enforced():
    a4 = build_root_system("A4")
    with pytest.raises(CapExceeded, match="100"):
        enumerate_bruteforce(a4, cap=100)
    with pytest.raises(CapExceeded):
        minimal_coset_reps(a4, set(), cap=100)
    # W^P small even though W is not
    assert len(minimal_coset_reps(a4, {2, 3, 4}, cap=100)) == 5
    with pytest.raises(CapExceeded):
        enumerate_bruteforce(build_root_system("E7"))
    with pytest.raises(CapExceeded):
        minimal_coset_reps(build_root_system("E8"), set())
    # a minuscule quotient of E7 is fine
    assert len(minimal_coset_reps(build_root_system("E7"), {1, 2, 3, 4, 5, 6})) == 56


def test_minimal_coset_reps_examples():
    a3 = build_root_system("A3")
    t = minimal_coset_reps(a3, {1, 3})
    assert len(t) == 6 and t.betti() == [1, 1, 2, 1, 1]
    assert t.betti() == grassmannian_style_betti(4, {1, 3})
    top = minimal_coset_reps(a3, {1, 2, 3})
    assert len(top) == 1 and top.representatives[0].is_identity()
    a2 = build_root_system("A2")
    assert len(minimal_coset_reps(a2, set())) == 6


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_coset_betti_against_permutation_model(n):
    rs = build_root_system("A", n - 1)
    for I in subsets(n - 1):
        assert minimal_coset_reps(rs, I).betti() == grassmannian_style_betti(n, I)


@pytest.mark.parametrize("name", RANK_LE_4)
def test_bfs_and_filter_paths_agree(name):
    rs = build_root_system(name)
    full = group_order(rs)
    for I in subsets(rs.rank):
        bfs = minimal_coset_reps(rs, I)
        assert all(is_minimal(w, I) for w in bfs)
        assert len(bfs) * group_order(rs, I) == full
        if rs.rank <= 3 or len(I) <= 1:
            assert bfs.representatives == minimal_coset_reps(rs, I, method="filter").representatives


def test_deterministic_order():
    t = minimal_coset_reps(build_root_system("B3"), {2})
    keys = [(w.length, w.matrix) for w in t]
    assert keys == sorted(keys)
    assert [w.length for w in t] == [w.length for w in minimal_coset_reps(build_root_system("B3"), {2})]


def test_duality_examples():
    a3 = build_root_system("A3")
    I = {1, 3}
    reps = minimal_coset_reps(a3, I)
    top = duality_involution(identity(a3), I)
    assert top == longest_element(a3) * longest_element(a3, I) == reps.representatives[-1]
    images = set()
    for w in reps:
        u = duality_involution(w, I)
        assert u.length == 4 - w.length
        assert duality_involution(u, I) == w
        images.add(u)
    assert images == set(reps.representatives)
    with pytest.raises(DomainError):
        duality_involution(simple_reflection(a3, 1), I)


def test_reduced_word_rendering():
    a3 = build_root_system("A3")
    w = from_word(a3, [1, 3, 2])
    assert w.word_string() in ("s1 s3 s2", "s3 s1 s2")
    assert len(w.reduced_word()) == 3
    assert w.inverse() * w == identity(a3)
