"""Weyl group elements, lengths, longest elements and minimal coset representatives.

An element is stored canonically as the integer matrix of its action on
root-lattice coordinates; column ``j`` is the image ``w(alpha_j)``.  Reduced
words are derived on demand.

Cosets are *left* cosets ``w W_P``.  The minimal representative of
``w W_P`` is the unique element ``w`` with ``w(alpha) > 0`` for every
``alpha`` in the Levi set ``I``; these form ``W^P``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import CapExceeded, DomainError

__all__ = [
    "DEFAULT_CAP",
    "WeylElement",
    "CosetTable",
    "identity",
    "simple_reflection",
    "from_word",
    "length",
    "inversion_count",
    "longest_element",
    "group_order",
    "minimal_coset_reps",
    "is_minimal",
    "duality_involution",
    "enumerate_bruteforce",
    "enumerate_group",
]

DEFAULT_CAP = 10**7
# Full-group enumeration of these types is refused unless explicitly allowed.
LARGE_TYPES = frozenset({"E7", "E8"})


class WeylElement:
    """An element of the Weyl group of ``root_system``.

    Equality and hashing use the matrix only (plus the root system).
    """

    __slots__ = ("root_system", "matrix", "_length")

    def __init__(self, root_system, matrix, length=None):
        self.root_system = root_system
        self.matrix = tuple(tuple(row) for row in matrix)
        self._length = length

    def __eq__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.matrix == other.matrix and self.root_system == other.root_system

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        word = " ".join(f"s{i}" for i in self.reduced_word()) or "e"
        return f"WeylElement({self.root_system.name}: {word})"

    def __mul__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        if other.root_system != self.root_system:
            raise DomainError("cannot multiply elements of different Weyl groups")
        a, b = self.matrix, other.matrix
        n = len(a)
        cols = list(zip(*b))
        return WeylElement(
            self.root_system,
            [[sum(a[i][k] * col[k] for k in range(n)) for col in cols] for i in range(n)],
        )

    def act(self, v):
        """Image of a root-coordinate vector."""
        return tuple(sum(x * y for x, y in zip(row, v)) for row in self.matrix)

    def column(self, j):
        """``w(alpha_{j+1})`` for 0-based ``j``."""
        return tuple(row[j] for row in self.matrix)

    @property
    def length(self):
        if self._length is None:
            self._length = inversion_count(self)
        return self._length

    def inverse(self):
        return from_word(self.root_system, list(reversed(self.reduced_word())))

    def is_identity(self):
        return all(
            self.matrix[i][j] == (i == j) for i in range(len(self.matrix)) for j in range(len(self.matrix))
        )

    def right_descents(self):
        """0-based nodes ``i`` with ``l(w s_i) < l(w)``, i.e. ``w(alpha_i) < 0``."""
        rs = self.root_system
        return [i for i in range(rs.rank) if not rs.is_positive(self.column(i))]

    def reduced_word(self):
        """A reduced word as a list of 1-based generator indices (lexicographically greedy from the right)."""
        word = []
        w = self
        while True:
            desc = w.right_descents()
            if not desc:
                break
            i = desc[0]
            word.append(i + 1)
            w = right_multiply(w, i)
        word.reverse()
        return word

    def word_string(self):
        return " ".join(f"s{i}" for i in self.reduced_word())

    def sort_key(self):
        return (self.length, self.matrix)


def identity(rs):
    n = rs.rank
    return WeylElement(rs, [[int(i == j) for j in range(n)] for i in range(n)], length=0)


def _node(rs, alpha):
    if not isinstance(alpha, int) or not 1 <= alpha <= rs.rank:
        raise DomainError(f"{alpha!r} is not a simple root of {rs.name}")
    return alpha - 1


def simple_reflection(rs, alpha):
    """The simple reflection for the 1-based node ``alpha``."""
    i = _node(rs, alpha)
    n = rs.rank
    m = [[int(r == c) for c in range(n)] for r in range(n)]
    for c in range(n):
        m[i][c] -= rs.cartan_matrix[i][c]
    return WeylElement(rs, m, length=1)


def left_multiply(w, i):
    """``s_i w`` for 0-based ``i``: only row ``i`` changes."""
    rs = w.root_system
    m = list(w.matrix)
    ci = rs.cartan_matrix[i]
    n = rs.rank
    m[i] = tuple(
        m[i][c] - sum(ci[k] * w.matrix[k][c] for k in range(n) if ci[k]) for c in range(n)
    )
    return WeylElement(rs, m)


def right_multiply(w, i):
    """``w s_i`` for 0-based ``i``: ``col_j -> col_j - A[i][j] col_i``."""
    rs = w.root_system
    ci = rs.cartan_matrix[i]
    m = [
        tuple(row[j] - ci[j] * row[i] for j in range(rs.rank))
        for row in w.matrix
    ]
    return WeylElement(rs, m)


def from_word(rs, word):
    """Product ``s_{word[0]} s_{word[1]} ...`` of 1-based generators."""
    w = identity(rs)
    w._length = None
    for a in word:
        w = right_multiply(w, _node(rs, a))
    return w


def inversion_count(w):
    """Number of positive roots sent to negative roots (no caching)."""
    rs = w.root_system
    return sum(1 for beta in rs.positive_roots if not rs.is_positive(w.act(beta)))


def length(w):
    return w.length


def _nodes(rs, I):
    I = frozenset(I)
    for a in I:
        _node(rs, a)
    return I


@lru_cache(maxsize=None)
def _longest(rs, I):
    w = identity(rs)
    zero = sorted(a - 1 for a in I)
    while True:
        # w s_i is longer iff w(alpha_i) > 0
        up = next((i for i in zero if rs.is_positive(w.column(i))), None)
        if up is None:
            return w
        w = right_multiply(w, up)


def longest_element(rs, I=None):
    """Longest element of the parabolic subgroup generated by ``I`` (all of W if ``I`` is None)."""
    I = frozenset(range(1, rs.rank + 1)) if I is None else _nodes(rs, I)
    return _longest(rs, I)


def is_minimal(w, I):
    """``w`` is the minimal-length representative of ``w W_I``."""
    rs = w.root_system
    return all(rs.is_positive(w.column(a - 1)) for a in I)


@lru_cache(maxsize=None)
def _order(rs, nodes):
    # orbit-stabiliser chain: |W_J| = |W_J . omega_j| * |W_{J - j}|
    if not nodes:
        return 1
    j = max(nodes)
    gens = sorted(a - 1 for a in nodes)
    start = tuple(int(i == j - 1) for i in range(rs.rank))
    seen = {start}
    frontier = [start]
    A = rs.cartan_matrix
    while frontier:
        nxt = []
        for lam in frontier:
            for i in gens:
                c = lam[i]
                if c:
                    # s_i(lam) = lam - <lam, alpha_i^vee> alpha_i; alpha_i = sum_k A[k][i] omega_k
                    mu = tuple(lam[k] - c * A[k][i] for k in range(rs.rank))
                    if mu not in seen:
                        seen.add(mu)
                        nxt.append(mu)
        frontier = nxt
    return len(seen) * _order(rs, nodes - {j})


def group_order(rs, I=None):
    """Order of ``W_I`` (of ``W`` if ``I`` is None), computed without enumerating the group."""
    I = frozenset(range(1, rs.rank + 1)) if I is None else _nodes(rs, I)
    return _order(rs, I)


@dataclass(frozen=True)
class CosetTable:
    """Minimal left-coset representatives ``W^P`` for a Levi set."""

    root_system: object
    levi_set: frozenset
    representatives: tuple
    grading: dict = field(compare=False)

    def __len__(self):
        return len(self.representatives)

    def __iter__(self):
        return iter(self.representatives)

    def __contains__(self, w):
        return w in self._index

    @property
    def _index(self):
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = frozenset(self.representatives)
            object.__setattr__(self, "_idx", idx)
        return idx

    def betti(self):
        """Number of representatives of each length ``0..max``."""
        top = max(self.grading) if self.grading else -1
        return [self.grading.get(k, 0) for k in range(top + 1)]


def _check_cap(rs, what, size, cap, allow_large, full_group):
    if full_group and rs.name in LARGE_TYPES and not allow_large:
        raise CapExceeded(f"full Weyl group of {rs.name} (refused without override)", size, cap)
    if size > cap:
        raise CapExceeded(what, size, cap)


def minimal_coset_reps(rs, I=(), cap=DEFAULT_CAP, method="bfs", allow_large=False):
    """Enumerate ``W^P`` for the Levi set ``I``.

    ``method="bfs"`` grows ``W^P`` level by level from the identity by left
    multiplication (``W^P`` is closed under removing left descents);
    ``method="filter"`` enumerates all of ``W`` and keeps the elements with
    ``w(alpha) > 0`` for ``alpha`` in ``I``.  Both return the representatives
    ordered by length, then by matrix.
    """
    I = _nodes(rs, I)
    predicted = group_order(rs) // group_order(rs, I)
    _check_cap(rs, f"W^P for {rs.name} with I={sorted(I)}", predicted, cap, allow_large, not I)
    if method == "filter":
        reps = [w for w in enumerate_group(rs, cap=cap, allow_large=allow_large) if is_minimal(w, I)]
    elif method == "bfs":
        reps = _coset_bfs(rs, I)
    else:
        raise DomainError(f"unknown method {method!r}")
    reps.sort(key=WeylElement.sort_key)
    grading = Counter(w.length for w in reps)
    return CosetTable(rs, I, tuple(reps), dict(sorted(grading.items())))


def _coset_bfs(rs, I):
    prev, level = set(), [identity(rs)]
    out = list(level)
    k = 0
    while level:
        k += 1
        nxt = {}
        for w in level:
            for i in range(rs.rank):
                u = left_multiply(w, i)
                if u in prev or u in nxt or not is_minimal(u, I):
                    continue
                u._length = k
                nxt[u] = u
        prev = set(level)
        level = list(nxt)
        out.extend(level)
    return out


def duality_involution(w, I):
    """``w -> w0 w w0^P``, an involution of ``W^P`` reversing lengths."""
    rs = w.root_system
    I = _nodes(rs, I)
    if not is_minimal(w, I):
        raise DomainError(f"{w!r} is not a minimal coset representative for I={sorted(I)}")
    return longest_element(rs) * w * longest_element(rs, I)


def enumerate_group(rs, cap=DEFAULT_CAP, allow_large=False):
    """All elements of W by breadth-first closure, each tagged with its BFS depth as length."""
    _check_cap(rs, f"W({rs.name})", group_order(rs), cap, allow_large, True)
    e = identity(rs)
    seen = {e}
    frontier = [e]
    out = [e]
    depth = 0
    gens = [simple_reflection(rs, a) for a in range(1, rs.rank + 1)]
    while frontier:
        depth += 1
        nxt = []
        for w in frontier:
            for s in gens:
                u = w * s
                if u not in seen:
                    if len(seen) >= cap:
                        raise CapExceeded(f"W({rs.name})", len(seen) + 1, cap)
                    u._length = depth
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
        out.extend(nxt)
    return out


def enumerate_bruteforce(rs, cap=DEFAULT_CAP, allow_large=False):
    """Brute-force order of W and its Poincare polynomial.

    Uses only generator multiplication and matrix deduplication; the length
    of an element is its breadth-first distance from the identity.  Returns
    ``(order, coefficients)`` with ``coefficients[k]`` the number of elements
    of length ``k``.
    """
    elements = enumerate_group(rs, cap=cap, allow_large=allow_large)
    counts = Counter(w._length for w in elements)
    return len(elements), [counts[k] for k in range(max(counts) + 1)]
