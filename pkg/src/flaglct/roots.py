"""Root systems of types A-G in exact integer arithmetic.

Conventions
-----------
Simple roots are numbered ``1..rank`` following Bourbaki.  Internally all
vectors are 0-based tuples.  Roots live in simple-root coordinates, weights
in fundamental-weight coordinates.  The Cartan matrix is stored as::

    cartan[i][j] = <alpha_j, alpha_i^vee> = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)

so that the simple reflection ``s_i`` acts on a root-coordinate vector ``v``
by ``v - (cartan @ v)[i] * e_i``.  For the non-simply-laced types the short
simple roots are ``alpha_n`` for B_n, ``alpha_1..alpha_{n-1}`` for C_n,
``alpha_3, alpha_4`` for F4 and ``alpha_1`` for G2.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .errors import DomainError, ParseError

__all__ = [
    "RootSystem",
    "Weight",
    "build_root_system",
    "parse_type",
    "parse_nodes",
    "coroot",
    "pairing",
    "dynkin_component",
    "DynkinComponent",
    "classify_diagram",
    "valid_types",
    "subsets",
    "Coroot",
]

_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4}
_FIXED_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


def _valid(type_label, rank):
    if type_label in _MIN_RANK:
        return rank >= _MIN_RANK[type_label]
    if type_label in _FIXED_RANKS:
        return rank in _FIXED_RANKS[type_label]
    return False


def valid_types(max_rank=8):
    """All valid ``(type_label, rank)`` pairs with rank at most ``max_rank``."""
    out = []
    for t in "ABCDEFG":
        for n in range(1, max_rank + 1):
            if _valid(t, n):
                out.append((t, n))
    return out


def _dynkin_data(type_label, n):
    """Squared lengths of the simple roots and the (0-based) edge list."""
    norms = [2] * n
    edges = [(i, i + 1) for i in range(n - 1)]
    if type_label == "B":
        norms[-1] = 1
    elif type_label == "C":
        norms = [1] * (n - 1) + [2]
    elif type_label == "D":
        edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    elif type_label == "E":
        edges = [(0, 2), (1, 3)] + [(i, i + 1) for i in range(2, n - 1)]
    elif type_label == "F":
        norms = [2, 2, 1, 1]
    elif type_label == "G":
        norms = [1, 3]
    return norms, edges


class RootSystem:
    """An irreducible crystallographic root system.

    Instances are immutable and should be obtained through
    :func:`build_root_system`, which caches them.  Two root systems compare
    equal when they have the same Cartan type.
    """

    def __init__(self, type_label, rank):
        if not _valid(type_label, rank):
            raise DomainError(f"invalid Cartan type ({type_label}, {rank})")
        self.type_label = type_label
        self.rank = rank
        norms, edges = _dynkin_data(type_label, rank)
        form = [[Fraction(0)] * rank for _ in range(rank)]
        adjacency = {i: set() for i in range(rank)}
        for i in range(rank):
            form[i][i] = Fraction(norms[i])
        for i, j in edges:
            form[i][j] = form[j][i] = -Fraction(max(norms[i], norms[j]), 2)
            adjacency[i].add(j)
            adjacency[j].add(i)
        self.norms = tuple(Fraction(x) for x in norms)
        self.form = tuple(tuple(row) for row in form)
        self.cartan_matrix = tuple(
            tuple(int(2 * form[i][j] / form[i][i]) for j in range(rank)) for i in range(rank)
        )
        self.adjacency = {i: frozenset(v) for i, v in adjacency.items()}
        self.simple_roots = tuple(
            tuple(int(i == j) for j in range(rank)) for i in range(rank)
        )
        self.positive_roots = self._positive_roots()
        negatives = tuple(tuple(-c for c in r) for r in self.positive_roots)
        self.all_roots = tuple(sorted(negatives + self.positive_roots, key=_root_key))
        self._root_set = frozenset(self.all_roots)
        self._inverse_cartan = None

    @property
    def name(self):
        return f"{self.type_label}{self.rank}"

    def __repr__(self):
        return f"RootSystem({self.name})"

    def __eq__(self, other):
        if not isinstance(other, RootSystem):
            return NotImplemented
        return (self.type_label, self.rank) == (other.type_label, other.rank)

    def __hash__(self):
        return hash((self.type_label, self.rank))

    @property
    def dynkin_adjacency(self):
        """Adjacency of the Dynkin diagram on 1-based Bourbaki nodes."""
        return {i + 1: frozenset(j + 1 for j in v) for i, v in self.adjacency.items()}

    def cartan_apply(self, v):
        """``cartan @ v``: the pairings ``<v, alpha_i^vee>`` for every simple i."""
        return tuple(sum(a * x for a, x in zip(row, v)) for row in self.cartan_matrix)

    def reflect(self, i, v):
        """Apply the simple reflection ``s_i`` (0-based ``i``) to a root-coordinate vector."""
        c = sum(a * x for a, x in zip(self.cartan_matrix[i], v))
        if c == 0:
            return tuple(v)
        out = list(v)
        out[i] -= c
        return tuple(out)

    def is_root(self, v):
        return tuple(v) in self._root_set

    def is_positive(self, v):
        """Sign of a root; roots have all coordinates of one sign."""
        for x in v:
            if x:
                return x > 0
        raise DomainError("the zero vector is not a root")

    def height(self, v):
        return sum(v)

    def positive_roots_of(self, nodes):
        """Positive roots supported on the given set of 0-based nodes."""
        nodes = frozenset(nodes)
        return tuple(
            r for r in self.positive_roots if all(x == 0 or i in nodes for i, x in enumerate(r))
        )

    @property
    def highest_root(self):
        return self.positive_roots[-1]

    def inner(self, u, v):
        """Invariant bilinear form on root coordinates (exact rational)."""
        return sum(
            u[i] * self.form[i][j] * v[j]
            for i in range(self.rank)
            if u[i]
            for j in range(self.rank)
            if v[j]
        )

    @property
    def inverse_cartan(self):
        if self._inverse_cartan is None:
            self._inverse_cartan = _invert(self.cartan_matrix)
        return self._inverse_cartan

    def _positive_roots(self):
        # Build positive roots height by height with root strings: for beta and
        # simple alpha_i, beta + alpha_i is a root iff q = p - <beta, alpha_i^vee> > 0,
        # where p is the largest k with beta - k alpha_i a root.
        n = self.rank
        found = set(self.simple_roots)
        layer = list(self.simple_roots)
        while layer:
            nxt = set()
            for beta in layer:
                pairings = self.cartan_apply(beta)
                for i in range(n):
                    p = 0
                    cur = list(beta)
                    while True:
                        cur[i] -= 1
                        if tuple(cur) in found:
                            p += 1
                        else:
                            break
                    if p - pairings[i] > 0:
                        up = list(beta)
                        up[i] += 1
                        up = tuple(up)
                        if up not in found:
                            nxt.add(up)
            found |= nxt
            layer = sorted(nxt)
        return tuple(sorted(found, key=_root_key))


def _root_key(v):
    return (sum(v), tuple(v))


def _invert(matrix):
    n = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


@lru_cache(maxsize=None)
def build_root_system(type_label, rank=None):
    """Construct (and cache) the root system of the given Cartan type.

    ``build_root_system("A", 3)`` and ``build_root_system("A3")`` are equivalent.
    """
    if rank is None:
        type_label, rank = parse_type(type_label)
    if not isinstance(type_label, str) or not isinstance(rank, int):
        raise DomainError(f"invalid Cartan type ({type_label!r}, {rank!r})")
    return RootSystem(type_label.upper(), rank)


_TYPE_RE = re.compile(r"[A-G][0-9]+")


def parse_type(text):
    """Parse a type string such as ``"F4"`` into ``("F", 4)``."""
    s = text.strip()
    if not s:
        raise ParseError("empty type string", text, 0)
    if s[0] not in "ABCDEFG":
        raise ParseError("type letter must be one of A-G", text, text.index(s[0]))
    m = _TYPE_RE.fullmatch(s)
    if m is None:
        bad = next((k for k in range(1, len(s)) if not s[k].isdigit()), 1)
        raise ParseError("expected a rank after the type letter", text, text.index(s) + bad)
    t, n = s[0], int(s[1:])
    if not _valid(t, n):
        raise DomainError(f"invalid Cartan type ({t}, {n})")
    return t, n


def parse_nodes(text, rank=None):
    """Parse a comma-separated list of 1-based node indices; ``""`` is the empty set."""
    nodes = set()
    if text is None or not text.strip():
        return frozenset()
    pos = 0
    for tok in text.split(","):
        stripped = tok.strip()
        if not stripped.isdigit():
            raise ParseError("expected a positive node index", text, pos + (len(tok) - len(tok.lstrip())))
        k = int(stripped)
        if k < 1 or (rank is not None and k > rank):
            raise DomainError(f"node {k} out of range 1..{rank}")
        nodes.add(k)
        pos += len(tok) + 1
    return frozenset(nodes)


class Weight:
    """An integral weight, stored in fundamental-weight coordinates."""

    __slots__ = ("root_system", "coords")

    def __init__(self, root_system, coords):
        coords = tuple(int(c) for c in coords)
        if len(coords) != root_system.rank:
            raise DomainError(f"weight needs {root_system.rank} coordinates, got {len(coords)}")
        self.root_system = root_system
        self.coords = coords

    @classmethod
    def fundamental(cls, root_system, node):
        """The fundamental weight omega_node (1-based node)."""
        _check_node(root_system, node)
        return cls(root_system, [int(i == node - 1) for i in range(root_system.rank)])

    @classmethod
    def rho(cls, root_system):
        return cls(root_system, [1] * root_system.rank)

    @classmethod
    def from_root_coords(cls, root_system, v):
        """Convert a root-lattice vector (possibly rational) to a weight."""
        coords = [sum(Fraction(a) * x for a, x in zip(row, v)) for row in root_system.cartan_matrix]
        if any(c.denominator != 1 for c in coords):
            raise DomainError(f"{tuple(v)} is not an integral weight")
        return cls(root_system, [int(c) for c in coords])

    def root_coords(self):
        """Rational coordinates in the simple-root basis (via the inverse Cartan matrix)."""
        inv = self.root_system.inverse_cartan
        return tuple(sum(row[j] * self.coords[j] for j in range(len(self.coords))) for row in inv)

    def __add__(self, other):
        _same(self.root_system, other.root_system)
        return Weight(self.root_system, [a + b for a, b in zip(self.coords, other.coords)])

    def __rmul__(self, k):
        return Weight(self.root_system, [k * a for a in self.coords])

    def __eq__(self, other):
        if not isinstance(other, Weight):
            return NotImplemented
        return self.root_system == other.root_system and self.coords == other.coords

    def __hash__(self):
        return hash((self.root_system, self.coords))

    def __repr__(self):
        return f"Weight({self.root_system.name}, {self.coords})"


class Coroot(tuple):
    """Coroot-lattice coordinates tagged with their root system."""

    def __new__(cls, root_system, coords):
        obj = super().__new__(cls, coords)
        obj.root_system = root_system
        return obj


def _check_node(rs, node):
    if not isinstance(node, int) or not 1 <= node <= rs.rank:
        raise DomainError(f"node {node!r} is not a simple root of {rs.name}")


def _same(a, b):
    if a != b:
        raise DomainError(f"mismatched root systems {a.name} and {b.name}")


def coroot(root_system, beta):
    """Coroot ``2 beta / (beta, beta)`` of a root, in simple-coroot coordinates."""
    beta = tuple(beta)
    if not root_system.is_root(beta):
        raise DomainError(f"{beta} is not a root of {root_system.name}")
    bb = root_system.inner(beta, beta)
    coords = [beta[j] * root_system.norms[j] / bb for j in range(root_system.rank)]
    assert all(c.denominator == 1 for c in coords)
    return Coroot(root_system, [int(c) for c in coords])


def pairing(weight, beta_vee):
    """Integer pairing ``<weight, beta_vee>`` of a weight with a coroot.

    ``weight`` may be a :class:`Weight` or a root (tuple in root coordinates,
    paired through the Cartan matrix).
    """
    if isinstance(weight, Weight):
        if isinstance(beta_vee, Coroot):
            _same(weight.root_system, beta_vee.root_system)
        return sum(c * b for c, b in zip(weight.coords, beta_vee))
    if not isinstance(beta_vee, Coroot):
        raise DomainError("pairing a root requires a Coroot carrying its root system")
    rs = beta_vee.root_system
    return sum(c * b for c, b in zip(rs.cartan_apply(weight), beta_vee))


class DynkinComponent:
    """A connected sub-diagram, classified and relabelled in its own Bourbaki order.

    ``nodes`` are 1-based nodes of the ambient diagram, ``relabel`` maps each
    of them to its Bourbaki label inside ``type_label``/``rank``.
    """

    def __init__(self, nodes, type_label, rank, relabel, marked=None):
        self.nodes = frozenset(nodes)
        self.type_label = type_label
        self.rank = rank
        self.relabel = dict(relabel)
        self.marked = marked

    @property
    def name(self):
        return f"{self.type_label}{self.rank}"

    @property
    def marked_label(self):
        return None if self.marked is None else self.relabel[self.marked]

    def __repr__(self):
        tail = "" if self.marked is None else f", marked={self.marked_label}"
        return f"DynkinComponent({self.name}, nodes={sorted(self.nodes)}{tail})"


def _components(rs, nodes):
    nodes = set(nodes)
    seen, comps = set(), []
    for start in sorted(nodes):
        if start in seen:
            continue
        stack, comp = [start], set()
        while stack:
            v = stack.pop()
            if v in comp:
                continue
            comp.add(v)
            stack.extend(w for w in rs.adjacency[v] if w in nodes and w not in comp)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def _path_from(rs, nodes, start):
    order, prev, cur = [start], None, start
    while True:
        nxt = [w for w in rs.adjacency[cur] if w in nodes and w != prev]
        if not nxt:
            return order
        prev, cur = cur, nxt[0]
        order.append(cur)


def _arm(rs, nodes, branch, first):
    """Nodes along the arm leaving ``branch`` through ``first``, nearest first."""
    arm, prev, cur = [first], branch, first
    while True:
        nxt = [w for w in rs.adjacency[cur] if w in nodes and w != prev]
        if not nxt:
            return arm
        prev, cur = cur, nxt[0]
        arm.append(cur)


def classify_diagram(rs, nodes):
    """Classify a connected set of 0-based nodes.

    Returns ``(type_label, rank, relabel)`` where ``relabel`` maps 0-based
    ambient nodes to 1-based Bourbaki labels of the classified type.  The
    result is checked against the Cartan matrix of the classified type.
    """
    nodes = frozenset(nodes)
    k = len(nodes)
    if k == 0 or len(_components(rs, nodes)) != 1:
        raise DomainError("classification needs a non-empty connected node set")
    A = rs.cartan_matrix
    degree = {v: sum(1 for w in rs.adjacency[v] if w in nodes) for v in nodes}
    if k == 1:
        (v,) = nodes
        t, order = "A", [v]
    else:
        multi = [(i, j) for i in nodes for j in nodes if i != j and A[i][j] < -1]
        branch = [v for v in nodes if degree[v] == 3]
        ends = sorted(v for v in nodes if degree[v] == 1)
        if multi and A[multi[0][0]][multi[0][1]] == -3:
            # G2: label the short node 1
            short = multi[0][0]
            (other,) = nodes - {short}
            t, order = "G", [short, other]
        elif multi:
            (short, long_) = multi[0]  # A[short][long] == -2 -> `short` is the short root
            if k == 4 and degree[short] == 2 and degree[long_] == 2:
                path = _path_from(rs, nodes, ends[0])
                if path.index(long_) > path.index(short):
                    path.reverse()
                t, order = "F", path
            elif k == 2:
                t, order = "B", [long_, short]
            elif degree[short] == 1:
                t, order = "B", list(reversed(_path_from(rs, nodes, short)))
            else:
                t, order = "C", list(reversed(_path_from(rs, nodes, long_)))
        elif not branch:
            t, order = "A", _path_from(rs, nodes, ends[0])
        else:
            (b,) = branch
            arms = sorted(
                (_arm(rs, nodes, b, w) for w in sorted(rs.adjacency[b]) if w in nodes),
                key=lambda a: (len(a), a),
            )
            lengths = tuple(len(a) for a in arms)
            if lengths[:2] == (1, 1):
                long_arm, a, c = sorted(arms, key=lambda x: (-len(x), x))
                order = list(reversed(long_arm)) + [b, a[0], c[0]]
                t = "D"
            elif lengths[:2] == (1, 2) and lengths[2] in (2, 3, 4):
                order = [arms[1][1], arms[0][0], arms[1][0], b] + arms[2]
                t = "E"
            else:
                raise DomainError(f"unexpected branched diagram with arms {lengths}")
    relabel = {v: idx + 1 for idx, v in enumerate(order)}
    ref = build_root_system(t, k)
    for u in nodes:
        for v in nodes:
            if A[u][v] != ref.cartan_matrix[relabel[u] - 1][relabel[v] - 1]:
                raise AssertionError(f"misclassified sub-diagram {sorted(nodes)} as {t}{k}")
    return t, k, relabel


def dynkin_component(rs, J, alpha):
    """Connected component of the sub-diagram on ``J`` that contains ``alpha``.

    ``J`` and ``alpha`` use 1-based Bourbaki labels.  The component is
    classified and relabelled; ``alpha`` is recorded as its marked node.
    """
    J = frozenset(J)
    for v in J | {alpha}:
        _check_node(rs, v)
    if alpha not in J:
        raise DomainError(f"node {alpha} is not in {sorted(J)}")
    zero = frozenset(v - 1 for v in J)
    comp = next(c for c in _components(rs, zero) if alpha - 1 in c)
    t, k, relabel = classify_diagram(rs, comp)
    return DynkinComponent(
        (v + 1 for v in comp), t, k, {v + 1: lab for v, lab in relabel.items()}, marked=alpha
    )


def subsets(rank):
    """All subsets of ``{1..rank}`` as frozensets, by size then lexicographically."""
    nodes = range(1, rank + 1)
    return [frozenset(c) for k in range(rank + 1) for c in combinations(nodes, k)]
