"""Generalized flag varieties G/P: Schubert cells, Picard data and fibrations."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import DomainError
from .roots import Weight, build_root_system, coroot, dynkin_component, pairing
from .weyl import (
    DEFAULT_CAP,
    duality_involution,
    is_minimal,
    longest_element,
    minimal_coset_reps,
)

__all__ = [
    "FlagVariety",
    "SchubertCellTable",
    "Fibration",
    "flag_variety",
    "dimension",
    "schubert_cells",
    "poincare_dual_pairing",
    "curve_divisor_pairing",
    "pairing_matrix",
    "fibration",
    "fibration_tower",
    "anticanonical_coefficients",
    "restrict_divisor_to_fiber",
]


@dataclass(frozen=True)
class FlagVariety:
    """``G/P`` given by a root system and the Levi set ``I`` of ``P``.

    ``I`` is a set of 1-based Bourbaki nodes; ``I = {}`` is ``G/B`` and
    ``I = S`` is a point.
    """

    root_system: object
    levi: frozenset

    def __post_init__(self):
        levi = frozenset(self.levi)
        for a in levi:
            if not isinstance(a, int) or not 1 <= a <= self.root_system.rank:
                raise DomainError(f"node {a!r} is not a simple root of {self.root_system.name}")
        object.__setattr__(self, "levi", levi)

    @classmethod
    def from_omitted(cls, root_system, omitted):
        nodes = frozenset(range(1, root_system.rank + 1))
        omitted = frozenset(omitted)
        if not omitted <= nodes:
            raise DomainError(f"omitted nodes {sorted(omitted - nodes)} are not in {root_system.name}")
        return cls(root_system, nodes - omitted)

    @property
    def nodes(self):
        return frozenset(range(1, self.root_system.rank + 1))

    @property
    def omitted(self):
        """``S \\ I`` in Bourbaki order: the index set of the B-stable prime divisors."""
        return tuple(sorted(self.nodes - self.levi))

    @property
    def picard_rank(self):
        return len(self.omitted)

    @cached_property
    def dimension(self):
        return dimension(self)

    def __repr__(self):
        return f"FlagVariety({self.root_system.name}, levi={sorted(self.levi)})"

    def check_divisor_node(self, a):
        if a not in self.omitted:
            where = "in the Levi set" if a in self.levi else "not a node"
            raise DomainError(f"node {a!r} is {where} of {self!r}; divisors are indexed by {list(self.omitted)}")


def flag_variety(type_string, levi=None, omit=None):
    """Convenience constructor: ``flag_variety("A3", omit=[2])`` is Gr(2,4)."""
    rs = build_root_system(type_string)
    if (levi is None) == (omit is None):
        raise DomainError("give exactly one of levi= or omit=")
    if omit is not None:
        return FlagVariety.from_omitted(rs, omit)
    return FlagVariety(rs, frozenset(levi))


def dimension(X):
    """``l(w0 w0^P)``, cross-checked against ``|R+| - |R+_I|``."""
    rs = X.root_system
    by_length = (longest_element(rs) * longest_element(rs, X.levi)).length
    by_roots = len(rs.positive_roots) - len(rs.positive_roots_of(a - 1 for a in X.levi))
    if by_length != by_roots:
        raise AssertionError(f"dimension mismatch for {X!r}: {by_length} != {by_roots}")
    return by_length


@dataclass(frozen=True)
class SchubertCellTable:
    """Schubert cells ``BwP/P`` of ``X``, one per ``w`` in ``W^P``, with ``dim = l(w)``."""

    variety: FlagVariety
    cells: tuple  # (w, dim) pairs

    @property
    def betti(self):
        top = self.variety.dimension
        out = [0] * (top + 1)
        for _, d in self.cells:
            out[d] += 1
        return out

    def __len__(self):
        return len(self.cells)


def schubert_cells(X, cap=DEFAULT_CAP, allow_large=False):
    table = minimal_coset_reps(X.root_system, X.levi, cap=cap, allow_large=allow_large)
    return SchubertCellTable(X, tuple((w, w.length) for w in table))


def _require_rep(X, w):
    if w.root_system != X.root_system or not is_minimal(w, X.levi):
        raise DomainError(f"{w!r} is not in W^P for {X!r}")


def poincare_dual_pairing(X, w, v):
    """``[Y^w] . [Y_v]`` for ``w, v`` in ``W^P`` of equal length.

    ``Y^w`` has the class of the Schubert variety indexed by the dual
    representative ``w0 w w0^P``; that class pairs to one exactly with the
    class whose dual is it, so the answer is ``dual(dual(w)) == v``.
    """
    _require_rep(X, w)
    _require_rep(X, v)
    if w.length != v.length:
        raise DomainError(f"lengths differ ({w.length} vs {v.length}); classes are not in complementary degrees")
    opposite = duality_involution(w, X.levi)
    return int(duality_involution(opposite, X.levi) == v)


def curve_divisor_pairing(X, alpha, beta):
    """Intersection number of ``D_alpha`` with the B-stable curve through ``s_beta``.

    Computed as ``<omega_alpha, beta^vee>`` after moving ``omega_alpha``
    to root coordinates with the inverse Cartan matrix.
    """
    X.check_divisor_node(alpha)
    X.check_divisor_node(beta)
    rs = X.root_system
    omega = Weight.fundamental(rs, alpha).root_coords()
    bvee = coroot(rs, rs.simple_roots[beta - 1])
    value = sum(Fraction(c) * b for c, b in zip(rs.cartan_apply(omega), bvee))
    assert value.denominator == 1
    assert value == pairing(Weight.fundamental(rs, alpha), bvee)
    return int(value)


def pairing_matrix(X):
    return [[curve_divisor_pairing(X, a, b) for b in X.omitted] for a in X.omitted]


@dataclass(frozen=True)
class Fibration:
    """The projection ``G/P -> G/P'`` with ``P'`` given by ``J = I + {alpha}``.

    ``fiber`` is the classified Dynkin component of ``J`` containing ``alpha``
    (``alpha`` marked); the fibre is the maximal-parabolic flag variety it
    describes.
    """

    total: FlagVariety
    alpha: int
    base: FlagVariety
    fiber: object  # roots.DynkinComponent
    fiber_dimension: int

    @property
    def fiber_variety(self):
        rs = build_root_system(self.fiber.type_label, self.fiber.rank)
        return FlagVariety.from_omitted(rs, {self.fiber.marked_label})

    @property
    def fiber_type(self):
        return self.fiber.name

    @property
    def fiber_marked_node(self):
        return self.fiber.marked_label

    def describe(self):
        return f"{self.fiber.name}/P{self.fiber.marked_label}"


def fibration(X, alpha):
    X.check_divisor_node(alpha)
    J = X.levi | {alpha}
    base = FlagVariety(X.root_system, J)
    comp = dynkin_component(X.root_system, J, alpha)
    fib = Fibration(X, alpha, base, comp, 0)
    fdim = dimension(fib.fiber_variety)
    if X.dimension != base.dimension + fdim:
        raise AssertionError(f"dimension additivity fails for {X!r} at node {alpha}")
    return Fibration(X, alpha, base, comp, fdim)


def fibration_tower(X):
    """Successive fibrations over the omitted nodes in Bourbaki order, ending at a point."""
    steps = []
    cur = X
    for a in X.omitted:
        f = fibration(cur, a)
        steps.append(f)
        cur = f.base
    return steps


def anticanonical_coefficients(X):
    """Coefficients ``c_alpha`` with ``-K_X ~ sum c_alpha D_alpha``.

    ``c_alpha = <sum of positive roots outside the Levi, alpha^vee>``.
    """
    rs = X.root_system
    levi_roots = set(rs.positive_roots_of(a - 1 for a in X.levi))
    total = [0] * rs.rank
    for r in rs.positive_roots:
        if r not in levi_roots:
            total = [t + x for t, x in zip(total, r)]
    out = {}
    for a in X.omitted:
        out[a] = pairing(tuple(total), coroot(rs, rs.simple_roots[a - 1]))
    return out


def restrict_divisor_to_fiber(X, D, beta):
    """Coefficient of ``H_beta`` in the restriction of ``D`` to the fibre ``X_beta``."""
    X.check_divisor_node(beta)
    coeffs = D.coefficients if hasattr(D, "coefficients") else dict(D)
    return sum(
        (Fraction(a) * curve_divisor_pairing(X, alpha, beta) for alpha, a in coeffs.items()),
        Fraction(0),
    )
