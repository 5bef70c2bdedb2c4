"""Log canonical thresholds of Q-divisors on flag varieties, in exact rationals.

For a B-stable effective divisor ``D = sum a_alpha D_alpha`` on ``G/P`` the
threshold is exactly ``1 / max a_alpha``; for an arbitrary effective divisor
in that linear-equivalence class the same number is only a lower bound.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError, ParseError
from .flag import anticanonical_coefficients, fibration, restrict_divisor_to_fiber

__all__ = [
    "INFINITE",
    "EXACT",
    "LOWER_BOUND",
    "QDivisor",
    "ThresholdResult",
    "lct_b_stable",
    "lct_lower_bound_general",
    "scale",
    "global_lct",
    "hwang_fiber_threshold",
    "fiber_thresholds",
    "parse_rational",
    "format_value",
]

EXACT = "exact"
LOWER_BOUND = "lower_bound"


class _Infinite:
    """The threshold of the zero divisor. Compares greater than every rational."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITE"

    def __str__(self):
        return "inf"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("flaglct.INFINITE")

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __truediv__(self, other):
        return self

    def __mul__(self, other):
        if other == 0:
            raise DomainError("inf * 0 is undefined")
        return self

    __rmul__ = __mul__


INFINITE = _Infinite()


def parse_rational(text):
    """Parse ``"p/q"`` or an integer string into a Fraction."""
    s = str(text).strip()
    try:
        if "/" in s:
            p, q = s.split("/")
            value = Fraction(int(p), int(q))
        else:
            value = Fraction(int(s))
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not a rational number: {text!r}") from None
    return value


def format_value(value):
    if value is INFINITE:
        return "inf"
    return str(Fraction(value))


@dataclass(frozen=True)
class QDivisor:
    """``sum a_alpha D_alpha`` with exact non-negative rational ``a_alpha``.

    Keys are 1-based nodes of ``S \\ I``; absent keys are zero.
    """

    coefficients: dict = field(default_factory=dict)

    def __post_init__(self):
        coeffs = {}
        for node, a in dict(self.coefficients).items():
            a = Fraction(a)
            if a < 0:
                raise DomainError(f"coefficient of D_{node} is {a}; an effective divisor needs a >= 0")
            coeffs[int(node)] = a
        object.__setattr__(self, "coefficients", dict(sorted(coeffs.items())))

    def __hash__(self):
        return hash(tuple(self.coefficients.items()))

    def __getitem__(self, node):
        return self.coefficients.get(node, Fraction(0))

    def __add__(self, other):
        keys = set(self.coefficients) | set(other.coefficients)
        return QDivisor({k: self[k] + other[k] for k in keys})

    @property
    def max_coefficient(self):
        return max(self.coefficients.values(), default=Fraction(0))

    def is_zero(self):
        return self.max_coefficient == 0

    def validate(self, X):
        for node in self.coefficients:
            X.check_divisor_node(node)
        return self


@dataclass(frozen=True)
class ThresholdResult:
    """A threshold value with its provenance.

    For ``exactness == LOWER_BOUND`` the ``klt``/``lc`` flags mean
    "guaranteed by the bound".  ``derived_extension`` marks values obtained
    by extending the G/B global threshold argument to general parabolics.
    """

    value: object  # Fraction or INFINITE
    exactness: str
    klt: bool
    lc: bool
    derived_extension: bool = False

    @classmethod
    def from_value(cls, value, exactness, derived_extension=False):
        return cls(value, exactness, value > 1, value >= 1, derived_extension)

    def __str__(self):
        return format_value(self.value)


def _threshold(D):
    a = D.max_coefficient
    return INFINITE if a == 0 else 1 / a


def lct_b_stable(X, D):
    """Exact lct of the B-stable divisor ``sum a_alpha D_alpha`` on ``X``."""
    D.validate(X)
    return ThresholdResult.from_value(_threshold(D), EXACT)


def lct_lower_bound_general(X, D):
    """Lower bound for any effective divisor linearly equivalent to ``sum a_alpha D_alpha``."""
    D.validate(X)
    return ThresholdResult.from_value(_threshold(D), LOWER_BOUND)


def scale(D, c):
    """``c D`` for a positive rational ``c``; thresholds scale by ``1/c``."""
    c = Fraction(c)
    if c <= 0:
        raise DomainError(f"scale factor must be positive, got {c}")
    return QDivisor({k: c * a for k, a in D.coefficients.items()})


def global_lct(X):
    """``inf`` of ``lct(X, Delta)`` over effective ``Delta ~_Q -K_X``.

    Equals ``1 / max c_alpha`` for the anticanonical coefficients; the lower
    bound comes from the B-stable bound and the upper bound from the
    effective divisor ``c_alpha D_alpha``.  Only the ``G/B`` case (value 1/2)
    is classical; other Levi sets are flagged ``derived_extension``.
    """
    D = QDivisor(anticanonical_coefficients(X))
    return ThresholdResult.from_value(_threshold(D), EXACT, derived_extension=bool(X.levi))


def hwang_fiber_threshold(fiber_type, k):
    """``lct(X, k H) = 1/k`` on a maximal-parabolic flag variety ``X`` with ample generator ``H``."""
    if fiber_type is None:
        raise DomainError("a fibre type is required")
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise DomainError(f"k must be a positive integer, got {k!r}")
    return Fraction(1, k)


def fiber_thresholds(X, D):
    """Per-fibre thresholds ``lct(X_beta, D|X_beta)`` for every ``beta`` in ``S \\ I``.

    The restriction is ``a_beta H_beta``; for ``a_beta = p/q`` the threshold
    is ``q * lct(p H_beta) = q/p`` by the scaling rule, and ``inf`` for
    ``a_beta = 0``.
    """
    D.validate(X)
    out = {}
    for beta in X.omitted:
        a = restrict_divisor_to_fiber(X, D, beta)
        if a == 0:
            out[beta] = INFINITE
        else:
            fib = fibration(X, beta)
            out[beta] = a.denominator * hwang_fiber_threshold(fib.fiber_type, a.numerator)
    return out
