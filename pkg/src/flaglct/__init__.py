"""Exact combinatorics of flag varieties G/P and log canonical thresholds of B-stable Q-divisors."""

from .errors import CapExceeded, DomainError, FlagLCTError, ParseError
from .flag import (
    FlagVariety,
    anticanonical_coefficients,
    curve_divisor_pairing,
    dimension,
    fibration,
    fibration_tower,
    flag_variety,
    poincare_dual_pairing,
    restrict_divisor_to_fiber,
    schubert_cells,
)
from .lct import (
    INFINITE,
    QDivisor,
    ThresholdResult,
    fiber_thresholds,
    global_lct,
    hwang_fiber_threshold,
    lct_b_stable,
    lct_lower_bound_general,
    scale,
)
from .roots import Weight, build_root_system, coroot, dynkin_component, pairing
from .weyl import (
    WeylElement,
    duality_involution,
    enumerate_bruteforce,
    group_order,
    longest_element,
    minimal_coset_reps,
    simple_reflection,
)

__version__ = "0.1.0"
