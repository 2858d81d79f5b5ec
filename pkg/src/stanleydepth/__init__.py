"""Exact depth and Stanley depth of factors of monomial ideals.

The usual entry points::

    >>> from stanleydepth import parse_factor, depth, sdepth
    >>> F = parse_factor("x2", "x1^2*x2, x1*x2^2")
    >>> depth(F), sdepth(F).value
    (0, 0)
"""
from .checks import (
    Analysis,
    CheckOutcome,
    FuzzConfig,
    check_canonical_invariance,
    check_conjecture_02,
    check_ikm_identity,
    check_index_bound,
    check_prop_31,
    check_prop_31_32,
    check_prop_32,
    check_stanley,
    check_theorem_21_22,
    check_theorem_24,
    check_theorem_27,
    corpus,
    fuzz,
    run_battery,
)
from .depth import BettiTable, BoxExceeded, Caps, ResourceCap, betti_table, depth, taylor_oracle, tor_rank
from .linalg import GF32003, QQ, FieldSpec, rank
from .monomials import (
    EqualIdeals,
    FactorModule,
    MonomialIdeal,
    MonomialParseError,
    NotContained,
    contains,
    divides,
    format_ideal,
    format_monomial,
    intersect,
    lcm,
    make_factor,
    minimalize,
    parse_factor,
    parse_ideal,
    parse_monomial,
)
from .sdepth import (
    HVZPoset,
    IntervalPartition,
    SearchBudgetExceeded,
    build_poset,
    sdepth,
    sdepth_bruteforce,
    sdepth_decision,
    validate_partition,
)
from .transforms import InvariantReport, PolarizationMap, canonical_form, compute_invariants, polarize, type_with_respect_to

