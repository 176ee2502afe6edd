"""Exact computation with weighted and signed weighted Egyptian numbers."""

from egyptian.arith import Rational, rat_binary, rat_format, rat_parse
from egyptian.sets import (
    Arithmetic,
    Descriptor,
    Geometric,
    Naturals,
    NumeratorSet,
    Polynomial,
    Primes,
    TriBool,
    WithPrefix,
    contains,
    elements_upto,
    infinite_common_intersection,
    min_element,
)
from egyptian.engine import (
    BudgetExceeded,
    BudgetExhausted,
    Finite,
    IndexTuple,
    Infinite,
    Problem,
    Representation,
    SignedRepresentation,
    ZeroFamily,
    classify_signed_zero_pair,
    count_representations,
    enumerate_representations,
    enumerate_signed,
    signed_search,
    j_set_membership,
    min_denominator_bound,
    value_of,
)
from egyptian.topology import (
    GapCertificate,
    find_avoiding_subinterval,
    gap_below,
    predecessor,
    signed_probe,
)
from egyptian.classic import (
    InfeasibleConversion,
    UnitFractionSum,
    extend_length,
    greedy_expand,
    pair_merge_split,
    split_unit,
    to_distinct,
    weighted_rep_to_egyptian,
    weighted_to_unit_sum,
)

__version__ = "0.1.0"
