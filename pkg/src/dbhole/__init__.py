"""Exact survivor-set analysis for the doubling map with an interval hole."""

from .automaton import Hole, SurvivorAutomaton, build_automaton
from .holes import (
    CatalogEntry,
    GapInterval,
    SturmianHoleBracket,
    SupercriticalReport,
    catalog,
    certify_entry,
    gap_interval,
    sample_K,
    sturmian_hole,
    test_supercritical,
)
from .rationals import (
    BudgetExceededError,
    OrbitResult,
    binary_expansion,
    doubling_map,
    format_fraction,
    orbit,
    parse_fraction,
    pi_value,
)
from .survivor import (
    Classification,
    Kind,
    TrapReport,
    classify,
    cylinder_counts,
    entropy,
    enumerate_surviving_cycles,
    is_trap,
    locate_entropy_transition,
    sigma_n_dimension,
)
from .words import (
    EvPeriodicWord,
    characteristic_prefix,
    cf_of_fraction,
    convergents,
    cyclic_extremes,
    farey_parents,
    is_balanced,
    lex_compare,
    standard_words,
    thue_morse,
)

__version__ = "0.1.0"
