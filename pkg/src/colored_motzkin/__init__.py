"""Bijection between colored Motzkin paths and standard Young tableaux of bounded height."""
from .bijection import (
    ConstructionError,
    IterationRecord,
    Trace,
    invert_record,
    phi,
    phi_inv,
    phi_inv_trace,
    phi_trace,
)
from .core import (
    LEVEL,
    InvalidWordError,
    PathClass,
    ValidationReport,
    check_nesting_properties,
    classify,
    critical_up_steps,
    down,
    exceeding_up_steps,
    format_path,
    format_word,
    heights,
    letter,
    level_steps,
    matching_partner,
    odd_columns,
    parse_path,
    parse_word,
    shape_of,
    up,
    validate_motzkin,
    validate_yamanouchi,
)
from .enumeration import (
    LevelPolicy,
    count_motzkin_dp,
    count_syt_dp,
    gen_motzkin,
    gen_syt,
)
from .formulas import catalan, central_binomial, syt_count_formula
from .render import render_path, render_tableau
from .verify import (
    VerifyReport,
    verify_all,
    verify_bijection,
    verify_counts,
    verify_monotonicity,
    verify_statistic,
)

__version__ = "0.1.0"
