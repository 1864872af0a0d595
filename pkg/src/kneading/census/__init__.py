"""Exhaustive census of kneading cycles and checks of the sum-invariant conjectures."""

from .engine import MAX_N, CensusColumns, run_census
from .records import (
    CSV_HEADER,
    CycleRecord,
    compositions,
    cycle_census,
    record_to_json,
    records_from_columns,
    write_csv,
)
from .verify import (
    Report,
    c_cycle_pattern,
    c_tilde_cycle_pattern,
    census_columns,
    mobius,
    predicted_cycle_count,
    principal_cycle_pattern,
    short_cycle_table,
    sum_bound_check,
    verify_composition_conjecture,
    verify_divisor_conjecture,
    verify_formula_conjecture,
    verify_pell_path,
)
