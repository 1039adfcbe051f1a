"""Triangular numbers that are k-fold multiples of other triangular numbers.

For every non-square multiplier k >= 2 the index pairs (t, xi) with
triangular(xi) == k * triangular(t) form an infinite family generated by
step-r linear recurrences.  This package finds the pairs, detects the
recurrence, computes the exact residue classes of xi mod k (which come in
pairs summing to k-1), predicts those classes from the structure of k,
cross-checks against the published sequence catalogue, and exploits the
classes to sieve bounded searches with a gain of about k over the class
count.
"""

from .arith import is_square, isqrt, tri_index, triangular
from .oeis import (
    SEQUENCE_IDS,
    BFileParseError,
    CrosscheckReport,
    OfflineCacheMissError,
    SequenceData,
    SequenceRef,
    crosscheck,
    fetch_bfile,
)
from .residues import (
    BrokenPairingError,
    ResidueSet,
    candidate_residues,
    observed_residues,
    pair_structure,
)
from .rules import (
    COMBINATION_GRID,
    GRID_EQUATION_CONFLICTS,
    RESIDUE_TABLE_ERRATA,
    SUPERSEDING_TABLE,
    ClassificationReport,
    RuleFinding,
    applicable_expressions,
    applicable_rules,
    combination_m,
    equation_combination,
    odd_square_minus_one_solutions,
    odd_square_minus_two_solutions,
    predict_residues,
    regenerate_table3,
    square_plus_one_solutions,
)
from .sieve import BenchReport, DivergenceError, bench, naive_search, sieve_search
from .solver import (
    InconsistentSequenceError,
    InsufficientSolutionsError,
    InvalidMultiplierError,
    RankDetectionError,
    RecurrenceSpec,
    Solution,
    detect_rank,
    extend,
    find_base_solutions,
    generate_solutions,
    solution_sequence,
    solve,
    solve_by_scan,
    validate_multiplier,
    verify_solution,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # arith
    "triangular", "isqrt", "is_square", "tri_index",
    # solver
    "Solution", "RecurrenceSpec", "validate_multiplier", "verify_solution",
    "find_base_solutions", "generate_solutions", "detect_rank", "solve",
    "solve_by_scan", "extend", "solution_sequence",
    "InvalidMultiplierError", "RankDetectionError",
    "InsufficientSolutionsError", "InconsistentSequenceError",
    # residues
    "ResidueSet", "observed_residues", "candidate_residues", "pair_structure",
    "BrokenPairingError",
    # rules
    "RuleFinding", "ClassificationReport", "applicable_rules",
    "applicable_expressions", "combination_m", "equation_combination",
    "regenerate_table3", "predict_residues", "COMBINATION_GRID",
    "GRID_EQUATION_CONFLICTS", "SUPERSEDING_TABLE", "RESIDUE_TABLE_ERRATA",
    "square_plus_one_solutions", "odd_square_minus_one_solutions",
    "odd_square_minus_two_solutions",
    # sieve
    "naive_search", "sieve_search", "bench", "BenchReport", "DivergenceError",
    # oeis
    "SEQUENCE_IDS", "SequenceRef", "SequenceData", "fetch_bfile", "crosscheck",
    "CrosscheckReport", "OfflineCacheMissError", "BFileParseError",
]
