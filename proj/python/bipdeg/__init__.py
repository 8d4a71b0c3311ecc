"""Decide whether a graphical degree sequence has a bipartite realization."""

from ._bipdeg import (
    GenerationError,
    InvalidInputError,
    NotGraphicalError,
    Verdict,
    compute_bounds,
    complement,
    conjugate,
    decide,
    dominates,
    gale_ryser,
    graphical_sequences,
    is_graphical,
    murphy_bound,
    normalize,
    oracle_decide,
    phase1,
    random_graphical,
    residue,
    small_term_combinations,
    tabulate,
)

__all__ = [
    "GenerationError",
    "InvalidInputError",
    "NotGraphicalError",
    "Verdict",
    "compute_bounds",
    "complement",
    "conjugate",
    "decide",
    "dominates",
    "gale_ryser",
    "graphical_sequences",
    "is_graphical",
    "murphy_bound",
    "normalize",
    "oracle_decide",
    "phase1",
    "random_graphical",
    "residue",
    "small_term_combinations",
    "tabulate",
]
