"""Exact-arithmetic toolkit for generalized Markov numbers.

Computes the numbers indexed by Farey labels via lattice sign sequences and
continued fractions, counts perfect matchings of the associated snake and
band graphs, evaluates the family recurrences and growth limits, and
regenerates the small-parameter reference tables with errata detection.
"""

from .farey import MarkovTriple, ReducedFraction, generate_tree, mediant, reduce_fraction
from .markov import (
    MarkovRecord,
    band_markov,
    extended_markov,
    family_recurrence,
    gen_markov,
    make_tables,
    ord_markov,
    structure_report,
    verify_triple,
)

__all__ = [
    "MarkovRecord",
    "MarkovTriple",
    "ReducedFraction",
    "band_markov",
    "extended_markov",
    "family_recurrence",
    "gen_markov",
    "generate_tree",
    "make_tables",
    "mediant",
    "ord_markov",
    "reduce_fraction",
    "structure_report",
    "verify_triple",
]

__version__ = "0.1.0"
