"""Parity game solver toolkit: Zielonka's recursive algorithm, a generic
value-iteration solver parameterized by an arbitrary universal tree, the
naive and succinct universal-tree constructions, and brute-force machinery
for validating universal-tree size bounds at desk scale."""

from .game_core import (
    ADAM,
    EVE,
    Cycle,
    ParityGame,
    Region,
    classify_cycle,
    generate_random_game,
    parse_pgsolver,
    validate_game,
    write_pgsolver,
)
from .oracle import solve_bruteforce
from .progress_measure import value_iteration
from .universal_tree import make_naive_tree, make_succinct_tree
from .zielonka import extract_signature, solve_zielonka

__all__ = [
    "ADAM",
    "EVE",
    "Cycle",
    "ParityGame",
    "Region",
    "classify_cycle",
    "generate_random_game",
    "parse_pgsolver",
    "validate_game",
    "write_pgsolver",
    "solve_bruteforce",
    "value_iteration",
    "make_naive_tree",
    "make_succinct_tree",
    "extract_signature",
    "solve_zielonka",
]
