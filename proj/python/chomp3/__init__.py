"""Three-row Chomp solver: f(q,r) tables, P-positions and opening moves."""

import json

from ._core import (
    FormatError,
    InvalidPosition,
    Move,
    OutcomeTable,
    OutOfRange,
    Position,
    ResourceExhausted,
    Table,
    TheoremViolation,
    blocked_sets,
    build,
    diagonal_set,
    import_table,
    make_move,
    mex,
    moves,
    opening_move,
    options,
    outcome,
    row_start_set,
    solve,
    verify_lines,
    winning_moves,
)

__version__ = "0.1.0"


def verify(table, oracle_bound=None, cubic_bound=None):
    """Run the check suite; one dict per check, in a fixed order."""
    return [json.loads(line) for line in verify_lines(table, oracle_bound, cubic_bound)]


__all__ = [
    "FormatError",
    "InvalidPosition",
    "Move",
    "OutOfRange",
    "OutcomeTable",
    "Position",
    "ResourceExhausted",
    "Table",
    "TheoremViolation",
    "blocked_sets",
    "build",
    "diagonal_set",
    "import_table",
    "make_move",
    "mex",
    "moves",
    "opening_move",
    "options",
    "outcome",
    "row_start_set",
    "solve",
    "verify",
    "winning_moves",
]
