"""Generator for labyrinth repositories: a grid with walls becomes movement
combinators ``up``/``down``/``left``/``right`` (one arrow conjunct per legal
one-step move between free cells) plus a nullary ``start`` combinator at the
entrance.  Positions are ``Pos(column, row)``."""

from __future__ import annotations

from .repository import Repository, load_repository
from .types import Arrow, Ctor, Type, intersect


class LabyrinthError(Exception):
    pass


_MOVES = [
    ("up", (0, -1)),
    ("down", (0, 1)),
    ("left", (-1, 0)),
    ("right", (1, 0)),
]


def _pos(col: int, row: int) -> Type:
    return Ctor("Pos", (Ctor(str(col)), Ctor(str(row))))


def gen_labyrinth(
    rows: int,
    cols: int,
    walls: set[tuple[int, int]],
    start: tuple[int, int],
) -> dict:
    """Repository document for the grid; deterministic conjunct order
    (row-major by source cell)."""
    for col, row in walls:
        if not (0 <= col < cols and 0 <= row < rows):
            raise LabyrinthError(f"wall out of bounds: ({col}, {row})")
    if start in walls:
        raise LabyrinthError(f"start position {start} is a wall")
    if not (0 <= start[0] < cols and 0 <= start[1] < rows):
        raise LabyrinthError(f"start position {start} out of bounds")

    def free(col: int, row: int) -> bool:
        return 0 <= col < cols and 0 <= row < rows and (col, row) not in walls

    combinators = []
    for name, (dc, dr) in _MOVES:
        conjuncts: list[Type] = []
        for row in range(rows):
            for col in range(cols):
                if free(col, row) and free(col + dc, row + dr):
                    conjuncts.append(
                        Arrow(_pos(col, row), _pos(col + dc, row + dr))
                    )
        if conjuncts:
            combinators.append(
                {"name": name, "type": str(intersect(conjuncts))}
            )
    combinators.append({"name": "start", "type": str(_pos(*start))})
    return {"combinators": combinators, "taxonomy": []}


def labyrinth_repository(
    rows: int, cols: int, walls: set[tuple[int, int]], start: tuple[int, int]
) -> Repository:
    return load_repository(gen_labyrinth(rows, cols, walls, start))
