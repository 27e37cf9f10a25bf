"""Rectangular displacement tableaux and their combinatorial types.

Boxes are addressed as (x, y) = (column, row), both 0-based, and the
quantity y - x is the diagonal offset a box imposes on its symbol.  The
empty shape (zero rows) is legal and stands for the nonspecial regime,
where existence is automatic and there is nothing to fill.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .profiles import DeletionSpec, TorsionProfile, congruent_mod


class RectShape(NamedTuple):
    rows: int
    cols: int


@dataclass(frozen=True)
class DisplacementTableau:
    """A total filling of a rows x cols rectangle by symbols in 1..g."""

    rows: int
    cols: int
    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        cells = tuple(tuple(int(v) for v in row) for row in self.cells)
        if len(cells) != self.rows or any(len(r) != self.cols for r in cells):
            raise ValueError("cell grid does not match the declared shape")
        object.__setattr__(self, "cells", cells)

    @property
    def shape(self) -> RectShape:
        return RectShape(self.rows, self.cols)

    def entry(self, x: int, y: int) -> int:
        return self.cells[y][x]

    def boxes(self) -> Iterator[tuple[int, int, int]]:
        """Yield (x, y, symbol) for every box, row by row."""
        for y, row in enumerate(self.cells):
            for x, value in enumerate(row):
                yield x, y, value

    def symbols(self) -> set[int]:
        return {v for row in self.cells for v in row}

    def to_json_dict(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [v for row in self.cells for v in row],
        }


def base_tableau(g: int) -> DisplacementTableau:
    """The unique tableau on the (g-1) x 2 rectangle: rows (y+1, y+2).

    Column 0 cannot hold g and column 1 cannot hold 1, which pins both
    columns to consecutive runs.
    """
    if g < 2:
        raise ValueError("the two-column staircase needs genus >= 2")
    return DisplacementTableau(
        rows=g - 1, cols=2, cells=tuple((y + 1, y + 2) for y in range(g - 1))
    )


def divisor_tableau(spec: DeletionSpec) -> DisplacementTableau:
    """Delete the spec's symbols from the staircase and close the columns up."""
    col0 = spec.column_symbols(0)
    col1 = spec.column_symbols(1)
    return DisplacementTableau(
        rows=len(col0), cols=2, cells=tuple(zip(col0, col1))
    )


def is_valid_tableau(t: DisplacementTableau, profile: TorsionProfile) -> bool:
    """Check strict increase plus the repeated-symbol congruences."""
    g = profile.genus
    first_offset: dict[int, int] = {}
    for x, y, v in t.boxes():
        if not 1 <= v <= g:
            return False
        if x + 1 < t.cols and t.entry(x + 1, y) <= v:
            return False
        if y + 1 < t.rows and t.entry(x, y + 1) <= v:
            return False
        offset = y - x
        seen = first_offset.setdefault(v, offset)
        if not congruent_mod(offset, seen, profile.order(v)):
            return False
    return True


@dataclass(frozen=True)
class DyckWord:
    """A balanced parenthesis word whose prefixes never go negative."""

    text: str

    def __post_init__(self):
        depth = 0
        for ch in self.text:
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            else:
                raise ValueError(f"letter {ch!r} is not a parenthesis")
            if depth < 0:
                raise ValueError(f"{self.text!r} has a negative prefix")
        if depth != 0:
            raise ValueError(f"{self.text!r} is not balanced")

    def __str__(self) -> str:
        return self.text

    def __len__(self) -> int:
        return len(self.text)


def dyck_word_of(spec: DeletionSpec) -> DyckWord:
    """The parenthesis word of the deletion pattern.

    Deleted boxes are read top to bottom; a column-1 deletion (row a-2)
    opens, a column-0 deletion (row b-1) closes.  Deletions landing on the
    same row are read column-1 first, so the interleaving invariant yields
    exactly the nonnegative-prefix property.
    """
    events = [(a - 2, 0, "(") for a in spec.col1_deleted]
    events += [(b - 1, 1, ")") for b in spec.col0_deleted]
    events.sort()
    return DyckWord("".join(letter for _, _, letter in events))


def enumerate_types(k: int) -> list[DyckWord]:
    """All parenthesis words of length 2(k-2), in lexicographic order.

    These index the combinatorial types of degree-k rank-1 tableaux; there
    are C_{k-2} of them (Catalan).
    """
    if k < 2:
        raise ValueError("the degree must be at least 2")
    n = k - 2
    words: list[str] = []

    def extend(prefix: str, open_used: int, depth: int):
        if len(prefix) == 2 * n:
            words.append(prefix)
            return
        if open_used < n:
            extend(prefix + "(", open_used + 1, depth + 1)
        if depth > 0:
            extend(prefix + ")", open_used, depth - 1)

    extend("", 0, 0)
    return [DyckWord(w) for w in words]


def render_text(t: DisplacementTableau) -> str:
    """Rows top to bottom, entries right-aligned in width-3 fields."""
    return "\n".join("".join(f"{v:3d}" for v in row) for row in t.cells)
