"""Greedy diagonal fills, rank sequences, and composite scrollar invariants.

The rank of the c-fold divisor is read off rectangle by rectangle: the
c-fold class has rank at least r exactly when a displacement tableau on
(g - kc + r) rows and r + 1 columns exists whose every box (x, y) with
symbol s satisfies y - x = coord(s, c) mod m_s.  The greedy fill below
constructs the pointwise-minimal such tableau when one exists, so a greedy
failure certifies emptiness whenever the deletion spec has distinct deleted
symbols; that is the only hypothesis under which the engine runs.
"""

from __future__ import annotations

import bisect
import warnings
from dataclasses import dataclass

from .profiles import DivisorModel
from .tableaux import DisplacementTableau, RectShape


class InternalInconsistencyError(RuntimeError):
    """The rank recursion reached a state the theory rules out."""


@dataclass(frozen=True)
class FillFailure:
    """First box, in diagonal order, that no symbol can fill."""

    x: int
    y: int


def diagonal_boxes(rows: int, cols: int):
    """Boxes in diagonal order x + y = 0, 1, ..., leftmost box first."""
    for d in range(rows + cols - 1):
        for x in range(max(0, d - rows + 1), min(cols - 1, d) + 1):
            yield x, d - x


class _OffsetIndex:
    """Sorted admissible symbols per diagonal offset, for one (model, c)."""

    def __init__(self, model: DivisorModel, c: int):
        self.model = model
        self.c = c
        self._lists: dict[int, list[int]] = {}

    def candidates(self, offset: int) -> list[int]:
        found = self._lists.get(offset)
        if found is None:
            model = self.model
            c = self.c
            found = [
                s
                for s in range(1, model.genus + 1)
                if model.congruent(s, offset, c)
            ]
            self._lists[offset] = found
        return found

    def smallest_above(self, offset: int, floor: int) -> int | None:
        """Least admissible symbol at this offset strictly above floor."""
        pool = self.candidates(offset)
        pos = bisect.bisect_right(pool, floor)
        if pos == len(pool):
            return None
        return pool[pos]


def greedy_fill(
    model: DivisorModel, shape: RectShape | tuple[int, int], c: int
) -> DisplacementTableau | FillFailure:
    """Fill the rectangle diagonal by diagonal with minimal symbols.

    Each box receives the smallest symbol exceeding its left and upper
    neighbours that is congruent on the box's diagonal; the first box with
    no such symbol is returned as a failure, which is a normal outcome.
    """
    rows, cols = shape
    if rows < 1 or cols < 1:
        raise ValueError("greedy fill needs a nonempty rectangle")
    index = _OffsetIndex(model, c)
    grid: list[list[int]] = [[0] * cols for _ in range(rows)]
    for x, y in diagonal_boxes(rows, cols):
        left = grid[y][x - 1] if x > 0 else 0
        above = grid[y - 1][x] if y > 0 else 0
        symbol = index.smallest_above(y - x, max(left, above))
        if symbol is None:
            return FillFailure(x, y)
        grid[y][x] = symbol
    return DisplacementTableau(
        rows=rows, cols=cols, cells=tuple(tuple(r) for r in grid)
    )


_DEAD = -1


def _master_fill(index: _OffsetIndex, rows: int, cols: int):
    """Greedy-fill a rectangle, marking stuck boxes dead and continuing.

    A box whose neighbours are alive but which admits no symbol is dead, and
    deadness propagates right and down.  Because the greedy value of a box
    depends only on its left and upper neighbours, the live part of this
    grid restricts to the greedy fill of every sub-rectangle that avoids the
    dead set, so one master fill answers all the nested rank attempts.
    """
    grid: list[list[int]] = [[0] * cols for _ in range(rows)]
    dead: list[tuple[int, int]] = []
    for x, y in diagonal_boxes(rows, cols):
        left = grid[y][x - 1] if x > 0 else 0
        above = grid[y - 1][x] if y > 0 else 0
        if left == _DEAD or above == _DEAD:
            grid[y][x] = _DEAD
            dead.append((x, y))
            continue
        symbol = index.smallest_above(y - x, max(left, above))
        if symbol is None:
            grid[y][x] = _DEAD
            dead.append((x, y))
        else:
            grid[y][x] = symbol
    return grid, dead


@dataclass(frozen=True)
class RankSequence:
    """Ranks of the c-fold divisor for c = 0..c_stop.

    ``c_stop`` is the nonspecial threshold, the smallest c whose rank equals
    kc - g; past it the rank grows by exactly k per step and is not stored.
    """

    genus: int
    degree: int
    ranks: tuple[int, ...]
    c_stop: int

    def rank(self, c: int) -> int:
        """Rank of the c-fold divisor, extended past c_stop by kc - g."""
        if c < 0:
            raise ValueError("c must be non-negative")
        if c <= self.c_stop:
            return self.ranks[c]
        return self.degree * c - self.genus

    @property
    def special_ranks(self) -> tuple[int, ...]:
        """Ranks for c = 0..c_stop-1, the rectangles that are nonempty."""
        return self.ranks[:-1]


@dataclass(frozen=True)
class Attempt:
    """One rectangle tried while computing the rank of the c-fold divisor."""

    c: int
    rank_tried: int
    shape: RectShape
    status: str  # "ok", "failed", or "nonspecial"
    failure: tuple[int, int] | None = None


@dataclass(frozen=True)
class RankComputation:
    sequence: RankSequence
    tableaux: dict[int, DisplacementTableau]
    attempts: tuple[Attempt, ...]


def compute_ranks(
    model: DivisorModel, keep_attempts: bool = False
) -> RankComputation:
    """Run the rank recursion and keep the successful tableaux.

    For each c the candidate ranks rk(c-1) + k - j, j = 1..k-1, are tried in
    decreasing order; the first rectangle that fills sets the rank.  A
    candidate whose rectangle has no rows is granted outright (the class is
    nonspecial there) and terminates the recursion.
    """
    g = model.genus
    k = model.degree
    ranks = [0]
    tableaux: dict[int, DisplacementTableau] = {}
    attempts: list[Attempt] = []
    cap = -((-(2 * g - 1)) // k) + 1
    c = 0
    while True:
        c += 1
        if c > cap:
            raise InternalInconsistencyError(
                f"rank recursion passed the degree bound at c={c}"
            )
        prev = ranks[c - 1]
        r_hi = prev + k - 1
        rows_hi = g - k * c + r_hi
        cols_hi = r_hi + 1
        index = _OffsetIndex(model, c)
        grid: list[list[int]] | None = None
        dead: list[tuple[int, int]] = []
        if rows_hi >= 1:
            grid, dead = _master_fill(index, rows_hi, cols_hi)
        rank_c: int | None = None
        for j in range(1, k):
            r = prev + k - j
            rows = g - k * c + r
            cols = r + 1
            if rows <= 0:
                rank_c = k * c - g
                if keep_attempts:
                    attempts.append(
                        Attempt(c, r, RectShape(rows, cols), "nonspecial")
                    )
                break
            blocker = next(
                ((bx, by) for bx, by in dead if bx < cols and by < rows), None
            )
            if blocker is None:
                rank_c = r
                tableaux[c] = DisplacementTableau(
                    rows=rows,
                    cols=cols,
                    cells=tuple(tuple(grid[y][:cols]) for y in range(rows)),
                )
                if keep_attempts:
                    attempts.append(Attempt(c, r, RectShape(rows, cols), "ok"))
                break
            if keep_attempts:
                attempts.append(
                    Attempt(c, r, RectShape(rows, cols), "failed", blocker)
                )
        if rank_c is None:
            raise InternalInconsistencyError(
                f"no admissible rank step at c={c}"
            )
        ranks.append(rank_c)
        if c == 1 and rank_c != 1:
            warnings.warn(
                f"base divisor has rank {rank_c}, not 1; invariant reports "
                "assume a rank-1 base",
                stacklevel=2,
            )
        if rank_c == k * c - g:
            break
    return RankComputation(
        sequence=RankSequence(
            genus=g, degree=k, ranks=tuple(ranks), c_stop=len(ranks) - 1
        ),
        tableaux=tableaux,
        attempts=tuple(attempts),
    )


def rank_sequence(model: DivisorModel) -> RankSequence:
    """Ranks rk(c) for c = 0..c_stop."""
    return compute_ranks(model).sequence


def first_jump(seq: RankSequence) -> int | None:
    """Smallest c with rk(c) > c.

    Searched through c_stop and, failing that, continued along the
    nonspecial tail rk(c) = kc - g, where the jump lands at
    floor(g / (k-1)) + 1 once k >= 3.  Degree-2 sequences never jump and
    give None.
    """
    for c in range(1, seq.c_stop + 1):
        if seq.ranks[c] > c:
            return c
    if seq.degree == 2:
        return None
    return seq.genus // (seq.degree - 1) + 1


@dataclass(frozen=True)
class ScrollarReport:
    """Composite scrollar invariants and the shape data around them."""

    genus: int
    degree: int
    sigma: tuple[int, ...]
    scrollar: tuple[int, ...]
    first_jump: int | None
    nonspecial: int


def scrollar_invariants(seq: RankSequence) -> ScrollarReport:
    """Composite invariants sigma_j = max_c (c+1)(j+1) - rk(c) - 1.

    The maximum is taken over 0 <= c <= c_stop: past c_stop the candidate
    equals c(j + 1 - k) + j + g, non-increasing in c for j <= k - 1 and
    already attained at c_stop for j = k - 1.
    """
    k = seq.degree
    sigma = tuple(
        max(
            (c + 1) * (j + 1) - seq.ranks[c] - 1
            for c in range(seq.c_stop + 1)
        )
        for j in range(k)
    )
    scrollar = tuple(sigma[j] - sigma[j - 1] for j in range(1, k))
    return ScrollarReport(
        genus=seq.genus,
        degree=k,
        sigma=sigma,
        scrollar=scrollar,
        first_jump=first_jump(seq),
        nonspecial=seq.c_stop,
    )
