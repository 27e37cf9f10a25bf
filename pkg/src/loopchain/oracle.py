"""Exhaustive tableau search, used to certify the greedy engine.

Everything here is deliberately independent of the greedy fill: tableaux
are enumerated by plain backtracking in the same diagonal order (one
traversal order, two policies), and ranks are found by scanning rectangle
sizes.  On desk-scale instances these searches are the ground truth the
engine is tested against.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .engine import _OffsetIndex, compute_ranks, diagonal_boxes
from .profiles import (
    DeletionSpec,
    DivisorModel,
    InvalidSpecError,
    TorsionProfile,
    congruent_mod,
    derive_model,
)
from .tableaux import DisplacementTableau, RectShape


class BudgetExhausted(RuntimeError):
    """The backtracking node budget ran out."""


@dataclass(frozen=True)
class EnumerationBudget:
    """Node cap for backtracking searches.

    A node is one tentative box placement.  ``on_exhaustion`` picks the
    policy: "error" raises, "report-partial" returns what was found (a
    lower bound on the full answer).
    """

    max_nodes: int = 10_000_000
    on_exhaustion: str = "error"

    def __post_init__(self):
        if self.max_nodes < 1:
            raise ValueError("the node budget must be positive")
        if self.on_exhaustion not in ("error", "report-partial"):
            raise ValueError("on_exhaustion must be error or report-partial")


DEFAULT_BUDGET = EnumerationBudget()


class _Counter:
    __slots__ = ("nodes", "limit")

    def __init__(self, limit: int):
        self.nodes = 0
        self.limit = limit

    def tick(self) -> bool:
        self.nodes += 1
        return self.nodes <= self.limit


def _search(
    source: DivisorModel | TorsionProfile,
    shape: RectShape | tuple[int, int],
    c: int | None,
    budget: EnumerationBudget,
    stop_after: int | None,
) -> tuple[list[DisplacementTableau], bool]:
    """Backtrack over all fillings of the rectangle; returns (found, complete).

    With a divisor model, ``c`` must be given and every box is constrained
    by its own diagonal congruence.  With a bare profile, ``c`` is None and
    a repeated symbol is only held to the offset of its first occurrence.
    """
    rows, cols = shape
    if rows < 1 or cols < 1:
        raise ValueError("enumeration needs a nonempty rectangle")
    divisor_mode = isinstance(source, DivisorModel)
    if divisor_mode and c is None:
        raise ValueError("a divisor model needs the multiple c")
    if not divisor_mode and c is not None:
        raise ValueError("a bare profile takes no multiple")
    g = source.genus
    profile = source.profile if divisor_mode else source
    index = _OffsetIndex(source, c) if divisor_mode else None
    order = list(diagonal_boxes(rows, cols))
    grid = [[0] * cols for _ in range(rows)]
    first_offset: dict[int, int] = {}
    counter = _Counter(budget.max_nodes)
    found: list[DisplacementTableau] = []
    exhausted = False

    def candidates(x: int, y: int, floor: int):
        offset = y - x
        if divisor_mode:
            pool = index.candidates(offset)
            for s in pool:
                if s > floor:
                    yield s
        else:
            for s in range(floor + 1, g + 1):
                seen = first_offset.get(s)
                if seen is None or congruent_mod(
                    offset, seen, profile.order(s)
                ):
                    yield s

    def fill(pos: int) -> bool:
        nonlocal exhausted
        if pos == len(order):
            found.append(
                DisplacementTableau(
                    rows=rows,
                    cols=cols,
                    cells=tuple(tuple(r) for r in grid),
                )
            )
            return stop_after is not None and len(found) >= stop_after
        x, y = order[pos]
        left = grid[y][x - 1] if x > 0 else 0
        above = grid[y - 1][x] if y > 0 else 0
        for s in candidates(x, y, max(left, above)):
            if not counter.tick():
                exhausted = True
                return True
            grid[y][x] = s
            fresh = s not in first_offset
            if fresh:
                first_offset[s] = y - x
            done = fill(pos + 1)
            if fresh:
                del first_offset[s]
            grid[y][x] = 0
            if done:
                return True
        return False

    fill(0)
    if exhausted and budget.on_exhaustion == "error":
        raise BudgetExhausted(
            f"enumeration exceeded {budget.max_nodes} nodes"
        )
    return found, not exhausted


def enumerate_tableaux(
    source: DivisorModel | TorsionProfile,
    shape: RectShape | tuple[int, int],
    c: int | None = None,
    budget: EnumerationBudget | None = None,
) -> list[DisplacementTableau]:
    """All displacement tableaux on the rectangle, lexicographic in fill order."""
    found, _ = _search(source, shape, c, budget or DEFAULT_BUDGET, None)
    return found


def any_tableau_exists(
    source: DivisorModel | TorsionProfile,
    shape: RectShape | tuple[int, int],
    c: int | None = None,
    budget: EnumerationBudget | None = None,
) -> bool:
    """Nonemptiness check that stops at the first tableau found."""
    found, _ = _search(source, shape, c, budget or DEFAULT_BUDGET, 1)
    return bool(found)


def max_rank(
    model: DivisorModel,
    c: int,
    budget: EnumerationBudget | None = None,
) -> int:
    """Largest r whose rectangle is fillable for the c-fold divisor.

    Ranks at or below kc - g are free (the rectangle has no rows); above
    that the rectangle (g - kc + r) x (r + 1) is searched directly, scanning
    r upward until the search comes back empty.
    """
    if c < 1:
        raise ValueError("the multiple c must be positive")
    budget = budget or DEFAULT_BUDGET
    g = model.genus
    k = model.degree
    r = max(k * c - g, 0)
    while True:
        rows = g - k * c + (r + 1)
        if rows > g:
            # more rows than symbols can strictly increase through
            return r
        if not any_tableau_exists(model, (rows, r + 2), c, budget):
            return r
        r += 1


def torus_dimension(t: DisplacementTableau, g: int) -> int:
    """Genus minus the number of distinct symbols used by the tableau."""
    used = t.symbols()
    if used and (min(used) < 1 or max(used) > g):
        raise ValueError("tableau symbols exceed the genus")
    return g - len(used)


@dataclass(frozen=True)
class ExistenceResult:
    """Boolean answer plus whether it came from the degree bound."""

    exists: bool
    by_degree_bound: bool = False

    def __bool__(self) -> bool:
        return self.exists


def special_divisors_exist(
    profile: TorsionProfile,
    degree: int,
    rank: int,
    budget: EnumerationBudget | None = None,
) -> ExistenceResult:
    """Is there a divisor class of this degree and rank on the chain?

    For rank <= degree - genus the answer is yes outright (the rectangle is
    empty and the bound comes from the degree alone); otherwise profile-mode
    enumeration on (g - d + r) rows x (r + 1) columns decides it.
    """
    g = profile.genus
    rows = g - degree + rank
    if rows <= 0:
        return ExistenceResult(True, by_degree_bound=True)
    if rank + 1 > g or rows > g:
        return ExistenceResult(False)
    return ExistenceResult(
        any_tableau_exists(profile, (rows, rank + 1), None, budget)
    )


def all_deletion_specs(g: int) -> list[DeletionSpec]:
    """Every valid deletion spec of genus g, all degrees."""
    specs: list[DeletionSpec] = []
    for k in range(2, g + 1):
        n = k - 2
        for col1 in itertools.combinations(range(2, g + 1), n):
            for col0 in itertools.combinations(range(1, g), n):
                try:
                    specs.append(
                        DeletionSpec(
                            g, col1_deleted=col1, col0_deleted=col0
                        )
                    )
                except InvalidSpecError:
                    continue
    return specs


@dataclass
class VerificationReport:
    """Outcome of the engine-versus-search agreement sweep."""

    specs: int = 0
    rank_checks: int = 0
    emptiness_checks: int = 0
    dominance_checks: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_agreement(
    max_genus: int, budget: EnumerationBudget | None = None
) -> VerificationReport:
    """Certify the greedy engine against exhaustive search.

    For every deletion spec up to the genus cap and every special multiple
    c: the greedy rank must match the searched rank, rectangles the greedy
    fill gave up on must admit no tableau at all, and every tableau on the
    successful rectangle must dominate the greedy fill box by box.
    """
    budget = budget or DEFAULT_BUDGET
    report = VerificationReport()
    for g in range(2, max_genus + 1):
        for spec in all_deletion_specs(g):
            report.specs += 1
            model = derive_model(spec)
            computed = compute_ranks(model, keep_attempts=True)
            seq = computed.sequence
            label = (
                f"g={g} col1={spec.col1_deleted} col0={spec.col0_deleted}"
            )
            for c in range(1, seq.c_stop + 1):
                report.rank_checks += 1
                searched = max_rank(model, c, budget)
                if searched != seq.ranks[c]:
                    report.failures.append(
                        f"{label} c={c}: greedy rank {seq.ranks[c]}, "
                        f"search says {searched}"
                    )
            for attempt in computed.attempts:
                if attempt.status == "nonspecial":
                    continue
                everything = enumerate_tableaux(
                    model, attempt.shape, attempt.c, budget
                )
                if attempt.status == "failed":
                    report.emptiness_checks += 1
                    if everything:
                        report.failures.append(
                            f"{label} c={attempt.c} shape={attempt.shape}: "
                            "greedy failed but tableaux exist"
                        )
                    continue
                greedy = computed.tableaux[attempt.c]
                if not everything:
                    report.failures.append(
                        f"{label} c={attempt.c}: successful shape "
                        "enumerates empty"
                    )
                    continue
                for t in everything:
                    report.dominance_checks += 1
                    if any(
                        t.entry(x, y) < greedy.entry(x, y)
                        for x, y, _ in greedy.boxes()
                    ):
                        report.failures.append(
                            f"{label} c={attempt.c}: a tableau undercuts "
                            "the greedy fill"
                        )
                        break
    return report
