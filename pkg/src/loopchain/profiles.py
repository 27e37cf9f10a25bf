"""Torsion profiles and rank-1 divisor models on chains of loops.

A chain of g loops is governed, for divisor-theoretic purposes, entirely by
its torsion profile (m_1, ..., m_g): the order m_i is 0 when the two marked
points of loop i sit at an irrational ratio of the loop length (infinite
torsion), and otherwise is the least positive integer identifying them.
Divisor classes are handled through one integer coordinate per loop, exact
when m_i = 0 and a residue class mod m_i otherwise, so everything in this
module is exact integer arithmetic.

A degree-k rank-1 divisor class corresponds to a two-column tableau obtained
from the full staircase by deleting k-2 symbols from each column; the
``DeletionSpec`` records those deletions and ``derive_model`` turns a spec
into the concrete coordinate data used by the fill algorithms.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class InvalidSpecError(ValueError):
    """A deletion spec violates one of its invariants."""


def congruent_mod(x: int, y: int, m: int) -> bool:
    """True iff x = y (mod m), where modulus 0 demands exact equality."""
    if m == 0:
        return x == y
    return (x - y) % m == 0


@dataclass(frozen=True)
class TorsionProfile:
    """The vector of torsion orders (m_1, ..., m_g), one per loop."""

    orders: tuple[int, ...]

    def __post_init__(self):
        orders = tuple(int(m) for m in self.orders)
        if len(orders) < 1:
            raise ValueError("a torsion profile needs at least one loop")
        if any(m < 0 for m in orders):
            raise ValueError("torsion orders must be non-negative")
        object.__setattr__(self, "orders", orders)

    @property
    def genus(self) -> int:
        return len(self.orders)

    def order(self, i: int) -> int:
        """Torsion order of loop i (1-based)."""
        if not 1 <= i <= self.genus:
            raise ValueError(f"loop index {i} out of range 1..{self.genus}")
        return self.orders[i - 1]

    def __iter__(self):
        return iter(self.orders)

    def __len__(self) -> int:
        return len(self.orders)


@dataclass(frozen=True)
class DeletionSpec:
    """Deletions defining a degree-k rank-1 divisor tableau.

    ``col1_deleted`` lists the k-2 symbols removed from column 1 of the
    staircase (each in 2..g), ``col0_deleted`` the k-2 symbols removed from
    column 0 (each in 1..g-1).  The symbol removed from column 1 at position
    i sits in row a_i - 2, the one removed from column 0 in row b_i - 1; the
    interleaving condition b_i >= a_i - 1 says no column-0 deletion happens
    strictly above its matching column-1 deletion, which is exactly what
    keeps the rows of the deleted tableau increasing.
    """

    genus: int
    col1_deleted: tuple[int, ...] = field(kw_only=True)
    col0_deleted: tuple[int, ...] = field(kw_only=True)

    def __post_init__(self):
        g = int(self.genus)
        a = tuple(sorted(int(s) for s in self.col1_deleted))
        b = tuple(sorted(int(s) for s in self.col0_deleted))
        object.__setattr__(self, "genus", g)
        object.__setattr__(self, "col1_deleted", a)
        object.__setattr__(self, "col0_deleted", b)
        if len(a) != len(b):
            raise InvalidSpecError(
                "both columns must lose the same number of symbols"
            )
        k = len(a) + 2
        if g < k:
            raise InvalidSpecError(f"genus {g} is smaller than the degree {k}")
        if any(not 2 <= s <= g for s in a):
            raise InvalidSpecError("column-1 deletions must lie in 2..g")
        if any(not 1 <= s <= g - 1 for s in b):
            raise InvalidSpecError("column-0 deletions must lie in 1..g-1")
        if len(set(a)) != len(a) or len(set(b)) != len(b) or set(a) & set(b):
            raise InvalidSpecError("deleted symbols must be distinct")
        if any(bi < ai - 1 for ai, bi in zip(a, b)):
            raise InvalidSpecError(
                "deletions must interleave: b_i >= a_i - 1 for all i"
            )

    @property
    def degree(self) -> int:
        return len(self.col1_deleted) + 2

    def column_symbols(self, col: int) -> tuple[int, ...]:
        """Symbols surviving in the given column, in increasing order."""
        g = self.genus
        if col == 0:
            gone = set(self.col0_deleted)
            return tuple(s for s in range(1, g) if s not in gone)
        if col == 1:
            gone = set(self.col1_deleted)
            return tuple(s for s in range(2, g + 1) if s not in gone)
        raise ValueError("column must be 0 or 1")


@dataclass(frozen=True)
class DivisorModel:
    """A deletion spec together with its derived profile and coordinates.

    ``base_coords[i-1]`` is the diagonal offset y - x of a box of symbol i in
    the deletion tableau (the column-0 box when the symbol has one, for
    determinism).  It is exact when m_i = 0 and a class representative mod
    m_i otherwise; all consumers reduce.  A symbol deleted from its only
    column appears nowhere, its coordinate is None and it is never congruent
    anywhere (a generic, irrational position).
    """

    spec: DeletionSpec
    profile: TorsionProfile
    base_coords: tuple[int | None, ...]

    @property
    def genus(self) -> int:
        return self.spec.genus

    @property
    def degree(self) -> int:
        return self.spec.degree

    def _check_symbol(self, i: int):
        if not 1 <= i <= self.genus:
            raise ValueError(f"symbol {i} out of range 1..{self.genus}")

    def base_coord(self, i: int) -> int | None:
        self._check_symbol(i)
        return self.base_coords[i - 1]

    def coord(self, i: int, c: int) -> int | None:
        """Exact coordinate of symbol i for the c-fold divisor.

        Satisfies coord(i, c+1) = coord(i, c) + coord(i, 1) - (i-1), hence
        equals c*coord(i, 1) - (c-1)*(i-1).  None for absent symbols.
        """
        self._check_symbol(i)
        if c < 1:
            raise ValueError("the multiple c must be positive")
        base = self.base_coords[i - 1]
        if base is None:
            return None
        return c * base - (c - 1) * (i - 1)

    def congruent(self, s: int, offset: int, c: int) -> bool:
        """Can symbol s sit on diagonal offset y - x for the c-fold divisor?"""
        value = self.coord(s, c)
        if value is None:
            return False
        return congruent_mod(offset, value, self.profile.order(s))


def derive_model(spec: DeletionSpec) -> DivisorModel:
    """Build the divisor model forced by a deletion spec.

    Symbols appearing once in the deletion tableau get torsion 0; a symbol
    appearing in both columns sits in rows i-1-d0(i) and i-2-d1(i), where
    d0/d1 count smaller deleted symbols per column, so the lattice distance
    between its boxes, and hence its torsion order, is 2 + d1(i) - d0(i).
    """
    g = spec.genus
    col0_gone = set(spec.col0_deleted)
    col1_gone = set(spec.col1_deleted)
    orders: list[int] = []
    coords: list[int | None] = []
    for i in range(1, g + 1):
        in_col0 = 1 <= i <= g - 1 and i not in col0_gone
        in_col1 = 2 <= i <= g and i not in col1_gone
        d0 = sum(1 for s in spec.col0_deleted if s < i)
        d1 = sum(1 for s in spec.col1_deleted if s < i)
        if in_col0 and in_col1:
            orders.append(2 + d1 - d0)
            coords.append(i - 1 - d0)
        elif in_col0:
            orders.append(0)
            coords.append(i - 1 - d0)
        elif in_col1:
            orders.append(0)
            coords.append(i - 3 - d1)
        else:
            # deleted from its only column; position stays generic
            orders.append(0)
            coords.append(None)
    return DivisorModel(
        spec=spec,
        profile=TorsionProfile(tuple(orders)),
        base_coords=tuple(coords),
    )


def is_hyperelliptic(profile: TorsionProfile) -> bool:
    """True iff every interior torsion order divides 2.

    The first and last loops are unconstrained (everything divides 0), and a
    0 in the interior fails since 0 does not divide 2.
    """
    if profile.genus < 2:
        raise ValueError("hyperelliptic classification needs genus >= 2")
    return all(m in (1, 2) for m in profile.orders[1:-1])


def _pattern_entry(i: int, a: int, b: int, g: int) -> int:
    if i in (1, a, b, g):
        return 0
    if a < i < b:
        return 3
    return 2


def _divides_pattern(profile: TorsionProfile, a: int, b: int) -> bool:
    g = profile.genus
    for i, m in enumerate(profile.orders, start=1):
        entry = _pattern_entry(i, a, b, g)
        if entry == 0:
            continue
        if m == 0 or entry % m != 0:
            return False
    return True


def classify_trigonal(profile: TorsionProfile) -> tuple[int, int] | None:
    """Positions (a, b) of the interior torsion-free loops, if trigonal.

    Searches for 1 <= a <= b <= g such that the profile termwise divides the
    pattern with zeros at 1, a, b, g, threes strictly between a and b, and
    twos elsewhere; profiles that are hyperelliptic are excluded.  Returns
    the lexicographically smallest match, or None.
    """
    if profile.genus < 3:
        raise ValueError("trigonal classification needs genus >= 3")
    if is_hyperelliptic(profile):
        return None
    g = profile.genus
    for a in range(1, g + 1):
        for b in range(a, g + 1):
            if _divides_pattern(profile, a, b):
                return (a, b)
    return None


_fill_masks: dict[tuple[int, int], tuple[int, int, int]] = {}


def _two_column_masks(rows: int, m: int) -> tuple[int, int, int]:
    """Transition masks for the two-column fillability sweep.

    States are pairs (n0, n1) of filled-box counts per column with
    n1 <= n0 <= rows, encoded as bit n0*(rows+1) + n1.
    """
    key = (rows, m)
    cached = _fill_masks.get(key)
    if cached is not None:
        return cached
    width = rows + 1
    mask0 = mask1 = mask_both = 0
    for n0 in range(rows + 1):
        for n1 in range(n0 + 1):
            bit = 1 << (n0 * width + n1)
            if n0 < rows:
                mask0 |= bit
            if n1 < n0:
                mask1 |= bit
            if n0 < rows and n1 < n0 and congruent_mod(n0, n1 - 1, m):
                mask_both |= bit
    _fill_masks[key] = (mask0, mask1, mask_both)
    return mask0, mask1, mask_both


def _two_column_fillable(profile: TorsionProfile, rows: int) -> bool:
    """Is there a displacement tableau on rows x 2 under this profile?

    Dynamic program over symbols 1..g; a symbol may be skipped, placed at
    the next free row of either column, or placed in both columns at once
    (lattice offsets n0 and n1 - 1, so that needs n0 = n1 - 1 mod m).
    Placing into column 1 requires column 0 to be strictly ahead, which is
    what keeps every completed row increasing.
    """
    if rows <= 0:
        return True
    width = rows + 1
    state = 1  # (0, 0)
    for m in profile.orders:
        mask0, mask1, mask_both = _two_column_masks(rows, m)
        state |= (
            ((state & mask0) << width)
            | ((state & mask1) << 1)
            | ((state & mask_both) << (width + 1))
        )
    target = rows * width + rows
    return bool((state >> target) & 1)


def gonality(profile: TorsionProfile) -> int:
    """Smallest degree of a rank-1 divisor class on the chain.

    Smallest k such that a displacement tableau exists on the
    (g-k+1) x 2 rectangle; k = g always works for g >= 2, and the
    single-loop chain is assigned gonality 1.
    """
    g = profile.genus
    if g == 1:
        return 1
    for k in range(2, g + 1):
        if _two_column_fillable(profile, g - k + 1):
            return k
    return g


def i_blocks(profile: TorsionProfile, i: int) -> list[tuple[int, int]]:
    """Maximal runs of loops whose torsion orders divide i, as (lo, hi).

    Bounds are 1-based and inclusive.  Runs are cut by loops whose order
    does not divide i; order 0 always cuts (no positive integer is a
    multiple of 0), and the virtual loops 0 and g+1 cut as well.
    """
    if i < 2:
        raise ValueError("blocks are defined for i >= 2")
    blocks: list[tuple[int, int]] = []
    start = None
    for j, m in enumerate(profile.orders, start=1):
        inside = m != 0 and i % m == 0
        if inside and start is None:
            start = j
        elif not inside and start is not None:
            blocks.append((start, j - 1))
            start = None
    if start is not None:
        blocks.append((start, profile.genus))
    return blocks
