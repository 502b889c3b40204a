"""
Game Models Module

This module defines the immutable value types shared by every layer:
- Coalitions (bit masks) and simple games
- Player partitions and the (n̄, M) vector parameterization
- Condition reports
- x/y/z decompositions and count records
- Oracle classification reports
"""

from dataclasses import dataclass, field
from enum import Enum as PyEnum
from typing import TypeAlias

# A coalition is a bit mask over 0-indexed players; bit i set means player i+1
# is a member. All I/O is 1-indexed.
Coalition: TypeAlias = int
CountVector: TypeAlias = tuple[int, ...]
ProfileVector: TypeAlias = tuple[int, ...]
MinimalWinningMatrix: TypeAlias = tuple[tuple[int, ...], ...]


class GameValidationError(ValueError):
    """Raised when a game, vector game or parameter violates its contract."""


class FormulaError(ArithmeticError):
    """Raised when a closed-form evaluation is not exact or not self-consistent."""


class OracleRangeError(GameValidationError):
    """Raised when the brute-force oracle is asked for an unsupported n."""


class Comparison(PyEnum):
    less = "less"
    equal = "equal"
    greater = "greater"
    incomparable = "incomparable"


def coalition_of(players, n: int) -> Coalition:
    """Build a coalition mask from 1-indexed player numbers."""
    mask = 0
    for player in players:
        if isinstance(player, bool) or not isinstance(player, int):
            raise GameValidationError(f"player {player!r} is not an integer")
        if not 1 <= player <= n:
            raise GameValidationError(f"player {player} outside 1..{n}")
        mask |= 1 << (player - 1)
    return mask


def players_of(coalition: Coalition) -> tuple[int, ...]:
    """1-indexed ascending member list of a coalition."""
    players = []
    index = 0
    while coalition:
        if coalition & 1:
            players.append(index + 1)
        coalition >>= 1
        index += 1
    return tuple(players)


def coalition_sort_key(coalition: Coalition) -> tuple[int, tuple[int, ...]]:
    """Order coalitions by size, then lexicographically by members."""
    return coalition.bit_count(), players_of(coalition)


@dataclass(frozen=True, slots=True)
class SimpleGame:
    """A simple game given by its antichain of minimal winning coalitions.

    Instances are built through ``simple_game.from_minimal_winning`` (or the
    other constructors there), which enforce the antichain invariants.
    """

    n: int
    min_winning: frozenset[Coalition]

    @property
    def grand_coalition(self) -> Coalition:
        return (1 << self.n) - 1

    def sorted_min_winning(self) -> list[Coalition]:
        return sorted(self.min_winning, key=coalition_sort_key)


@dataclass(frozen=True, slots=True)
class WeightedSpec:
    """Weights (one per player) and a quota for a weighted voting game."""

    weights: tuple[int, ...]
    quota: int

    def __post_init__(self):
        if not self.weights:
            raise GameValidationError("a weighted game needs at least one player")
        if any(w < 0 for w in self.weights):
            raise GameValidationError("weights must be non-negative")
        if self.quota <= 0:
            raise GameValidationError("quota must be positive")
        if sum(self.weights) < self.quota:
            raise GameValidationError(
                f"quota {self.quota} exceeds total weight {sum(self.weights)}"
            )


@dataclass(frozen=True, slots=True)
class Partition:
    """Ordered list of disjoint, nonempty classes covering players 1..n."""

    classes: tuple[Coalition, ...]

    def __post_init__(self):
        if not self.classes:
            raise GameValidationError("a partition needs at least one class")
        covered = 0
        for index, c in enumerate(self.classes, start=1):
            if c <= 0:
                raise GameValidationError(f"class {index} is empty")
            if covered & c:
                raise GameValidationError(
                    f"class {index} {list(players_of(c))} overlaps an earlier class"
                )
            covered |= c
        if covered & (covered + 1):
            raise GameValidationError(
                f"classes cover {list(players_of(covered))}, not players 1..{covered.bit_length()}"
            )

    @property
    def t(self) -> int:
        return len(self.classes)

    @property
    def sizes(self) -> CountVector:
        return tuple(c.bit_count() for c in self.classes)

    def as_players(self) -> list[tuple[int, ...]]:
        return [players_of(c) for c in self.classes]


@dataclass(frozen=True, slots=True)
class VectorGame:
    """A pair (n̄, M): class sizes plus the r×t matrix of minimal winning vectors."""

    n_bar: CountVector
    matrix: MinimalWinningMatrix

    def __post_init__(self):
        width = len(self.n_bar)
        if width == 0:
            raise GameValidationError("n_bar must have at least one entry")
        if not self.matrix:
            raise GameValidationError("matrix must have at least one row")
        for row in self.matrix:
            if len(row) != width:
                raise GameValidationError(
                    f"matrix row {list(row)} has width {len(row)}, expected {width}"
                )

    @property
    def n(self) -> int:
        return sum(self.n_bar)

    @property
    def t(self) -> int:
        return len(self.n_bar)

    @property
    def r(self) -> int:
        return len(self.matrix)


@dataclass(frozen=True)
class ConditionFailure:
    condition: str  # e.g. "b", "c.1", "c.2", "d", "a", "e"
    detail: str


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of checking a vector game against conditions (a)-(e)."""

    structural_ok: bool
    bounds_ok: bool
    separation_ok: bool
    canonical_ok: bool
    failures: tuple[ConditionFailure, ...] = ()

    @property
    def all_ok(self) -> bool:
        return not self.failures


@dataclass(frozen=True, slots=True)
class XyzDecomposition:
    """Coordinates (x_1..x_r, y_1..y_r, z_1, z_2) of a two-class pair with r ≥ 2."""

    r: int
    x: tuple[int, ...]
    y: tuple[int, ...]
    z1: int
    z2: int

    def __post_init__(self):
        if self.r < 2:
            raise GameValidationError(f"decomposition needs r >= 2, got {self.r}")
        if len(self.x) != self.r or len(self.y) != self.r:
            raise GameValidationError("x and y must both have length r")
        if min(self.x + self.y + (self.z1, self.z2)) < 0:
            raise GameValidationError("decomposition entries must be non-negative")

    @property
    def total(self) -> int:
        return sum(self.x) + sum(self.y) + self.z1 + self.z2

    def as_tuple(self) -> tuple[int, ...]:
        return (*self.x, *self.y, self.z1, self.z2)


@dataclass(frozen=True, slots=True)
class CountRecord:
    """Closed-form counts for one n."""

    n: int
    cases: int
    violations: int
    r1_count: int
    total_pairs: int
    symmetric: int
    bipartite: int


@dataclass(frozen=True, slots=True)
class RCountRecord:
    """Closed-form counts for one (n, r)."""

    n: int
    r: int
    pairs: int
    symmetric: int
    bipartite: int


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    expected: object = None
    actual: object = None


@dataclass
class ClassificationReport:
    """Brute-force tallies of isomorphism classes by number of player classes."""

    n: int
    labeled_total: int
    by_t: dict[int, int]
    checked_against: list[CheckResult] = field(default_factory=list)

    @property
    def class_total(self) -> int:
        return sum(self.by_t.values())

    @property
    def all_passed(self) -> bool:
        return all(check.passed for check in self.checked_against)
