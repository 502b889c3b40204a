"""
Vector Game Module

The (n̄, M) parameterization of simple games by equivalence classes of
players: vector orders, expansion to coalitions, condition checking, the
class-permutation action and canonical forms under player relabeling.
"""

import itertools
from collections.abc import Iterator, Sequence

from games.models import (
    Comparison,
    ConditionFailure,
    ConditionReport,
    CountVector,
    GameValidationError,
    MinimalWinningMatrix,
    Partition,
    ProfileVector,
    SimpleGame,
    VectorGame,
)
from games.simple_game import equivalence_partition, from_minimal_winning, profile


def partial_compare(x: ProfileVector, y: ProfileVector) -> Comparison:
    """Componentwise order ⪯; vectors may be incomparable."""
    if len(x) != len(y):
        raise GameValidationError(f"length mismatch: {len(x)} vs {len(y)}")
    below = all(a <= b for a, b in zip(x, y))
    above = all(a >= b for a, b in zip(x, y))
    if below and above:
        return Comparison.equal
    if below:
        return Comparison.less
    if above:
        return Comparison.greater
    return Comparison.incomparable


def dominates(x: ProfileVector, y: ProfileVector) -> bool:
    """x ⪰ y componentwise."""
    return all(a >= b for a, b in zip(x, y))


def column_major(matrix: MinimalWinningMatrix) -> tuple[int, ...]:
    """Flatten column by column: (x_11, ..., x_r1, x_12, ..., x_rt)."""
    if not matrix:
        return ()
    return tuple(row[k] for k in range(len(matrix[0])) for row in matrix)


def _is_matrix(value) -> bool:
    return bool(value) and isinstance(value[0], (tuple, list))


def lex_compare(x, y) -> Comparison:
    """Lexicographic comparison of equal-length vectors or equal-shape matrices.

    Matrices are compared through their column-major flattenings.
    """
    if _is_matrix(x) != _is_matrix(y):
        raise GameValidationError("cannot compare a vector with a matrix")
    if _is_matrix(x):
        shape_x = (len(x), len(x[0]))
        shape_y = (len(y), len(y[0]))
        if shape_x != shape_y:
            raise GameValidationError(f"shape mismatch: {shape_x} vs {shape_y}")
        x, y = column_major(x), column_major(y)
    elif len(x) != len(y):
        raise GameValidationError(f"length mismatch: {len(x)} vs {len(y)}")
    x, y = tuple(x), tuple(y)
    if x == y:
        return Comparison.equal
    return Comparison.greater if x > y else Comparison.less


def _bounds_failures(vg: VectorGame) -> list[ConditionFailure]:
    failures = []
    for k, size in enumerate(vg.n_bar):
        if size <= 0:
            failures.append(ConditionFailure("b", f"n_bar[{k + 1}]={size} is not positive"))
    for h, row in enumerate(vg.matrix, start=1):
        if not all(0 <= m <= size for m, size in zip(row, vg.n_bar)):
            failures.append(
                ConditionFailure("b", f"row {h} {list(row)} not within 0..{list(vg.n_bar)}")
            )
        if not any(row):
            failures.append(
                ConditionFailure("b", f"row {h} is all zero, so the empty coalition would win")
            )
    return failures


def _order_failures(vg: VectorGame) -> list[ConditionFailure]:
    failures = []
    rows = vg.matrix
    for i, j in itertools.combinations(range(len(rows)), 2):
        if partial_compare(rows[i], rows[j]) != Comparison.incomparable:
            failures.append(
                ConditionFailure(
                    "c.1", f"rows {i + 1} {list(rows[i])} and {j + 1} {list(rows[j])} are comparable"
                )
            )
    for h in range(len(rows) - 1):
        if not rows[h] > rows[h + 1]:
            failures.append(
                ConditionFailure(
                    "c.2",
                    f"rows {h + 1} {list(rows[h])} and {h + 2} {list(rows[h + 1])} "
                    "are not strictly decreasing",
                )
            )
    return failures


def _is_losing(candidate: ProfileVector, rows: MinimalWinningMatrix) -> bool:
    return not any(dominates(candidate, row) for row in rows)


def _separated(vg: VectorGame, i: int, j: int) -> bool:
    """Some row can trade one member of class i for class j (or back) and lose."""
    for row in vg.matrix:
        for sign in (1, -1):
            candidate = list(row)
            candidate[i] += sign
            candidate[j] -= sign
            if not all(0 <= c <= size for c, size in zip(candidate, vg.n_bar)):
                continue
            if _is_losing(tuple(candidate), vg.matrix):
                return True
    return False


def stabilizer_permutations(n_bar: CountVector) -> Iterator[tuple[int, ...]]:
    """All 0-indexed class permutations π with n̄^π = n̄."""
    blocks: dict[int, list[int]] = {}
    for k, size in enumerate(n_bar):
        blocks.setdefault(size, []).append(k)
    groups = list(blocks.values())
    for choice in itertools.product(*(itertools.permutations(g) for g in groups)):
        perm = [0] * len(n_bar)
        for group, image in zip(groups, choice):
            for k, target in zip(group, image):
                perm[k] = target
        yield tuple(perm)


def _permuted_matrix(matrix: MinimalWinningMatrix, perm: Sequence[int]) -> MinimalWinningMatrix:
    rows = (tuple(row[p] for p in perm) for row in matrix)
    return tuple(sorted(rows, reverse=True))


def check_conditions(vg: VectorGame) -> ConditionReport:
    """Check (a)-(e): bounds, antichain, row order, class separation, canonicity."""
    bounds = _bounds_failures(vg)
    order = _order_failures(vg)

    separation = []
    for i, j in itertools.combinations(range(vg.t), 2):
        if not _separated(vg, i, j):
            separation.append(
                ConditionFailure("d", f"classes {i + 1} and {j + 1} are not separated")
            )

    canonical = []
    for k in range(vg.t - 1):
        if vg.n_bar[k] < vg.n_bar[k + 1]:
            canonical.append(
                ConditionFailure("a", f"n_bar {list(vg.n_bar)} is not weakly decreasing")
            )
            break
    flat = column_major(vg.matrix)
    for perm in stabilizer_permutations(vg.n_bar):
        permuted = _permuted_matrix(vg.matrix, perm)
        if column_major(permuted) > flat:
            canonical.append(
                ConditionFailure(
                    "e",
                    f"class permutation {[p + 1 for p in perm]} gives larger "
                    f"matrix {[list(row) for row in permuted]}",
                )
            )
            break

    return ConditionReport(
        structural_ok=not bounds and not order,
        bounds_ok=not bounds,
        separation_ok=not separation,
        canonical_ok=not canonical,
        failures=tuple(bounds + order + separation + canonical),
    )


def expand(vg: VectorGame) -> SimpleGame:
    """Coalition-level game: consecutive blocks of players form the classes."""
    report = check_conditions(vg)
    if not report.structural_ok:
        details = "; ".join(f.detail for f in report.failures if f.condition in {"b", "c.1", "c.2"})
        raise GameValidationError(f"cannot expand ({list(vg.n_bar)}, M): {details}")

    blocks = []
    offset = 0
    for size in vg.n_bar:
        blocks.append(list(range(offset, offset + size)))
        offset += size

    minimal = []
    for row in vg.matrix:
        per_block = [
            [sum(1 << p for p in chosen) for chosen in itertools.combinations(block, count)]
            for block, count in zip(blocks, row)
        ]
        for parts in itertools.product(*per_block):
            minimal.append(sum(parts))
    return from_minimal_winning(vg.n, minimal)


def block_partition(n_bar: CountVector) -> Partition:
    """The partition into consecutive blocks used by ``expand``."""
    classes = []
    offset = 0
    for size in n_bar:
        classes.append(((1 << size) - 1) << offset)
        offset += size
    return Partition(classes=tuple(classes))


def minimal_winning_vectors(game: SimpleGame, p: Partition) -> MinimalWinningMatrix:
    """Distinct profiles of the minimal winning coalitions, decreasing."""
    profiles = {profile(m, p) for m in game.min_winning}
    return tuple(sorted(profiles, reverse=True))


def apply_class_permutation(vg: VectorGame, pi: Sequence[int]) -> VectorGame:
    """(n̄^π, M^π) for a 1-indexed permutation π of the classes."""
    if sorted(pi) != list(range(1, vg.t + 1)):
        raise GameValidationError(f"{list(pi)} is not a permutation of 1..{vg.t}")
    perm = [p - 1 for p in pi]
    return VectorGame(
        n_bar=tuple(vg.n_bar[p] for p in perm),
        matrix=_permuted_matrix(vg.matrix, perm),
    )


def canonical_form(game: SimpleGame) -> VectorGame:
    """Distinguished (n̄, M) of the game's isomorphism class.

    Classes come sorted by size; among the permutations of equal-size classes
    the one with the lexicographically largest matrix wins.
    """
    partition = equivalence_partition(game)
    n_bar = partition.sizes
    matrix = minimal_winning_vectors(game, partition)
    best, best_flat = matrix, column_major(matrix)
    for perm in stabilizer_permutations(n_bar):
        permuted = _permuted_matrix(matrix, perm)
        flat = column_major(permuted)
        if flat > best_flat:
            best, best_flat = permuted, flat
    return VectorGame(n_bar=n_bar, matrix=best)


def is_isomorphic(g1: SimpleGame, g2: SimpleGame) -> bool:
    """Equal player counts and equal canonical forms."""
    if g1.n != g2.n:
        return False
    return canonical_form(g1) == canonical_form(g2)
