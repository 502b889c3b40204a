"""
Simple Game Module

Coalition-level representation of simple games: construction from minimal
winning coalitions or from weights, evaluation, maximal losing coalitions,
player equivalence and the equivalence partition.
"""

import random
from collections.abc import Iterable, Iterator, Sequence

import structlog

from games.models import (
    Coalition,
    GameValidationError,
    Partition,
    ProfileVector,
    SimpleGame,
    WeightedSpec,
    coalition_of,
    coalition_sort_key,
    players_of,
)

log = structlog.get_logger(__name__)


def _check_n(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise GameValidationError(f"player count must be a positive integer, got {n!r}")


def _check_coalition(n: int, s: Coalition) -> None:
    if s < 0 or s >> n:
        raise GameValidationError(f"coalition mask {s:#x} has players outside 1..{n}")


def _check_player(n: int, i: int) -> None:
    if not 1 <= i <= n:
        raise GameValidationError(f"player {i} outside 1..{n}")


def submasks(mask: Coalition) -> Iterator[Coalition]:
    """All subsets of ``mask``, from ``mask`` itself down to the empty set."""
    s = mask
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & mask


def from_minimal_winning(n: int, sets: Iterable[Coalition]) -> SimpleGame:
    """Build the game whose winning coalitions are the supersets of ``sets``."""
    _check_n(n)
    members = list(sets)
    if not members:
        raise GameValidationError("at least one minimal winning coalition is required")
    for s in members:
        _check_coalition(n, s)
        if s == 0:
            raise GameValidationError("the empty coalition cannot be winning")

    unique = sorted(set(members), key=coalition_sort_key)
    for index, small in enumerate(unique):
        for large in unique[index + 1 :]:
            if small & large == small:
                raise GameValidationError(
                    f"not an antichain: {_fmt(small)} is contained in {_fmt(large)}"
                )
    return SimpleGame(n=n, min_winning=frozenset(unique))


def from_player_sets(n: int, sets: Iterable[Iterable[int]]) -> SimpleGame:
    """Same as ``from_minimal_winning`` but with 1-indexed player lists."""
    _check_n(n)
    return from_minimal_winning(n, [coalition_of(players, n) for players in sets])


def from_weighted(spec: WeightedSpec) -> SimpleGame:
    """Weighted voting game: S wins iff its total weight reaches the quota."""
    n = len(spec.weights)
    weight_of = [0] * (1 << n)
    minimal = []
    for s in range(1, 1 << n):
        low = s & -s
        player = low.bit_length() - 1
        weight_of[s] = weight_of[s ^ low] + spec.weights[player]
        if weight_of[s] < spec.quota:
            continue
        # minimal iff dropping the lightest member loses
        lightest = min(spec.weights[i] for i in range(n) if s >> i & 1)
        if weight_of[s] - lightest < spec.quota:
            minimal.append(s)
    log.debug("game.weighted.built", n=n, quota=spec.quota, minimal=len(minimal))
    return from_minimal_winning(n, minimal)


def value(game: SimpleGame, s: Coalition) -> int:
    """1 if some minimal winning coalition is contained in ``s``, else 0."""
    _check_coalition(game.n, s)
    for m in game.min_winning:
        if m & s == m:
            return 1
    return 0


def winning_coalitions(game: SimpleGame) -> list[Coalition]:
    """All winning coalitions in (size, lexicographic) order."""
    winning = [s for s in range(1 << game.n) if value(game, s)]
    return sorted(winning, key=coalition_sort_key)


def maximal_losing(game: SimpleGame) -> set[Coalition]:
    """Losing coalitions whose every one-player extension wins."""
    full = game.grand_coalition
    result = set()
    for s in range(full):
        if value(game, s):
            continue
        outside = full & ~s
        if all(value(game, s | (1 << i)) for i in range(game.n) if outside >> i & 1):
            result.add(s)
    return result


def are_equivalent(game: SimpleGame, i: int, j: int) -> bool:
    """Players i and j (1-indexed) are interchangeable in every coalition.

    Evaluated by definition: v(S ∪ {i}) = v(S ∪ {j}) for all S avoiding both.
    """
    _check_player(game.n, i)
    _check_player(game.n, j)
    if i == j:
        raise GameValidationError("equivalence is only tested for distinct players")
    bit_i, bit_j = 1 << (i - 1), 1 << (j - 1)
    rest = game.grand_coalition & ~(bit_i | bit_j)
    return all(
        value(game, s | bit_i) == value(game, s | bit_j) for s in submasks(rest)
    )


def _swap_bits(s: Coalition, bit_a: int, bit_b: int) -> Coalition:
    if bool(s & bit_a) != bool(s & bit_b):
        return s ^ (bit_a | bit_b)
    return s


def transposition_fixes(game: SimpleGame, a: int, b: int) -> bool:
    """Whether swapping 0-indexed players a and b maps the game onto itself.

    This holds exactly when the two players are equivalent, and only needs one
    pass over the minimal winning coalitions.
    """
    bit_a, bit_b = 1 << a, 1 << b
    mw = game.min_winning
    return all(_swap_bits(m, bit_a, bit_b) in mw for m in mw)


def equivalence_partition(game: SimpleGame) -> Partition:
    """Equivalence classes ordered by size descending, then smallest member."""
    representatives: list[int] = []
    classes: list[int] = []
    for player in range(game.n):
        for index, rep in enumerate(representatives):
            if transposition_fixes(game, rep, player):
                classes[index] |= 1 << player
                break
        else:
            representatives.append(player)
            classes.append(1 << player)
    # representatives are ascending, so a stable sort breaks size ties by them
    ordered = sorted(classes, key=lambda c: -c.bit_count())
    return Partition(classes=tuple(ordered))


def profile(s: Coalition, p: Partition) -> ProfileVector:
    """Per-class member counts of coalition ``s``."""
    covered = 0
    for c in p.classes:
        covered |= c
    if s < 0 or s & ~covered:
        raise GameValidationError(f"coalition mask {s:#x} is not inside the partition")
    return tuple((s & c).bit_count() for c in p.classes)


def relabel(game: SimpleGame, sigma: Sequence[int]) -> SimpleGame:
    """Rename player i to sigma[i-1] (1-indexed permutation of 1..n)."""
    if sorted(sigma) != list(range(1, game.n + 1)):
        raise GameValidationError(f"{list(sigma)} is not a permutation of 1..{game.n}")
    images = [1 << (target - 1) for target in sigma]
    relabeled = []
    for m in game.min_winning:
        image = 0
        for i in range(game.n):
            if m >> i & 1:
                image |= images[i]
        relabeled.append(image)
    return SimpleGame(n=game.n, min_winning=frozenset(relabeled))


def random_game(rng: random.Random, n: int) -> SimpleGame:
    """Random antichain: random nonempty coalitions, keeping the inclusion-minimal ones."""
    _check_n(n)
    picks = {rng.randrange(1, 1 << n) for _ in range(rng.randint(1, 2 * n))}
    minimal = [s for s in picks if not any(o != s and o & s == o for o in picks)]
    return from_minimal_winning(n, minimal)


def random_permutation(rng: random.Random, n: int) -> list[int]:
    """A uniformly random 1-indexed permutation of 1..n."""
    sigma = list(range(1, n + 1))
    rng.shuffle(sigma)
    return sigma


def _fmt(s: Coalition) -> str:
    return "{" + ",".join(str(p) for p in players_of(s)) + "}"
