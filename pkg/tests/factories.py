"""Small game builders shared by the test modules."""

from games.models import SimpleGame, WeightedSpec
from games.simple_game import (
    from_player_sets,
    from_weighted,
    random_game,
    random_permutation,
)

__all__ = ["dictator", "unanimity", "quota_game", "random_game", "random_permutation"]


def dictator(n: int = 2) -> SimpleGame:
    return from_player_sets(n, [[1]])


def unanimity(n: int) -> SimpleGame:
    return from_player_sets(n, [list(range(1, n + 1))])


def quota_game(n: int, q: int) -> SimpleGame:
    return from_weighted(WeightedSpec(weights=(1,) * n, quota=q))
