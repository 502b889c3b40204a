"""
Oracle Module

Independent brute-force ground truth. Every labeled simple game on n players
is generated as an antichain of coalitions, isomorphism classes are keyed by
their canonical form, and the tallies are checked against the closed forms and
the pair generators.
"""

import concurrent.futures
import time
from collections import Counter
from collections.abc import Iterator

import structlog

from core.logging import GameEvents
from games.enumeration import closed_formulas, enumerate_bipartite_canonical
from games.models import (
    CheckResult,
    ClassificationReport,
    Coalition,
    OracleRangeError,
    SimpleGame,
    VectorGame,
    coalition_sort_key,
)
from games.vector_game import canonical_form

log = structlog.get_logger(__name__)

MAX_ORACLE_N = 6
MAX_TRUTH_TABLE_N = 4


def _check_range(n: int, minimum: int = 1, allow_n6: bool = True) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or not minimum <= n <= MAX_ORACLE_N:
        raise OracleRangeError(f"oracle supports {minimum} <= n <= {MAX_ORACLE_N}, got {n!r}")
    if n == MAX_ORACLE_N and not allow_n6:
        raise OracleRangeError("n=6 enumerates 7,828,352 games and must be enabled explicitly")


def _lattice(n: int) -> tuple[list[Coalition], list[int]]:
    """Nonempty coalitions in (size, lex) order and, per index, the bit set of
    indices of its supersets (itself included)."""
    subsets = sorted(range(1, 1 << n), key=coalition_sort_key)
    supersets = []
    for s in subsets:
        bits = 0
        for index, other in enumerate(subsets):
            if other & s == s:
                bits |= 1 << index
        supersets.append(bits)
    return subsets, supersets


def _extend(n, subsets, supersets, chosen, allowed, start) -> Iterator[SimpleGame]:
    # later coalitions are never smaller, so only supersets need pruning
    remaining = allowed >> start << start
    while remaining:
        low = remaining & -remaining
        remaining ^= low
        index = low.bit_length() - 1
        chosen.append(subsets[index])
        yield SimpleGame(n=n, min_winning=frozenset(chosen))
        yield from _extend(
            n, subsets, supersets, chosen, allowed & ~supersets[index], index + 1
        )
        chosen.pop()


def _games_starting_with(n: int, first: int, lattice=None) -> Iterator[SimpleGame]:
    """Labeled games whose (size, lex)-first minimal winning coalition is
    the coalition at lattice index ``first``."""
    subsets, supersets = lattice or _lattice(n)
    chosen = [subsets[first]]
    yield SimpleGame(n=n, min_winning=frozenset(chosen))
    full = (1 << len(subsets)) - 1
    yield from _extend(n, subsets, supersets, chosen, full & ~supersets[first], first + 1)


def enumerate_labeled_games(n: int) -> Iterator[SimpleGame]:
    """Every nonempty antichain of nonempty coalitions of 1..n, exactly once."""
    _check_range(n)
    lattice = _lattice(n)
    for first in range(len(lattice[0])):
        yield from _games_starting_with(n, first, lattice)


def count_monotone_functions(n: int) -> int:
    """Monotone Boolean functions on n variables, by checking every truth table."""
    if not 0 <= n <= MAX_TRUTH_TABLE_N:
        raise OracleRangeError(f"truth-table count supports 0 <= n <= {MAX_TRUTH_TABLE_N}")
    points = 1 << n
    # lacking[i]: truth-table positions whose assignment has variable i unset
    lacking = [sum(1 << s for s in range(points) if not s >> i & 1) for i in range(n)]
    count = 0
    for table in range(1 << points):
        if all(((table & lacking[i]) << (1 << i)) & ~table == 0 for i in range(n)):
            count += 1
    return count


def _tally_partition(n: int, first: int) -> Counter:
    """Canonical-form counts over one partition of the labeled-game stream."""
    tally: Counter = Counter()
    for game in _games_starting_with(n, first):
        tally[canonical_form(game)] += 1
    return tally


def _tally(n: int, workers: int = 1) -> Counter:
    started = time.perf_counter()
    partitions = range((1 << n) - 1)
    tally: Counter = Counter()
    if workers <= 1:
        for first in partitions:
            tally.update(_tally_partition(n, first))
    else:
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as executor:
            futures = [executor.submit(_tally_partition, n, first) for first in partitions]
            for future in concurrent.futures.as_completed(futures):
                tally.update(future.result())
    log.info(
        GameEvents.ORACLE_PARTITION_DONE,
        n=n,
        workers=workers,
        classes=len(tally),
        elapsed_s=round(time.perf_counter() - started, 3),
    )
    return tally


def _report_from(n: int, tally: Counter) -> ClassificationReport:
    by_t: Counter = Counter(len(key.n_bar) for key in tally)
    report = ClassificationReport(
        n=n,
        labeled_total=sum(tally.values()),
        by_t=dict(sorted(by_t.items())),
    )
    log.info(
        GameEvents.ORACLE_CLASSIFIED,
        n=n,
        labeled_total=report.labeled_total,
        by_t=report.by_t,
    )
    return report


def classify_by_t(n: int, workers: int = 1, allow_n6: bool = False) -> ClassificationReport:
    """Isomorphism classes of all simple games on n players, tallied by t."""
    _check_range(n, allow_n6=allow_n6)
    return _report_from(n, _tally(n, workers))


def _check(name: str, expected, actual) -> CheckResult:
    result = CheckResult(name=name, passed=expected == actual, expected=expected, actual=actual)
    if not result.passed:
        log.warning(GameEvents.ORACLE_CHECK_FAILED, check=name, expected=str(expected), actual=str(actual))
    return result


def cross_validate(n: int, workers: int = 1, allow_n6: bool = False) -> ClassificationReport:
    """Classify by brute force and compare with the formulas and generators."""
    _check_range(n, minimum=2, allow_n6=allow_n6)
    tally = _tally(n, workers)
    report = _report_from(n, tally)

    oracle_forms: set[VectorGame] = {key for key in tally if key.t == 2}
    generated = list(enumerate_bipartite_canonical(n))
    bipartite = report.by_t.get(2, 0)

    checks = [
        _check("formula_bipartite", closed_formulas(n).bipartite, bipartite),
        _check("generator_count", len(generated), bipartite),
        _check("t1_count", n, report.by_t.get(1, 0)),
        _check("generator_forms", set(generated), oracle_forms),
        _check("class_sum", len(tally), report.class_total),
    ]
    if n <= MAX_TRUTH_TABLE_N:
        checks.append(
            _check("dedekind_completeness", count_monotone_functions(n) - 2, report.labeled_total)
        )
    report.checked_against.extend(checks)
    return report
