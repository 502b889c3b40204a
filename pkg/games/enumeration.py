"""
Enumeration Module

Two-class (bipartite) simple games: the x/y/z coordinates of a pair (n̄, M),
exhaustive generators for labeled and canonical pairs, and exact evaluation of
the closed-form counts.
"""

import itertools
import time
from collections.abc import Iterator
from fractions import Fraction
from math import comb

import structlog

from core.logging import GameEvents
from games.models import (
    CountRecord,
    FormulaError,
    GameValidationError,
    RCountRecord,
    VectorGame,
    XyzDecomposition,
)
from games.vector_game import check_conditions, column_major

log = structlog.get_logger(__name__)


def _check_n(n: int, minimum: int = 2) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < minimum:
        raise GameValidationError(f"n must be an integer >= {minimum}, got {n!r}")


def _exact_div(numerator: int, denominator: int) -> int:
    if numerator % denominator:
        raise FormulaError(f"{numerator} is not divisible by {denominator}")
    return numerator // denominator


def weak_compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All ways to write ``total`` as an ordered sum of ``parts`` non-negative
    integers, in colexicographic order (the last part varies slowest)."""
    if total < 0 or parts < 1:
        raise GameValidationError(f"no weak compositions of {total} into {parts} parts")
    # stars and bars; bar positions in lex order give lex order on the parts,
    # so reading each composition backwards gives colex order
    span = total + parts - 1
    for bars in itertools.combinations(range(span), parts - 1):
        bounds = (-1, *bars, span)
        yield tuple(bounds[k] - bounds[k - 1] - 1 for k in range(parts, 0, -1))


def _pair_from_parts(r, x, y, z1, z2) -> VectorGame:
    # row i (1-indexed): (r-i + x_1+..+x_{r-i+1}, i-1 + y_1+..+y_i)
    x_prefix = list(itertools.accumulate(x))
    y_prefix = list(itertools.accumulate(y))
    rows = tuple((r - i + x_prefix[r - i], i - 1 + y_prefix[i - 1]) for i in range(1, r + 1))
    n_bar = (z1 + r - 1 + x_prefix[-1], z2 + r - 1 + y_prefix[-1])
    return VectorGame(n_bar=n_bar, matrix=rows)


def _violates(x, y, z1, z2) -> bool:
    return (
        not any(x[1:])
        and not any(y[1:])
        and (y[0] == 0 or z1 == 0)
        and (x[0] == 0 or z2 == 0)
    )


def xyz_to_pair(n: int, d: XyzDecomposition) -> VectorGame:
    """The pair (n̄, M) with coordinates ``d``; Σn̄ = n."""
    expected = n + 2 - 2 * d.r
    if d.total != expected:
        raise GameValidationError(
            f"coordinates sum to {d.total}, expected n+2-2r = {expected}"
        )
    return _pair_from_parts(d.r, d.x, d.y, d.z1, d.z2)


def pair_to_xyz(vg: VectorGame) -> XyzDecomposition:
    """Recover the coordinates of a two-class pair with r ≥ 2 rows."""
    if vg.t != 2:
        raise GameValidationError(f"coordinates need t = 2 classes, got {vg.t}")
    r = vg.r
    if r < 2:
        raise GameValidationError("coordinates need at least two rows")
    m = vg.matrix
    x = [m[r - 1][0]] + [m[r - h][0] - m[r - h + 1][0] - 1 for h in range(2, r + 1)]
    y = [m[0][1]] + [m[i - 1][1] - m[i - 2][1] - 1 for i in range(2, r + 1)]
    z1 = vg.n_bar[0] - (r - 1) - sum(x)
    z2 = vg.n_bar[1] - (r - 1) - sum(y)
    if min(x + y + [z1, z2]) < 0:
        raise GameValidationError(
            f"({list(vg.n_bar)}, {[list(row) for row in m]}) breaks the bounds or row order: "
            f"x={x} y={y} z=({z1},{z2})"
        )
    return XyzDecomposition(r=r, x=tuple(x), y=tuple(y), z1=z1, z2=z2)


def separation_violated_xyz(d: XyzDecomposition) -> bool:
    """Whether the pair with coordinates ``d`` fails the separation condition."""
    return _violates(d.x, d.y, d.z1, d.z2)


def _pairs_with(n: int, n1: int) -> list[VectorGame]:
    """All valid pairs with n̄ = (n1, n-n1), descending by matrix."""
    n2 = n - n1
    found = []
    for a in range(n1 + 1):
        for b in range(n2 + 1):
            if (a, b) in {(0, 0), (n1, n2)}:
                continue
            vg = VectorGame(n_bar=(n1, n2), matrix=((a, b),))
            if check_conditions(vg).separation_ok:
                found.append(vg)

    r = 2
    while r - 1 <= min(n1, n2):
        for xz in weak_compositions(n1 - r + 1, r + 1):
            x, z1 = xz[:r], xz[r]
            for yz in weak_compositions(n2 - r + 1, r + 1):
                y, z2 = yz[:r], yz[r]
                if not _violates(x, y, z1, z2):
                    found.append(_pair_from_parts(r, x, y, z1, z2))
        r += 1

    found.sort(key=lambda vg: column_major(vg.matrix), reverse=True)
    return found


def enumerate_pairs(n: int) -> Iterator[VectorGame]:
    """Every valid two-class pair, both orderings of n̄.

    Ordered by n̄ ascending, then by matrix descending.
    """
    _check_n(n)
    started = time.perf_counter()
    count = 0
    for n1 in range(1, n):
        for vg in _pairs_with(n, n1):
            count += 1
            yield vg
    log.info(
        GameEvents.PAIRS_ENUMERATED,
        n=n,
        count=count,
        elapsed_s=round(time.perf_counter() - started, 3),
    )


def is_swap_canonical(vg: VectorGame) -> bool:
    """Class-size order and largest matrix under the class swap."""
    n1, n2 = vg.n_bar
    if n1 != n2:
        return n1 > n2
    first = tuple(row[0] for row in vg.matrix)
    second_reversed = tuple(row[1] for row in reversed(vg.matrix))
    return first >= second_reversed


def enumerate_bipartite_canonical(n: int) -> Iterator[VectorGame]:
    """One representative per isomorphism class of bipartite games on n players."""
    _check_n(n)
    started = time.perf_counter()
    count = 0
    # pairs with n̄_1 < n̄_2 never pass the filter
    for n1 in range((n + 1) // 2, n):
        for vg in _pairs_with(n, n1):
            if is_swap_canonical(vg):
                count += 1
                yield vg
    log.info(
        GameEvents.CANONICAL_ENUMERATED,
        n=n,
        count=count,
        elapsed_s=round(time.perf_counter() - started, 3),
    )


def burnside_combine(total: int, fixed: int) -> int:
    """Orbits of a two-element group: (all elements + fixed elements) / 2."""
    if fixed < 0 or fixed > total:
        raise FormulaError(f"fixed count {fixed} must lie in 0..{total}")
    if (total + fixed) % 2:
        raise FormulaError(f"{total} + {fixed} is odd; the counts are inconsistent")
    return (total + fixed) // 2


def _violations_braced(n: int) -> int:
    half = n // 2
    count = 4 * (n - half - 1) * half
    return count + 1 if n % 2 == 0 else count


def violations_for_r(n: int, r: int) -> int:
    """Decompositions with r rows that fail the separation condition."""
    _check_n(n)
    if not 2 <= r <= n // 2 + 1:
        raise GameValidationError(f"r={r} outside 2..{n // 2 + 1} for n={n}")
    a = n + 2 - 2 * r
    return 4 * a if a > 0 else 1


def _bipartite_closed(n: int) -> int:
    if n % 2:
        return 2 ** (n + 1) - _exact_div(n * n + 3 * n + 4, 2)
    return 2 ** (n + 1) + 2 ** (n // 2) - _exact_div(n * n + 4 * n + 6, 2)


def _symmetric_closed(n: int) -> int:
    if n % 2:
        return 0
    m = n // 2
    return 2 ** (m + 1) - 2 * m - 2


def closed_formulas(n: int) -> CountRecord:
    """Evaluate every closed-form count for n players exactly."""
    _check_n(n)
    top = n // 2 + 1

    cases = 2 ** (n + 2) - comb(n + 3, 1) - comb(n + 3, 3)
    summed = sum(comb(n + 3, 2 * r + 1) for r in range(2, top + 1))
    violations = _violations_braced(n)
    r1_count = _exact_div(n**3 + 6 * n**2 - 13 * n + 6, 6)
    total_pairs = 2 ** (n + 2) - n * n - 3 * n - 4
    symmetric = _symmetric_closed(n)
    bipartite = _bipartite_closed(n)

    mismatches = {}
    if summed != cases:
        mismatches["cases"] = (summed, cases)
    if violations != (n - 1) ** 2:
        mismatches["violations"] = (violations, (n - 1) ** 2)
    if cases - violations + r1_count != total_pairs:
        mismatches["total_pairs"] = (cases - violations + r1_count, total_pairs)
    if burnside_combine(total_pairs, symmetric) != bipartite:
        mismatches["bipartite"] = (burnside_combine(total_pairs, symmetric), bipartite)
    if mismatches:
        log.error(GameEvents.FORMULA_IDENTITY_FAILED, n=n, mismatches=str(mismatches))
        raise FormulaError(f"closed forms disagree for n={n}: {mismatches}")

    return CountRecord(
        n=n,
        cases=cases,
        violations=violations,
        r1_count=r1_count,
        total_pairs=total_pairs,
        symmetric=symmetric,
        bipartite=bipartite,
    )


def count_symmetric_direct(n: int) -> int:
    """Swap-symmetric pairs counted term by term rather than by the closed form."""
    _check_n(n)
    if n % 2:
        raise GameValidationError(f"symmetric pairs need an even n, got {n}")
    m = n // 2
    solutions = sum(comb(m + 1, r) for r in range(2, m + 2))
    violations = 1 + sum(2 for _ in range(2, m + 1))
    single_row = sum(1 for _ in range(1, m))
    return solutions - violations + single_row


def counts_by_r(n: int) -> list[RCountRecord]:
    """Closed-form counts split by the number r of minimal winning vectors."""
    _check_n(n)
    m = n // 2 if n % 2 == 0 else None
    records = []
    for r in range(1, n // 2 + 2):
        if r == 1:
            pairs = _exact_div(n**3 + 6 * n**2 - 13 * n + 6, 6)
        else:
            pairs = comb(n + 3, 2 * r + 1) - violations_for_r(n, r)
        if m is None:
            symmetric = 0
        elif r == 1:
            symmetric = m - 1
        elif r <= m:
            symmetric = comb(m + 1, r) - 2
        else:
            symmetric = comb(m + 1, r) - 1
        records.append(
            RCountRecord(
                n=n,
                r=r,
                pairs=pairs,
                symmetric=symmetric,
                bipartite=burnside_combine(pairs, symmetric),
            )
        )
    return records


def asymptotic_ratio(n: int) -> Fraction:
    """Bipartite games on n players relative to 2^(n+1)."""
    return Fraction(closed_formulas(n).bipartite, 2 ** (n + 1))
