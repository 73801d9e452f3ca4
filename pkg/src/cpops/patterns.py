"""Symplectic interlacing patterns: validation, enumeration, differences.

A pattern of rank r is a stack of 2r integer rows eta^1, lam^1, ..., eta^r,
lam^r where row j has length j. Row lam^j dominates eta^j entrywise with the
shifted tail condition lam^j_{j+1} = 0, and eta^{j+1} dominates lam^j the same
way, so every entry is a non-negative integer. The final row lam^r is the
bounding sequence. A restricted pattern is the same stack with the final lam^r
row removed, bounded by its eta^r row instead.

Enumeration is depth-first from the bounding row upward. Each new row is
constrained entrywise by the adjacent known row only, so the candidate values
per position form independent ranges and generation never backtracks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence, Union

from .rootsys import DominantWeight, WeightVector


@dataclass(frozen=True)
class PatternC:
    """Full pattern: r eta-rows and r lambda-rows, row j of length j."""

    rank: int
    eta_rows: tuple
    lambda_rows: tuple

    @property
    def bounding(self) -> tuple:
        return self.lambda_rows[-1]


@dataclass(frozen=True)
class RestrictedPattern:
    """Pattern with the final lambda-row removed; bounded by eta^r."""

    rank: int
    eta_rows: tuple
    lambda_rows: tuple

    @property
    def bounding(self) -> tuple:
        return self.eta_rows[-1]


@dataclass(frozen=True)
class DiffArray:
    """Entrywise gaps of a pattern.

    ``barred[(i, j)] = (l, lp)`` with l = lam^j_i - eta^j_i and
    lp = eta^j_i - lam^j_{i+1}; ``unbarred[(i, j)] = (l, lp)`` with
    l = eta^{j+1}_i - lam^j_i and lp = lam^j_i - eta^{j+1}_{i+1}.
    Restricted patterns only carry positions with j < rank.
    """

    rank: int
    barred: dict
    unbarred: dict


AnyPattern = Union[PatternC, RestrictedPattern]


def _check_decreasing(seq: Sequence[int]) -> tuple:
    seq = tuple(int(x) for x in seq)
    if any(x < 0 for x in seq):
        raise ValueError(f"bounding sequence must be non-negative: {seq}")
    if any(seq[i] < seq[i + 1] for i in range(len(seq) - 1)):
        raise ValueError(f"bounding sequence must be weakly decreasing: {seq}")
    return seq


def validate_pattern(p: AnyPattern) -> list:
    """Return a list of violated constraints, empty when the pattern is valid.

    Row-shape problems are reported on their own; interlacing inequalities are
    only checked for rows of the correct length. Violation strings carry the
    row kind and the (j, i) position.
    """
    problems = []
    restricted = isinstance(p, RestrictedPattern)
    r = p.rank
    n_lambda = r - 1 if restricted else r
    if len(p.eta_rows) != r:
        problems.append(f"expected {r} eta rows, got {len(p.eta_rows)}")
    if len(p.lambda_rows) != n_lambda:
        problems.append(f"expected {n_lambda} lambda rows, got {len(p.lambda_rows)}")
    for j, row in enumerate(p.eta_rows, start=1):
        if j <= r and len(row) != j:
            problems.append(f"eta^{j} has length {len(row)}, expected {j}")
    for j, row in enumerate(p.lambda_rows, start=1):
        if j <= n_lambda and len(row) != j:
            problems.append(f"lambda^{j} has length {len(row)}, expected {j}")
    if problems:
        return problems

    for j in range(1, n_lambda + 1):
        lam_j = p.lambda_rows[j - 1]
        eta_j = p.eta_rows[j - 1]
        for i in range(1, j + 1):
            hi = lam_j[i - 1]
            lo = lam_j[i] if i < j else 0
            if not hi >= eta_j[i - 1]:
                problems.append(
                    f"lambda^{j}_{i} >= eta^{j}_{i} fails: {hi} < {eta_j[i - 1]}"
                )
            if not eta_j[i - 1] >= lo:
                problems.append(
                    f"eta^{j}_{i} >= lambda^{j}_{i + 1} fails: {eta_j[i - 1]} < {lo}"
                )
    for j in range(1, r):
        lam_j = p.lambda_rows[j - 1]
        eta_next = p.eta_rows[j]
        for i in range(1, j + 1):
            if not eta_next[i - 1] >= lam_j[i - 1]:
                problems.append(
                    f"eta^{j + 1}_{i} >= lambda^{j}_{i} fails: "
                    f"{eta_next[i - 1]} < {lam_j[i - 1]}"
                )
            if not lam_j[i - 1] >= eta_next[i]:
                problems.append(
                    f"lambda^{j}_{i} >= eta^{j + 1}_{i + 1} fails: "
                    f"{lam_j[i - 1]} < {eta_next[i]}"
                )
    if any(x < 0 for row in p.eta_rows for x in row):
        problems.append("negative entry in eta rows")
    if any(x < 0 for row in p.lambda_rows for x in row):
        problems.append("negative entry in lambda rows")
    return problems


def _rows_within(lam_row: tuple) -> Iterator[tuple]:
    # eta rows below lam_row: lam_i >= eta_i >= lam_{i+1}, with lam tail 0.
    n = len(lam_row)
    ranges = [
        range(lam_row[i + 1] if i + 1 < n else 0, lam_row[i] + 1) for i in range(n)
    ]
    return itertools.product(*ranges)


def _rows_between(upper_row: tuple) -> Iterator[tuple]:
    # one-shorter rows interlacing upper_row: upper_i >= w_i >= upper_{i+1}.
    n = len(upper_row)
    ranges = [range(upper_row[i + 1], upper_row[i] + 1) for i in range(n - 1)]
    return itertools.product(*ranges)


def _pattern_rows(j: int, lam_j: tuple) -> Iterator[tuple]:
    # All (eta_rows, lambda_rows) of a rank-j pattern bounded by lam_j.
    for eta_j in _rows_within(lam_j):
        if j == 1:
            yield (eta_j,), (lam_j,)
        else:
            for lam_prev in _rows_between(eta_j):
                for etas, lams in _pattern_rows(j - 1, lam_prev):
                    yield etas + (eta_j,), lams + (lam_j,)


def _as_lambda_tuple(bounding) -> tuple:
    if isinstance(bounding, DominantWeight):
        return bounding.lam
    return _check_decreasing(bounding)


def enumerate_patterns(bounding) -> Iterator[PatternC]:
    """All patterns with the given bounding sequence, each exactly once.

    ``bounding`` may be a :class:`DominantWeight` or a weakly decreasing
    sequence. Rows are generated upward from the bounding row, every row in
    lexicographic order of its entries, so the stream is deterministic.
    """
    lam = _as_lambda_tuple(bounding)
    r = len(lam)
    for etas, lams in _pattern_rows(r, lam):
        yield PatternC(r, etas, lams)


def enumerate_restricted_patterns(bounding) -> Iterator[RestrictedPattern]:
    """All restricted patterns bounded by the weakly decreasing ``bounding``."""
    eta_r = _as_lambda_tuple(bounding)
    r = len(eta_r)
    if r == 1:
        yield RestrictedPattern(1, (eta_r,), ())
        return
    for lam_prev in _rows_between(eta_r):
        for etas, lams in _pattern_rows(r - 1, lam_prev):
            yield RestrictedPattern(r, etas + (eta_r,), lams)


def differences(p: AnyPattern) -> DiffArray:
    """Gap array of a valid pattern; all entries are non-negative."""
    r = p.rank
    barred = {}
    unbarred = {}
    barred_top = r - 1 if isinstance(p, RestrictedPattern) else r
    for j in range(1, barred_top + 1):
        lam_j = p.lambda_rows[j - 1]
        eta_j = p.eta_rows[j - 1]
        for i in range(1, j + 1):
            tail = lam_j[i] if i < j else 0
            barred[(i, j)] = (lam_j[i - 1] - eta_j[i - 1], eta_j[i - 1] - tail)
    for j in range(1, r):
        lam_j = p.lambda_rows[j - 1]
        eta_next = p.eta_rows[j]
        for i in range(1, j + 1):
            unbarred[(i, j)] = (
                eta_next[i - 1] - lam_j[i - 1],
                lam_j[i - 1] - eta_next[i],
            )
    return DiffArray(r, barred, unbarred)


def reconstruct_pattern(bounding: Sequence[int], diffs: DiffArray) -> PatternC:
    """Rebuild the unique pattern with the given bounding row whose gap array
    has the prescribed first components; inverse of :func:`differences`."""
    lam = _check_decreasing(bounding)
    r = len(lam)
    lambda_rows = [None] * r
    eta_rows = [None] * r
    lambda_rows[r - 1] = lam
    for j in range(r, 0, -1):
        lam_j = lambda_rows[j - 1]
        eta_j = tuple(lam_j[i - 1] - diffs.barred[(i, j)][0] for i in range(1, j + 1))
        eta_rows[j - 1] = eta_j
        if j > 1:
            lambda_rows[j - 2] = tuple(
                eta_j[i - 1] - diffs.unbarred[(i, j - 1)][0] for i in range(1, j)
            )
    return PatternC(r, tuple(eta_rows), tuple(lambda_rows))


def pattern_weight(p: PatternC) -> WeightVector:
    """Epsilon-coordinates (a_1, ..., a_r) of the pattern, where a_j is twice
    the eta^j row sum minus the lam^j and lam^{j-1} row sums."""
    coords = []
    prev_sum = 0
    for j in range(1, p.rank + 1):
        lam_sum = sum(p.lambda_rows[j - 1])
        coords.append(2 * sum(p.eta_rows[j - 1]) - lam_sum - prev_sum)
        prev_sum = lam_sum
    return tuple(coords)


def pattern_to_json(p: AnyPattern) -> dict:
    """JSON shape {"rank", "eta", "lambda"} with rows ordered j = 1..r."""
    return {
        "rank": p.rank,
        "eta": [list(row) for row in p.eta_rows],
        "lambda": [list(row) for row in p.lambda_rows],
    }


def pattern_from_json(obj: dict) -> AnyPattern:
    """Inverse of :func:`pattern_to_json`; the row counts decide the kind."""
    rank = int(obj["rank"])
    etas = tuple(tuple(int(x) for x in row) for row in obj["eta"])
    lams = tuple(tuple(int(x) for x in row) for row in obj["lambda"])
    if len(lams) == rank:
        return PatternC(rank, etas, lams)
    if len(lams) == rank - 1 and len(etas) == rank:
        return RestrictedPattern(rank, etas, lams)
    raise ValueError(f"row counts {len(etas)}/{len(lams)} invalid for rank {rank}")
