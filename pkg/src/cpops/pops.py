"""Partition-overlaid patterns and their lowering-operator words.

A partition here is a weakly increasing tuple of non-negative integers; it
fits a box (l, lp) when it has exactly l parts, all at most lp. An overlaid
pattern decorates every gap position of a pattern with a partition fitting the
box given by the gap array, and its word lists one lowering generator per
partition part, graded by that part.

Overlay positions are ordered level by level, barred block before unbarred
block within each level and the final barred block last, which is exactly the
factor order of the words. Counts are plain Python integers, so the product
formulas never overflow.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterator, Sequence

from .patterns import (
    PatternC,
    RestrictedPattern,
    differences,
    enumerate_patterns,
    enumerate_restricted_patterns,
    pattern_from_json,
    pattern_to_json,
    pattern_weight,
)
from .rootsys import DominantWeight, RootLabel, WeightVector, root_vector

# A partition: weakly increasing tuple of non-negative integers.
Partition = tuple
# An (ell, partition) pair with the partition of length exactly ell.
FPair = tuple


def partitions_in_box(ell: int, ellp: int) -> Iterator[Partition]:
    """Weakly increasing tuples of length ``ell`` with parts at most ``ellp``,
    in lexicographic order; there are comb(ell + ellp, ell) of them."""
    if ell < 0 or ellp < 0:
        raise ValueError("box sides must be non-negative")
    return itertools.combinations_with_replacement(range(ellp + 1), ell)


def fits_box(parts: Partition, ell: int, ellp: int) -> bool:
    """Whether ``parts`` is a valid partition of length ell with parts <= ellp."""
    if len(parts) != ell:
        return False
    if any(parts[i] > parts[i + 1] for i in range(len(parts) - 1)):
        return False
    if any(x < 0 for x in parts):
        return False
    return ell == 0 or parts[-1] <= ellp


def enumerate_f(m: int) -> Iterator[FPair]:
    """All pairs (ell, partition) with 0 <= ell <= m and the partition fitting
    the box (ell, m - ell); there are 2**m of them."""
    if m < 0:
        raise ValueError("m must be non-negative")
    for ell in range(m + 1):
        for s in partitions_in_box(ell, m - ell):
            yield (ell, s)


@dataclass(frozen=True)
class Pop:
    """Pattern plus one box-fitting partition per gap position."""

    pattern: PatternC
    barred_overlays: dict
    unbarred_overlays: dict


@dataclass(frozen=True)
class RestrictedPop:
    """Restricted pattern with overlays on positions below the top level."""

    pattern: RestrictedPattern
    barred_overlays: dict
    unbarred_overlays: dict


@dataclass(frozen=True)
class PbwMonomial:
    """Ordered word of (root label, t-exponent) factors."""

    factors: tuple

    @property
    def t_degree(self) -> int:
        return sum(t for _, t in self.factors)

    def text(self) -> str:
        """Space-separated factors "x-(i,j~)@t^s"; the empty word prints "1"."""
        if not self.factors:
            return "1"
        return " ".join(f"x-{label.text()}@t^{t}" for label, t in self.factors)


def overlay_positions(rank: int, *, restricted: bool = False) -> list:
    """Overlay positions (i, j, barred) in word-block order: for each level
    j < rank the barred block then the unbarred block, then for full patterns
    the barred block at level rank."""
    pos = []
    for j in range(1, rank):
        pos.extend((i, j, True) for i in range(1, j + 1))
        pos.extend((i, j, False) for i in range(1, j + 1))
    if not restricted:
        pos.extend((i, rank, True) for i in range(1, rank + 1))
    return pos


def _overlays_for(pattern, restricted: bool):
    diff = differences(pattern)
    positions = overlay_positions(pattern.rank, restricted=restricted)
    choices = []
    for i, j, barred in positions:
        ell, ellp = diff.barred[(i, j)] if barred else diff.unbarred[(i, j)]
        choices.append(list(partitions_in_box(ell, ellp)))
    for combo in itertools.product(*choices):
        barred_overlays = {}
        unbarred_overlays = {}
        for (i, j, barred), parts in zip(positions, combo):
            (barred_overlays if barred else unbarred_overlays)[(i, j)] = parts
        yield barred_overlays, unbarred_overlays


def enumerate_pops(bounding) -> Iterator[Pop]:
    """All overlaid patterns with the given bounding sequence: the pattern
    stream crossed with every choice of box-fitting partitions."""
    for pattern in enumerate_patterns(bounding):
        for barred_overlays, unbarred_overlays in _overlays_for(pattern, False):
            yield Pop(pattern, barred_overlays, unbarred_overlays)


def enumerate_restricted_pops(bounding) -> Iterator[RestrictedPop]:
    """Overlaid restricted patterns bounded by the weakly decreasing input."""
    for pattern in enumerate_restricted_patterns(bounding):
        for barred_overlays, unbarred_overlays in _overlays_for(pattern, True):
            yield RestrictedPop(pattern, barred_overlays, unbarred_overlays)


def _comb0(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0


def pop_count_formula(lam: DominantWeight) -> int:
    """Product over i of (comb(2r, i) - comb(2r, i-2)) ** m_i."""
    r = lam.rank
    out = 1
    for i, m in enumerate(lam.omegas, start=1):
        out *= (_comb0(2 * r, i) - _comb0(2 * r, i - 2)) ** m
    return out


def restricted_pop_count_formula(eta: Sequence[int]) -> int:
    """Product over i of (comb(2r-1, i) - comb(2r-1, i-2)) ** n_i with
    n_i = eta_i - eta_{i+1} and eta_{r+1} = 0."""
    eta = tuple(int(x) for x in eta)
    if any(x < 0 for x in eta):
        raise ValueError(f"bounding sequence must be non-negative: {eta}")
    if any(eta[i] < eta[i + 1] for i in range(len(eta) - 1)):
        raise ValueError(f"bounding sequence must be weakly decreasing: {eta}")
    r = len(eta)
    out = 1
    for i in range(1, r + 1):
        n_i = eta[i - 1] - (eta[i] if i < r else 0)
        out *= (_comb0(2 * r - 1, i) - _comb0(2 * r - 1, i - 2)) ** n_i
    return out


def pop_weight(p: Pop) -> WeightVector:
    """Weight of an overlaid pattern: the weight of its underlying pattern.

    Cross-checked in debug builds against the bounding weight minus the
    gap-weighted sum of positive roots; the two must always agree.
    """
    w = pattern_weight(p.pattern)
    assert w == _weight_by_roots(p.pattern), (
        f"weight formulas disagree on {p.pattern}: {w} vs {_weight_by_roots(p.pattern)}"
    )
    return w


def _weight_by_roots(pattern: PatternC) -> WeightVector:
    r = pattern.rank
    diff = differences(pattern)
    acc = list(pattern.bounding)
    for (i, j), (ell, _) in diff.unbarred.items():
        vec = root_vector(RootLabel(i, j, False), r)
        for t in range(r):
            acc[t] -= ell * vec[t]
    for (i, j), (ell, _) in diff.barred.items():
        vec = root_vector(RootLabel(i, j, True), r)
        for t in range(r):
            acc[t] -= ell * vec[t]
    return tuple(acc)


def pop_boxes(p) -> int:
    """Total number of boxes over all overlay partitions."""
    return sum(sum(s) for s in p.barred_overlays.values()) + sum(
        sum(s) for s in p.unbarred_overlays.values()
    )


def pop_monomial(p: Pop) -> PbwMonomial:
    """Word of the overlaid pattern: per position in block order, one factor
    per partition part, the part giving the t-exponent. The total t-degree
    equals the box count of the overlay."""
    factors = []
    for i, j, barred in overlay_positions(p.pattern.rank):
        parts = (p.barred_overlays if barred else p.unbarred_overlays)[(i, j)]
        label = RootLabel(i, j, barred)
        factors.extend((label, t) for t in parts)
    return PbwMonomial(tuple(factors))


def pop_to_json(p) -> dict:
    """Pattern JSON extended with an "overlays" list in block order."""
    obj = pattern_to_json(p.pattern)
    restricted = isinstance(p, RestrictedPop)
    obj["overlays"] = [
        {
            "i": i,
            "j": j,
            "barred": barred,
            "parts": list((p.barred_overlays if barred else p.unbarred_overlays)[(i, j)]),
        }
        for i, j, barred in overlay_positions(p.pattern.rank, restricted=restricted)
    ]
    return obj


def pop_from_json(obj: dict):
    """Inverse of :func:`pop_to_json`."""
    pattern = pattern_from_json(
        {"rank": obj["rank"], "eta": obj["eta"], "lambda": obj["lambda"]}
    )
    barred_overlays = {}
    unbarred_overlays = {}
    for entry in obj["overlays"]:
        key = (int(entry["i"]), int(entry["j"]))
        parts = tuple(int(x) for x in entry["parts"])
        (barred_overlays if entry["barred"] else unbarred_overlays)[key] = parts
    if isinstance(pattern, RestrictedPattern):
        return RestrictedPop(pattern, barred_overlays, unbarred_overlays)
    return Pop(pattern, barred_overlays, unbarred_overlays)


def monomial_to_json(m: PbwMonomial) -> dict:
    return {
        "factors": [
            {"i": label.i, "j": label.j, "barred": label.barred, "t": t}
            for label, t in m.factors
        ],
        "degree": m.t_degree,
    }
