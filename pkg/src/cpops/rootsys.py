"""Root system of sp_{2r}: coordinates, positive roots, and the pairing.

Weights are plain tuples of signed integers holding epsilon-coordinates, so
they hash, compare, and serialize with no ceremony. A dominant weight carries
both its fundamental-weight multiplicities (m_1, ..., m_r) and the weakly
decreasing tuple of suffix sums, which doubles as its epsilon-coordinate
vector.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

# A weight in epsilon-coordinates: tuple of `rank` signed integers.
WeightVector = tuple


def omegas_to_lambda(m: Sequence[int]) -> WeightVector:
    """Suffix sums (m_i + ... + m_r); the result is weakly decreasing."""
    out = []
    acc = 0
    for x in reversed(tuple(m)):
        acc += x
        out.append(acc)
    return tuple(reversed(out))


def lambda_to_omegas(lam: Sequence[int]) -> tuple:
    """Adjacent differences lam_i - lam_{i+1}, taking lam_{r+1} = 0.

    Inverse of :func:`omegas_to_lambda`. Rejects input that is negative or
    not weakly decreasing.
    """
    lam = tuple(lam)
    if any(x < 0 for x in lam):
        raise ValueError(f"lambda tuple must be non-negative: {lam}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"lambda tuple must be weakly decreasing: {lam}")
    r = len(lam)
    return tuple(lam[i] - (lam[i + 1] if i + 1 < r else 0) for i in range(r))


@dataclass(frozen=True)
class DominantWeight:
    """Dominant integral weight of sp_{2r}, held in both coordinate systems.

    ``omegas`` is the tuple of fundamental-weight multiplicities and ``lam``
    the weakly decreasing tuple of suffix sums. ``lam`` is simultaneously the
    epsilon-coordinate vector of the weight.
    """

    rank: int
    omegas: tuple
    lam: tuple

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("rank must be a positive integer")
        if len(self.omegas) != self.rank or len(self.lam) != self.rank:
            raise ValueError("coordinate tuples must have length equal to rank")
        if any(m < 0 for m in self.omegas):
            raise ValueError(f"omega coordinates must be non-negative: {self.omegas}")
        if omegas_to_lambda(self.omegas) != self.lam:
            raise ValueError("omega and lambda coordinates are inconsistent")

    @classmethod
    def from_omegas(cls, m: Sequence[int]) -> "DominantWeight":
        m = tuple(int(x) for x in m)
        return cls(len(m), m, omegas_to_lambda(m))

    @classmethod
    def from_lambdas(cls, lam: Sequence[int]) -> "DominantWeight":
        lam = tuple(int(x) for x in lam)
        return cls(len(lam), lambda_to_omegas(lam), lam)

    @property
    def eps(self) -> WeightVector:
        """Epsilon-coordinates of the weight (equal to the lambda tuple)."""
        return self.lam


@dataclass(frozen=True)
class RootLabel:
    """Label (i, j, barred) of a positive root of sp_{2r}.

    Unbarred (i, j) requires i <= j < rank; barred (i, j) requires
    i <= j <= rank. The unbarred label with j = rank is rejected because that
    root coincides with its barred twin.
    """

    i: int
    j: int
    barred: bool

    def __post_init__(self):
        if self.i < 1 or self.j < self.i:
            raise ValueError(f"need 1 <= i <= j, got i={self.i}, j={self.j}")

    def validate_for_rank(self, rank: int) -> None:
        if self.j > rank:
            raise ValueError(f"label {self} out of range for rank {rank}")
        if not self.barred and self.j >= rank:
            raise ValueError(
                f"unbarred label requires j < rank, got j={self.j}, rank={rank}"
            )

    def text(self) -> str:
        return f"({self.i},{self.j}{'~' if self.barred else ''})"


def simple_root(k: int, rank: int) -> WeightVector:
    """k-th simple root: eps_k - eps_{k+1} for k < rank, 2*eps_rank for k = rank."""
    if not 1 <= k <= rank:
        raise ValueError(f"simple root index {k} out of range for rank {rank}")
    v = [0] * rank
    if k < rank:
        v[k - 1] = 1
        v[k] = -1
    else:
        v[rank - 1] = 2
    return tuple(v)


def root_vector(label: RootLabel, rank: int) -> WeightVector:
    """Epsilon-expansion of the positive root named by ``label``.

    Computed by summing consecutive simple roots: indices i..j for the
    unbarred root, and i..rank followed by rank-1 down to j for the barred
    one. The telescoped closed forms are eps_i - eps_{j+1} (unbarred),
    eps_i + eps_j (barred, i < j), and 2*eps_i (barred, i = j).
    """
    label.validate_for_rank(rank)
    if label.barred:
        path = list(range(label.i, rank + 1)) + list(range(rank - 1, label.j - 1, -1))
    else:
        path = list(range(label.i, label.j + 1))
    v = [0] * rank
    for k in path:
        a = simple_root(k, rank)
        for t in range(rank):
            v[t] += a[t]
    return tuple(v)


def positive_root_labels(rank: int) -> Iterator[RootLabel]:
    """All rank^2 positive-root labels: unbarred (i, j) for j < rank then
    barred (i, j) for j <= rank, each block ordered by (j, i)."""
    for j in range(1, rank):
        for i in range(1, j + 1):
            yield RootLabel(i, j, False)
    for j in range(1, rank + 1):
        for i in range(1, j + 1):
            yield RootLabel(i, j, True)


def positive_roots(rank: int) -> list:
    """Epsilon-vectors of the rank^2 positive roots, in the order of
    :func:`positive_root_labels`."""
    if rank < 1:
        raise ValueError("rank must be a positive integer")
    return [root_vector(label, rank) for label in positive_root_labels(rank)]


def inner(u: Sequence[int], v: Sequence[int]) -> int:
    """Euclidean pairing of epsilon-coordinate vectors, (eps_i, eps_j) = delta_ij."""
    if len(u) != len(v):
        raise ValueError(f"rank mismatch: {len(u)} vs {len(v)}")
    return sum(a * b for a, b in zip(u, v))


def sweep_dominant_weights(rank: int, max_total: int) -> Iterator[DominantWeight]:
    """Dominant weights with all omega-multiplicities summing to at most
    ``max_total``, in lexicographic order of the multiplicity tuple."""
    for m in itertools.product(range(max_total + 1), repeat=rank):
        if sum(m) <= max_total:
            yield DominantWeight.from_omegas(m)
