"""Independent classical checks: Weyl dimension and Freudenthal multiplicities.

Everything here is derived from the root system alone, with exact integer
arithmetic, so it can sit in judgement over the combinatorial enumeration.
Weight multiplicities of an irreducible module are computed by Freudenthal's
recursion, walking the dominant weights under the highest weight in an order
compatible with dominance and closing each one under the signed-permutation
group at the end.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .rootsys import DominantWeight, inner, positive_roots


@dataclass
class CharacterTable:
    """Weight -> multiplicity map of one irreducible module, closed under
    signed permutations of the epsilon-coordinates."""

    rank: int
    mults: dict

    def total(self) -> int:
        return sum(self.mults.values())


def _rho(rank: int) -> tuple:
    return tuple(range(rank, 0, -1))


def weyl_dim(lam: DominantWeight) -> int:
    """Dimension of the irreducible module of highest weight ``lam``: the
    product over positive roots of (lam + rho, alpha) / (rho, alpha),
    evaluated exactly."""
    r = lam.rank
    rho = _rho(r)
    shifted = tuple(a + b for a, b in zip(lam.eps, rho))
    num = 1
    den = 1
    for alpha in positive_roots(r):
        num *= inner(shifted, alpha)
        den *= inner(rho, alpha)
    if num % den:
        raise RuntimeError(f"internal error: Weyl product {num}/{den} not integral")
    return num // den


def dominant_rep(weight: Sequence[int]) -> tuple:
    """Dominant representative of a weight's signed-permutation orbit:
    absolute values sorted decreasingly."""
    return tuple(sorted((abs(x) for x in weight), reverse=True))


def signed_orbit(weight: Sequence[int]) -> set:
    """All images of a weight under coordinate permutations and sign flips."""
    out = set()
    for perm in itertools.permutations(weight):
        for signs in itertools.product((1, -1), repeat=len(weight)):
            out.add(tuple(s * x for s, x in zip(signs, perm)))
    return out


def positive_root_coordinates(vec: Sequence[int]):
    """Coefficients (c_1..c_r) of ``vec`` in the simple-root basis, or None
    when some coefficient is negative or non-integral."""
    r = len(vec)
    coeffs = []
    partial = 0
    for k in range(r - 1):
        partial += vec[k]
        if partial < 0:
            return None
        coeffs.append(partial)
    last2 = partial + vec[r - 1] if r > 1 else vec[0]
    if last2 < 0 or last2 % 2:
        return None
    coeffs.append(last2 // 2)
    return tuple(coeffs)


def in_positive_root_lattice(vec: Sequence[int]) -> bool:
    return positive_root_coordinates(vec) is not None


def dominant_weights_below(lam: DominantWeight) -> list:
    """Dominant weights mu such that lam - mu is a non-negative integer
    combination of simple roots, ordered compatibly with dominance (the
    combination's coefficient sum ascending, ties broken lexicographically)."""
    r = lam.rank
    top = lam.eps

    def candidates(bound: int, length: int):
        if length == 0:
            yield ()
            return
        for first in range(bound + 1):
            for rest in candidates(first, length - 1):
                yield (first,) + rest

    found = []
    for mu in candidates(top[0], r):
        coords = positive_root_coordinates(tuple(a - b for a, b in zip(top, mu)))
        if coords is not None:
            found.append((sum(coords), tuple(-x for x in mu), mu))
    found.sort()
    return [mu for _, _, mu in found]


def freudenthal_character(lam: DominantWeight) -> CharacterTable:
    """Multiplicities of all weights of the irreducible module of highest
    weight ``lam`` by Freudenthal's recursion, seeded with multiplicity 1 at
    the top; the total equals :func:`weyl_dim`."""
    r = lam.rank
    top = lam.eps
    rho = _rho(r)
    roots = positive_roots(r)
    top_norm = inner(top, top)
    shifted_top = tuple(a + b for a, b in zip(top, rho))
    shifted_top_norm = inner(shifted_top, shifted_top)

    mults = {top: 1}
    for mu in dominant_weights_below(lam):
        if mu == top:
            continue
        numerator = 0
        for alpha in roots:
            k = 1
            while True:
                v = tuple(a + k * b for a, b in zip(mu, alpha))
                if inner(v, v) > top_norm:
                    break
                m = mults.get(dominant_rep(v), 0)
                if m:
                    numerator += inner(v, alpha) * m
                k += 1
        numerator *= 2
        shifted = tuple(a + b for a, b in zip(mu, rho))
        denominator = shifted_top_norm - inner(shifted, shifted)
        if denominator <= 0 or numerator % denominator:
            raise RuntimeError(
                f"internal error: Freudenthal step at {mu} gives "
                f"{numerator}/{denominator}"
            )
        value = numerator // denominator
        if value:
            mults[mu] = value

    table = {}
    for mu, m in mults.items():
        for w in signed_orbit(mu):
            table[w] = m
    return CharacterTable(r, table)
