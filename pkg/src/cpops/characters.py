"""Exact q-series arithmetic and graded characters, computed two ways.

A graded character is a finitely supported integer map from (grade, weight)
pairs, the weight in epsilon-coordinates. ``character_direct`` accumulates it
by walking every overlaid pattern; ``character_fermionic`` evaluates it as a
lattice sum of Gaussian-binomial products over gap arrays, touching none of
the pattern machinery. The two must agree exactly, which is the package's
central cross-check.

Gaussian binomials use the zero convention out of range: the polynomial is
zero whenever the bottom index exceeds the top or the top is negative. Under
that convention gap arrays that correspond to no pattern contribute nothing
to the lattice sum, so it converges term for term to the direct count.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .pops import enumerate_pops, partitions_in_box, pop_boxes, pop_weight
from .rootsys import DominantWeight, RootLabel, root_vector


class QPolynomial:
    """Polynomial in q with integer coefficients, stored sparsely.

    Instances are treated as immutable: all operations return new objects.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=None):
        self._coeffs = {}
        if coeffs:
            for exp, c in dict(coeffs).items():
                if c:
                    if exp < 0:
                        raise ValueError("q-exponents must be non-negative")
                    self._coeffs[int(exp)] = int(c)

    @classmethod
    def zero(cls) -> "QPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "QPolynomial":
        return cls({0: 1})

    @classmethod
    def q_power(cls, exp: int, coeff: int = 1) -> "QPolynomial":
        return cls({exp: coeff})

    def coeffs(self) -> dict:
        return dict(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self._coeffs == ({0: other} if other else {})
        if isinstance(other, QPolynomial):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        out = dict(self._coeffs)
        for exp, c in other._coeffs.items():
            out[exp] = out.get(exp, 0) + c
            if not out[exp]:
                del out[exp]
        res = QPolynomial()
        res._coeffs = out
        return res

    def __mul__(self, other) -> "QPolynomial":
        if isinstance(other, int):
            res = QPolynomial()
            if other:
                res._coeffs = {e: c * other for e, c in self._coeffs.items()}
            return res
        out = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
                if not out[e]:
                    del out[e]
        res = QPolynomial()
        res._coeffs = out
        return res

    __rmul__ = __mul__

    def at_one(self) -> int:
        """Value at q = 1, the sum of all coefficients."""
        return sum(self._coeffs.values())

    def degree(self) -> int:
        """Largest exponent with non-zero coefficient; -1 for the zero polynomial."""
        return max(self._coeffs, default=-1)

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for exp in sorted(self._coeffs):
            c = self._coeffs[exp]
            if exp == 0:
                body = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else str(abs(c))
                body = f"{mag}q" if exp == 1 else f"{mag}q^{exp}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if c > 0 else '-'}{body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"QPolynomial({self._coeffs!r})"


@lru_cache(maxsize=None)
def q_binomial(n: int, s: int) -> QPolynomial:
    """Gaussian binomial with top n and bottom s.

    Zero polynomial when s < 0, n < 0, or s > n; otherwise a polynomial with
    non-negative coefficients, degree s*(n-s), and value comb(n, s) at q = 1.
    """
    if s < 0 or n < 0 or s > n:
        return QPolynomial.zero()
    if s == 0 or s == n:
        return QPolynomial.one()
    return q_binomial(n - 1, s - 1) + QPolynomial.q_power(s) * q_binomial(n - 1, s)


def box_generating_function(ell: int, ellp: int) -> QPolynomial:
    """Sum of q**|s| over the partitions fitting the box (ell, ellp), computed
    by direct enumeration; equals q_binomial(ell + ellp, ell)."""
    coeffs = {}
    for parts in partitions_in_box(ell, ellp):
        size = sum(parts)
        coeffs[size] = coeffs.get(size, 0) + 1
    return QPolynomial(coeffs)


class GradedCharacter:
    """Finitely supported signed-integer map from (grade, weight) pairs.

    Weights are epsilon-coordinate tuples of length ``rank``. No zero values
    are stored. Merging characters is plain dictionary addition, so partial
    results computed in any split of the underlying enumeration combine to
    the same object.
    """

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms=None):
        self.rank = rank
        self.terms = {}
        if terms:
            for (grade, weight), mult in dict(terms).items():
                self.add_term(grade, weight, mult)

    def add_term(self, grade: int, weight: Sequence[int], mult: int = 1) -> None:
        if len(weight) != self.rank:
            raise ValueError(f"weight length {len(weight)} != rank {self.rank}")
        if grade < 0:
            raise ValueError("grades must be non-negative")
        key = (grade, tuple(weight))
        new = self.terms.get(key, 0) + mult
        if new:
            self.terms[key] = new
        else:
            self.terms.pop(key, None)

    def merge(self, other: "GradedCharacter", scale: int = 1) -> "GradedCharacter":
        if other.rank != self.rank:
            raise ValueError("rank mismatch in character merge")
        for (grade, weight), mult in other.terms.items():
            self.add_term(grade, weight, mult * scale)
        return self

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedCharacter):
            return NotImplemented
        return self.rank == other.rank and self.terms == other.terms

    __hash__ = None  # mutable container

    def canonical_terms(self) -> list:
        """Terms sorted by ascending grade, then descending lexicographic weight."""
        return sorted(
            self.terms.items(),
            key=lambda kv: (kv[0][0], tuple(-x for x in kv[0][1])),
        )

    def grades(self) -> set:
        return {grade for grade, _ in self.terms}

    def grade_slice(self, grade: int) -> dict:
        """Weight -> multiplicity map of one graded piece."""
        return {w: m for (s, w), m in self.terms.items() if s == grade}

    def __repr__(self) -> str:
        return f"GradedCharacter(rank={self.rank}, terms={len(self.terms)})"


def character_direct(lam: DominantWeight) -> GradedCharacter:
    """Graded character accumulated over every overlaid pattern: each one
    contributes its weight at the grade given by its box count."""
    ch = GradedCharacter(lam.rank)
    for pop in enumerate_pops(lam):
        ch.add_term(pop_boxes(pop), pop_weight(pop))
    return ch


def character_fermionic(lam: DominantWeight) -> GradedCharacter:
    """Graded character as a lattice sum over gap arrays.

    A gap array assigns one non-negative integer to every barred position
    (i, j <= rank) and unbarred position (i, j < rank). Each position carries
    a Gaussian-binomial factor whose top argument is a fixed affine function
    of the multiplicities and the array entries at higher levels, and the
    array's weight is the bounding weight minus the gap-weighted sum of
    positive roots. Arrays are walked level by level downward so every top
    argument only involves entries already chosen; entries beyond their top
    argument, and branches whose top goes negative, contribute zero by the
    out-of-range convention and are skipped. The result equals
    :func:`character_direct` exactly.
    """
    r = lam.rank
    lam_t = lam.lam
    m = lam.omegas

    positions = [(i, r, True) for i in range(1, r + 1)]
    for j in range(r - 1, 0, -1):
        positions.extend((i, j, False) for i in range(1, j + 1))
        positions.extend((i, j, True) for i in range(1, j + 1))
    vectors = {
        (i, j, barred): root_vector(RootLabel(i, j, barred), r)
        for i, j, barred in positions
    }

    ubar = {}
    bar = {}

    def top_argument(i: int, j: int, barred: bool) -> int:
        if barred and i == j:
            return (
                lam_t[i - 1]
                - sum(ubar[(i, k)] for k in range(i, r))
                - sum(bar[(i, k)] for k in range(i + 1, r + 1))
            )
        if barred:
            return (
                m[i - 1]
                + sum(ubar[(i + 1, k)] - ubar[(i, k)] for k in range(j, r))
                + sum(bar[(i + 1, k)] - bar[(i, k)] for k in range(j + 1, r + 1))
            )
        return (
            m[i - 1]
            + sum(ubar[(i + 1, k)] - ubar[(i, k)] for k in range(j + 1, r))
            + sum(bar[(i + 1, k)] - bar[(i, k)] for k in range(j + 1, r + 1))
        )

    ch = GradedCharacter(r)

    def walk(pos_index: int, weight: list, poly: QPolynomial) -> None:
        if pos_index == len(positions):
            w = tuple(weight)
            for exp, coeff in poly.coeffs().items():
                ch.add_term(exp, w, coeff)
            return
        i, j, barred = positions[pos_index]
        n = top_argument(i, j, barred)
        if n < 0:
            return
        store = bar if barred else ubar
        vec = vectors[(i, j, barred)]
        for ell in range(n + 1):
            store[(i, j)] = ell
            walk(
                pos_index + 1,
                [weight[t] - ell * vec[t] for t in range(r)],
                poly * q_binomial(n, ell),
            )
        del store[(i, j)]

    walk(0, list(lam_t), QPolynomial.one())
    return ch


def zeroth_piece(ch: GradedCharacter) -> GradedCharacter:
    """Restriction to grade 0."""
    out = GradedCharacter(ch.rank)
    for (grade, weight), mult in ch.terms.items():
        if grade == 0:
            out.add_term(0, weight, mult)
    return out


def specialize_q1(ch: GradedCharacter) -> GradedCharacter:
    """Collapse all grades to 0, summing multiplicities per weight."""
    out = GradedCharacter(ch.rank)
    for (_, weight), mult in ch.terms.items():
        out.add_term(0, weight, mult)
    return out


def total_dim(ch: GradedCharacter) -> int:
    """Sum of all multiplicities over grades and weights."""
    return sum(ch.terms.values())


def restrict_drop_last(ch: GradedCharacter) -> GradedCharacter:
    """Delete the last epsilon-coordinate from every weight, merging
    multiplicities; the result has rank one less."""
    if ch.rank < 2:
        raise ValueError("cannot drop a coordinate from a rank-1 character")
    out = GradedCharacter(ch.rank - 1)
    for (grade, weight), mult in ch.terms.items():
        out.add_term(grade, weight[:-1], mult)
    return out


def character_to_json(ch: GradedCharacter) -> dict:
    """JSON shape {"rank", "terms"} with terms in canonical order."""
    return {
        "rank": ch.rank,
        "terms": [
            {"grade": grade, "weight": list(weight), "mult": mult}
            for (grade, weight), mult in ch.canonical_terms()
        ],
    }


def character_from_json(obj: dict) -> GradedCharacter:
    ch = GradedCharacter(int(obj["rank"]))
    for term in obj["terms"]:
        ch.add_term(int(term["grade"]), tuple(int(x) for x in term["weight"]),
                    int(term["mult"]))
    return ch


def character_to_csv(ch: GradedCharacter) -> str:
    """CSV with columns grade, a1..ar, mult, rows in canonical order."""
    header = "grade," + ",".join(f"a{i}" for i in range(1, ch.rank + 1)) + ",mult"
    lines = [header]
    for (grade, weight), mult in ch.canonical_terms():
        lines.append(f"{grade}," + ",".join(str(x) for x in weight) + f",{mult}")
    return "\n".join(lines) + "\n"


def _weight_linear(weight: Sequence[int], symbol: str, sub: str) -> str:
    parts = []
    for i, a in enumerate(weight, start=1):
        if a == 0:
            continue
        mag = "" if abs(a) == 1 else str(abs(a))
        term = f"{mag}{symbol}{sub.format(i=i)}"
        if not parts:
            parts.append(term if a > 0 else f"-{term}")
        else:
            parts.append(f"+{term}" if a > 0 else f"-{term}")
    return "".join(parts) if parts else "0"


def character_to_latex(ch: GradedCharacter) -> str:
    """Terms rendered as "m q^{s} e^{...}" joined by " + "."""
    pieces = []
    for (grade, weight), mult in ch.canonical_terms():
        linear = _weight_linear(weight, r"\varepsilon_", "{{{i}}}")
        pieces.append(f"{mult} q^{{{grade}}} e^{{{linear}}}")
    return " + ".join(pieces) if pieces else "0"


def character_to_text(ch: GradedCharacter) -> str:
    """Display form grouping terms by weight, descending lexicographically;
    each weight carries its q-polynomial of grade multiplicities."""
    by_weight = {}
    for (grade, weight), mult in ch.terms.items():
        by_weight.setdefault(weight, {})[grade] = mult
    pieces = []
    for weight in sorted(by_weight, key=lambda w: tuple(-x for x in w)):
        poly = QPolynomial(by_weight[weight])
        exp = _weight_linear(weight, "ε", "{i}")
        body = "1" if exp == "0" else f"e^{{{exp}}}"
        if poly == 1:
            pieces.append(body)
        else:
            pieces.append(f"({poly})·{body}")
    return " + ".join(pieces) if pieces else "0"
