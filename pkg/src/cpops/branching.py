"""Branching bookkeeping: two-step interlacing filtrations, refinement of the
overlay enumeration by its top blocks, and the rank-lowering Weyl filtration.

``verify_identities`` bundles every counting, character, and branching
identity the package promises for a single dominant weight into a structured
report; failures become report entries with witnesses, never exceptions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb
from typing import Optional

from .characters import (
    GradedCharacter,
    character_direct,
    character_fermionic,
    restrict_drop_last,
    specialize_q1,
    total_dim,
    zeroth_piece,
)
from .oracle import freudenthal_character, weyl_dim
from .patterns import enumerate_patterns, enumerate_restricted_patterns
from .pops import (
    enumerate_f,
    enumerate_pops,
    enumerate_restricted_pops,
    pop_count_formula,
)
from .rootsys import DominantWeight


@dataclass(frozen=True)
class FiltrationTerm:
    """One summand of the rank-lowering filtration: outer and inner gap
    tuples, binomial multiplicity, and the rank-(r-1) bounding sequence."""

    ell: tuple
    ellp: tuple
    mult: int
    target: tuple


def weyl_filtration(lam: DominantWeight) -> list:
    """All filtration terms of ``lam``: ell_i <= m_i, ellp_i <= n_i with
    n_i = m_i - ell_i + ell_{i+1}, multiplicity the product of the two
    binomial families, target the first r-1 entries of lam minus both gaps.

    The dimension bookkeeping sum(mult * dim W(target)) = dim W(lam) holds
    exactly; rank-1 input is rejected.
    """
    r = lam.rank
    if r < 2:
        raise ValueError("filtration needs rank at least 2")
    m = lam.omegas
    lam_t = lam.lam
    terms = []
    for ell in itertools.product(*(range(mi + 1) for mi in m)):
        n = tuple(
            m[i] - ell[i] + (ell[i + 1] if i + 1 < r else 0) for i in range(r - 1)
        )
        outer_mult = 1
        for mi, li in zip(m, ell):
            outer_mult *= comb(mi, li)
        for ellp in itertools.product(*(range(ni + 1) for ni in n)):
            mult = outer_mult
            for ni, li in zip(n, ellp):
                mult *= comb(ni, li)
            target = tuple(lam_t[i] - ell[i] - ellp[i] for i in range(r - 1))
            terms.append(FiltrationTerm(ell, ellp, mult, target))
    return terms


def shtepin_branch_v(lam: DominantWeight) -> list:
    """Bounding sequences of the intermediate-algebra constituents of the
    irreducible module: all integer tuples eta with lam_i >= eta_i >= lam_{i+1}
    (lam_{r+1} = 0), each exactly once."""
    lam_t = lam.lam
    r = lam.rank
    ranges = [
        range(lam_t[i + 1] if i + 1 < r else 0, lam_t[i] + 1) for i in range(r)
    ]
    return [eta for eta in itertools.product(*ranges)]


def shtepin_branch_l(eta) -> list:
    """Constituents of an intermediate-algebra module: all (r-1)-tuples nu
    with eta_i >= nu_i >= eta_{i+1}."""
    eta = tuple(int(x) for x in eta)
    if any(eta[i] < eta[i + 1] for i in range(len(eta) - 1)):
        raise ValueError(f"bounding sequence must be weakly decreasing: {eta}")
    ranges = [range(eta[i + 1], eta[i] + 1) for i in range(len(eta) - 1)]
    return [nu for nu in itertools.product(*ranges)]


@dataclass
class CheckResult:
    check: str
    status: str  # "ok" | "fail" | "skipped"
    lhs: object = None
    rhs: object = None
    witness: Optional[str] = None

    def to_json(self) -> dict:
        obj = {"check": self.check, "status": self.status,
               "lhs": self.lhs, "rhs": self.rhs}
        if self.witness is not None:
            obj["witness"] = self.witness
        return obj


@dataclass
class Report:
    weight: DominantWeight
    entries: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(entry.status != "fail" for entry in self.entries)

    def to_json(self) -> dict:
        return {
            "rank": self.weight.rank,
            "omegas": list(self.weight.omegas),
            "lambda": list(self.weight.lam),
            "ok": self.ok,
            "checks": [entry.to_json() for entry in self.entries],
        }

    def to_text(self) -> str:
        head = f"lambda={self.weight.lam} (omegas={self.weight.omegas})"
        lines = [head]
        for e in self.entries:
            line = f"  [{e.status:>7}] {e.check}: lhs={e.lhs} rhs={e.rhs}"
            if e.witness:
                line += f" witness={e.witness}"
            lines.append(line)
        return "\n".join(lines)


def _pattern_count(lam_tuple) -> int:
    if len(lam_tuple) == 0:
        return 1
    return sum(1 for _ in enumerate_patterns(DominantWeight.from_lambdas(lam_tuple)))


def _restricted_pattern_count(eta) -> int:
    return sum(1 for _ in enumerate_restricted_patterns(eta))


def _character_diff_witness(a: GradedCharacter, b: GradedCharacter) -> str:
    keys = sorted(set(a.terms) | set(b.terms))
    for key in keys:
        if a.terms.get(key) != b.terms.get(key):
            return (f"term {key}: {a.terms.get(key, 0)} vs {b.terms.get(key, 0)}")
    return "none"


def _refinement_by_top_block(lam: DominantWeight) -> CheckResult:
    # Group overlaid patterns by the gap and overlay data of the final barred
    # block; the groups must jointly enumerate the admissible block choices,
    # each group the size of the restricted enumeration it points at.
    r = lam.rank
    groups = {}
    for pop in enumerate_pops(lam):
        lam_row = pop.pattern.lambda_rows[-1]
        eta_row = pop.pattern.eta_rows[-1]
        ells = tuple(lam_row[i] - eta_row[i] for i in range(r))
        parts = tuple(pop.barred_overlays[(i, r)] for i in range(1, r + 1))
        groups[(ells, parts)] = groups.get((ells, parts), 0) + 1
    expected = {}
    for combo in itertools.product(*(list(enumerate_f(mi)) for mi in lam.omegas)):
        ells = tuple(ell for ell, _ in combo)
        parts = tuple(s for _, s in combo)
        eta = tuple(lam.lam[i] - ells[i] for i in range(r))
        expected[(ells, parts)] = sum(1 for _ in enumerate_restricted_pops(eta))
    if groups == expected:
        return CheckResult("pop-refinement-by-top-block", "ok",
                           len(groups), len(expected))
    for key in sorted(set(groups) | set(expected)):
        if groups.get(key) != expected.get(key):
            witness = f"block {key}: {groups.get(key, 0)} vs {expected.get(key, 0)}"
            break
    return CheckResult("pop-refinement-by-top-block", "fail",
                       len(groups), len(expected), witness)


def _restricted_refinement(eta: tuple) -> bool:
    # Same refinement one half-step down: group restricted overlaid patterns
    # by their top unbarred block, against rank-(r-1) enumerations.
    r = len(eta)
    n = tuple(eta[i] - (eta[i + 1] if i + 1 < r else 0) for i in range(r))
    groups = {}
    for rpop in enumerate_restricted_pops(eta):
        eta_row = rpop.pattern.eta_rows[-1]
        lam_row = rpop.pattern.lambda_rows[-1]
        ells = tuple(eta_row[i] - lam_row[i] for i in range(r - 1))
        parts = tuple(rpop.unbarred_overlays[(i, r - 1)] for i in range(1, r))
        groups[(ells, parts)] = groups.get((ells, parts), 0) + 1
    expected = {}
    for combo in itertools.product(*(list(enumerate_f(n[i])) for i in range(r - 1))):
        ells = tuple(ell for ell, _ in combo)
        parts = tuple(s for _, s in combo)
        target = tuple(eta[i] - ells[i] for i in range(r - 1))
        expected[(ells, parts)] = sum(
            1 for _ in enumerate_pops(DominantWeight.from_lambdas(target))
        )
    return groups == expected


def verify_identities(lam: DominantWeight) -> Report:
    """Run every identity the package asserts for one dominant weight and
    report each as ok, fail, or skipped (when the rank is too small for it)."""
    r = lam.rank
    report = Report(lam)
    entries = report.entries

    n_patterns = sum(1 for _ in enumerate_patterns(lam))
    dim_v = weyl_dim(lam)
    entries.append(CheckResult(
        "pattern-count-vs-weyl-dim",
        "ok" if n_patterns == dim_v else "fail", n_patterns, dim_v))

    n_pops = sum(1 for _ in enumerate_pops(lam))
    formula = pop_count_formula(lam)
    entries.append(CheckResult(
        "pop-count-vs-product-formula",
        "ok" if n_pops == formula else "fail", n_pops, formula))

    direct = character_direct(lam)
    fermionic = character_fermionic(lam)
    if direct == fermionic:
        entries.append(CheckResult(
            "character-direct-vs-fermionic", "ok",
            len(direct.terms), len(fermionic.terms)))
    else:
        entries.append(CheckResult(
            "character-direct-vs-fermionic", "fail",
            len(direct.terms), len(fermionic.terms),
            _character_diff_witness(direct, fermionic)))

    zero_slice = zeroth_piece(direct).grade_slice(0)
    table = freudenthal_character(lam).mults
    entries.append(CheckResult(
        "zeroth-piece-vs-freudenthal",
        "ok" if zero_slice == table else "fail",
        sum(zero_slice.values()), sum(table.values())))

    entries.append(_refinement_by_top_block(lam))

    if r >= 2:
        etas = {
            tuple(lam.lam[i] - ells[i] for i in range(r))
            for ells in itertools.product(*(range(mi + 1) for mi in lam.omegas))
        }
        bad = None
        for eta in sorted(etas):
            if not _restricted_refinement(eta):
                bad = eta
                break
        entries.append(CheckResult(
            "restricted-refinement-by-top-block",
            "ok" if bad is None else "fail", len(etas), len(etas),
            None if bad is None else f"eta={bad}"))
    else:
        entries.append(CheckResult(
            "restricted-refinement-by-top-block", "skipped"))

    etas = shtepin_branch_v(lam)
    total_intermediate = sum(_restricted_pattern_count(eta) for eta in etas)
    entries.append(CheckResult(
        "irreducible-dim-vs-intermediate-sum",
        "ok" if n_patterns == total_intermediate else "fail",
        n_patterns, total_intermediate))

    bad = None
    for eta in etas:
        lhs = _restricted_pattern_count(eta)
        rhs = sum(_pattern_count(nu) for nu in shtepin_branch_l(eta))
        if lhs != rhs:
            bad = f"eta={eta}: {lhs} vs {rhs}"
            break
    entries.append(CheckResult(
        "intermediate-dim-vs-irreducible-sum",
        "ok" if bad is None else "fail", len(etas), len(etas), bad))

    if r >= 2:
        terms = weyl_filtration(lam)
        booked = sum(
            term.mult * pop_count_formula(DominantWeight.from_lambdas(term.target))
            for term in terms
        )
        entries.append(CheckResult(
            "weyl-filtration-dimension",
            "ok" if booked == formula else "fail", booked, formula))

        lhs = restrict_drop_last(specialize_q1(direct))
        rhs = GradedCharacter(r - 1)
        cache = {}
        for term in terms:
            if term.target not in cache:
                cache[term.target] = specialize_q1(
                    character_direct(DominantWeight.from_lambdas(term.target)))
            rhs.merge(cache[term.target], scale=term.mult)
        if lhs == rhs:
            entries.append(CheckResult(
                "ungraded-restriction-character", "ok",
                total_dim(lhs), total_dim(rhs)))
        else:
            entries.append(CheckResult(
                "ungraded-restriction-character", "fail",
                total_dim(lhs), total_dim(rhs),
                _character_diff_witness(lhs, rhs)))
    else:
        entries.append(CheckResult("weyl-filtration-dimension", "skipped"))
        entries.append(CheckResult("ungraded-restriction-character", "skipped"))

    return report
