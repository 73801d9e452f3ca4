import json
import random
from math import comb

import pytest

from cpops.characters import (
    GradedCharacter,
    QPolynomial,
    box_generating_function,
    character_direct,
    character_fermionic,
    character_from_json,
    character_to_csv,
    character_to_json,
    character_to_latex,
    character_to_text,
    q_binomial,
    restrict_drop_last,
    specialize_q1,
    total_dim,
    zeroth_piece,
)
from cpops.oracle import signed_orbit
from cpops.pops import enumerate_pops, pop_boxes, pop_weight
from cpops.rootsys import DominantWeight, sweep_dominant_weights


def test_qpolynomial_arithmetic():
    one = QPolynomial.one()
    q = QPolynomial.q_power(1)
    assert one + q == QPolynomial({0: 1, 1: 1})
    assert (one + q) * (one + q) == QPolynomial({0: 1, 1: 2, 2: 1})
    assert (one + q) * 0 == QPolynomial.zero()
    assert 3 * q == QPolynomial({1: 3})
    assert str(one + q) == "1+q"
    assert str(QPolynomial({0: 1, 2: 2, 3: 1})) == "1+2q^2+q^3"
    assert str(QPolynomial.zero()) == "0"


def test_q_binomial_examples():
    for n in (0, 1, 5, 9):
        assert q_binomial(n, 0) == QPolynomial.one()
    assert q_binomial(2, 1) == QPolynomial({0: 1, 1: 1})
    assert q_binomial(4, 2) == QPolynomial({0: 1, 1: 1, 2: 2, 3: 1, 4: 1})


def test_q_binomial_out_of_range_is_zero():
    assert q_binomial(-1, 0) == QPolynomial.zero()
    assert q_binomial(2, 3) == QPolynomial.zero()
    assert q_binomial(-2, -1) == QPolynomial.zero()


@pytest.mark.parametrize("n", range(9))
def test_q_binomial_specialization_and_degree(n):
    for s in range(n + 1):
        poly = q_binomial(n, s)
        assert poly.at_one() == comb(n, s)
        assert poly.degree() == s * (n - s)
        assert all(c > 0 for c in poly.coeffs().values())


def test_box_generating_function_examples():
    assert box_generating_function(0, 7) == QPolynomial.one()
    assert box_generating_function(1, 1) == QPolynomial({0: 1, 1: 1})
    assert box_generating_function(2, 2) == QPolynomial({0: 1, 1: 1, 2: 2, 3: 1, 4: 1})


def test_box_generating_function_equals_q_binomial():
    for ell in range(7):
        for ellp in range(7):
            assert box_generating_function(ell, ellp) == q_binomial(ell + ellp, ell)


def test_character_direct_zero_weight():
    for r in (1, 2, 3):
        ch = character_direct(DominantWeight.from_omegas((0,) * r))
        assert ch.terms == {(0, (0,) * r): 1}


def test_character_direct_rank1_example():
    ch = character_direct(DominantWeight.from_omegas((2,)))
    assert ch.terms == {
        (0, (2,)): 1,
        (0, (0,)): 1,
        (1, (0,)): 1,
        (0, (-2,)): 1,
    }


def test_character_direct_omega1_rank2():
    ch = character_direct(DominantWeight.from_omegas((1, 0)))
    assert ch.terms == {
        (0, (1, 0)): 1,
        (0, (0, 1)): 1,
        (0, (0, -1)): 1,
        (0, (-1, 0)): 1,
    }


def test_character_fermionic_examples():
    assert character_fermionic(DominantWeight.from_omegas((0, 0))).terms == {
        (0, (0, 0)): 1
    }
    ch = character_fermionic(DominantWeight.from_omegas((2,)))
    assert ch == character_direct(DominantWeight.from_omegas((2,)))
    w = DominantWeight.from_omegas((0, 1))
    assert character_fermionic(w) == character_direct(w)


def test_character_methods_agree_rank1_sweep():
    for w in sweep_dominant_weights(1, 3):
        assert character_direct(w) == character_fermionic(w), w


def test_binomial_tops_equal_gap_sums_pointwise():
    # On every valid pattern, the top argument the lattice sum assigns to a
    # position, computed from the gap entries alone, equals l + lp of the
    # pattern's gap array there. This is the pointwise reason the two
    # character computations agree.
    from cpops.patterns import differences, enumerate_patterns

    for rank in (1, 2, 3):
        for w in sweep_dominant_weights(rank, 2):
            r = w.rank
            m = w.omegas
            lam = w.lam
            for p in enumerate_patterns(w):
                d = differences(p)
                ubar = {key: val[0] for key, val in d.unbarred.items()}
                bar = {key: val[0] for key, val in d.barred.items()}
                for (i, j), (ell, ellp) in d.unbarred.items():
                    top = (
                        m[i - 1]
                        + sum(ubar[(i + 1, k)] - ubar[(i, k)]
                              for k in range(j + 1, r))
                        + sum(bar[(i + 1, k)] - bar[(i, k)]
                              for k in range(j + 1, r + 1))
                    )
                    assert top == ell + ellp, (w, p, "unbarred", i, j)
                for (i, j), (ell, ellp) in d.barred.items():
                    if i == j:
                        top = (
                            lam[i - 1]
                            - sum(ubar[(i, k)] for k in range(i, r))
                            - sum(bar[(i, k)] for k in range(i + 1, r + 1))
                        )
                    else:
                        top = (
                            m[i - 1]
                            + sum(ubar[(i + 1, k)] - ubar[(i, k)]
                                  for k in range(j, r))
                            + sum(bar[(i + 1, k)] - bar[(i, k)]
                                  for k in range(j + 1, r + 1))
                        )
                    assert top == ell + ellp, (w, p, "barred", i, j)


def test_zeroth_piece_examples():
    ch = character_direct(DominantWeight.from_omegas((2,)))
    zp = zeroth_piece(ch)
    assert zp.terms == {(0, (2,)): 1, (0, (0,)): 1, (0, (-2,)): 1}
    tiny = GradedCharacter(2, {(0, (0, 0)): 1})
    assert zeroth_piece(tiny) == tiny
    w1 = character_direct(DominantWeight.from_omegas((1, 0)))
    assert zeroth_piece(w1) == w1


def test_specialize_and_total_dim():
    assert total_dim(character_direct(DominantWeight.from_omegas((2,)))) == 4
    assert total_dim(character_direct(DominantWeight.from_omegas((0, 0)))) == 1
    assert total_dim(character_direct(DominantWeight.from_omegas((1, 1)))) == 20
    sp = specialize_q1(character_direct(DominantWeight.from_omegas((2,))))
    assert sp.terms == {(0, (2,)): 1, (0, (0,)): 2, (0, (-2,)): 1}


def test_restrict_drop_last():
    ch = character_direct(DominantWeight.from_omegas((1, 0)))
    dropped = restrict_drop_last(ch)
    assert dropped.rank == 1
    assert dropped.terms == {(0, (1,)): 1, (0, (-1,)): 1, (0, (0,)): 2}
    tiny = GradedCharacter(2, {(0, (0, 0)): 1})
    assert restrict_drop_last(tiny).terms == {(0, (0,)): 1}
    w2 = restrict_drop_last(character_direct(DominantWeight.from_omegas((0, 1))))
    assert total_dim(w2) == 5
    with pytest.raises(ValueError):
        restrict_drop_last(GradedCharacter(1, {(0, (0,)): 1}))


def test_canonical_term_order():
    ch = character_direct(DominantWeight.from_omegas((2,)))
    keys = [key for key, _ in ch.canonical_terms()]
    assert keys == [(0, (2,)), (0, (0,)), (0, (-2,)), (1, (0,))]


def test_character_json_round_trip():
    for w in sweep_dominant_weights(2, 2):
        ch = character_direct(w)
        blob = json.dumps(character_to_json(ch))
        assert character_from_json(json.loads(blob)) == ch


def test_render_formats_smoke():
    ch = character_direct(DominantWeight.from_omegas((2,)))
    assert character_to_text(ch) == "e^{2ε1} + (1+q)·1 + e^{-2ε1}"
    csv = character_to_csv(ch)
    assert csv.splitlines()[0] == "grade,a1,mult"
    assert "1,0,1" in csv.splitlines()
    latex = character_to_latex(ch)
    assert "q^{1}" in latex and "\\varepsilon_{1}" in latex


def test_signed_permutation_invariance_of_slices():
    for w in sweep_dominant_weights(2, 2):
        ch = character_direct(w)
        for grade in ch.grades():
            piece = ch.grade_slice(grade)
            for weight, mult in piece.items():
                for image in signed_orbit(weight):
                    assert piece.get(image) == mult, (w, grade, weight)


def test_merge_is_partition_independent():
    w = DominantWeight.from_omegas((1, 1))
    sequential = character_direct(w)
    chunks = {}
    for pop in enumerate_pops(w):
        chunks.setdefault(pop.pattern.eta_rows[-1], []).append(pop)
    keys = list(chunks)
    random.Random(7).shuffle(keys)
    merged = GradedCharacter(w.rank)
    for key in keys:
        part = GradedCharacter(w.rank)
        for pop in chunks[key]:
            part.add_term(pop_boxes(pop), pop_weight(pop))
        merged.merge(part)
    assert merged == sequential
