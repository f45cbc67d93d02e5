"""Bracket polynomial, writhe, and normalization."""

import pytest
from hypothesis import given, settings, strategies as st

from tricross.bracket import (
    DELTA,
    LaurentPoly,
    bracket,
    bracket_naive,
    normalized,
    same_link_evidence,
    writhe,
)
from tricross.braids import BraidWord, braid_closure, torus_word
from tricross.diagrams import DoubleDiagram, parse_double
from tricross.errors import BadParameters, TooLarge
from tricross.planarmap import build_map


def closure(p, letters):
    return braid_closure(BraidWord(p, tuple(letters)))


def free_circles(k):
    return DoubleDiagram(build_map((), {}, {}), {}, loops=k)


class TestLaurentPoly:
    def test_str_formatting(self):
        assert str(LaurentPoly({-4: -1, 0: 3, 4: -1})) == "-A^-4 + 3 - A^4"
        assert str(LaurentPoly({1: 2, -1: 1})) == "A^-1 + 2*A"
        assert str(LaurentPoly()) == "0"
        assert str(DELTA) == "-A^-2 - A^2"

    def test_arithmetic(self):
        a = LaurentPoly({1: 1})
        assert a * a == LaurentPoly({2: 1})
        assert (a + 1) * (a - 1) == LaurentPoly({2: 1, 0: -1})
        assert a ** 3 == LaurentPoly({3: 1})
        assert a - a == LaurentPoly.zero()
        assert 2 * a == LaurentPoly({1: 2})

    def test_int_comparison(self):
        assert LaurentPoly({0: 1}) == 1
        assert LaurentPoly.one() - 1 == 0

    def test_substitute_inverse(self):
        p = LaurentPoly({3: -1, -1: 2})
        assert p.substitute_inverse() == LaurentPoly({-3: -1, 1: 2})

    def test_hashable(self):
        assert len({LaurentPoly({1: 1}), LaurentPoly({1: 1})}) == 1


class TestBracketFrozen:
    """Values fixed by hand computation with these conventions."""

    def test_positive_curl(self):
        d = free_circles(1).insert_kink()
        assert bracket(d) == LaurentPoly({3: -1})
        assert writhe(d) == 1
        assert normalized(d) == 1

    def test_negative_curl(self):
        d = free_circles(1).insert_kink(positive=False)
        assert bracket(d) == LaurentPoly({-3: -1})
        assert writhe(d) == -1
        assert normalized(d) == 1

    def test_free_circles(self):
        assert bracket(free_circles(1)) == 1
        assert bracket(free_circles(3)) == DELTA * DELTA
        assert normalized(free_circles(1)) == 1

    def test_empty_diagram_rejected(self):
        with pytest.raises(BadParameters):
            bracket(free_circles(0))

    def test_positive_clasp(self):
        closed = closure(2, [1, 1])
        assert bracket(closed.diagram) == LaurentPoly({4: -1, -4: -1})
        assert writhe(closed.diagram, closed.orientation) == 2
        assert normalized(closed.diagram, closed.orientation) == LaurentPoly(
            {-2: -1, -10: -1}
        )

    def test_positive_trefoil(self):
        closed = closure(2, [1, 1, 1])
        assert writhe(closed.diagram) == 3
        assert normalized(closed.diagram) == LaurentPoly(
            {-4: 1, -12: 1, -16: -1}
        )

    def test_figure_eight(self):
        closed = closure(3, [1, -2, 1, -2])
        assert closed.diagram.r == 1
        assert writhe(closed.diagram) == 0
        assert normalized(closed.diagram) == LaurentPoly(
            {-8: 1, -4: -1, 0: 1, 4: -1, 8: 1}
        )


class TestMirror:
    def test_bracket_of_mirror_inverts_a(self):
        for word in ([1, 1, 1], [1, -2, 1, -2]):
            d = closure(max(abs(e) for e in word) + 1, word).diagram
            assert bracket(d.mirror()) == bracket(d).substitute_inverse()

    def test_mirror_negates_writhe(self):
        d = closure(2, [1, 1, 1]).diagram
        assert writhe(d.mirror()) == -writhe(d)

    def test_trefoil_is_chiral(self):
        d = closure(2, [1, 1, 1]).diagram
        assert same_link_evidence(d, d.mirror()) == "distinguished"

    def test_figure_eight_matches_its_mirror(self):
        d = closure(3, [1, -2, 1, -2]).diagram
        assert same_link_evidence(d, d.mirror()) == "consistent"


class TestNormalizationInvariance:
    def test_curls_do_not_change_f(self):
        base = closure(2, [1, 1, 1]).diagram
        want = normalized(base)
        for dart in (0, 5):
            for positive in (True, False):
                curled = base.insert_kink(dart=dart, positive=positive)
                assert normalized(curled) == want

    def test_unknot_presentations_agree(self):
        one = closure(2, [1]).diagram          # a curl
        two = closure(3, [1, 2]).diagram       # a two-crossing unknot
        circle = free_circles(1)
        assert normalized(one) == normalized(two) == normalized(circle) == 1
        assert same_link_evidence(one, circle) == "consistent"

    def test_distinguishes_unknot_from_trefoil(self):
        tre = closure(2, [1, 1, 1]).diagram
        assert same_link_evidence(tre, free_circles(1)) == "distinguished"


class TestAgainstNaive:
    def test_frozen_cases(self):
        cases = [
            closure(2, [1]).diagram,
            closure(2, [1, 1]).diagram,
            closure(2, [1, 1, 1]).diagram,
            closure(3, [1, -2, 1, -2]).diagram,
            braid_closure(torus_word(3, 4)).diagram,
        ]
        for d in cases:
            assert bracket(d) == bracket_naive(d)

    def test_parsed_diagram(self):
        d = parse_double("X(1,2,3,4)\nX(4,3,2,1)\n")
        assert bracket(d) == bracket_naive(d)


class TestResourceCap:
    def test_cap_enforced(self):
        d = closure(2, [1, 1, 1]).diagram
        with pytest.raises(TooLarge):
            bracket(d, cap=2)
        with pytest.raises(TooLarge):
            bracket_naive(d, cap=2)
        assert bracket(d, cap=3) == bracket_naive(d)


@st.composite
def small_closures(draw):
    p = draw(st.integers(min_value=2, max_value=3))
    cover = [i * draw(st.sampled_from((1, -1))) for i in range(1, p)]
    extra = draw(
        st.lists(
            st.tuples(
                st.integers(min_value=1, max_value=p - 1),
                st.sampled_from((1, -1)),
            ),
            max_size=4,
        )
    )
    letters = cover + [i * s for i, s in extra]
    rng = draw(st.randoms(use_true_random=False))
    rng.shuffle(letters)
    return braid_closure(BraidWord(p, tuple(letters))).diagram


@settings(max_examples=40, deadline=None)
@given(small_closures())
def test_fast_walk_matches_naive(diag):
    assert bracket(diag) == bracket_naive(diag)


@settings(max_examples=25, deadline=None)
@given(small_closures())
def test_normalization_survives_a_curl(diag):
    if diag.r != 1:
        return  # relative component directions would enter the writhe
    curled = diag.insert_kink(dart=min(diag.map.darts))
    assert normalized(curled) == normalized(diag)
