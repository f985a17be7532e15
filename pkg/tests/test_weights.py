import pytest
from hypothesis import given, strategies as st

from roofcalc.errors import (
    DominanceError,
    NotGloballyGeneratedError,
    RankError,
)
from roofcalc.weights import (
    DoubleWeight,
    bar_move,
    dual_schur_q,
    enumerate_box,
    render_diagram,
)

from oracles import brute_force_box


class TestEnumerateBox:
    def test_zero_one_columns(self):
        box = enumerate_box(4, 1)
        assert box.members == (
            (1, 1, 1, 1),
            (1, 1, 1, 0),
            (1, 1, 0, 0),
            (1, 0, 0, 0),
            (0, 0, 0, 0),
        )

    def test_g25_lower_components(self):
        # the ten lower blocks of the twisted tilting generator on G(2,5)
        box = enumerate_box(3, 2)
        assert len(box) == 10
        assert set(box.members) == {
            (0, 0, 0), (1, 0, 0), (2, 0, 0), (1, 1, 0), (2, 1, 0),
            (2, 2, 0), (1, 1, 1), (2, 1, 1), (2, 2, 1), (2, 2, 2),
        }

    def test_brute_force_agreement(self):
        box = enumerate_box(2, 3)
        assert len(box) == 10
        assert set(box.members) == brute_force_box(2, 3)

    @pytest.mark.parametrize("a", range(1, 9))
    @pytest.mark.parametrize("b", range(1, 9))
    def test_counts(self, a, b):
        from math import comb

        assert len(enumerate_box(a, b)) == comb(a + b, b)

    def test_invalid_rank(self):
        with pytest.raises(RankError):
            enumerate_box(0, 2)

    def test_descending_order(self):
        members = enumerate_box(3, 3).members
        assert list(members) == sorted(members, reverse=True)


class TestBarMove:
    def test_fourth_diagram(self):
        w = DoubleWeight((1,), (1, 0, 0, 0))
        assert bar_move(w) == DoubleWeight((1, 1), (0, 0, 0))

    def test_first_diagram(self):
        w = DoubleWeight((1,), (0, 0, 0, 0))
        assert bar_move(w) == DoubleWeight((1, 0), (0, 0, 0))

    def test_trivial_bundle(self):
        w = DoubleWeight((0,), (0, 0, 0, 0))
        assert bar_move(w) == DoubleWeight((0, 0), (0, 0, 0))

    def test_not_globally_generated(self):
        # the dual quotient bundle is not fully ordered
        with pytest.raises(NotGloballyGeneratedError):
            bar_move(DoubleWeight((0, 0), (1, 0, 0)))

    def test_rank_error(self):
        with pytest.raises(RankError):
            bar_move(DoubleWeight((1, 1), (1,)))

    @given(
        st.lists(st.integers(min_value=-3, max_value=4), min_size=4, max_size=7).map(
            lambda xs: tuple(sorted(xs, reverse=True))
        ),
        st.integers(min_value=1, max_value=2),
    )
    def test_preserves_total_sequence(self, concat, k):
        if k >= len(concat) - 1:
            k = 1
        w = DoubleWeight(concat[:k], concat[k:])
        moved = bar_move(w)
        assert sorted(moved.concat()) == sorted(w.concat())
        assert moved.concat() == w.concat()
        assert moved.is_fully_ordered()


class TestDualSchurQ:
    def test_examples(self):
        assert dual_schur_q((1, 1, 0)) == ((1, 0, 0), 1)
        assert dual_schur_q((0, 0, 0)) == ((0, 0, 0), 0)
        assert dual_schur_q((2, 1, 1)) == ((1, 1, 0), 2)

    def test_needs_dominance(self):
        with pytest.raises(DominanceError):
            dual_schur_q((0, 1))

    @given(
        st.lists(st.integers(min_value=-4, max_value=6), min_size=1, max_size=6).map(
            lambda xs: tuple(sorted(xs, reverse=True))
        )
    )
    def test_involution_up_to_twist(self, lam):
        # dualising twice shifts by the difference of the two twists
        bar, t = dual_schur_q(lam)
        bar2, t2 = dual_schur_q(bar)
        assert tuple(e + (t - t2) for e in bar2) == lam
        assert t - t2 == lam[-1]


class TestRenderDiagram:
    def test_paper_shape(self):
        w = DoubleWeight((3, 2, 2, 1), (2, 0))
        art = render_diagram(w)
        assert art.splitlines() == [
            "[][][]",
            "[][]",
            "[][]",
            "[]",
            "------",
            "[][]",
        ]

    def test_empty_marker(self):
        art = render_diagram(DoubleWeight((0,), (0,)))
        assert "(empty)" in art

    def test_two_boxes_over_empty(self):
        art = render_diagram(DoubleWeight((1, 1), (0, 0, 0)))
        assert art.splitlines() == ["[]", "[]", "--", "(empty)"]

    def test_negative_falls_back_to_numeric(self):
        w = DoubleWeight((1, -1), (0, 0))
        assert render_diagram(w) == "(1,-1|0,0)"
