import pytest

from roofcalc import bundles
from roofcalc.errors import AmbiguityError, InjectivityViolationError, RankError
from roofcalc.hodge import (
    HodgeDiamond,
    ZeroLocusSpec,
    ambient_diamond,
    check_pair_theorem,
    hodge_numbers,
    pair_invariants,
    pair_specs,
    point_count,
    v_cohomology,
)


def hyperplane(n):
    return ZeroLocusSpec(1, n + 1, bundles.line(1, n + 1, 1))


class TestAmbientDiamond:
    def test_projective_space(self):
        d = ambient_diamond(1, 6)
        assert d.diagonal() == [1] * 6

    def test_published_ambient_values(self):
        assert ambient_diamond(2, 6).h(2, 2) == 2
        assert ambient_diamond(3, 6).h(3, 3) == 3

    def test_total_is_binomial(self):
        from math import comb

        for k, n in [(1, 5), (2, 5), (2, 6), (3, 7), (4, 8)]:
            assert sum(ambient_diamond(k, n).diagonal()) == comb(n, k)

    def test_off_diagonal_zero(self):
        d = ambient_diamond(2, 5)
        assert all(p == q for (p, q) in d.entries)


class TestHyperplanes:
    @pytest.mark.parametrize("n", range(2, 8))
    def test_hyperplane_reproduces_smaller_projective_space(self, n):
        got = hodge_numbers(hyperplane(n))
        want = ambient_diamond(1, n)
        assert got.fully_exact()
        assert got.dim == n - 1
        for p in range(n):
            for q in range(n):
                assert got.h(p, q) == want.h(p, q), (n, p, q)


class TestPointCounts:
    def test_twenty_one_points(self):
        spec = ZeroLocusSpec(1, 6, bundles.twist(bundles.quotient_dual(1, 6), 2))
        assert point_count(spec) == 21

    def test_single_hyperplane_point(self):
        assert point_count(ZeroLocusSpec(1, 2, bundles.line(1, 2, 1))) == 1

    def test_bezout(self):
        conic_line = bundles.direct_sum(
            bundles.line(1, 3, 2), bundles.line(1, 3, 1)
        )
        assert point_count(ZeroLocusSpec(1, 3, conic_line)) == 2

    def test_rejects_positive_dimension(self):
        with pytest.raises(RankError):
            point_count(hyperplane(3))


class TestDiamondInvariants:
    @pytest.mark.parametrize(
        "spec",
        [
            hyperplane(4),
            ZeroLocusSpec(2, 5, bundles.twist(bundles.quotient_dual(2, 5), 2)),
            ZeroLocusSpec(2, 6, bundles.twist(bundles.quotient_dual(2, 6), 2)),
            ZeroLocusSpec(3, 6, bundles.twist(bundles.tautological(3, 6), 2)),
            ZeroLocusSpec(1, 5, bundles.direct_sum(bundles.line(1, 5, 2), bundles.line(1, 5, 2))),
        ],
        ids=["P3-hyperplane", "CY3", "Y1-236", "Y2-236", "quadric-quadric-P4"],
    )
    def test_symmetries_and_euler(self, spec):
        d = hodge_numbers(spec)
        d.check_symmetries()
        d.check_euler_columns()
        assert d.fully_exact()
        # Hodge + Serre symmetry explicitly
        for p in range(d.dim + 1):
            for q in range(d.dim + 1):
                assert d.h(p, q) == d.h(q, p)
                assert d.h(p, q) == d.h(d.dim - p, d.dim - q)

    def test_euler_characteristic_consistency(self):
        spec = ZeroLocusSpec(2, 6, bundles.twist(bundles.quotient_dual(2, 6), 2))
        d = hodge_numbers(spec)
        total = sum(
            (-1) ** (p + q) * d.h(p, q)
            for p in range(d.dim + 1)
            for q in range(d.dim + 1)
        )
        assert total == d.euler_characteristic()


class TestClassicalHypersurfaces:
    @pytest.mark.parametrize(
        "n,text,want",
        [
            (3, "O(2)", [[1, 0], [0, 1]]),  # conic = P1
            (3, "O(4)", [[1, 3], [3, 1]]),  # genus-3 quartic curve
            (4, "O(4)", [[1, 0, 1], [0, 20, 0], [1, 0, 1]]),  # quartic K3
            (4, "O(3)", [[1, 0, 0], [0, 7, 0], [0, 0, 1]]),  # cubic surface
            (
                5,
                "O(3)",  # cubic threefold
                [[1, 0, 0, 0], [0, 1, 5, 0], [0, 5, 1, 0], [0, 0, 0, 1]],
            ),
            (
                5,
                "O(5)",  # quintic threefold
                [[1, 0, 0, 1], [0, 1, 101, 0], [0, 101, 1, 0], [1, 0, 0, 1]],
            ),
            (
                5,
                "O(2)+O(2)",  # degree-4 del Pezzo: P2 blown up in 5 points
                [[1, 0, 0], [0, 6, 0], [0, 0, 1]],
            ),
        ],
        ids=["conic", "quartic-curve", "K3", "cubic-surface", "cubic-3fold",
             "quintic-3fold", "del-pezzo-4"],
    )
    def test_textbook_values(self, n, text, want):
        from roofcalc.parser import parse_bundle

        spec = ZeroLocusSpec(1, n, parse_bundle(text, 1, n))
        d = hodge_numbers(spec)
        assert d.fully_exact()
        assert d.matrix() == want


def griffiths_middle_row(n: int, d: int) -> list[int]:
    """Middle Hodge row of a smooth degree-d hypersurface in P^n from the
    Jacobian-ring description: the primitive part of h^{n-1-q,q} is the
    coefficient of t^{(q+1)d - (n+1)} in ((1-t^{d-1})/(1-t))^{n+1}, and the
    center entry gains 1 from the hyperplane class when n-1 is even."""
    # coefficients of (1 + t + ... + t^{d-2})^{n+1}
    poly = [1]
    block = [1] * (d - 1)
    for _ in range(n + 1):
        out = [0] * (len(poly) + len(block) - 1)
        for i, a in enumerate(poly):
            for j, b in enumerate(block):
                out[i + j] += a * b
        poly = out
    row = []
    dim = n - 1
    for p in range(dim + 1):
        q = dim - p
        e = (q + 1) * d - (n + 1)
        h = poly[e] if 0 <= e < len(poly) else 0
        if dim % 2 == 0 and p == q:
            h += 1
        row.append(h)
    return row


class TestGriffithsOracle:
    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    @pytest.mark.parametrize("d", [2, 3, 4, 5])
    def test_hypersurface_middle_rows(self, n, d):
        spec = ZeroLocusSpec(1, n + 1, bundles.line(1, n + 1, d))
        diamond = hodge_numbers(spec)
        assert diamond.fully_exact()
        assert diamond.middle_row() == griffiths_middle_row(n, d), (n, d)


class TestGlobalGeneration:
    def test_rejects_non_globally_generated(self):
        with pytest.raises(RankError):
            ZeroLocusSpec(2, 5, bundles.quotient_dual(2, 5))  # needs the twist

    def test_rejects_overfull_rank(self):
        with pytest.raises(RankError):
            ZeroLocusSpec(1, 3, bundles.direct_sum(*[bundles.line(1, 3, 1)] * 3))


class TestVCohomology:
    def test_center_subtraction(self):
        y = hodge_numbers(ZeroLocusSpec(2, 6, bundles.twist(bundles.quotient_dual(2, 6), 2)))
        g = ambient_diamond(2, 6)
        assert v_cohomology(y, g) == [15, 672, 2269, 672, 15]

    def test_trivial_difference_is_zero(self):
        # a hyperplane's middle row matches the smaller projective space
        y = hodge_numbers(hyperplane(4))
        fake_ambient = ambient_diamond(1, 4)
        row = v_cohomology(y, fake_ambient)
        assert row == [0, 0, 0, 0]

    def test_injectivity_violation(self):
        y = HodgeDiamond(4)
        y.set_entry(2, 2, 1)  # below h^{2,2}(G(2,4)) = 2
        g = ambient_diamond(2, 4)
        with pytest.raises(InjectivityViolationError):
            v_cohomology(y, g)

    def test_ambiguity_error(self):
        y = HodgeDiamond(2)
        y.set_entry(1, 1, 1, 5)
        with pytest.raises(AmbiguityError):
            v_cohomology(y, ambient_diamond(1, 3))


class TestPairInvariants:
    def test_calabi_yau_case(self):
        inv = pair_invariants(3, 7)
        assert (inv.d1, inv.d2) == (8, 8)
        assert (inv.canonical_twist_1, inv.canonical_twist_2) == (0, 0)
        assert inv.cy

    def test_points_and_fano(self):
        inv = pair_invariants(1, 6)
        assert (inv.d1, inv.d2) == (0, 6)
        assert (inv.canonical_twist_1, inv.canonical_twist_2) == (3, -3)
        assert not inv.cy

    def test_general_type_fano(self):
        inv = pair_invariants(2, 6)
        assert (inv.d1, inv.d2) == (4, 6)
        assert (inv.canonical_twist_1, inv.canonical_twist_2) == (1, -1)

    def test_dimension_formula_matches_rank_count(self):
        for k, n in [(1, 5), (2, 5), (2, 6), (2, 7), (3, 7), (3, 8)]:
            inv = pair_invariants(k, n)
            s1, s2 = pair_specs(k, n)
            assert s1.dim == inv.d1
            assert s2.dim == inv.d2

    def test_domain(self):
        with pytest.raises(RankError):
            pair_invariants(3, 6)


class TestCheckPairTheorem:
    @pytest.mark.parametrize("k,n", [(1, 5), (2, 5), (2, 6)])
    def test_passes(self, k, n):
        rep = check_pair_theorem(k, n)
        assert rep.passed, rep.failures

    def test_shift_is_colevel(self):
        rep = check_pair_theorem(2, 6)
        assert rep.shift == 6 - 2 * 2 - 1 == 1
