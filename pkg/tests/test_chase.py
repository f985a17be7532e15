"""Unit tests of the linear chase engine on hand-checkable systems."""

import pytest

from roofcalc.chase import Form, LinearSystem, les_chain, spectral_flow


def bounds_of(system, forms):
    system.propagate()
    return [system.bounds(f) for f in forms]


class TestLinearSystem:
    def test_equality_elimination_cancels(self):
        # h = (a - x) - (b - x) must collapse to a - b exactly
        s = LinearSystem()
        x = Form.var(s.new_var(0, 100))
        h1 = Form.of(10) - x
        h2 = Form.of(4) - x
        s.add_eq(h2)  # forces x = 4
        assert s.bounds(h1) == (6, 6)

    def test_inconsistent_equality_raises(self):
        s = LinearSystem()
        with pytest.raises(ArithmeticError):
            s.add_eq(Form.of(3))

    def test_propagation_tightens(self):
        s = LinearSystem()
        x = Form.var(s.new_var(0, None))
        y = Form.var(s.new_var(0, None))
        s.add_ge0(Form.of(5) - x - y)  # x + y <= 5
        s.propagate()
        assert s.bounds(x) == (0, 5)
        assert s.bounds(x + y) == (0, 10)  # box evaluation, not joint

    def test_forced_zero(self):
        s = LinearSystem()
        x = Form.var(s.new_var(0, None))
        s.add_ge0(-x)
        s.propagate()
        assert s.bounds(x) == (0, 0)


class TestSpectralFlow:
    def test_no_cancellation(self):
        s = LinearSystem()
        out = spectral_flow(s, {0: 1, 4: 15}, low=0, high=4)
        assert bounds_of(s, [out[m] for m in (0, 4)]) == [(1, 1), (15, 15)]

    def test_boundary_forces_chain(self):
        # totals beyond the window must cancel downward step by step
        s = LinearSystem()
        out = spectral_flow(s, {4: 100, 5: 30, 6: 10}, low=0, high=4)
        s.propagate()
        # f5 = 10, f4 = 30 - 10 = 20, h4 = 100 - 20
        assert s.bounds(out[4]) == (80, 80)

    def test_interior_ambiguity_stays(self):
        s = LinearSystem()
        out = spectral_flow(s, {2: 5, 3: 3}, low=0, high=4)
        s.propagate()
        lo2, hi2 = s.bounds(out[2])
        lo3, hi3 = s.bounds(out[3])
        assert (lo2, hi2) == (2, 5)
        assert (lo3, hi3) == (0, 3)

    def test_negative_window_clamps(self):
        s = LinearSystem()
        out = spectral_flow(s, {-1: 7, 0: 7}, low=0, high=4)
        s.propagate()
        assert s.bounds(out[0]) == (0, 0)


class TestLesChain:
    def test_zero_kernel_passthrough(self):
        s = LinearSystem()
        zero = [Form.of(0)] * 5
        mid = [Form.of(0), Form.of(1), Form.of(0), Form.of(0), Form.of(7)]
        out = les_chain(s, zero, [mid], top=4)
        assert bounds_of(s, out) == [(0, 0), (1, 1), (0, 0), (0, 0), (7, 7)]

    def test_correlated_cancellation(self):
        # 0 -> A -> B1 -> C1 -> 0, 0 -> C1 -> B2 -> C2 -> 0 with all data in
        # top degree: the middle cancellation must happen symbolically
        s = LinearSystem()
        a = [Form.of(0), Form.of(0), Form.of(10)]
        b1 = [Form.of(0), Form.of(0), Form.of(14)]
        b2 = [Form.of(0), Form.of(0), Form.of(6)]
        c2 = les_chain(s, a, [b1, b2], top=2)
        s.propagate()
        # chi is determined: 6 - 14 + 10 = 2 must equal h0 - h1 + h2
        chi_form = c2[0] - c2[1] + c2[2]
        assert s.bounds(chi_form) == (2, 2)

    def test_injectivity_at_degree_zero(self):
        # H^0(A) -> H^0(B) injective: h0(C) = h0(B) - h0(A) + ker into h1
        s = LinearSystem()
        a = [Form.of(3), Form.of(0), Form.of(0)]
        b = [Form.of(5), Form.of(0), Form.of(0)]
        out = les_chain(s, a, [b], top=2)
        assert bounds_of(s, out) == [(2, 2), (0, 0), (0, 0)]


class TestSoundnessAgainstRandomTruth:
    """The chase must always bracket data generated from actual ranks."""

    def test_les_chain_brackets_truth(self):
        import random

        rng = random.Random(99)
        for _ in range(200):
            top = rng.randint(1, 4)
            degrees = top + 1
            length = rng.randint(1, 3)
            k_true = [rng.randint(0, 9) for _ in range(degrees)]
            middles = []
            ks = [k_true]
            for _ in range(length):
                prev = ks[-1]
                # choose genuine connecting ranks, then build M and K
                x = [prev[0]] + [rng.randint(0, prev[q]) for q in range(1, degrees)]
                m = [x[q] + rng.randint(0, 6) for q in range(degrees)]
                nxt = [
                    m[q] - x[q] + (prev[q + 1] if q + 1 < degrees else 0)
                    - (x[q + 1] if q + 1 < degrees else 0)
                    for q in range(degrees)
                ]
                middles.append(m)
                ks.append(nxt)
            s = LinearSystem()
            out = les_chain(
                s,
                [Form.of(v) for v in ks[0]],
                [[Form.of(v) for v in m] for m in middles],
                top=top,
            )
            s.propagate()
            for q in range(degrees):
                lo, hi = s.bounds(out[q])
                assert lo <= ks[-1][q] <= hi, (ks, middles)

    def test_spectral_flow_brackets_truth(self):
        import random

        from roofcalc.chase import spectral_flow

        rng = random.Random(4242)
        for _ in range(300):
            high = rng.randint(1, 5)
            span = rng.randint(1, 6)
            start = rng.randint(-3, 2)
            window = range(start, start + span)
            # genuine survivors (zero outside [0, high]) and genuine flows;
            # a positive flow forces both adjacent totals positive, so the
            # reconstructed data is always consistent with the model
            truth = {
                m: (rng.randint(0, 7) if 0 <= m <= high else 0) for m in window
            }
            flows = {m: rng.randint(0, 5) for m in range(start, start + span - 1)}
            totals = {
                m: truth[m] + flows.get(m - 1, 0) + flows.get(m, 0) for m in window
            }
            s = LinearSystem()
            out = spectral_flow(s, dict(totals), low=0, high=high)
            s.propagate()
            for m, h in out.items():
                lo, hi = s.bounds(h)
                assert lo <= truth.get(m, 0) <= hi, (totals, truth, m)
