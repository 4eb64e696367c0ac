import random

import pytest

from plat_tracks.covering import (CoverageInconsistency, blue_descent_check,
                                  certify_coverage, classify_disk,
                                  delta_profile, slot_profile)
from plat_tracks.curves import DualCurve
from plat_tracks.plat import generate_family_instance
from plat_tracks.traingraph import build_train_graph, directly_below, \
    tao_minigraph


def inst(m, n2=4, seed=0):
    return generate_family_instance(m, n2, (4,), seed)


class TestProfiles:
    def test_blue_seed_profile(self):
        s = inst(3)
        blue = DualCurve.round_curve(6, 1, 2, s.n)
        prof = slot_profile(blue, s, s.n - 1)
        # Hits the leftmost twist arc of the top row and nothing rightward.
        assert prof[0][2] > 0
        assert all(v == 0 for _j, _g, v in prof[1:])

    def test_red_seed_profile(self):
        s = inst(3)
        red = DualCurve.round_curve(6, 3, 4, s.n)
        prof = slot_profile(red, s, s.n - 1)
        assert all(v > 0 for _j, _g, v in prof)

    def test_far_round_curve_misses(self):
        s = inst(5)
        c = DualCurve.round_curve(10, 3, 4, s.n)
        prof = slot_profile(c, s, s.n - 1)
        vals = {j: v for j, _g, v in prof}
        assert vals[4] == 0

    def test_delta_profile_level_bookkeeping(self):
        s = inst(3)
        c = DualCurve.round_curve(6, 1, 2, s.n)
        c1 = c.apply_braid(s.row_braid_word(s.n - 1), new_level=s.n - 1)
        assert delta_profile(c1, s) == slot_profile(c1, s, c1.level - 1)
        with pytest.raises(ValueError):
            delta_profile(DualCurve.round_curve(6, 1, 2, 1), s)


class TestCertificates:
    def test_blue_reaches_t1_minus_two(self):
        s = inst(3)
        certs = certify_coverage(DualCurve.round_curve(6, 1, 2, s.n), s)
        assert [c.level for c in certs] == [5, 4, 3, 2, 1]
        g1 = build_train_graph(s, 1)
        eyes = sorted(e.puncture for e in g1.eyelets)
        want = set(g1.full_minigraph().elements) - \
            {('eye', eyes[-1]), ('eye', eyes[-2])}
        assert certs[-1].minigraph.elements == frozenset(want)

    def test_red_reaches_full_t1(self):
        s = inst(3)
        certs = certify_coverage(DualCurve.round_curve(6, 3, 4, s.n), s)
        g1 = build_train_graph(s, 1)
        assert certs[-1].minigraph.elements == g1.full_minigraph().elements

    def test_vacuous_for_untouched_curve(self):
        # A curve hitting no top twist arc yields no certificates.
        s = inst(5)
        c = DualCurve.round_curve(10, 1, 2, s.n)
        # round(1,2) hits slot 1; shift far right where nothing is hit
        far = DualCurve.round_curve(10, 9, 10, s.n)
        prof = slot_profile(far, s, s.n - 1)
        if all(v == 0 for _j, _g, v in prof):
            assert certify_coverage(far, s) == []

    def test_blue_uniqueness_among_cap_seeds(self):
        s = inst(4)
        n2m = 8
        g1 = build_train_graph(s, 1)
        eyes = sorted(e.puncture for e in g1.eyelets)
        full = g1.full_minigraph().elements
        minus2 = frozenset(set(full) - {('eye', eyes[-1]), ('eye', eyes[-2])})
        for k in range(1, 5):
            seed = DualCurve.round_curve(n2m, 2 * k - 1, 2 * k, s.n)
            mg = certify_coverage(seed, s)[-1].minigraph.elements
            if k == 1:
                assert mg == minus2
            else:
                assert mg == full


class TestPropagation:
    def test_one_step_propagation_random_loops(self):
        random.seed(20)
        for m in (3, 4):
            s = inst(m, 4, m)
            n2m = 2 * m
            for _ in range(12):
                a = random.randint(1, n2m - 1)
                b = random.randint(a + 1, n2m)
                if (a, b) == (1, n2m):
                    b -= 1
                word = [(random.randint(1, n2m - 1), random.choice([1, -1]))
                        for _ in range(random.randint(0, 4))]
                c = DualCurve.round_curve(n2m, a, b, s.n).apply_braid(word)
                cur = c
                for level in range(s.n, 1, -1):
                    row = level - 1
                    hits = [j for j, _g, v in slot_profile(cur, s, row) if v > 0]
                    cur = cur.apply_braid(s.row_braid_word(row), new_level=row)
                    prof = {j: v for j, _g, v in slot_profile(cur, s, row)}
                    for j in hits:
                        assert prof[j] > 0, (m, a, b, word, level, j)


class TestBlueDescent:
    @pytest.mark.parametrize("m,n2", [(3, 4), (4, 4), (3, 6)])
    def test_all_assertions(self, m, n2):
        rep = blue_descent_check(generate_family_instance(m, n2, (4, 5), 3))
        assert rep.staircase_ok and rep.beta_m_ok and rep.disjoint_ok
        assert len(rep.enclosed) == 2

    def test_mirrored_convention_also_passes(self):
        # Flipping the convention computes the mirror link, which lies in
        # the mirror family; the assertions are mirror-invariant.
        from plat_tracks import convention
        convention.set_flipped(True)
        try:
            rep = blue_descent_check(inst(3))
            assert rep.all_ok
        finally:
            convention.set_flipped(False)


class TestClassify:
    def test_blue_and_red(self):
        s = inst(3)
        assert classify_disk(DualCurve.round_curve(6, 1, 2, s.n), s) == 'Blue'
        assert classify_disk(DualCurve.round_curve(6, 3, 4, s.n), s) == 'Red'

    def test_requires_bounding(self):
        s = inst(3)
        with pytest.raises(ValueError):
            classify_disk(DualCurve.round_curve(6, 2, 3, s.n), s)
