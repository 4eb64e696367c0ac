from plat_tracks.curves import DualCurve, sphere_equal_to_round
from plat_tracks.plat import generate_family_instance
from plat_tracks.weakpairs import (bottom_seed_runs, enumerate_below,
                                   enumerate_above_at_p1, verify_keen)


def inst(m, n2=4, seed=0):
    return generate_family_instance(m, n2, (4,), seed)


class TestEnumeration:
    def test_seed_census_m3(self):
        assert sorted(bottom_seed_runs(3)) == \
            [(1, 2), (1, 4), (3, 4), (3, 6), (5, 6)]

    def test_depth_zero_below(self):
        cs = enumerate_below(inst(3), 0)
        assert len(cs) == 5
        for cand in cs.candidates:
            assert cand.curve.bounds_below()

    def test_depth_one_strictly_larger(self):
        s = inst(3)
        assert len(enumerate_below(s, 1)) > len(enumerate_below(s, 0))

    def test_above_contains_blue(self):
        s = inst(3)
        cs = enumerate_above_at_p1(s, 0)
        colors = [c.color for c in cs.candidates]
        assert colors.count('Blue') == 1
        for cand in cs.candidates:
            assert cand.top_curve.bounds_above_at_top()
            assert cand.curve.level == 1


class TestSphereClasses:
    def test_complementary_round_curves_sphere_equal(self):
        c = DualCurve.round_curve(6, 1, 4, 1)
        assert sphere_equal_to_round(c, 5, 6)
        assert not sphere_equal_to_round(c, 3, 4)

    def test_disk_distinct_sphere_equal(self):
        c = DualCurve.round_curve(6, 3, 6, 6)
        assert sphere_equal_to_round(c, 1, 2)


class TestKeen:
    def test_keen_63_depth1(self):
        rep = verify_keen(inst(3), 1)
        assert rep.flags == {
            'exactly_one_zero_pair': True,
            'zero_pair_is_blue': True,
            'twice_punctured_audit': True,
            'others_even_and_at_least_two': True,
        }
        assert rep.keen

    def test_determinism(self):
        a = verify_keen(inst(3), 1).to_json()
        b = verify_keen(inst(3), 1).to_json()
        assert a == b

    def test_out_of_family_control_runs(self):
        from plat_tracks.plat import PlatSpec
        s = inst(3)
        rows = [list(r.twists) for r in s.rows]
        rows[4][1] = 0   # kill an upper twist: out of family
        bad = PlatSpec.from_rows(s.m, s.n, rows)
        assert bad.validate_family()
        rep = verify_keen(bad, 0, family_required=False)
        assert isinstance(rep.zero_pairs, list)   # no crash, no claim
