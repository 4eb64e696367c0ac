"""Cross-validation of the diagram engine against the polyline oracle."""

import random

from plat_tracks.diagram import Diagram
from plat_tracks.oracle import OracleCurve, oracle_intersection


def random_pair(rng, n):
    a = rng.randint(1, n - 1)
    b = rng.randint(a + 1, n)
    if (a, b) == (1, n):
        b -= 1
    return a, b


def random_word(rng, n, max_len):
    return [(rng.randint(1, n - 1), rng.choice([1, -1]))
            for _ in range(rng.randint(0, max_len))]


def test_profiles_match():
    rng = random.Random(100)
    n = 6
    for _ in range(25):
        a, b = random_pair(rng, n)
        w = random_word(rng, n, 5)
        d = Diagram.round_curve(n, a, b).apply_word(w)
        o = OracleCurve.round_curve(n, a, b).apply_word(w)
        assert d.enclosed_punctures() == o.enclosed_punctures()
        assert [d.chord_crossings(j) for j in range(1, n)] == \
            [o.chord_crossings(j) for j in range(1, n)]
        assert [d.vline_crossings(j) for j in range(1, n)] == \
            [o.vline_crossings(j) for j in range(1, n)]


def test_intersections_match():
    rng = random.Random(101)
    n = 6
    for _ in range(40):
        a1, b1 = random_pair(rng, n)
        a2, b2 = random_pair(rng, n)
        w1 = random_word(rng, n, 4)
        w2 = random_word(rng, n, 4)
        inv1 = [(k, -s) for k, s in reversed(w1)]
        engine = (Diagram.round_curve(n, a2, b2).apply_word(w2)
                  .apply_word(inv1).intersect_round(a1, b1))
        oracle = oracle_intersection(
            OracleCurve.round_curve(n, a1, b1).apply_word(w1),
            OracleCurve.round_curve(n, a2, b2).apply_word(w2))
        assert engine == oracle, ((a1, b1, w1), (a2, b2, w2))


def test_sphere_intersection_drops_infinity_crossings():
    n = 6
    # round(3,6) is round(1,2) seen from the other side of the sphere, so
    # against round(1,4) the disk count is 2 but the sphere count is 0.
    a = OracleCurve.round_curve(n, 3, 6)
    b = OracleCurve.round_curve(n, 1, 4, salt=2)
    assert oracle_intersection(a, b) == 2
    assert oracle_intersection(a, b, sphere=True) == 0
    d = Diagram.round_curve(n, 1, 4).intersect_round(3, 6)
    assert d == 2
    # Where nothing crosses infinity the two counts agree.
    c1 = OracleCurve.round_curve(n, 2, 3)
    c2 = OracleCurve.round_curve(n, 1, 2, salt=3)
    assert oracle_intersection(c1, c2) == 2
    assert oracle_intersection(c1, c2, sphere=True) == 2
