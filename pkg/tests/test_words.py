import random

from plat_tracks.words import CyclicWord, cyclic_reduce, free_reduce


def test_reduction():
    assert free_reduce([1, 2, -2, -1, 3]) == [3]
    assert cyclic_reduce([1, 2, 3, -1]) == [2, 3]


def test_round_word_bounds():
    # x1 x2 dies under the cap pairing, x2 x3 does not, x1..x4 dies.
    assert CyclicWord.round_curve(6, 1, 2).bounds_disk_cap_side()
    assert not CyclicWord.round_curve(6, 2, 3).bounds_disk_cap_side()
    assert CyclicWord.round_curve(6, 1, 4).bounds_disk_cap_side()


def test_artin_relations():
    random.seed(2)
    for _ in range(25):
        n = random.choice([6, 8])
        w = CyclicWord(n, [random.choice([1, -1]) * random.randint(1, n)
                           for _ in range(5)])
        k = random.randint(1, n - 2)
        lhs = w.apply_word([(k, 1), (k + 1, 1), (k, 1)])
        rhs = w.apply_word([(k + 1, 1), (k, 1), (k + 1, 1)])
        assert lhs.letters == rhs.letters
        inv = w.apply_gen(k, 1).apply_gen(k, -1)
        assert inv.letters == w.letters


def test_exponent_parity_matches_diagram():
    from plat_tracks.curves import DualCurve
    random.seed(4)
    for _ in range(15):
        a = random.randint(1, 4)
        b = random.randint(a + 1, 5)
        word = [(random.randint(1, 5), random.choice([1, -1]))
                for _ in range(4)]
        c = DualCurve.round_curve(6, a, b, 6).apply_braid(word)
        # enclosed_punctures asserts agreement between both representations
        c.enclosed_punctures()


def test_stabilizer_preserves_bounding():
    from plat_tracks.weakpairs import stabilizer_generators
    from plat_tracks.curves import DualCurve
    for name, word in stabilizer_generators(3):
        c = DualCurve.round_curve(6, 1, 2, 1).apply_braid(word)
        assert c.bounds_below(), name
