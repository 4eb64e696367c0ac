import json

import pytest
from hypothesis import given, settings, strategies as st

from plat_tracks.plat import PlatError, PlatSpec, generate_family_instance


def all_fours(m, n2):
    """The family instance with every active twist +-4, alternating signs."""
    return generate_family_instance(m, n2, (4,), 0)


class TestStructure:
    def test_slot_layout(self):
        s = all_fours(5, 4)
        assert s.n == 10 and s.n1 == 6 and s.n2 == 4
        # even row in the upper block: all m slots active
        assert [(j, act) for j, _p, act in s.active_slots(8)] == \
            [(j, True) for j in range(1, 6)]
        # odd row in the lower block: rightmost slot inactive
        assert [(j, act) for j, _p, act in s.active_slots(1)] == \
            [(1, True), (2, True), (3, True), (4, False)]
        # odd row in the upper block with m = 3
        s3 = all_fours(3, 4)
        assert [(j, act) for j, _p, act in s3.active_slots(5)] == \
            [(1, True), (2, True)]

    def test_slot_punctures(self):
        s = all_fours(4, 4)
        assert s.slot_punctures(2, 1) == (1, 2)
        assert s.slot_punctures(2, 4) == (7, 8)
        assert s.slot_punctures(3, 1) == (2, 3)

    def test_row_count_identity(self):
        # Even rows carry m slots and there are n/2 - 1 of them; odd rows
        # carry m - 1 slots and there are n/2.
        s = all_fours(4, 6)
        total = sum(s.slot_count(i) for i in range(1, s.n))
        m, n = s.m, s.n
        assert len(s.rows) == n - 1
        assert total == (n // 2 - 1) * m + (n // 2) * (m - 1)


class TestValidation:
    def test_valid_instance(self):
        assert all_fours(5, 4).validate_family() == []

    def test_magnitude_violation(self):
        s = all_fours(5, 4)
        rows = [list(r.twists) for r in s.rows]
        rows[1][0] = 3
        bad = PlatSpec.from_rows(s.m, s.n, rows)
        assert any("magnitude below 4 at (2,1)" in v
                   for v in bad.validate_family())

    def test_sign_alternation_violation(self):
        s = all_fours(5, 4)
        rows = [list(r.twists) for r in s.rows]
        right4 = max(j for j, a in enumerate(rows[3]) if a != 0)
        right5 = max(j for j, a in enumerate(rows[4]) if a != 0)
        rows[3][right4] = 4
        rows[4][right5] = 4
        bad = PlatSpec.from_rows(s.m, s.n, rows)
        assert any("sign alternation fails at rows 4/5" in v
                   for v in bad.validate_family())

    def test_inactive_slot_violation(self):
        s = all_fours(3, 4)
        rows = [list(r.twists) for r in s.rows]
        rows[0][-1] = 4
        bad = PlatSpec.from_rows(s.m, s.n, rows)
        assert any("inactive slot" in v for v in bad.validate_family())


class TestBraidWords:
    def test_row_word_unrolls_twists(self):
        s = PlatSpec.from_rows(4, 8, [
            [4, -4, 0],
            [4, -4, 4, 0],
            [4, -4, 0],
            [-4, 4, -4, 4],
            [4, -4, 4],
            [-4, 4, -4, 4],
            [4, -4, 4],
        ])
        word = s.row_braid_word(1)
        assert word[:4] == [(2, 1)] * 4
        assert word[4:] == [(4, -1)] * 4

    def test_even_row_generators(self):
        s = all_fours(5, 4)
        word = s.row_braid_word(8)
        ks = sorted(set(k for k, _s in word))
        assert ks == [1, 3, 5, 7, 9]

    def test_zero_row_empty(self):
        s = PlatSpec.from_rows(3, 6, [[0, 0]] + [[0] * PlatSpec.slot_count_static(3, i)
                                                 for i in range(2, 6)])
        assert s.row_braid_word(1) == []

    def test_descent_associativity(self):
        s = all_fours(4, 4)
        whole = s.full_descent_word(s.n, 1)
        split = s.full_descent_word(s.n, 4) + s.full_descent_word(4, 1)
        assert whole == split
        assert s.full_descent_word(3, 3) == []
        assert len(whole) == sum(abs(a) for r in s.rows for a in r.twists)


class TestGenerator:
    @settings(max_examples=25, deadline=None)
    @given(st.integers(3, 5), st.sampled_from([2, 4, 6]),
           st.integers(0, 10 ** 6))
    def test_generated_instances_validate(self, m, n2, seed):
        s = generate_family_instance(m, n2, (4, 5, 6), seed)
        assert s.validate_family() == []

    def test_deterministic(self):
        a = generate_family_instance(4, 4, (4, 5), 123)
        b = generate_family_instance(4, 4, (4, 5), 123)
        assert a.to_json() == b.to_json()

    def test_rejects_bad_parameters(self):
        with pytest.raises(PlatError):
            generate_family_instance(2, 4)
        with pytest.raises(PlatError):
            generate_family_instance(3, 3)
        with pytest.raises(PlatError):
            generate_family_instance(3, 4, (3,))


class TestJson:
    def test_roundtrip(self):
        s = all_fours(3, 4)
        assert PlatSpec.from_json(s.to_json()).to_json() == s.to_json()
        data = json.loads(s.to_json())
        assert list(data.keys()) == ["m", "n", "rows"]

    def test_wrong_arity_is_parse_error(self):
        with pytest.raises(PlatError):
            PlatSpec.from_json('{"m": 3, "n": 6, "rows": [[4,0,0],[4,-4,0],'
                               '[4,0],[-4,-4,0],[4,4]]}')

    def test_malformed_json(self):
        with pytest.raises(PlatError):
            PlatSpec.from_json("{nope")
        with pytest.raises(PlatError):
            PlatSpec.from_json('{"m": 3, "rows": []}')
        with pytest.raises(PlatError):
            PlatSpec.from_json('{"m": 3, "n": 6, "rows": [[4.5, 0]]}')
