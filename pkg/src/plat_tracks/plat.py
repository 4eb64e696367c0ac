"""Plat links as twist matrices, family membership, and braid compilation.

A (n,m)-plat has 2m strands capped above and below by arcs joining the
pairs {p_2k-1, p_2k}.  Twist rows sit between consecutive bridge levels:
row i (between P_i and P_i+1) twists the beta pairs {p_2j-1, p_2j} when i
is even (m slots) and the gamma pairs {p_2j, p_2j+1} when i is odd (m-1
slots).  The family under study glues a full-width 4-twisted block of
height n1 = 2m-4 on top of a width-(m-1) block of height n2 = n - n1:
rows above n2 use every slot, rows at or below n2 leave their rightmost
slot empty, and the rightmost nonzero entries of adjacent rows must have
opposite signs.
"""

import json
import random
from dataclasses import dataclass

from . import convention


@dataclass(frozen=True)
class TwistRow:
    index: int
    twists: tuple

    def __len__(self):
        return len(self.twists)


class PlatError(ValueError):
    pass


@dataclass(frozen=True)
class PlatSpec:
    m: int
    n: int
    rows: tuple   # rows[i-1] = TwistRow for row i

    # -- structure ----------------------------------------------------------

    @property
    def n1(self):
        return 2 * self.m - 4

    @property
    def n2(self):
        return self.n - self.n1

    @property
    def punctures(self):
        return 2 * self.m

    @staticmethod
    def from_rows(m, n, rows):
        if len(rows) != n - 1:
            raise PlatError(f"need n-1 = {n-1} rows, got {len(rows)}")
        built = []
        for i, row in enumerate(rows, start=1):
            want = PlatSpec.slot_count_static(m, i)
            if len(row) != want:
                raise PlatError(f"row {i} must have {want} twist slots, "
                                f"got {len(row)}")
            if not all(isinstance(a, int) for a in row):
                raise PlatError(f"row {i} has a non-integer twist number")
            built.append(TwistRow(i, tuple(row)))
        return PlatSpec(m, n, tuple(built))

    @staticmethod
    def slot_count_static(m, i):
        return m if i % 2 == 0 else m - 1

    def slot_count(self, i):
        return self.slot_count_static(self.m, i)

    def twist(self, i, j):
        """Twist number a_{i,j} (rows and slots are 1-indexed)."""
        return self.rows[i - 1].twists[j - 1]

    def slot_punctures(self, i, j):
        """The puncture pair slot j of row i acts on."""
        if i % 2 == 0:
            return (2 * j - 1, 2 * j)
        return (2 * j, 2 * j + 1)

    def slot_gap(self, i, j):
        """Axis gap between the slot's punctures (equals its left index)."""
        return self.slot_punctures(i, j)[0]

    def is_upper(self, i):
        return i >= self.n2 + 1

    def active_slots(self, i):
        """[(j, puncture pair, active flag)] for row i."""
        if not (1 <= i <= self.n - 1):
            raise PlatError(f"row index {i} out of range 1..{self.n-1}")
        out = []
        for j in range(1, self.slot_count(i) + 1):
            if self.is_upper(i):
                active = True
            else:
                active = j <= (self.m - 1 if i % 2 == 0 else self.m - 2)
            out.append((j, self.slot_punctures(i, j), active))
        return out

    # -- family membership ----------------------------------------------------

    def validate_family(self):
        """List of violations; empty iff the spec lies in the family."""
        v = []
        if self.m < 3:
            v.append(f"m must be at least 3, got {self.m}")
        if self.n % 2:
            v.append(f"n must be even, got {self.n}")
        if self.n2 < 2:
            v.append(f"n2 = n - (2m-4) = {self.n2} must be at least 2")
        if self.n2 % 2:
            v.append(f"n2 = {self.n2} must be even")
        if v:
            return v
        for i in range(1, self.n):
            for j, _pair, active in self.active_slots(i):
                a = self.twist(i, j)
                if active and abs(a) < 4:
                    v.append(f"magnitude below 4 at ({i},{j})")
                if not active and a != 0:
                    v.append(f"inactive slot ({i},{j}) must be 0, got {a}")

        def rightmost_sign(i):
            for a in reversed(self.rows[i - 1].twists):
                if a != 0:
                    return 1 if a > 0 else -1
            return 0

        for i in range(1, self.n - 1):
            s1, s2 = rightmost_sign(i), rightmost_sign(i + 1)
            if s1 == 0 or s2 == 0:
                v.append(f"row {i if s1 == 0 else i+1} has no nonzero twist")
            elif s1 == s2:
                v.append(f"sign alternation fails at rows {i}/{i+1}")
        return v

    # -- braid compilation ------------------------------------------------------

    def row_braid_word(self, i):
        """Braid word of row i: |a| half twists per slot, increasing j."""
        if not (1 <= i <= self.n - 1):
            raise PlatError(f"row index {i} out of range 1..{self.n-1}")
        word = []
        fac = convention.sign_factor()
        for j in range(1, self.slot_count(i) + 1):
            a = self.twist(i, j)
            if a == 0:
                continue
            k = self.slot_gap(i, j)
            s = fac * (1 if a > 0 else -1)
            word.extend([(k, s)] * abs(a))
        return word

    def full_descent_word(self, from_level, to_level):
        """Braid word realizing the projection from P_from down to P_to."""
        if not (self.n >= from_level > to_level >= 1):
            if from_level == to_level:
                return []
            raise PlatError("need n >= from > to >= 1")
        word = []
        for i in range(from_level - 1, to_level - 1, -1):
            word.extend(self.row_braid_word(i))
        return word

    # -- serialization -----------------------------------------------------------

    def to_json(self):
        return json.dumps({"m": self.m, "n": self.n,
                           "rows": [list(r.twists) for r in self.rows]},
                          separators=(",", ":"))

    @staticmethod
    def from_json(text):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise PlatError(f"invalid JSON: {e}")
        if not isinstance(data, dict):
            raise PlatError("top level must be an object")
        for key in ("m", "n", "rows"):
            if key not in data:
                raise PlatError(f"missing key {key!r}")
        m, n, rows = data["m"], data["n"], data["rows"]
        if not isinstance(m, int) or not isinstance(n, int):
            raise PlatError("m and n must be integers")
        if isinstance(rows, list) and all(isinstance(r, list) for r in rows):
            return PlatSpec.from_rows(m, n, rows)
        raise PlatError("rows must be a list of lists of integers")


def generate_family_instance(m, n2, magnitudes=(4,), seed=0):
    """A family member with the requested dimensions; deterministic in seed."""
    if m < 3:
        raise PlatError(f"m below 3: {m}")
    if n2 < 2 or n2 % 2:
        raise PlatError(f"n2 must be even and at least 2, got {n2}")
    mags = sorted(set(abs(int(x)) for x in magnitudes))
    if not mags or mags[0] < 4:
        raise PlatError("twist magnitudes must be at least 4")
    n = n2 + 2 * m - 4
    rng = random.Random(seed)
    zero_rows = [[0] * PlatSpec.slot_count_static(m, i) for i in range(1, n)]
    # Fill in twists: the rightmost active slot's sign alternates with the
    # row parity, which realizes condition 4; the rest are free.
    spec0 = PlatSpec.from_rows(m, n, zero_rows)
    filled = []
    for i in range(1, n):
        row = []
        actives = spec0.active_slots(i)
        last_active = max(j for j, _p, act in actives if act)
        for j, _pair, act in actives:
            if not act:
                row.append(0)
                continue
            mag = rng.choice(mags)
            if j == last_active:
                sign = 1 if i % 2 == 1 else -1
            else:
                sign = rng.choice((1, -1))
            row.append(sign * mag)
        filled.append(row)
    spec = PlatSpec.from_rows(m, n, filled)
    bad = spec.validate_family()
    if bad:
        raise PlatError("generator produced an invalid spec: " + "; ".join(bad))
    return spec
