"""Simple closed curves carried in two synchronized exact representations.

A DualCurve pairs the canonical taut-diagram coordinates (diagram.Diagram)
with a free-group shadow (words.CyclicWord) and remembers its provenance:
the seed it came from, every braid token applied since, and the bridge
level it currently lives on.  The diagram is always exact; the word is
kept only while its reduced length stays under a cap (it grows
exponentially under long braid words, and is only ever needed for
disk-bounding tests on shallow stabilizer images).
"""

from .diagram import Diagram
from .oracle import OracleCurve, oracle_intersection as _oracle_pair
from .words import CyclicWord, WordTooLong

WORD_CAP = 40000


class DualCurve:
    __slots__ = ("n", "diagram", "word", "level", "seed", "braid")

    def __init__(self, n, diagram, word, level, seed, braid):
        self.n = n
        self.diagram = diagram
        self.word = word
        self.level = level
        self.seed = seed            # ('round', a, b) or ('coord',)
        self.braid = tuple(braid)   # tokens applied since the seed

    # -- construction -----------------------------------------------------

    @staticmethod
    def round_curve(n, a, b, level):
        """The convex curve enclosing exactly punctures a..b."""
        if not (1 <= a < b <= n):
            raise ValueError("need 1 <= a < b <= 2m")
        if (a, b) == (1, n):
            raise ValueError("round curve around all punctures is inessential"
                             " on the bridge sphere")
        return DualCurve(n, Diagram.round_curve(n, a, b),
                         CyclicWord.round_curve(n, a, b), level,
                         ('round', a, b), ())

    @staticmethod
    def from_coord_list(flat, level):
        d = Diagram.from_coord_list(flat)
        if d.component_count() != 1:
            raise ValueError("coordinates describe a multicurve, not a curve")
        return DualCurve(d.n, d, None, level, ('coord',), ())

    # -- braid action -------------------------------------------------------

    def apply_generator(self, k, sign, new_level=None):
        d = self.diagram.apply_gen(k, sign)
        w = None
        if self.word is not None:
            try:
                w = self.word.apply_gen(k, sign, cap=WORD_CAP)
            except WordTooLong:
                w = None
        return DualCurve(self.n, d, w,
                         self.level if new_level is None else new_level,
                         self.seed, self.braid + ((k, sign),))

    def apply_braid(self, word, new_level=None):
        c = self
        for k, s in word:
            c = c.apply_generator(k, s)
        if new_level is not None:
            c = DualCurve(c.n, c.diagram, c.word, new_level, c.seed, c.braid)
        return c

    # -- exact geometric quantities -----------------------------------------

    def key(self):
        """Canonical isotopy-class key (diagram coordinates)."""
        return self.diagram.key()

    def arc_intersection(self, j):
        """Minimal crossings with the vertical arc through gap j."""
        return self.diagram.vline_crossings(j)

    def chord_crossings(self, j):
        """Minimal crossings with the open axis segment in gap j."""
        return self.diagram.chord_crossings(j)

    def enclosed_punctures(self):
        enc = self.diagram.enclosed_punctures()
        if self.word is not None:
            if self.word.exponent_parity_punctures() != enc:
                raise AssertionError("diagram and word disagree on enclosed "
                                     "punctures")
        return enc

    def component_count(self):
        if self.seed[0] == 'round':
            return 1   # braid images of a connected curve stay connected
        return self.diagram.component_count()

    def is_essential(self):
        return not self.diagram.is_empty()

    def bounds_below(self):
        """True iff the curve bounds a disk under the bottom cap tangle."""
        if self.word is None:
            raise ValueError("word representation unavailable (too deep)")
        return self.word.bounds_disk_cap_side()

    def bounds_above_at_top(self):
        """Same bounding test against the top cap tangle (use at level n)."""
        if self.word is None:
            raise ValueError("word representation unavailable (too deep)")
        return self.word.bounds_disk_cap_side()

    def intersection(self, other):
        """Exact geometric intersection number with another curve."""
        if self.n != other.n:
            raise ValueError("different puncture counts")
        for c1, c2 in ((self, other), (other, self)):
            if c1.seed[0] == 'round':
                _, a, b = c1.seed
                inv = [(k, -s) for k, s in reversed(c1.braid)]
                return c2.diagram.apply_word(inv).intersect_round(a, b)
        # No round provenance on either side: fall back to the small-scale
        # polyline arrangement.
        return _smallscale_intersection(self.diagram, other.diagram)


def _smallscale_intersection(d1, d2, cap=4000):
    for d in (d1, d2):
        if d.total_weight() > cap:
            raise ValueError("intersection of two provenance-free curves "
                             "above the small-scale cap")
    o1 = _to_oracle(d1, salt=0)
    o2 = _to_oracle(d2, salt=11)
    return _oracle_pair(o1, o2)


def sphere_intersection_smallscale(c1, c2, cap=4000):
    """Intersection number on the bridge sphere (infinity not marked).

    Only for small curves; used to recognize curves that are isotopic on
    the sphere though distinct in the disk model.
    """
    d1, d2 = c1.diagram, c2.diagram
    for d in (d1, d2):
        if d.total_weight() > cap:
            raise ValueError("sphere intersection above the small-scale cap")
    return _oracle_pair(_to_oracle(d1, salt=0), _to_oracle(d2, salt=11),
                        sphere=True)


def sphere_equal_to_round(curve, a, b):
    """True iff the curve is isotopic on the sphere to round_curve(a, b).

    A curve disjoint from a round curve on the sphere and inducing the
    same puncture partition lies in a complementary punctured disk and
    separates all its punctures from the boundary, hence is boundary
    parallel.  Both conditions are decided exactly.
    """
    n = curve.n
    want = frozenset(range(a, b + 1))
    enc = curve.enclosed_punctures()
    if enc != want and enc != frozenset(range(1, n + 1)) - want:
        return False
    ref = DualCurve.round_curve(n, a, b, curve.level)
    if curve.key() == ref.key():
        return True
    return sphere_intersection_smallscale(curve, ref) == 0


def _to_oracle(d, salt):
    from fractions import Fraction
    N = d.total_weight()
    from .diagram import _expand
    upm = _expand(d.up, N)
    dnm = _expand(d.dn, N)
    # Trace the (single or multi) curve; oracle handles one component.
    comp = []
    seen = [False] * N
    p = 0
    while not seen[p]:
        seen[p] = True
        comp.append(p)
        q = upm[p]
        seen[q] = True
        comp.append(q)
        p = dnm[q]
    if len(comp) != N:
        raise ValueError("small-scale intersection needs connected curves")
    crossings = [(d.gap_of(pos), Fraction(2 * pos + 1, 2 * N)) for pos in comp]
    return OracleCurve(d.n, crossings, True, salt)
