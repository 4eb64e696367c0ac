"""Exact coordinates for multicurves on the punctured plane.

A multicurve avoiding the punctures p_1..p_n (at x = 1..n on the axis) is
isotoped taut against the axis and stored as its crossing diagram:

  * counts  -- how many crossings lie in each gap of the axis (gap g sits
               between p_g and p_{g+1}; gap 0 is left of p_1, gap n right
               of p_n).  Crossings are numbered 0..N-1 left to right, so
               the counts partition the number line into gap blocks.
  * up, dn  -- the arcs in the upper/lower half plane, as noncrossing
               matchings of crossing positions.  Each is stored as a list
               of interval pairs (x, y, L): positions x+t and y+L-1-t are
               joined for 0 <= t < L.  Parallel arcs between two intervals
               always pair in reversed order, so this loses nothing.

Interval pairs are kept maximal but are never forced to align between the
two matchings; bundles may split and merge train-track style, which keeps
the description polynomial even when crossing numbers grow exponentially
under twisting.  Tautness (no arc with both feet in one gap) makes the
diagram canonical: isotopic curves give equal tuples.

The braid action lifts each bundle through the twisted gap to an explicit
polyline, pushes it through the exact PL half twist (plmap), and reads the
new diagram off the image.  Everything is exact integer arithmetic.
"""

from bisect import bisect_right
from fractions import Fraction

from .plmap import SUPPORT_RADIUS, twist


class NotRealizable(ValueError):
    """Raised when integer data does not encode an embedded multicurve."""


def _pairs_cover(pairs, N):
    """Check the intervals of the pairs partition range(N)."""
    blocks = []
    for x, y, L in pairs:
        blocks.append((x, L))
        blocks.append((y, L))
    blocks.sort()
    pos = 0
    for s, L in blocks:
        if s != pos or L <= 0:
            return False
        pos += L
    return pos == N


class Diagram:
    __slots__ = ("n", "counts", "up", "dn", "_prefix")

    def __init__(self, n, counts, up, dn):
        self.n = n
        self.counts = tuple(counts)
        self.up = tuple(sorted(up))
        self.dn = tuple(sorted(dn))
        pref = [0]
        for c in self.counts:
            pref.append(pref[-1] + c)
        self._prefix = tuple(pref)

    # -- construction ----------------------------------------------------

    @staticmethod
    def empty(n):
        return Diagram(n, (0,) * (n + 1), (), ())

    @staticmethod
    def round_curve(n, a, b):
        """The convex curve enclosing exactly punctures a..b."""
        if not (1 <= a <= b <= n):
            raise ValueError("puncture range out of bounds")
        if a == 1 and b == n:
            raise ValueError("round curve around all punctures is inessential")
        counts = [0] * (n + 1)
        counts[a - 1] = 1
        counts[b] = 1
        return Diagram(n, counts, ((0, 1, 1),), ((0, 1, 1),))

    # -- basic queries -----------------------------------------------------

    def key(self):
        return (self.n, self.counts, self.up, self.dn)

    def __eq__(self, other):
        return isinstance(other, Diagram) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return (f"Diagram(n={self.n}, counts={list(self.counts)}, "
                f"up={list(self.up)}, dn={list(self.dn)})")

    def total_weight(self):
        return self._prefix[-1]

    def is_empty(self):
        return self.total_weight() == 0

    def complexity(self):
        """Structural size (number of interval pairs)."""
        return len(self.up) + len(self.dn)

    def gap_of(self, p):
        """Gap index of crossing position p."""
        return bisect_right(self._prefix, p) - 1

    def coord_list(self):
        """Flat integer encoding: [n, counts..., #up, up triples..., dn triples...]."""
        out = [self.n]
        out.extend(self.counts)
        out.append(len(self.up))
        for t in self.up:
            out.extend(t)
        for t in self.dn:
            out.extend(t)
        return out

    @staticmethod
    def from_coord_list(flat):
        if len(flat) < 2:
            raise NotRealizable("coordinate list too short")
        n = flat[0]
        if n < 1 or len(flat) < n + 3:
            raise NotRealizable("coordinate list too short")
        counts = flat[1:n + 2]
        k = flat[n + 2]
        rest = flat[n + 3:]
        if k < 0 or len(rest) % 3 != 0 or len(rest) < 3 * k:
            raise NotRealizable("bad pair table length")
        trips = [tuple(rest[i:i + 3]) for i in range(0, len(rest), 3)]
        d = Diagram(n, counts, trips[:k], trips[k:])
        d.validate()
        return Diagram._canonical(n, list(counts), list(d.up), list(d.dn),
                                  allow_drop=False)

    def validate(self):
        if len(self.counts) != self.n + 1:
            raise NotRealizable("counts length must be n+1")
        if any(c < 0 for c in self.counts):
            raise NotRealizable("negative count")
        N = self.total_weight()
        for pairs in (self.up, self.dn):
            if not _pairs_cover(pairs, N):
                raise NotRealizable("arc intervals do not partition the crossings")
            stack = []
            events = []
            for pid, (x, y, L) in enumerate(pairs):
                if x + L > y:
                    raise NotRealizable("interval pair overlaps itself")
                events.append((x, pid, 'open'))
                events.append((y, pid, 'close'))
            for _, pid, kind in sorted(events):
                if kind == 'open':
                    stack.append(pid)
                else:
                    if not stack or stack.pop() != pid:
                        raise NotRealizable("crossing arcs")
            for x, y, L in pairs:
                gx = (self.gap_of(x), self.gap_of(x + L - 1))
                gy = (self.gap_of(y), self.gap_of(y + L - 1))
                if gx[0] != gx[1] or gy[0] != gy[1]:
                    raise NotRealizable("arc interval spans a gap boundary")
                if gx[0] == gy[0]:
                    raise NotRealizable("arc with both feet in one gap (not taut)")
        return self

    # -- geometric quantities ----------------------------------------------

    def chord_crossings(self, j):
        """Minimal crossings with the open axis segment between p_j, p_j+1."""
        if not (1 <= j <= self.n - 1):
            raise ValueError("gap index out of range")
        return self.counts[j]

    def _pair_gaps(self, pair):
        x, y, L = pair
        return self.gap_of(x), self.gap_of(y)

    def vline_crossings(self, j):
        """Minimal crossings with the vertical line through gap j."""
        if not (1 <= j <= self.n - 1):
            raise ValueError("gap index out of range")
        total = 0
        for pairs in (self.up, self.dn):
            for pair in pairs:
                gl, gr = self._pair_gaps(pair)
                if gl < j < gr:
                    total += pair[2]
        # Crossings in gap j whose two arcs leave to opposite sides.
        lo, hi = self._prefix[j], self._prefix[j + 1]
        if hi > lo:
            cuts = {lo, hi}
            for pairs in (self.up, self.dn):
                for x, y, L in pairs:
                    for s in (x, y):
                        if lo < s < hi:
                            cuts.add(s)
                        if lo < s + L < hi:
                            cuts.add(s + L)
            cuts = sorted(cuts)
            for a, b in zip(cuts, cuts[1:]):
                du = self._side(self.up, a, j)
                dd = self._side(self.dn, a, j)
                if du != dd:
                    total += b - a
        return total

    def _side(self, pairs, p, j):
        """'L' or 'R': which side of gap j position p's arc in pairs exits to."""
        q = _partner(pairs, p)
        return 'L' if self.gap_of(q) < j else 'R'

    def enclosed_punctures(self):
        """Punctures on the bounded side (the side away from infinity)."""
        par = [0] * (self.n + 2)
        for pair in self.up:
            gl, gr = self._pair_gaps(pair)
            if pair[2] % 2:
                for t in range(gl + 1, gr + 1):
                    par[t] ^= 1
        return frozenset(t for t in range(1, self.n + 1) if par[t])

    def intersect_round(self, a, b):
        """Exact geometric intersection number with round_curve(a, b).

        The round curve is put taut against the axis (one crossing in gap
        a-1, one in gap b); its arcs then cross exactly the arcs of this
        diagram whose feet interleave with the chosen crossing slots, so
        the intersection number is the interleaving count minimized over
        slot placements.  The objective is piecewise linear in the two
        placements with breakpoints at arc-interval boundaries and at
        balance points of arcs joining the two special gaps, so a finite
        candidate grid plus coordinate descent finds the minimum.
        """
        if not (1 <= a <= b <= self.n):
            raise ValueError("puncture range out of bounds")
        gl_, gr_ = a - 1, b
        pre = self._prefix
        loL, hiL = pre[gl_], pre[gl_ + 1]
        loR, hiR = pre[gr_], pre[gr_ + 1]
        arcs = []
        coupled = []
        for pairs in (self.up, self.dn):
            for x, y, L in pairs:
                g1, g2 = self.gap_of(x), self.gap_of(y)
                arcs.append((g1, x, g2, y, L))
                if g1 == gl_ and g2 == gr_:
                    coupled.append((x, y, L))

        def inness(g, s, L, cl, cr):
            if gl_ < g < gr_:
                return L
            if g == gl_:
                return max(0, min(L, s + L - cl))
            if g == gr_:
                return max(0, min(L, cr - s))
            return 0

        def total(cl, cr):
            t = 0
            for g1, x1, g2, x2, L in arcs:
                t += abs(inness(g1, x1, L, cl, cr) - inness(g2, x2, L, cl, cr))
            return t

        candL = {loL, hiL}
        candR = {loR, hiR}
        for g1, x1, g2, x2, L in arcs:
            for g, s in ((g1, x1), (g2, x2)):
                if g == gl_:
                    candL.update((max(loL, s), min(hiL, s + L)))
                if g == gr_:
                    candR.update((max(loR, s), min(hiR, s + L)))
        for _ in range(2):
            for x1, x2, L in coupled:
                for cr in list(candR):
                    s2 = max(0, min(L, cr - x2))
                    candL.add(min(max(x1 + L - s2, loL), hiL))
                for cl in list(candL):
                    s1 = max(0, min(L, x1 + L - cl))
                    candR.add(min(max(x2 + s1, loR), hiR))
        candL = sorted(candL)
        candR = sorted(candR)
        best = None
        arg = None
        for cl in candL:
            for cr in candR:
                v = total(cl, cr)
                if best is None or v < best:
                    best, arg = v, (cl, cr)
        # Coordinate descent over the candidate axes until stable.
        while True:
            cl, cr = arg
            improved = False
            for cl2 in candL:
                v = total(cl2, cr)
                if v < best:
                    best, arg, improved = v, (cl2, cr), True
            cl, cr = arg
            for cr2 in candR:
                v = total(cl, cr2)
                if v < best:
                    best, arg, improved = v, (cl, cr2), True
            if not improved:
                return best

    def intersect_round_twistlimit(self, a, b, max_iters=64):
        """Independent intersection count via Dehn-twist weight growth.

        Repeatedly twisting along round_curve(a, b) eventually grows the
        total crossing weight by exactly 2*i per full twist.
        """
        if not (1 <= a <= b <= self.n):
            raise ValueError("puncture range out of bounds")
        if a == b:
            return 0
        word = [(k, 1) for _ in range(b - a + 1) for k in range(a, b)]
        d = self
        prev = d.total_weight()
        diffs = []
        for _ in range(max_iters):
            d = d.apply_word(word)
            w = d.total_weight()
            diffs.append(w - prev)
            prev = w
            if len(diffs) >= 3 and diffs[-1] == diffs[-2] == diffs[-3]:
                val, rem = divmod(diffs[-1], 2)
                if rem:
                    raise AssertionError("odd twist-limit growth")
                return val
        raise AssertionError("twist-limit growth did not stabilize")

    def component_count(self, cap=200000):
        N = self.total_weight()
        if N == 0:
            return 0
        if N > cap:
            raise ValueError(f"component tracing above size cap ({N} crossings)")
        upm = _expand(self.up, N)
        dnm = _expand(self.dn, N)
        seen = [False] * N
        comps = 0
        for p0 in range(N):
            if seen[p0]:
                continue
            comps += 1
            p = p0
            while not seen[p]:
                seen[p] = True
                q = upm[p]
                seen[q] = True
                p = dnm[q]
        return comps

    # -- braid action --------------------------------------------------------

    def apply_gen(self, k, sign):
        """Image under the half twist swapping punctures k and k+1."""
        if not (1 <= k <= self.n - 1):
            raise ValueError("generator index out of range")
        if self.counts[k] == 0:
            return self
        return _transport(self, k, sign)

    def apply_word(self, word):
        """Fold of apply_gen over a braid word (list of (k, sign))."""
        d = self
        for k, s in word:
            d = d.apply_gen(k, s)
        return d

    def mirrored(self):
        """Reflection across the axis (swap upper and lower arcs)."""
        return Diagram(self.n, self.counts, self.dn, self.up)

    # -- canonicalization ----------------------------------------------------

    @staticmethod
    def _canonical(n, counts, up, dn, allow_drop):
        """Cancel non-taut arcs, merge parallel interval pairs, freeze."""
        dropped = 0
        while True:
            d = Diagram(n, counts, _merge_pairs(up, counts), _merge_pairs(dn, counts))
            hit = _innermost_same_gap(d)
            if hit is None:
                d.validate()
                if dropped and not allow_drop:
                    raise NotRealizable("contractible components present")
                return d
            counts, up, dn, ndrop = _cancel(d, *hit)
            dropped += ndrop


def _partner(pairs, p):
    """Matched position of p in a sorted interval-pair list."""
    for x, y, L in pairs:
        if x <= p < x + L:
            return y + L - 1 - (p - x)
        if y <= p < y + L:
            return x + (y + L - 1 - p)
    raise AssertionError("position not covered")


def _expand(pairs, N):
    m = [None] * N
    for x, y, L in pairs:
        for t in range(L):
            m[x + t] = y + L - 1 - t
            m[y + L - 1 - t] = x + t
    return m


def _gap_of(prefix, p):
    return bisect_right(prefix, p) - 1


def _merge_pairs(pairs, counts):
    """Maximal interval pairs, each side staying within one gap."""
    prefix = [0]
    for c in counts:
        prefix.append(prefix[-1] + c)
    # Split at gap boundaries first.
    out = []
    work = list(pairs)
    while work:
        x, y, L = work.pop()
        cut = None
        for b in (prefix[_gap_of(prefix, x) + 1], ):
            if x < b < x + L:
                cut = x + L - b
                break
        if cut is None and y + L > prefix[_gap_of(prefix, y) + 1]:
            cut = prefix[_gap_of(prefix, y) + 1] - y
        if cut is None:
            out.append((x, y, L))
        else:
            # Keep the pairing: x+t <-> y+L-1-t.  Splitting off the last
            # `cut` positions of the y side splits off the first of x side.
            work.append((x, y + cut, L - cut))
            work.append((x + L - cut, y, cut))
    out.sort()
    merged = []
    for x, y, L in out:
        if merged:
            px, py, pL = merged[-1]
            if (px + pL == x and y + L == py
                    and _gap_of(prefix, px) == _gap_of(prefix, x)
                    and _gap_of(prefix, y) == _gap_of(prefix, py)):
                merged[-1] = (px, y, pL + L)
                continue
        merged.append((x, y, L))
    return merged


def _innermost_same_gap(d):
    """A contiguous same-gap arc pair to cancel, or None."""
    best = None
    for which, pairs in (('up', d.up), ('dn', d.dn)):
        for x, y, L in pairs:
            if d.gap_of(x) == d.gap_of(y):
                if best is None or y - x < best[0]:
                    best = (y - x, which, (x, y, L))
    if best is None:
        return None
    span, which, pair = best
    if pair[1] != pair[0] + pair[2]:
        raise AssertionError("innermost same-gap arc is not contiguous")
    return which, pair


def _split_at(pairs, points):
    """Refine interval pairs so no interval interior contains a point."""
    out = []
    work = list(pairs)
    pts = sorted(points)
    while work:
        x, y, L = work.pop()
        cut = None
        for b in pts:
            if x < b < x + L:
                cut = x + L - b
                break
            if y < b < y + L:
                cut = b - y
                break
        if cut is None:
            out.append((x, y, L))
        else:
            work.append((x, y + cut, L - cut))
            work.append((x + L - cut, y, cut))
    out.sort()
    return out


def _cancel(d, which, pair):
    """Remove a contiguous same-gap arc bundle and resew the other side.

    The bundle pairs positions [B0, B0+L) with [B0+L, B1) by the mirror
    s(p) = B0+B1-1-p.  Arcs of the other matching landing in the block get
    chained through the mirror until they exit; purely internal chains are
    contractible circles and are dropped (with a count returned).
    """
    x0, _, L = pair
    B0, B1 = x0, x0 + 2 * L

    def mirror_start(s, length):
        return B0 + B1 - (s + length)

    other = d.dn if which == 'up' else d.up
    same = [t for t in (d.up if which == 'up' else d.dn) if t != pair]

    # Refine the other matching so the mirror maps intervals to intervals.
    work = _split_at(other, {B0, B1})
    cuts = set()
    for x, y, L2 in work:
        for s in (x, y):
            if B0 <= s < B1:
                cuts.add(mirror_start(s, L2))
                cuts.add(mirror_start(s, L2) + L2)
    work = _split_at(work, cuts)

    side_at = {}   # in-block interval start -> (trip, far-interval start)
    for trip in work:
        x, y, L2 = trip
        if B0 <= x < B1:
            side_at[x] = (trip, y, L2)
        if B0 <= y < B1:
            side_at[y] = (trip, x, L2)

    new_pairs = []
    visited = set()
    for trip in work:
        x, y, L2 = trip
        xin = B0 <= x < B1
        yin = B0 <= y < B1
        if not xin and not yin:
            new_pairs.append(trip)
            visited.add(trip)
            continue
        if xin and yin:
            continue  # reached through chains, or an internal circle
        if trip in visited:
            continue
        visited.add(trip)
        anchor = y if xin else x          # outside interval start
        cur = x if xin else y             # inside interval start
        while True:
            ms = mirror_start(cur, L2)
            if ms not in side_at:
                raise AssertionError("misaligned cancellation interval")
            trip2, far, L2b = side_at[ms]
            if L2b != L2:
                raise AssertionError("cancellation interval length mismatch")
            if trip2 in visited:
                if far == anchor:
                    # The chain folds back onto its own anchor: the outside
                    # bundle now pairs with itself in reversed order.
                    if L2 % 2:
                        raise AssertionError("odd folded bundle")
                    new_pairs.append((anchor, anchor + L2 // 2, L2 // 2))
                    break
                raise AssertionError("cancellation chain collision")
            visited.add(trip2)
            if not (B0 <= far < B1):
                new_pairs.append((min(anchor, far), max(anchor, far), L2))
                break
            cur = far

    dropped = 0
    for trip in work:
        if trip not in visited:
            dropped += trip[2]

    # Renumber positions: delete [B0, B1).
    def shift(p):
        return p if p < B0 else p - 2 * L

    gap = d.gap_of(B0)
    counts = list(d.counts)
    counts[gap] -= 2 * L
    if counts[gap] < 0:
        raise AssertionError("cancellation underflow")

    def renum(pairs):
        return [(shift(x), shift(y), L2) for x, y, L2 in pairs]

    same = renum(same)
    new_other = renum(new_pairs)
    if which == 'up':
        return counts, same, new_other, dropped
    return counts, new_other, same, dropped


# -- generator transport -----------------------------------------------------

_recipe_cache = {}


class _Degenerate(Exception):
    pass


def _transport_recipe(sign, updirs, dndirs):
    """How bundles through the twisted gap reroute, by route class only.

    The rerouting depends only on the left/right exit sides of each
    bundle's two arcs (not on widths or the twist position), so it is
    cached.  Returns, per strand, its crossing gap offsets (-1, 0, +1
    relative to the twisted gap) in traversal order from the upper arc,
    plus the left-to-right order of all image crossings within each
    offset gap as (strand, seq) entries.
    """
    key = (sign, updirs, dndirs)
    hit = _recipe_cache.get(key)
    if hit is not None:
        return hit
    recipe = None
    for attempt in range(8):
        try:
            recipe = _compute_recipe(sign, updirs, dndirs, attempt)
            break
        except _Degenerate:
            continue
    if recipe is None:
        raise AssertionError("no generic strand placement found")
    if len(_recipe_cache) < 20000:
        _recipe_cache[key] = recipe
    return recipe


def _compute_recipe(sign, updirs, dndirs, attempt):
    k = 2      # model location; recipes are translation invariant
    tw = twist(k, sign)
    nK = len(updirs)
    H = SUPPORT_RADIUS
    jit = Fraction(attempt, 89 * (nK + 2))
    crossings = []     # (x, strand, seq, offset)
    strand_gaps = []
    for t in range(nK):
        x = Fraction(k) + Fraction(t + 1, nK + 1) + jit
        if updirs[t] == 'L':
            hu = H + Fraction(2 * t + 2, 2 * nK + 5)
            ua = (Fraction(k - 1), hu)
        else:
            hu = H + Fraction(2 * (nK - t) + 1, 2 * nK + 5)
            ua = (Fraction(k + 2), hu)
        if dndirs[t] == 'L':
            hd = H + Fraction(2 * t + 2, 2 * nK + 5)
            da = (Fraction(k - 1), -hd)
        else:
            hd = H + Fraction(2 * (nK - t) + 1, 2 * nK + 5)
            da = (Fraction(k + 2), -hd)
        img = tw.map_polyline([ua, (x, hu), (x, -hd), da])
        pts = _axis_crossings(img)
        if len(pts) % 2 != 1:
            raise _Degenerate()
        seq = []
        for s, cx in enumerate(pts):
            if cx.denominator == 1:
                raise _Degenerate()
            if cx < k - 1 or cx > k + 2:
                raise AssertionError("image crossing escaped the window")
            off = 0 if k < cx < k + 1 else (-1 if cx < k else 1)
            crossings.append((cx, t, s, off))
            seq.append(off)
        strand_gaps.append(tuple(seq))
    xs = [c[0] for c in crossings]
    if len(set(xs)) != len(xs):
        raise _Degenerate()
    order = {-1: [], 0: [], 1: []}
    for cx, t, s, off in sorted(crossings):
        order[off].append((t, s))
    return (tuple(strand_gaps), {off: tuple(v) for off, v in order.items()})


def _axis_crossings(points):
    """x-coordinates where a polyline crosses y=0, in traversal order."""
    xs = []
    prev_sign = 0
    pending = None     # vertex exactly on the axis awaiting a sign decision
    for i, (x, y) in enumerate(points):
        if y == 0:
            if pending is not None:
                raise _Degenerate()
            pending = x
            continue
        s = 1 if y > 0 else -1
        if prev_sign == 0:
            prev_sign = s
            pending = None
            continue
        if s != prev_sign:
            if pending is not None:
                xs.append(pending)
            else:
                x0, y0 = points[i - 1]
                tpar = y0 / (y0 - y)
                xs.append(x0 + tpar * (x - x0))
            prev_sign = s
        pending = None
    return xs


def _transport(d, k, sign):
    lo, hi = d._prefix[k], d._prefix[k + 1]

    # Refine both matchings to a common tiling of the twisted gap.
    cuts = {lo, hi}
    for pairs in (d.up, d.dn):
        for x, y, L in pairs:
            for s, e in ((x, x + L), (y, y + L)):
                if lo < s < hi:
                    cuts.add(s)
                if lo < e < hi:
                    cuts.add(e)
    up = _split_at(d.up, cuts)
    dn = _split_at(d.dn, cuts)

    up_side = {}
    dn_side = {}
    for pairs, side in ((up, up_side), (dn, dn_side)):
        for trip in pairs:
            x, y, L = trip
            if lo <= x < hi:
                side[x] = (trip, y, L)
            if lo <= y < hi:
                side[y] = (trip, x, L)

    starts = sorted(up_side)
    if sorted(dn_side) != starts:
        raise AssertionError("gap tilings disagree after refinement")
    widths = []
    updirs = []
    dndirs = []
    up_far = []
    dn_far = []
    pos = lo
    for s in starts:
        if s != pos:
            raise AssertionError("gap tiling has holes")
        tu, fu, Lu = up_side[s]
        td, fd, Ld = dn_side[s]
        if Lu != Ld:
            raise AssertionError("gap tiling widths disagree")
        widths.append(Lu)
        updirs.append('L' if d.gap_of(fu) < k else 'R')
        dndirs.append('L' if d.gap_of(fd) < k else 'R')
        up_far.append(fu)
        dn_far.append(fd)
        pos += Lu
    if pos != hi:
        raise AssertionError("gap tiling incomplete")

    strand_gaps, order = _transport_recipe(sign, tuple(updirs), tuple(dndirs))

    ck = hi - lo
    # Lay out the image crossing blocks.
    block_start = {}
    base = lo
    ins = {-1: 0, 0: 0, 1: 0}
    for off in (-1, 0, 1):
        for t, s in order[off]:
            block_start[(t, s)] = base
            base += widths[t]
            ins[off] += widths[t]
    total_ins = ins[-1] + ins[0] + ins[1]

    def shift(p):
        if p < lo:
            return p
        if p >= hi:
            return p - ck + total_ins
        raise AssertionError("stale position inside the twisted gap")

    counts = list(d.counts)
    counts[k - 1] += ins[-1]
    counts[k] = ins[0]
    counts[k + 1] += ins[1]

    gap_trips = set()
    for side in (up_side, dn_side):
        for trip, _f, _L in side.values():
            gap_trips.add(trip)

    new_up = [(shift(x), shift(y), L) for x, y, L in up
              if (x, y, L) not in gap_trips]
    new_dn = [(shift(x), shift(y), L) for x, y, L in dn
              if (x, y, L) not in gap_trips]

    def add_pair(dest, a, b, L):
        dest.append((min(a, b), max(a, b), L))

    for t in range(len(starts)):
        w = widths[t]
        seq = strand_gaps[t]
        s_count = len(seq)
        add_pair(new_up, shift(up_far[t]), block_start[(t, 0)], w)
        add_pair(new_dn, shift(dn_far[t]), block_start[(t, s_count - 1)], w)
        for s in range(0, s_count - 1, 2):
            add_pair(new_dn, block_start[(t, s)], block_start[(t, s + 1)], w)
        for s in range(1, s_count - 1, 2):
            add_pair(new_up, block_start[(t, s)], block_start[(t, s + 1)], w)

    return Diagram._canonical(d.n, counts, new_up, new_dn, allow_drop=False)
