"""Brute-force polyline oracle for curves on the punctured plane.

Fully independent check of the diagram engine: curves are explicit closed
polylines with exact rational vertices.  Each braid generator is applied
as the PL half-twist homeomorphism (plmap), after which the curve is
pulled taut against the axis by cancelling adjacent same-gap crossings
(iterated bigon removal against the axis) and redrawn with staple arcs.
Intersection numbers come from the full arrangement of two drawn curves
after removing empty bigons, certified by exact winding numbers.

Only intended for small curves (short words); everything is exact but
nothing is compressed.
"""

import math
from fractions import Fraction

from .exactgeom import seg_intersection, winding_number
from .plmap import twist


class OracleError(RuntimeError):
    pass


class _Degenerate(Exception):
    pass


class OracleCurve:
    """A taut closed curve: crossing list plus a drawn polyline.

    crossings: list of (gap, x) in order along the curve; arcs between
    consecutive crossings alternate half planes, the arc leaving
    crossings[0] lying above the axis iff first_arc_up.
    """

    def __init__(self, n, crossings, first_arc_up, salt=0):
        self.n = n
        self.crossings = crossings
        self.first_arc_up = first_arc_up
        self.salt = salt
        self.polyline = _draw(n, crossings, first_arc_up, salt)

    @staticmethod
    def round_curve(n, a, b, salt=0):
        if not (1 <= a <= b <= n) or (a, b) == (1, n):
            raise ValueError("bad round curve")
        cr = [(a - 1, Fraction(1, 2)), (b, Fraction(1, 2))]
        return OracleCurve(n, cr, True, salt)

    def apply_gen(self, k, sign):
        if not (1 <= k <= self.n - 1):
            raise ValueError("generator index out of range")
        for attempt in range(12):
            try:
                drawn = _draw(self.n, self.crossings, self.first_arc_up,
                              self.salt + 17 * attempt + 1)
                img = twist(k, sign).map_polyline(drawn)
                cr, first_up = _extract(self.n, img)
                cr, first_up = _reduce(cr, first_up)
                return OracleCurve(self.n, cr, first_up, self.salt)
            except _Degenerate:
                continue
        raise OracleError("no generic position found for twist")

    def apply_word(self, word):
        c = self
        for k, s in word:
            c = c.apply_gen(k, s)
        return c

    def gap_counts(self):
        counts = [0] * (self.n + 1)
        for g, _ in self.crossings:
            counts[g] += 1
        return counts

    def chord_crossings(self, j):
        """Taut crossings with the open axis segment between p_j, p_j+1."""
        if not (1 <= j <= self.n - 1):
            raise ValueError("gap index out of range")
        return self.gap_counts()[j]

    def enclosed_punctures(self):
        loop = self.polyline[:-1]
        return frozenset(
            t for t in range(1, self.n + 1)
            if winding_number(loop, (Fraction(t), Fraction(0))) % 2)

    def vline_crossings(self, j):
        """Minimal crossings with the vertical line through gap j."""
        if not (1 <= j <= self.n - 1):
            raise ValueError("gap index out of range")
        x0 = Fraction(2 * j + 1, 2)
        A = self.polyline
        hits = []       # ((segment, t), y)
        for i in range(len(A) - 1):
            (xa, ya), (xb, yb) = A[i], A[i + 1]
            if xa == x0 or xb == x0:
                raise OracleError("vertex on the test line")
            if (xa < x0) != (xb < x0):
                t = (x0 - xa) / (xb - xa)
                hits.append(((i, t), ya + t * (yb - ya)))
        punctures = [(Fraction(t), Fraction(0)) for t in range(1, self.n + 1)]
        alive = list(range(len(hits)))
        while len(alive) >= 2:
            m = len(alive)
            byy = sorted(range(m), key=lambda r: hits[alive[r]][1])
            rankB = {alive[byy[r]]: r for r in range(m)}
            removed = False
            for r in range(m):
                P = alive[r]
                Q = alive[(r + 1) % m]
                if abs(rankB[P] - rankB[Q]) != 1:
                    continue
                sub = _subpath(A, hits[P][0], hits[Q][0])
                # Closing edge of the loop is the straight chord back from
                # Q's point to P's point, which lies on the test line.
                if all(winding_number(sub, p) == 0 for p in punctures):
                    alive = [h for h in alive if h not in (P, Q)]
                    removed = True
                    break
            if not removed:
                break
        return len(alive)


def _slot_x(gap, rank, count, salt):
    jitter = Fraction(salt % 7, 500)
    return (Fraction(gap) + Fraction(1, 50) + jitter
            + Fraction(9 * (2 * rank + 1), 20 * count))


def _draw(n, crossings, first_arc_up, salt):
    """Staple drawing of a taut crossing list; exact rational vertices."""
    m = len(crossings)
    if m == 0:
        raise OracleError("cannot draw an empty curve")
    per_gap = {}
    for idx, (g, key) in enumerate(crossings):
        per_gap.setdefault(g, []).append((key, idx))
    xs = {}
    for g, items in per_gap.items():
        items.sort()
        for rank, (_k, idx) in enumerate(items):
            xs[idx] = _slot_x(g, rank, len(items), salt)
    arcs = []
    for i in range(m):
        j = (i + 1) % m
        up = first_arc_up if i % 2 == 0 else not first_arc_up
        arcs.append((i, j, up))
    heights = _arc_heights(xs, arcs, salt)
    pts = []
    for i, j, up in arcs:
        h = heights[(i, j)] if up else -heights[(i, j)]
        pts.extend([(xs[i], Fraction(0)), (xs[i], h), (xs[j], h)])
    pts.append(pts[0])
    return pts


def _arc_heights(xs, arcs, salt):
    spans = []
    for i, j, up in arcs:
        a, b = sorted((xs[i], xs[j]))
        spans.append((a, b, (i, j), up))
    heights = {}
    for a, b, key, up in spans:
        depth = sum(1 for (a2, b2, k2, up2) in spans
                    if up2 == up and k2 != key and a2 < a and b < b2)
        heights[key] = (Fraction(4, 5) * Fraction(60, 60 + depth)
                        + Fraction((salt % 5) + 1, 997))
    return heights


def _extract(n, polyline):
    """Crossing list (gap, x) in traversal order from a closed polyline."""
    pts = polyline
    if pts[0] != pts[-1]:
        raise _Degenerate()
    body = pts[:-1]
    start = next((i for i, p in enumerate(body) if p[1] != 0), None)
    if start is None:
        raise _Degenerate()
    loop = body[start:] + body[:start + 1]
    crossings = []
    prev_sign = 1 if loop[0][1] > 0 else -1
    first_arc_up = None
    pending = None
    for i in range(1, len(loop)):
        x, y = loop[i]
        if y == 0:
            if pending is not None:
                raise _Degenerate()
            pending = x
            continue
        s = 1 if y > 0 else -1
        if s != prev_sign:
            if pending is not None:
                cx = pending
            else:
                x0, y0 = loop[i - 1]
                t = Fraction(y0) / (y0 - y)
                cx = x0 + t * (x - x0)
            if cx.denominator == 1:
                raise _Degenerate()
            g = min(max(math.floor(cx), 0), n)
            crossings.append((g, cx))
            if first_arc_up is None:
                first_arc_up = (s > 0)
            prev_sign = s
        pending = None
    if not crossings or len(crossings) % 2:
        raise _Degenerate()
    return crossings, first_arc_up


def _reduce(crossings, first_arc_up):
    """Cancel cyclically-adjacent same-gap crossings (axis bigons)."""
    cr = list(crossings)
    up = first_arc_up
    changed = True
    while changed and cr:
        changed = False
        m = len(cr)
        for i in range(m):
            j = (i + 1) % m
            if i == j:
                break
            if cr[i][0] == cr[j][0]:
                if j > i:
                    del cr[j]
                    del cr[i]
                else:           # wraps: remove last and first
                    del cr[i]
                    cr.pop(0)
                    up = not up
                changed = True
                break
    if not cr:
        raise OracleError("curve reduced to nothing (contractible)")
    return cr, up


def oracle_intersection(c1, c2, sphere=False):
    """Exact geometric intersection number of two oracle curves.

    With sphere=True the point at infinity is not a marked point, so
    bigons whose puncture-free side is the unbounded one also cancel;
    this computes the intersection number on the bridge sphere.
    """
    if c1.n != c2.n:
        raise ValueError("different puncture counts")
    for attempt in range(12):
        try:
            return _arrangement_count(c1, c2, attempt, sphere)
        except _Degenerate:
            continue
    raise OracleError("no generic pair position found")


def _arrangement_count(c1, c2, attempt, sphere=False):
    A = _draw(c1.n, c1.crossings, c1.first_arc_up, 3 * attempt)
    B0 = _draw(c2.n, c2.crossings, c2.first_arc_up, 3 * attempt + 1)
    B = [(x + Fraction(1, 307 + 13 * attempt), y * Fraction(93, 100))
         for x, y in B0]
    hits = []
    for i in range(len(A) - 1):
        for j in range(len(B) - 1):
            kind, data = seg_intersection(A[i], A[i + 1], B[j], B[j + 1])
            if kind == 'none':
                continue
            if kind == 'overlap':
                raise _Degenerate()
            t, u, _pt = data
            if u is None or t in (0, 1) or u in (0, 1):
                raise _Degenerate()
            hits.append(((i, t), (j, u)))
    if not hits:
        return 0
    punctures = [(Fraction(t), Fraction(0)) for t in range(1, c1.n + 1)]
    alive = list(range(len(hits)))
    while len(alive) >= 2:
        m = len(alive)
        byA = sorted(alive, key=lambda h: hits[h][0])
        byB = sorted(alive, key=lambda h: hits[h][1])
        posB = {h: r for r, h in enumerate(byB)}
        removed = False
        for r in range(m):
            P = byA[r]
            Q = byA[(r + 1) % m]
            if P == Q:
                continue
            dB = (posB[Q] - posB[P]) % m
            if dB not in (1, m - 1):
                continue
            subA = _subpath(A, hits[P][0], hits[Q][0])
            loops = []
            if dB == 1:
                loops.append(subA + _subpath(B, hits[P][1], hits[Q][1])[::-1])
            if dB == m - 1:
                loops.append(subA + _subpath(B, hits[Q][1], hits[P][1]))
            for loop in loops:
                wn = [winding_number(loop, p) for p in punctures]
                empty = all(w == 0 for w in wn)
                if sphere and not empty:
                    empty = wn[0] in (1, -1) and all(w == wn[0] for w in wn)
                if empty:
                    alive = [h for h in alive if h not in (P, Q)]
                    removed = True
                    break
            if removed:
                break
        if not removed:
            break
    return len(alive)


def _subpath(poly, par1, par2):
    """Sub-polyline of a closed polyline from parameter par1 to par2.

    Parameters are (segment index, t); traversal follows increasing
    parameter, wrapping around the closed curve if needed.
    """
    (i1, t1), (i2, t2) = par1, par2

    def pt(i, t):
        (xa, ya), (xb, yb) = poly[i], poly[i + 1]
        return (xa + t * (xb - xa), ya + t * (yb - ya))

    out = [pt(i1, t1)]
    nseg = len(poly) - 1
    if i1 == i2 and t2 > t1:
        out.append(pt(i2, t2))
        return out
    i = i1
    while True:
        i = (i + 1) % nseg
        out.append(poly[i])
        if i == i2:
            out.append(pt(i2, t2))
            return out
