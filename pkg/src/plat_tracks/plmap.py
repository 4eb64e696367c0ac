"""An explicit piecewise-affine half-twist homeomorphism of the plane.

The half twist about punctures at (k, 0) and (k+1, 0) is realized exactly.
The support is a disk of radius ~1.0 around (k+1/2, 0): the core (radius
51/100, containing both punctures) is rotated by pi, and ten concentric
bands interpolate the rotation down to the identity, each shearing by 1/20
of a turn.  Ring nodes are exact rational points on circles (tangent
half-angle parametrization), ring radii grow geometrically by 7% per band
so sheared chords provably stay inside their band, and every piece is an
affine map with rational coefficients.  Polylines map to polylines with no
rounding anywhere.

Both the bundle-transport engine (diagram.py) and the polyline oracle
(oracle.py) push curves through this same ground-truth homeomorphism.
"""

import math
from fractions import Fraction

from .exactgeom import point_in_convex, seg_param_intersections

N_DIRS = 80          # nodes per ring
_HALF = N_DIRS // 2
_BANDS = 10
_DELTA = _HALF // _BANDS   # node-steps of shear per band


def _build_dirs():
    """N_DIRS near-uniform exact rational points on the unit circle.

    Antipodally symmetric, so the core's point reflection permutes ring
    nodes by a half-turn shift.
    """
    ds = []
    for i in range(_HALF):
        t = Fraction(round(math.tan(math.pi * i / (2 * _HALF)) * 8192), 8192)
        den = 1 + t * t
        ds.append(((1 - t * t) / den, 2 * t / den))
    return ds + [(-x, -y) for (x, y) in ds]


_DIRS = _build_dirs()
_RADII = [Fraction(51, 100) * Fraction(107, 100) ** t for t in range(_BANDS + 1)]
SUPPORT_RADIUS = _RADII[-1]


def _affine_from_triangles(src, dst):
    """The affine map taking triangle src onto triangle dst, as a 6-tuple."""
    (x0, y0), (x1, y1), (x2, y2) = src
    (u0, v0), (u1, v1), (u2, v2) = dst
    d = (x1 - x0) * (y2 - y0) - (x2 - x0) * (y1 - y0)
    if d == 0:
        raise ValueError("degenerate source triangle")
    a = ((u1 - u0) * (y2 - y0) - (u2 - u0) * (y1 - y0)) / d
    b = ((u2 - u0) * (x1 - x0) - (u1 - u0) * (x2 - x0)) / d
    c = ((v1 - v0) * (y2 - y0) - (v2 - v0) * (y1 - y0)) / d
    e = ((v2 - v0) * (x1 - x0) - (v1 - v0) * (x2 - x0)) / d
    return (a, b, u0 - a * x0 - b * y0, c, e, v0 - c * x0 - e * y0)


def _bbox(poly):
    xs = [p[0] for p in poly]
    ys = [p[1] for p in poly]
    return (min(xs), min(ys), max(xs), max(ys))


class PLTwist:
    """Exact PL half twist swapping the punctures (k, 0) and (k + 1, 0).

    sign=+1 rotates the core counterclockwise, sign=-1 clockwise.
    """

    def __init__(self, k, sign):
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        self.k = k
        self.sign = sign
        cx = Fraction(2 * k + 1, 2)
        self.center = (cx, Fraction(0))

        rings = [[(cx + r * dx, r * dy) for (dx, dy) in _DIRS] for r in _RADII]

        def node(t, i):
            return rings[t][i % N_DIRS]

        # Core: point reflection through the center (shift by a half turn).
        self.core_poly = rings[0]
        self.core_aff = (Fraction(-1), Fraction(0), 2 * cx,
                         Fraction(0), Fraction(-1), Fraction(0))
        # Bands, each a list of (triangle, affine) pieces.  The band
        # triangulation uses the diagonal leaning with the shear so image
        # chords span at most _DELTA node-steps.
        self.bands = []
        for t in range(_BANDS):
            sa = sign * _DELTA * (_BANDS - t)
            sb = sign * _DELTA * (_BANDS - t - 1)
            pieces = []
            for i in range(N_DIRS):
                if sign > 0:
                    tri1 = (node(t, i), node(t, i + 1), node(t + 1, i + 1))
                    img1 = (node(t, i + sa), node(t, i + 1 + sa), node(t + 1, i + 1 + sb))
                    tri2 = (node(t, i), node(t + 1, i + 1), node(t + 1, i))
                    img2 = (node(t, i + sa), node(t + 1, i + 1 + sb), node(t + 1, i + sb))
                else:
                    tri1 = (node(t, i), node(t, i + 1), node(t + 1, i))
                    img1 = (node(t, i + sa), node(t, i + 1 + sa), node(t + 1, i + sb))
                    tri2 = (node(t, i + 1), node(t + 1, i + 1), node(t + 1, i))
                    img2 = (node(t, i + 1 + sa), node(t + 1, i + 1 + sb), node(t + 1, i + sb))
                pieces.append((list(tri1), _affine_from_triangles(tri1, img1)))
                pieces.append((list(tri2), _affine_from_triangles(tri2, img2)))
            self.bands.append(pieces)

        self._r2 = [r * r for r in _RADII]
        self._band_boxes = [[(poly, aff, _bbox(poly)) for poly, aff in band]
                            for band in self.bands]
        self.all_pieces = [(self.core_poly, self.core_aff)]
        for band in self.bands:
            self.all_pieces.extend(band)
        # Approximate node angles, used only to prune exact tests.
        self._angles = [math.atan2(float(dy), float(dx)) for dx, dy in _DIRS]

    def _sector_guess(self, p):
        ang = math.atan2(float(p[1] - self.center[1]), float(p[0] - self.center[0]))
        frac = (ang % (2 * math.pi)) / (2 * math.pi)
        return int(frac * N_DIRS) % N_DIRS

    def _dist2(self, p):
        dx = p[0] - self.center[0]
        dy = p[1] - self.center[1]
        return dx * dx + dy * dy

    def _piece_at(self, p):
        d2 = self._dist2(p)
        if d2 > self._r2[-1]:
            return None
        if d2 <= self._r2[0] and point_in_convex(p, self.core_poly):
            return self.core_aff
        # Radius and angle give the piece up to small slack; search nearby
        # first, falling back to a full scan for safety.
        lo = 0
        while lo < _BANDS and self._r2[lo + 1] < d2:
            lo += 1
        s = self._sector_guess(p)
        for t in range(max(0, lo - 1), min(_BANDS, lo + 2)):
            band = self.bands[t]
            for ds in (0, -1, 1, -2, 2):
                i = (s + ds) % N_DIRS
                for poly, aff in band[2 * i:2 * i + 2]:
                    if point_in_convex(p, poly):
                        return aff
        if point_in_convex(p, self.core_poly):
            return self.core_aff
        for band in self.bands:
            for poly, aff in band:
                if point_in_convex(p, poly):
                    return aff
        return None

    def _apply(self, aff, p):
        a, b, e, c, d, f = aff
        return (a * p[0] + b * p[1] + e, c * p[0] + d * p[1] + f)

    def map_point(self, p):
        aff = self._piece_at(p)
        return p if aff is None else self._apply(aff, p)

    def _candidate_sectors(self, p0, p1):
        """Sector indices the segment can touch, with a safety margin.

        A chord missing the center subtends its minor arc; if the segment
        passes near or through the core, all sectors are candidates.  Used
        only to prune exact intersection tests.
        """
        c = self.center
        dx = p1[0] - p0[0]
        dy = p1[1] - p0[1]
        L2 = dx * dx + dy * dy
        near_core = min(self._dist2(p0), self._dist2(p1)) <= self._r2[1]
        if not near_core and L2 != 0:
            t = ((c[0] - p0[0]) * dx + (c[1] - p0[1]) * dy) / L2
            if 0 < t < 1:
                qx = p0[0] + t * dx - c[0]
                qy = p0[1] + t * dy - c[1]
                near_core = qx * qx + qy * qy <= self._r2[1]
        if near_core:
            return range(N_DIRS)
        s0 = self._sector_guess(p0)
        s1 = self._sector_guess(p1)
        fwd = (s1 - s0) % N_DIRS
        back = (s0 - s1) % N_DIRS
        if fwd <= back:
            lo, span = s0, fwd
        else:
            lo, span = s1, back
        return [(lo + d) % N_DIRS for d in range(-2, span + 3)]

    def _seg_meets_support(self, p0, p1):
        # Exact distance test of segment p0p1 against the support disk.
        c = self.center
        if self._dist2(p0) <= self._r2[-1] or self._dist2(p1) <= self._r2[-1]:
            return True
        dx = p1[0] - p0[0]
        dy = p1[1] - p0[1]
        L2 = dx * dx + dy * dy
        if L2 == 0:
            return False
        t = ((c[0] - p0[0]) * dx + (c[1] - p0[1]) * dy) / L2
        if t <= 0 or t >= 1:
            return False
        qx = p0[0] + t * dx - c[0]
        qy = p0[1] + t * dy - c[1]
        return qx * qx + qy * qy <= self._r2[-1]

    def map_polyline(self, points):
        """Image of an open polyline; subdivides segments at piece borders."""
        out = [self.map_point(points[0])]
        for s in range(len(points) - 1):
            p0, p1 = points[s], points[s + 1]
            if not self._seg_meets_support(p0, p1):
                if p1 != out[-1]:
                    out.append(p1)
                continue
            ts = {Fraction(0), Fraction(1)}
            bx0, bx1 = min(p0[0], p1[0]), max(p0[0], p1[0])
            by0, by1 = min(p0[1], p1[1]), max(p0[1], p1[1])
            ts.update(seg_param_intersections(p0, p1, self.core_poly))
            for i in self._candidate_sectors(p0, p1):
                for band in self._band_boxes:
                    for poly, _aff, (mx0, my0, mx1, my1) in band[2 * i:2 * i + 2]:
                        if mx1 < bx0 or mx0 > bx1 or my1 < by0 or my0 > by1:
                            continue
                        ts.update(seg_param_intersections(p0, p1, poly))
            ts = sorted(ts)
            dx = p1[0] - p0[0]
            dy = p1[1] - p0[1]
            for a, b in zip(ts, ts[1:]):
                if a == b:
                    continue
                mid = (a + b) / 2
                q = (p0[0] + mid * dx, p0[1] + mid * dy)
                aff = self._piece_at(q)
                end = (p0[0] + b * dx, p0[1] + b * dy)
                img = end if aff is None else self._apply(aff, end)
                if img != out[-1]:
                    out.append(img)
        return out


def _translated(base, dk):
    """Conjugate a PLTwist by the translation x -> x + dk (cheap copy)."""
    t = PLTwist.__new__(PLTwist)
    t.k = base.k + dk
    t.sign = base.sign
    dx = Fraction(dk)
    t.center = (base.center[0] + dx, base.center[1])

    def shift_poly(poly):
        return [(p[0] + dx, p[1]) for p in poly]

    def shift_aff(aff):
        a, b, e, c, d, f = aff
        return (a, b, e + dx - a * dx, c, d, f - c * dx)

    t.core_poly = shift_poly(base.core_poly)
    t.core_aff = shift_aff(base.core_aff)
    t.bands = [[(shift_poly(p), shift_aff(a)) for p, a in band] for band in base.bands]
    t._r2 = base._r2
    t._band_boxes = [[(poly, aff, _bbox(poly)) for poly, aff in band]
                     for band in t.bands]
    t.all_pieces = [(t.core_poly, t.core_aff)]
    for band in t.bands:
        t.all_pieces.extend(band)
    t._angles = base._angles
    return t


_twist_cache = {}


def twist(k, sign):
    key = (k, sign)
    if key not in _twist_cache:
        if sign not in _twist_cache:
            _twist_cache[sign] = PLTwist(0, sign)
        _twist_cache[key] = _translated(_twist_cache[sign], k)
    return _twist_cache[key]
