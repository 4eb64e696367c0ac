"""Embedded planar maps with exact face traversal.

Vertices carry exact rational positions, edges carry polylines.  Rotations
are computed by exact angular sorting of the edge germs at each vertex, so
no floating point enters the face computation; punctures are assigned to
faces by exact upward ray shooting.
"""

from fractions import Fraction
from functools import cmp_to_key

from .exactgeom import cross


def _angle_cmp(d1, d2):
    """Counterclockwise comparison of nonzero direction vectors from 0."""
    def half(d):
        return 0 if (d[1] > 0 or (d[1] == 0 and d[0] > 0)) else 1
    h1, h2 = half(d1), half(d2)
    if h1 != h2:
        return -1 if h1 < h2 else 1
    c = d1[0] * d2[1] - d1[1] * d2[0]
    if c > 0:
        return -1
    if c < 0:
        return 1
    return 0


class PlanarMap:
    def __init__(self):
        self.points = []
        self.edges = []          # (u, v, polyline from u's point to v's point)

    def add_vertex(self, pt):
        self.points.append((Fraction(pt[0]), Fraction(pt[1])))
        return len(self.points) - 1

    def add_edge(self, u, v, polyline):
        poly = [(Fraction(x), Fraction(y)) for x, y in polyline]
        if poly[0] != self.points[u] or poly[-1] != self.points[v]:
            raise ValueError("edge polyline must join its endpoints")
        self.edges.append((u, v, poly))
        return len(self.edges) - 1

    def _germ(self, he):
        """(vertex, initial direction) of half-edge he = (edge, flip)."""
        e, flip = he
        u, v, poly = self.edges[e]
        if not flip:
            p0, p1 = poly[0], poly[1]
            return u, (p1[0] - p0[0], p1[1] - p0[1])
        p0, p1 = poly[-1], poly[-2]
        return v, (p1[0] - p0[0], p1[1] - p0[1])

    def _rotations(self):
        rot = {v: [] for v in range(len(self.points))}
        for e in range(len(self.edges)):
            for flip in (0, 1):
                v, d = self._germ((e, flip))
                rot[v].append(((e, flip), d))
        for v in rot:
            rot[v].sort(key=cmp_to_key(lambda a, b: _angle_cmp(a[1], b[1])))
        return {v: [he for he, _d in items] for v, items in rot.items()}

    def faces(self):
        """Orbits of half-edges; each face is traversed with itself on the left."""
        rot = self._rotations()
        index = {}
        for v, hes in rot.items():
            for i, he in enumerate(hes):
                index[he] = (v, i)

        def nxt(he):
            e, flip = he
            twin = (e, 1 - flip)
            v, i = index[twin]
            hes = rot[v]
            return hes[(i - 1) % len(hes)]

        seen = set()
        out = []
        for e in range(len(self.edges)):
            for flip in (0, 1):
                he = (e, flip)
                if he in seen:
                    continue
                cycle = []
                cur = he
                while cur not in seen:
                    seen.add(cur)
                    cycle.append(cur)
                    cur = nxt(cur)
                out.append(cycle)
        return out

    def face_polyline(self, face):
        pts = []
        for e, flip in face:
            poly = self.edges[e][2]
            seq = poly if not flip else poly[::-1]
            pts.extend(seq[:-1])
        return pts

    def locate_faces(self, targets):
        """Face index containing each target point, by upward ray shooting."""
        faces = self.faces()
        results = []
        for ox, oy in targets:
            x = Fraction(ox) + Fraction(1, 1013)
            best = None   # (crossing y, edge, leftward flag)
            for e, (u, v, poly) in enumerate(self.edges):
                for s in range(len(poly) - 1):
                    (xa, ya), (xb, yb) = poly[s], poly[s + 1]
                    if xa == xb:
                        continue
                    if (xa < x) != (xb < x):
                        t = (x - xa) / (xb - xa)
                        y = ya + t * (yb - ya)
                        if y <= oy:
                            continue
                        if best is None or y < best[0]:
                            # Heading left at the crossing means the face
                            # below the segment is on the traversal's left.
                            best = (y, e, xb < xa)
                    elif xa == x or xb == x:
                        raise ValueError("ray through a polyline vertex")
            if best is None:
                results.append(None)
                continue
            _y, e, leftward = best
            he = (e, 0 if leftward else 1)
            for fi, face in enumerate(faces):
                if he in face:
                    results.append(fi)
                    break
        return faces, results
