"""Exact rational plane geometry helpers.

Points are pairs of Fractions.  Everything here is arithmetic-exact; no
floating point is used anywhere in the kernel.
"""

from fractions import Fraction

Point = tuple  # (Fraction, Fraction)


def pt(x, y):
    return (Fraction(x), Fraction(y))


def sub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def cross(o, a, b):
    """Signed area*2 of triangle (o, a, b). Positive = counterclockwise."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def seg_param_intersections(p0, p1, poly):
    """Parameters t in [0,1] where segment p0->p1 meets edges of polygon poly.

    Returns a sorted list of Fractions (may include 0 and 1).  Collinear
    overlaps contribute both endpoint parameters of the overlap.
    """
    ts = []
    dx = p1[0] - p0[0]
    dy = p1[1] - p0[1]
    m = len(poly)
    for i in range(m):
        a = poly[i]
        b = poly[(i + 1) % m]
        ex = b[0] - a[0]
        ey = b[1] - a[1]
        denom = dx * ey - dy * ex
        if denom == 0:
            # Parallel.  If collinear, project the edge endpoints.
            if cross(p0, p1, a) == 0:
                for q in (a, b):
                    if dx != 0:
                        t = (q[0] - p0[0]) / dx
                    elif dy != 0:
                        t = (q[1] - p0[1]) / dy
                    else:
                        continue
                    if 0 <= t <= 1:
                        ts.append(t)
            continue
        # Solve p0 + t*(dx,dy) = a + u*(ex,ey).
        t = ((a[0] - p0[0]) * ey - (a[1] - p0[1]) * ex) / denom
        u = ((a[0] - p0[0]) * dy - (a[1] - p0[1]) * dx) / denom
        if 0 <= t <= 1 and 0 <= u <= 1:
            ts.append(t)
    return sorted(set(ts))


def point_in_convex(p, poly):
    """True if p lies in the closed convex polygon poly (ccw or cw)."""
    sign = 0
    m = len(poly)
    for i in range(m):
        c = cross(poly[i], poly[(i + 1) % m], p)
        if c == 0:
            continue
        s = 1 if c > 0 else -1
        if sign == 0:
            sign = s
        elif s != sign:
            return False
    return True


def polygon_area2(poly):
    """Twice the signed area of a polygon."""
    s = Fraction(0)
    m = len(poly)
    for i in range(m):
        a = poly[i]
        b = poly[(i + 1) % m]
        s += a[0] * b[1] - a[1] * b[0]
    return s


def seg_intersection(p0, p1, q0, q1):
    """Proper or boundary intersection of two segments.

    Returns (kind, data):
      ('none', None)                    - disjoint
      ('point', (t, u, (x, y)))         - single intersection point
      ('overlap', None)                 - collinear overlap
    """
    dx = p1[0] - p0[0]
    dy = p1[1] - p0[1]
    ex = q1[0] - q0[0]
    ey = q1[1] - q0[1]
    denom = dx * ey - dy * ex
    if denom == 0:
        if cross(p0, p1, q0) != 0:
            return ('none', None)
        # Collinear: check 1-d overlap.
        if dx != 0 or dy != 0:
            if dx != 0:
                t0 = (q0[0] - p0[0]) / dx
                t1 = (q1[0] - p0[0]) / dx
            else:
                t0 = (q0[1] - p0[1]) / dy
                t1 = (q1[1] - p0[1]) / dy
            lo, hi = min(t0, t1), max(t0, t1)
            if hi < 0 or lo > 1:
                return ('none', None)
            if hi == 0 or lo == 1:
                # Touch at a single endpoint.
                t = hi if hi == 0 else lo
                x = p0[0] + t * dx
                y = p0[1] + t * dy
                return ('point', (t, None, (x, y)))
            return ('overlap', None)
        return ('none', None)
    t = ((q0[0] - p0[0]) * ey - (q0[1] - p0[1]) * ex) / denom
    u = ((q0[0] - p0[0]) * dy - (q0[1] - p0[1]) * dx) / denom
    if 0 <= t <= 1 and 0 <= u <= 1:
        x = p0[0] + t * dx
        y = p0[1] + t * dy
        return ('point', (t, u, (x, y)))
    return ('none', None)


def winding_number(loop, p):
    """Winding number of a closed polyline around p (p not on the loop)."""
    wn = 0
    m = len(loop)
    for i in range(m):
        a = loop[i]
        b = loop[(i + 1) % m]
        if a[1] <= p[1]:
            if b[1] > p[1] and cross(a, b, p) > 0:
                wn += 1
        else:
            if b[1] <= p[1] and cross(a, b, p) < 0:
                wn -= 1
    return wn
