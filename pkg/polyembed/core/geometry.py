"""
Exact integer predicates on points and segments.

All arithmetic is done on Python integers, which never overflow, so the
predicates below are exact for any input inside the coordinate cap.
"""
import enum
import numbers
from collections import namedtuple

from polyembed import config
from polyembed.core.errors import InvalidInput


class Point(namedtuple('Point', ['x', 'y'])):
    __slots__ = ()

    @staticmethod
    def from_tuple(t):
        if len(t) != 2:
            raise InvalidInput('ParseError',
                'cannot create Point from %d-element tuple' % len(t))
        return Point(t[0], t[1])


class Segment(namedtuple('Segment', ['a', 'b'])):
    __slots__ = ()


class Orientation(enum.Enum):
    CW = -1
    COLLINEAR = 0
    CCW = 1

    def reverse(self):
        return Orientation(-self.value)


def check_point(p, limit=None):
    """
    Reject a point whose coordinates are not integers within the cap.

    Parameters
    ----------
    p (Point): The point to check.
    limit (int): Magnitude cap, defaults to config.COORD_LIMIT.

    Returns
    -------
    p (Point): The point with plain Python int coordinates.
    """
    if limit is None:
        limit = config.COORD_LIMIT
    for c in p:
        if isinstance(c, bool) or not isinstance(c, numbers.Integral):
            raise InvalidInput('ParseError',
                'coordinate %r of %r is not an integer' % (c, tuple(p)))
        if abs(int(c)) > limit:
            raise InvalidInput('CoordinateOutOfRange',
                'point %r exceeds |coord| <= %d' % (tuple(p), limit))
    return Point(int(p[0]), int(p[1]))


def cross(p, q, r):
    """
    Twice the signed area of triangle pqr, i.e. (q - p) x (r - p).
    """
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def orientation(p, q, r):
    value = cross(p, q, r)
    if value > 0:
        return Orientation.CCW
    if value < 0:
        return Orientation.CW
    return Orientation.COLLINEAR


def on_segment(p, s):
    """
    True iff p lies on the closed segment s.
    """
    a, b = s
    if cross(a, b, p) != 0:
        return False
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and
            min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def proper_intersect(s1, s2):
    """
    True iff the open interiors of s1 and s2 cross at exactly one point.

    Touching at an endpoint, T-junctions and collinear overlaps are not
    proper crossings.
    """
    a, b = s1
    c, d = s2
    o1 = cross(a, b, c)
    o2 = cross(a, b, d)
    o3 = cross(c, d, a)
    o4 = cross(c, d, b)
    if o1 == 0 or o2 == 0 or o3 == 0 or o4 == 0:
        return False
    return (o1 > 0) != (o2 > 0) and (o3 > 0) != (o4 > 0)


def collinear_overlap(s1, s2):
    """
    True iff s1 and s2 are collinear and share a piece of positive length.
    """
    a, b = s1
    c, d = s2
    if cross(a, b, c) != 0 or cross(a, b, d) != 0:
        return False
    # Project on the axis along which s1 is not degenerate
    axis = 0 if a[0] != b[0] else 1
    lo = max(min(a[axis], b[axis]), min(c[axis], d[axis]))
    hi = min(max(a[axis], b[axis]), max(c[axis], d[axis]))
    return lo < hi


def segments_touch(s1, s2):
    """
    True iff the closed segments s1 and s2 have any point in common.
    """
    if proper_intersect(s1, s2):
        return True
    a, b = s1
    c, d = s2
    return (on_segment(c, s1) or on_segment(d, s1) or
            on_segment(a, s2) or on_segment(b, s2))


def signed_area2(points):
    """
    Twice the shoelace area; positive for counter-clockwise order.
    """
    n = len(points)
    total = 0
    for i in range(n):
        x0, y0 = points[i]
        x1, y1 = points[(i + 1) % n]
        total += x0 * y1 - x1 * y0
    return total
