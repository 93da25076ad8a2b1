import enum
import logging
import numbers

from polyembed.core.errors import InvalidInput
from polyembed.core.geometry import (Point, Segment, Orientation, check_point,
    orientation, on_segment, segments_touch, collinear_overlap, cross,
    signed_area2)

logger = logging.getLogger(__name__)


class VertexKind(enum.Enum):
    CONVEX = 'Convex'
    REFLEX = 'Reflex'


class Polygon(object):
    """
    A validated simple polygon with counter-clockwise vertex order.

    Instances are only built through validate_polygon; the vertex tuple is
    never mutated afterwards.
    """

    def __init__(self, vertices):
        self._vertices = tuple(vertices)

    @property
    def vertices(self):
        return self._vertices

    @property
    def n(self):
        return len(self._vertices)

    def __len__(self):
        return len(self._vertices)

    def __getitem__(self, i):
        return self._vertices[i]

    def __iter__(self):
        return iter(self._vertices)

    def __eq__(self, other):
        return isinstance(other, Polygon) and self._vertices == other._vertices

    def __hash__(self):
        return hash(self._vertices)

    def __repr__(self):
        return 'Polygon(%r)' % ([tuple(v) for v in self._vertices],)

    def prev(self, i):
        return (i - 1) % self.n

    def next(self, i):
        return (i + 1) % self.n

    def edge(self, i):
        """
        The polygon edge from vertex i to vertex i + 1 (mod n).
        """
        return Segment(self._vertices[i], self._vertices[(i + 1) % self.n])

    @property
    def edges(self):
        return [self.edge(i) for i in range(self.n)]

    def is_adjacent(self, i, j):
        return (i - j) % self.n in (1, self.n - 1)

    def check_index(self, i):
        if (isinstance(i, bool) or not isinstance(i, numbers.Integral) or
                not 0 <= i < self.n):
            raise InvalidInput('IndexOutOfRange',
                'vertex index %r not in [0, %d)' % (i, self.n))
        return int(i)

    def rotated(self, shift):
        """
        The same polygon with labels shifted: new vertex k is old vertex
        k + shift (mod n).
        """
        n = self.n
        return Polygon([self._vertices[(k + shift) % n] for k in range(n)])

    def mirrored(self):
        """
        Mirror image in the y axis, re-oriented counter-clockwise. New vertex
        k is the image of old vertex n - 1 - k.
        """
        return Polygon([Point(-v.x, v.y) for v in reversed(self._vertices)])


class VertexClassification(object):
    """
    Per-vertex flags of a polygon.

    Parameters
    ----------
    kinds (tuple): VertexKind per vertex index.
    u_turn (frozenset): Indices of u-turn vertices.
    isolated (frozenset): Indices of isolated vertices, or None until the
        visibility module fills it in.
    """

    def __init__(self, kinds, u_turn, isolated=None):
        self.kinds = tuple(kinds)
        self.u_turn = frozenset(u_turn)
        self.isolated = None if isolated is None else frozenset(isolated)
        assert all(self.kinds[i] is VertexKind.REFLEX for i in self.u_turn)

    @property
    def reflex(self):
        return sorted(i for i, k in enumerate(self.kinds) if k is VertexKind.REFLEX)

    @property
    def convex(self):
        return sorted(i for i, k in enumerate(self.kinds) if k is VertexKind.CONVEX)

    def with_isolated(self, isolated):
        return VertexClassification(self.kinds, self.u_turn, isolated)

    def is_u_turn(self, i):
        return i in self.u_turn

    def is_isolated(self, i):
        assert self.isolated is not None, 'isolated vertices not computed'
        return i in self.isolated


def validate_polygon(raw_vertices, normalize=False):
    """
    Admit a vertex list as a Polygon or reject it naming the first
    violated rule.

    Parameters
    ----------
    raw_vertices (list): Points (or integer pairs) in boundary order.
    normalize (bool): Reverse clockwise input instead of rejecting it.

    Returns
    -------
    polygon (Polygon): The validated, counter-clockwise polygon.
    """
    vertices = [check_point(Point.from_tuple(v)) for v in raw_vertices]
    n = len(vertices)
    if n < 3:
        raise InvalidInput('TooFewVertices', 'got %d vertices, need >= 3' % n)

    seen = {}
    for i, v in enumerate(vertices):
        if v in seen:
            raise InvalidInput('DuplicateVertex',
                'vertices %d and %d are both %r' % (seen[v], i, tuple(v)))
        seen[v] = i

    for i in range(n):
        if cross(vertices[i - 1], vertices[i], vertices[(i + 1) % n]) == 0:
            raise InvalidInput('CollinearTriple',
                'vertices %d, %d, %d are collinear' % ((i - 1) % n, i, (i + 1) % n))

    _check_simple(vertices)

    if signed_area2(vertices) < 0:
        if not normalize:
            raise InvalidInput('NotCounterClockwise',
                'signed area is negative; reverse the vertex list')
        logger.debug('Reversing clockwise input of %d vertices', n)
        vertices = vertices[::-1]
    return Polygon(vertices)


def _check_simple(vertices):
    # O(n^2) all-pairs edge test
    n = len(vertices)
    edges = [Segment(vertices[i], vertices[(i + 1) % n]) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if j == i + 1 or (i == 0 and j == n - 1):
                # Adjacent edges may share only their common vertex
                if collinear_overlap(edges[i], edges[j]):
                    raise InvalidInput('SelfIntersecting',
                        'edges %d and %d overlap' % (i, j))
                continue
            if segments_touch(edges[i], edges[j]):
                raise InvalidInput('SelfIntersecting',
                    'edges %d and %d intersect' % (i, j))


def classify_vertices(polygon):
    n = polygon.n
    kinds = []
    for i in range(n):
        o = orientation(polygon[i - 1], polygon[i], polygon[(i + 1) % n])
        kinds.append(VertexKind.REFLEX if o is Orientation.CW else VertexKind.CONVEX)
    return VertexClassification(kinds, _u_turns(kinds))


def _u_turns(kinds):
    n = len(kinds)
    reflex = [k is VertexKind.REFLEX for k in kinds]
    return {i for i in range(n)
            if reflex[i] and (reflex[i - 1] or reflex[(i + 1) % n])}


def reflex_vertices(polygon):
    return classify_vertices(polygon).reflex


def u_turn_vertices(polygon):
    """
    Reflex vertices adjacent to another reflex vertex.
    """
    return set(classify_vertices(polygon).u_turn)


def u_turn_edges(polygon):
    """
    Polygon edges (i, i + 1 mod n) whose endpoints are both u-turn vertices.
    """
    n = polygon.n
    u_turn = u_turn_vertices(polygon)
    return {(i, (i + 1) % n) for i in range(n)
            if i in u_turn and (i + 1) % n in u_turn}


def is_convex(polygon):
    return not classify_vertices(polygon).reflex


def is_pseudo_convex(polygon):
    return not u_turn_vertices(polygon)


def locate_point(vertices, p):
    """
    Locate p against a closed polygonal boundary.

    Returns
    -------
    location (int): 1 strictly inside, 0 on the boundary, -1 outside.
    """
    n = len(vertices)
    winding = 0
    for i in range(n):
        a = vertices[i]
        b = vertices[(i + 1) % n]
        if on_segment(p, (a, b)):
            return 0
        if a[1] <= p[1] < b[1] and cross(a, b, p) > 0:
            winding += 1
        elif b[1] <= p[1] < a[1] and cross(a, b, p) < 0:
            winding -= 1
    return 1 if winding != 0 else -1


def midpoint_inside(polygon, i, j):
    """
    True iff the midpoint of p_i p_j is strictly inside the polygon.
    Coordinates are doubled so the test stays in integers.
    """
    doubled = [(2 * v.x, 2 * v.y) for v in polygon]
    a, b = polygon[i], polygon[j]
    return locate_point(doubled, (a.x + b.x, a.y + b.y)) == 1
