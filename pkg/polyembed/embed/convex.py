"""
Constructive embeddings into convex polygons.

Every output is checked by the verifier before it is returned; a rejected
construction is a bug, not a user error.
"""
import logging

from polyembed.core.errors import InvalidInput, SizeViolation
from polyembed.core.polygon import is_convex
from polyembed.embed.base import Embedding
from polyembed.verify.verifier import verify_embedding

logger = logging.getLogger(__name__)


def _require_convex(polygon):
    if not is_convex(polygon):
        raise InvalidInput('NotConvex', 'polygon has reflex vertices')


def _checked(polygon, embedding, planar=True):
    violations = verify_embedding(polygon, embedding, embedding.graph_spec(), planar)
    assert not violations, 'construction rejected: %s' % ', '.join(map(str, violations))
    return embedding


def _zigzag(m):
    """
    m, 0, m - 1, 1, m - 2, 2, ...: all of 0..m, inward from both ends.
    """
    order = []
    lo, hi = 0, m
    while lo <= hi:
        order.append(hi)
        if lo != hi:
            order.append(lo)
        lo += 1
        hi -= 1
    return order


def embed_path_convex(polygon, m):
    """
    Planar path of m chords in a convex polygon.

    The path starts at vertex n - 1, jumps to vertex m and then zigzags
    inward over vertices 0..m, stopping once m edges are placed. No two
    chords cross. Going on for odd m would emit a polygon edge.

    Parameters
    ----------
    polygon (Polygon): A convex polygon with n >= 4.
    m (int): Edge count, 1 <= m <= n - 3.

    Returns
    -------
    embedding (Embedding): The path; optimal_claimed when m = n - 3.
    """
    _require_convex(polygon)
    n = polygon.n
    if m < 1:
        raise InvalidInput('TooSmall', 'a path needs at least 1 edge, got %d' % m)
    if m > n - 3:
        raise SizeViolation('SizeOutOfRange',
            'a planar path in a %d-gon has at most %d edges, asked for %d'
            % (n, n - 3, m))
    vertices = ([n - 1] + _zigzag(m))[:m + 1]
    embedding = Embedding.path(vertices, optimal_claimed=(m == n - 3))
    return _checked(polygon, embedding)


def embed_cycle_convex(polygon, k):
    """
    Cycle on the even vertices 0, 2, ..., 2(k - 1), closed back to 0.
    """
    _require_convex(polygon)
    n = polygon.n
    if k < 3:
        raise InvalidInput('DegenerateCycle', 'a cycle needs at least 3 edges, got %d' % k)
    if n < 6:
        raise InvalidInput('TooFewVertices',
            'a cycle of chords needs n >= 6, polygon has %d vertices' % n)
    if k > n // 2:
        raise SizeViolation('SizeOutOfRange',
            'a cycle in a %d-gon has at most %d edges, asked for %d' % (n, n // 2, k))
    embedding = Embedding.cycle(list(range(0, 2 * k, 2)), optimal_claimed=(k == n // 2))
    return _checked(polygon, embedding)


def embed_clique_convex(polygon, size=None):
    """
    K_size on the first size even vertices, K_{n // 2} by default. Its
    chords cross each other, which a (non-planar) polygon embedding
    allows; only planar=False is checked.
    """
    _require_convex(polygon)
    n = polygon.n
    if n < 4:
        raise InvalidInput('TooSmall', 'a clique of chords needs n >= 4, got %d' % n)
    if size is None:
        size = n // 2
    if size < 2:
        raise InvalidInput('TooSmall', 'a clique needs at least 2 nodes, got %d' % size)
    if size > n // 2:
        raise SizeViolation('SizeOutOfRange',
            'a clique of chords in a %d-gon has at most %d nodes, asked for %d'
            % (n, n // 2, size))
    embedding = Embedding.clique(list(range(0, 2 * size, 2)),
        optimal_claimed=(size == n // 2))
    return _checked(polygon, embedding, planar=False)
