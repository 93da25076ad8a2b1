"""
Straight-line path and cycle drawings on a bare point set.

Both constructions sort the points by x (ties by ascending y) and are
dominated by that sort. The cycle pairs consecutive points of the sorted
list, sends the lower point of every pair to a lower chain and the upper
one to an upper chain, and closes the two chains at both ends.
"""
import logging

import numpy as np

from polyembed import config
from polyembed.core.errors import InvalidInput
from polyembed.core.geometry import check_point, cross
from polyembed.embed.base import Embedding

logger = logging.getLogger(__name__)


class PointSet(object):
    """
    Distinct integer points, kept in input order. Embedding mappings refer
    to positions in this order.

    Parameters
    ----------
    points (list): (x, y) pairs.
    """

    def __init__(self, points):
        self.points = tuple(check_point(p) for p in points)
        seen = {}
        for k, p in enumerate(self.points):
            if p in seen:
                raise InvalidInput('DuplicatePoint',
                    'points %d and %d are both %r' % (seen[p], k, tuple(p)))
            seen[p] = k

    @property
    def n(self):
        return len(self.points)

    def __len__(self):
        return len(self.points)

    def __getitem__(self, k):
        return self.points[k]

    def sorted_order(self):
        """
        Indices of the points sorted by x, then by y.
        """
        xs = np.array([p.x for p in self.points], dtype=np.int64)
        ys = np.array([p.y for p in self.points], dtype=np.int64)
        return np.lexsort((ys, xs)).tolist()


def _as_point_set(points):
    if isinstance(points, PointSet):
        return points
    return PointSet(points)


def check_general_position(points):
    """
    Raise CollinearTriple if any three points lie on one line.

    For every point, the directions to all other points are reduced by
    their gcd and sign-normalized; a repeated direction means a collinear
    triple. O(n^2 log n) with numpy.
    """
    coords = np.array([tuple(p) for p in points], dtype=np.int64)
    n = len(coords)
    for i in range(n - 2):
        d = coords[i + 1:] - coords[i]
        g = np.gcd(d[:, 0], d[:, 1])
        d = d // g[:, None]
        flip = (d[:, 0] < 0) | ((d[:, 0] == 0) & (d[:, 1] < 0))
        d[flip] *= -1
        _, first, counts = np.unique(d, axis=0, return_index=True,
            return_counts=True)
        if (counts > 1).any():
            k = int(first[np.argmax(counts > 1)])
            duplicate = d[k]
            others = np.flatnonzero((d == duplicate).all(axis=1))
            raise InvalidInput('CollinearTriple',
                'points %d, %d and %d are collinear' %
                (i, i + 1 + int(others[0]), i + 1 + int(others[1])))


def embed_path_pointset(points):
    """
    Path through every point in x-then-y order. A sequence monotone in
    that order never crosses itself.

    Parameters
    ----------
    points (PointSet or list): At least two distinct points.

    Returns
    -------
    embedding (Embedding): Path of n - 1 edges; mapping[k] is the input
        position of the k-th point along the path.
    """
    point_set = _as_point_set(points)
    if point_set.n < 2:
        raise InvalidInput('TooFewPoints', 'a path needs at least 2 points, got %d'
            % point_set.n)
    return Embedding.path(point_set.sorted_order())


def _pair_chains(order, points):
    """
    Lower and upper chains from consecutive disjoint pairs of the sorted
    order. An odd last point goes to the lower chain.
    """
    lower, upper = [], []
    for a, b in zip(order[0::2], order[1::2]):
        pa, pb = points[a], points[b]
        if (pa.y, pa.x) <= (pb.y, pb.x):
            lower.append(a)
            upper.append(b)
        else:
            lower.append(b)
            upper.append(a)
    if len(order) % 2:
        lower.append(order[-1])
    return lower, upper


def _split_chains(order, points):
    """
    Lower and upper chains split by the line through the first and the
    last point of the sorted order.
    """
    first, last = order[0], order[-1]
    a, b = points[first], points[last]
    lower, upper = [first], [first]
    for k in order[1:-1]:
        if cross(a, b, points[k]) < 0:
            lower.append(k)
        else:
            upper.append(k)
    lower.append(last)
    upper.append(last)
    return lower, upper


def _monotone_boundary(cycle, order):
    """
    Split a cycle into its two walks from the first to the last point of
    the sorted order. Returns None when either walk is not monotone in
    that order.
    """
    rank = {k: r for r, k in enumerate(order)}
    start = cycle.index(order[0])
    walk = cycle[start:] + cycle[:start]
    end = walk.index(order[-1])
    one = walk[:end + 1]
    other = [walk[0]] + walk[end:][::-1]
    for chain in (one, other):
        if any(rank[u] >= rank[v] for u, v in zip(chain[:-1], chain[1:])):
            return None
    return one, other


def _side_signs(chain, against, rank, points):
    """
    Signs of every inner vertex of chain with respect to the segment of
    the other chain that spans it in the sorted order.
    """
    signs = set()
    j = 0
    for k in chain[1:-1]:
        while rank[against[j + 1]] < rank[k]:
            j += 1
        value = cross(points[against[j]], points[against[j + 1]], points[k])
        signs.add((value > 0) - (value < 0))
    return signs


def is_simple_monotone_cycle(cycle, order, points):
    """
    Exact O(n) simplicity test for a cycle made of two walks that are
    monotone in the sorted order: every inner vertex of one walk must lie
    strictly on the same side of the other walk.
    """
    chains = _monotone_boundary(cycle, order)
    if chains is None:
        return False
    one, other = chains
    rank = {k: r for r, k in enumerate(order)}
    s1 = _side_signs(one, other, rank, points)
    s2 = _side_signs(other, one, rank, points)
    if 0 in s1 or 0 in s2 or len(s1) > 1 or len(s2) > 1:
        return False
    return not s1 or not s2 or s1 != s2


def embed_cycle_pointset(points, check_collinear=None):
    """
    Planar cycle through every point.

    The paired lower/upper chain construction is tried first. When its
    chains cross, the cycle is rebuilt from the split by the line joining
    the extreme points, which is always simple in general position; the
    embedding then carries a diagnostic saying so.

    Parameters
    ----------
    points (PointSet or list): At least four points, no three collinear.
    check_collinear (bool): Run the general-position guard; by default it
        runs up to config.GENERAL_POSITION_CHECK_LIMIT points.

    Returns
    -------
    embedding (Embedding): Cycle of n edges over input positions.
    """
    point_set = _as_point_set(points)
    n = point_set.n
    if n < 4:
        raise InvalidInput('TooFewPoints', 'a cycle needs at least 4 points, got %d' % n)
    if check_collinear is None:
        check_collinear = n <= config.GENERAL_POSITION_CHECK_LIMIT
    if check_collinear:
        check_general_position(point_set.points)
    else:
        logger.debug('Skipping general-position check for %d points', n)

    order = point_set.sorted_order()
    lower, upper = _pair_chains(order, point_set.points)
    cycle = lower + upper[::-1]
    if is_simple_monotone_cycle(cycle, order, point_set.points):
        return Embedding.cycle(cycle)

    logger.info('Paired chains cross for %d points; splitting by the extreme line', n)
    lower, upper = _split_chains(order, point_set.points)
    cycle = lower + upper[-2:0:-1]
    return Embedding.cycle(cycle,
        diagnostics=['paired chains crossed; rebuilt by the extreme-point split'])
