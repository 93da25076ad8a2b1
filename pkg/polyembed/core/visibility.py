"""
Vertex-to-vertex visibility inside a simple polygon.

Visibility is conservative: a segment that touches a vertex other than its
endpoints, or runs along a polygon edge, is not a chord. The verifier uses
chord_status as well, so both modules agree on every pair.
"""
import enum
import logging

import networkx as nx
import numpy as np

from polyembed.core.geometry import (cross, on_segment, proper_intersect,
    collinear_overlap)
from polyembed.core.polygon import classify_vertices

logger = logging.getLogger(__name__)

# How condition 2 of the isolated-vertex rule reads "both members ... be
# adjacent": the two extra visible vertices are adjacent to each other.
ISOLATION_READING = 'extra pair adjacent to each other'


class ChordStatus(enum.Enum):
    CHORD = 'Chord'
    ADJACENT = 'Adjacent'
    THROUGH_VERTEX = 'ThroughVertex'
    OVERLAPS_BOUNDARY = 'OverlapsBoundary'
    LEAVES_POLYGON = 'LeavesPolygon'


def _in_cone(polygon, i, b):
    """
    True iff the direction from vertex i towards point b points strictly
    into the polygon interior near vertex i.
    """
    n = polygon.n
    a = polygon[i]
    a0 = polygon[(i - 1) % n]
    a1 = polygon[(i + 1) % n]
    if cross(a, a1, a0) >= 0:
        # Convex corner: b strictly between the two incident edges
        return cross(a, b, a0) > 0 and cross(b, a, a1) > 0
    # Reflex corner: b anywhere but the closed exterior wedge
    return not (cross(a, b, a1) >= 0 and cross(b, a, a0) >= 0)


def chord_status(polygon, i, j):
    """
    Classify the segment p_i p_j against the polygon.

    Parameters
    ----------
    polygon (Polygon): A validated polygon.
    i (int): First vertex index.
    j (int): Second vertex index, different from i.

    Returns
    -------
    status (ChordStatus): CHORD iff the open segment lies strictly inside
        the polygon; otherwise the first reason it does not.
    """
    polygon.check_index(i)
    polygon.check_index(j)
    assert i != j, 'a chord needs two distinct vertices'
    if polygon.is_adjacent(i, j):
        return ChordStatus.ADJACENT
    n = polygon.n
    seg = (polygon[i], polygon[j])
    for k in range(n):
        if k != i and k != j and on_segment(polygon[k], seg):
            return ChordStatus.THROUGH_VERTEX
    for k in range(n):
        edge = polygon.edge(k)
        if collinear_overlap(seg, edge):
            return ChordStatus.OVERLAPS_BOUNDARY
        if proper_intersect(seg, edge):
            return ChordStatus.LEAVES_POLYGON
    if not (_in_cone(polygon, i, polygon[j]) and _in_cone(polygon, j, polygon[i])):
        return ChordStatus.LEAVES_POLYGON
    return ChordStatus.CHORD


def is_interior_chord(polygon, i, j):
    return chord_status(polygon, i, j) is ChordStatus.CHORD


def visible_set(polygon, i):
    """
    Vertex i, both of its neighbours, and every vertex joined to i by an
    interior chord.
    """
    polygon.check_index(i)
    n = polygon.n
    visible = {(i - 1) % n, i, (i + 1) % n}
    for j in range(n):
        if j not in visible and is_interior_chord(polygon, i, j):
            visible.add(j)
    return visible


class VisibilityGraph(object):
    """
    Symmetric visibility relation over the vertices of a polygon.

    Parameters
    ----------
    n (int): Number of polygon vertices.
    adjacency (np.ndarray): n x n boolean matrix; True on the diagonal, for
        polygon neighbours and for chord pairs.
    chords (list): Sorted (i, j) pairs with i < j that are interior chords.
    """

    def __init__(self, n, adjacency, chords):
        self.n = n
        self.adjacency = adjacency
        self.chords = chords
        self._chord_set = frozenset(chords)
        assert np.array_equal(adjacency, adjacency.T)

    def visible_set(self, i):
        return set(np.flatnonzero(self.adjacency[i]).tolist())

    def is_chord(self, i, j):
        return (min(i, j), max(i, j)) in self._chord_set

    def chord_partners(self, i):
        """
        Vertices joined to i by an interior chord, in index order.
        """
        return sorted(j for j in self.visible_set(i)
                      if j != i and self.is_chord(i, j))

    def to_networkx(self):
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        for i in range(self.n):
            graph.add_edge(i, (i + 1) % self.n, kind='edge')
        graph.add_edges_from(self.chords, kind='chord')
        return graph


def visibility_graph(polygon):
    """
    Naive construction: one O(n) chord test per vertex pair, O(n^3) overall.
    """
    n = polygon.n
    adjacency = np.zeros((n, n), dtype=bool)
    chords = []
    for i in range(n):
        adjacency[i, i] = True
        adjacency[i, (i + 1) % n] = True
        adjacency[(i + 1) % n, i] = True
    for i in range(n):
        for j in range(i + 2, n):
            if polygon.is_adjacent(i, j):
                continue
            if chord_status(polygon, i, j) is ChordStatus.CHORD:
                adjacency[i, j] = adjacency[j, i] = True
                chords.append((i, j))
    return VisibilityGraph(n, adjacency, chords)


def isolation_reasons(polygon, graph=None):
    """
    Map every isolated vertex to the rule that isolates it: 'fewer-than-five'
    when the visible set has fewer than five members, 'adjacent-pair' when
    it has five and the two chord partners are adjacent to each other.
    """
    if graph is None:
        graph = visibility_graph(polygon)
    reasons = {}
    for i in range(polygon.n):
        visible = graph.visible_set(i)
        if len(visible) < 5:
            reasons[i] = 'fewer-than-five'
        elif len(visible) == 5:
            extra = sorted(visible - {polygon.prev(i), i, polygon.next(i)})
            if polygon.is_adjacent(extra[0], extra[1]):
                reasons[i] = 'adjacent-pair'
    return reasons


def isolated_vertices(polygon, graph=None):
    return set(isolation_reasons(polygon, graph))


def classify_with_isolation(polygon, graph=None):
    """
    classify_vertices with the isolated flags filled in.
    """
    return classify_vertices(polygon).with_isolated(isolated_vertices(polygon, graph))


def triangulation_chords(polygon, graph=None):
    """
    A maximal set of pairwise non-crossing interior chords, chosen greedily
    in lexicographic order. Any such set triangulates the polygon, so it
    always holds exactly n - 3 chords.
    """
    if graph is None:
        graph = visibility_graph(polygon)
    chosen = []
    for i, j in graph.chords:
        seg = (polygon[i], polygon[j])
        if all(not proper_intersect(seg, (polygon[a], polygon[b])) for a, b in chosen):
            chosen.append((i, j))
    if len(chosen) != max(polygon.n - 3, 0):
        logger.warning('Greedy triangulation found %d chords for n=%d',
            len(chosen), polygon.n)
    return chosen
