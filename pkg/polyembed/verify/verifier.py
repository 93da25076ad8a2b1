"""
Strict validation of claimed embeddings.

Every constructive module and the oracle defer to verify_embedding. It
never raises on a bad embedding: it returns the list of violations, sorted
by the indices they name, and an empty list means the embedding is valid.
"""
import enum
import itertools
import logging
from collections import Counter, namedtuple

import networkx as nx

from polyembed.core.geometry import proper_intersect, collinear_overlap
from polyembed.core.visibility import ChordStatus, chord_status
from polyembed.embed.base import GraphKind

logger = logging.getLogger(__name__)


class ViolationKind(enum.Enum):
    MALFORMED = 'MalformedEmbedding'
    NOT_INJECTIVE = 'NotInjective'
    EDGE_IS_POLYGON_EDGE = 'EdgeIsPolygonEdge'
    CHORD_LEAVES_POLYGON = 'ChordLeavesPolygon'
    CHORD_THROUGH_VERTEX = 'ChordThroughVertex'
    CHORD_OVERLAPS_BOUNDARY = 'ChordOverlapsBoundary'
    GRAPH_EDGE_CROSSING = 'GraphEdgeCrossing'
    GRAPH_EDGE_OVERLAP = 'GraphEdgeOverlap'
    WRONG_DEGREE_SEQUENCE = 'WrongDegreeSequence'
    NOT_SINGLE_CYCLE = 'NotSingleCycle'
    NOT_SINGLE_PATH = 'NotSinglePath'
    NOT_CLIQUE = 'NotClique'


class Violation(namedtuple('Violation', ['kind', 'detail'])):
    """
    One failed rule. detail holds the vertex indices (or, for count
    mismatches, the observed counts) that reproduce the failure.
    """
    __slots__ = ()

    def __str__(self):
        return '%s(%s)' % (self.kind.value, ','.join(str(d) for d in self.detail))

    def to_dict(self):
        return {'kind': self.kind.value, 'detail': list(self.detail)}


_CHORD_VIOLATIONS = {
    ChordStatus.ADJACENT: ViolationKind.EDGE_IS_POLYGON_EDGE,
    ChordStatus.LEAVES_POLYGON: ViolationKind.CHORD_LEAVES_POLYGON,
    ChordStatus.THROUGH_VERTEX: ViolationKind.CHORD_THROUGH_VERTEX,
    ChordStatus.OVERLAPS_BOUNDARY: ViolationKind.CHORD_OVERLAPS_BOUNDARY,
}


def _canonical(violations):
    return sorted(set(violations), key=lambda v: (tuple(v.detail), v.kind.value))


def _normalized(edges):
    return [(min(u, v), max(u, v)) for u, v in edges]


def _malformed(embedding, n):
    violations = []
    image = set(embedding.mapping)
    for v in embedding.mapping:
        if not 0 <= v < n:
            violations.append(Violation(ViolationKind.MALFORMED, (v,)))
    for u, v in embedding.edges:
        if u == v:
            violations.append(Violation(ViolationKind.MALFORMED, (u, v)))
        for w in (u, v):
            if not 0 <= w < n or w not in image:
                violations.append(Violation(ViolationKind.MALFORMED, (u, v)))
    return violations


def _injectivity(embedding):
    counts = Counter(embedding.mapping)
    return [Violation(ViolationKind.NOT_INJECTIVE, (v,))
            for v, c in counts.items() if c > 1]


def _structure(embedding, spec):
    """
    Check that the edge multiset realizes the requested graph.
    """
    vertices = sorted(set(embedding.mapping))
    edges = _normalized(embedding.edges)
    multiplicity = Counter(edges)
    degree = Counter()
    for u, v in edges:
        degree[u] += 1
        degree[v] += 1

    if (spec.is_degenerate or
            len(embedding.mapping) != spec.node_count or
            len(edges) != spec.edge_count or
            any(c > 1 for c in multiplicity.values())):
        return [Violation(ViolationKind.WRONG_DEGREE_SEQUENCE,
            (len(embedding.mapping), len(edges)))]

    graph = nx.Graph()
    graph.add_nodes_from(vertices)
    graph.add_edges_from(edges)
    connected = nx.is_connected(graph)

    if spec.kind is GraphKind.PATH:
        ends = [v for v in vertices if degree[v] == 1]
        bad = [v for v in vertices if degree[v] not in (1, 2)]
        if bad or len(ends) != 2 or not connected:
            detail = tuple(bad) or tuple(ends) or tuple(vertices)
            return [Violation(ViolationKind.NOT_SINGLE_PATH, detail)]
    elif spec.kind is GraphKind.CYCLE:
        bad = [v for v in vertices if degree[v] != 2]
        if bad:
            return [Violation(ViolationKind.NOT_SINGLE_CYCLE, tuple(bad))]
        if not connected:
            roots = tuple(sorted(min(c) for c in nx.connected_components(graph)))
            return [Violation(ViolationKind.NOT_SINGLE_CYCLE, roots)]
    else:
        present = set(edges)
        return [Violation(ViolationKind.NOT_CLIQUE, pair)
                for pair in itertools.combinations(vertices, 2)
                if pair not in present]
    return []


def _claimed_edges(embedding, graph_edges):
    """
    Check that the graph edges, given in node indices and carried through
    the mapping, are exactly the drawn edges.
    """
    k = len(embedding.mapping)
    violations = []
    claimed = []
    for a, b in graph_edges:
        if not (0 <= a < k and 0 <= b < k):
            violations.append(Violation(ViolationKind.MALFORMED, (a, b)))
        else:
            claimed.append((embedding.mapping[a], embedding.mapping[b]))
    drawn = Counter(_normalized(embedding.edges))
    wanted = Counter(_normalized(claimed))
    for pair in sorted((drawn - wanted) + (wanted - drawn)):
        violations.append(Violation(ViolationKind.MALFORMED, pair))
    return violations


def _crossings(coords, edges):
    violations = []
    unique = sorted(set(_normalized(edges)))
    for (a, b), (c, d) in itertools.combinations(unique, 2):
        s1 = (coords[a], coords[b])
        s2 = (coords[c], coords[d])
        if proper_intersect(s1, s2):
            violations.append(Violation(ViolationKind.GRAPH_EDGE_CROSSING, (a, b, c, d)))
        elif collinear_overlap(s1, s2):
            violations.append(Violation(ViolationKind.GRAPH_EDGE_OVERLAP, (a, b, c, d)))
    return violations


def verify_embedding(polygon, embedding, spec, planar=True, graph_edges=None):
    """
    Check a claimed polygon embedding.

    Parameters
    ----------
    polygon (Polygon): A validated polygon.
    embedding (Embedding): Mapping plus vertex-index edges.
    spec (GraphSpec): The graph the embedding claims to draw.
    planar (bool): Also forbid crossings and overlaps between graph edges.
    graph_edges (list): Optional (a, b) node index pairs of the claimed
        graph; every one must map onto a drawn edge and vice versa.

    Returns
    -------
    violations (list): Sorted Violation records; empty iff valid.
    """
    claimed = [] if graph_edges is None else _claimed_edges(embedding, graph_edges)
    malformed = _malformed(embedding, polygon.n)
    if malformed:
        return _canonical(malformed + claimed)

    violations = _injectivity(embedding) + claimed
    for u, v in sorted(set(_normalized(embedding.edges))):
        status = chord_status(polygon, u, v)
        if status is not ChordStatus.CHORD:
            violations.append(Violation(_CHORD_VIOLATIONS[status], (u, v)))
    violations.extend(_structure(embedding, spec))
    if planar:
        violations.extend(_crossings(polygon.vertices, embedding.edges))
    violations = _canonical(violations)
    if violations:
        logger.debug('Embedding rejected: %s', ', '.join(str(v) for v in violations))
    return violations


def verify_pointset_embedding(points, embedding, spec, planar=True):
    """
    Same checks for a drawing on a bare point set: there is no polygon, so
    any segment between two distinct points is a legal edge.
    """
    malformed = _malformed(embedding, len(points))
    if malformed:
        return _canonical(malformed)
    violations = _injectivity(embedding)
    violations.extend(_structure(embedding, spec))
    if planar:
        violations.extend(_crossings(points, embedding.edges))
    return _canonical(violations)


def is_valid(polygon, embedding, spec, planar=True):
    return not verify_embedding(polygon, embedding, spec, planar)
