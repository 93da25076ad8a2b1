"""
Exhaustive search for the largest embeddable path, cycle and clique.

The searches are exponential and only meant for small polygons; every
entry point refuses polygons above its cap. Sequences are enumerated in
lexicographic order and the incumbent is only replaced by a strictly
larger solution, so the witness is the lexicographically smallest optimum
and does not depend on scheduling.
"""
import logging
from collections import namedtuple

import networkx as nx

from polyembed import config
from polyembed.core.errors import SizeViolation
from polyembed.core.geometry import proper_intersect
from polyembed.core.polygon import is_convex
from polyembed.core.visibility import visibility_graph
from polyembed.embed.base import Embedding, GraphKind
from polyembed.verify.verifier import verify_embedding

logger = logging.getLogger(__name__)


class OracleResult(namedtuple('OracleResult',
        ['size', 'witness', 'explored', 'cap_respected'])):
    """
    Parameters
    ----------
    size (int): Maximum edge count (clique: node count); 0 if nothing embeds.
    witness (Embedding): The canonical optimum; empty when size is 0.
    explored (int): Search tree nodes (clique: maximal cliques) visited.
    cap_respected (bool): Whether n was within the cap.
    """
    __slots__ = ()


def _check_cap(polygon, cap):
    if polygon.n > cap:
        raise SizeViolation('PolygonTooLarge',
            'n = %d exceeds the oracle cap of %d' % (polygon.n, cap))


class _ChordSearch(object):
    """
    Shared state of the path and cycle searches: the chord graph and, for
    every chord, the chords it properly crosses.
    """

    def __init__(self, polygon):
        self.polygon = polygon
        self.n = polygon.n
        self.graph = visibility_graph(polygon)
        self.chord_id = {}
        for c, (i, j) in enumerate(self.graph.chords):
            self.chord_id[(i, j)] = self.chord_id[(j, i)] = c
        segments = [(polygon[i], polygon[j]) for i, j in self.graph.chords]
        self.crosses = [[] for _ in segments]
        for a in range(len(segments)):
            for b in range(a + 1, len(segments)):
                if proper_intersect(segments[a], segments[b]):
                    self.crosses[a].append(b)
                    self.crosses[b].append(a)
        self.partners = [self.graph.chord_partners(i) for i in range(self.n)]
        # Number of chords in use that cross each chord
        self.blocked = [0] * len(segments)
        self.explored = 0

    def chord_degree(self, i):
        return len(self.partners[i])

    def free(self, u, v):
        return self.blocked[self.chord_id[(u, v)]] == 0

    def push(self, u, v):
        for c in self.crosses[self.chord_id[(u, v)]]:
            self.blocked[c] += 1

    def pop(self, u, v):
        for c in self.crosses[self.chord_id[(u, v)]]:
            self.blocked[c] -= 1


def _empty(kind, explored):
    return OracleResult(0, Embedding([], [], kind), explored, True)


def _cycle_search(polygon, required=()):
    search = _ChordSearch(polygon)
    n = polygon.n
    required = frozenset(required)
    eligible = [i for i in range(n) if search.chord_degree(i) >= 2]
    eligible_set = frozenset(eligible)
    if not required <= eligible_set:
        logger.debug('Required vertices %s cannot lie on any cycle',
            sorted(required - eligible_set))
        return None, 0
    if is_convex(polygon):
        bound = n // 2
    else:
        bound = min(n - 3, len(eligible))
    first_required = min(required) if required else n

    best = [None]

    def extend(path, on_path, remaining):
        search.explored += 1
        last = path[-1]
        start = path[0]
        if (len(path) >= 3 and path[1] < last and start in search.partners[last]
                and search.free(last, start) and required <= on_path):
            if best[0] is None or len(path) > len(best[0]):
                best[0] = list(path)
                if len(path) >= bound:
                    return True
        if best[0] is not None and len(path) + remaining <= len(best[0]):
            return False
        for v in search.partners[last]:
            if v <= start or v in on_path or v not in eligible_set:
                continue
            if not search.free(last, v):
                continue
            search.push(last, v)
            path.append(v)
            on_path.add(v)
            done = extend(path, on_path, remaining - 1)
            on_path.discard(v)
            path.pop()
            search.pop(last, v)
            if done:
                return True
        return False

    for s in eligible:
        if s > first_required:
            break
        remaining = sum(1 for v in eligible if v > s)
        if best[0] is not None and 1 + remaining <= len(best[0]):
            break
        if extend([s], {s}, remaining):
            break
    return best[0], search.explored


def _verified(polygon, embedding, planar=True):
    violations = verify_embedding(polygon, embedding, embedding.graph_spec(), planar)
    assert not violations, 'oracle witness rejected: %s' % ', '.join(map(str, violations))
    return embedding


def oracle_max_cycle(polygon, cap=None):
    """
    Largest planar polygon-embedded cycle, by backtracking over chord
    sequences that start at their smallest vertex and whose second vertex
    is smaller than their last.
    """
    if cap is None:
        cap = config.ORACLE_CYCLE_CAP
    _check_cap(polygon, cap)
    cycle, explored = _cycle_search(polygon)
    logger.debug('Cycle search on n=%d explored %d nodes', polygon.n, explored)
    if cycle is None:
        return _empty(GraphKind.CYCLE, explored)
    witness = _verified(polygon, Embedding.cycle(cycle, optimal_claimed=True))
    return OracleResult(len(cycle), witness, explored, True)


def oracle_max_cycle_containing(polygon, required, cap=None):
    """
    Largest planar embedded cycle through every vertex in required; size 0
    when no such cycle exists.
    """
    if cap is None:
        cap = config.ORACLE_CYCLE_CAP
    _check_cap(polygon, cap)
    for v in required:
        polygon.check_index(v)
    cycle, explored = _cycle_search(polygon, required)
    if cycle is None:
        return _empty(GraphKind.CYCLE, explored)
    witness = _verified(polygon, Embedding.cycle(cycle, optimal_claimed=True))
    return OracleResult(len(cycle), witness, explored, True)


def oracle_max_path(polygon, cap=None):
    """
    Largest planar embedded path, counted in edges. A path and its reverse
    are the same; only sequences with first vertex < last are recorded.
    """
    if cap is None:
        cap = config.ORACLE_PATH_CAP
    _check_cap(polygon, cap)
    search = _ChordSearch(polygon)
    n = polygon.n
    usable = [i for i in range(n) if search.chord_degree(i) >= 1]
    bound = n - 3
    best = [None]

    def extend(path, on_path, remaining):
        search.explored += 1
        edges = len(path) - 1
        if edges >= 1 and path[0] < path[-1]:
            if best[0] is None or edges > len(best[0]) - 1:
                best[0] = list(path)
                if edges >= bound:
                    return True
        if best[0] is not None and edges + remaining <= len(best[0]) - 1:
            return False
        last = path[-1]
        for v in search.partners[last]:
            if v in on_path or not search.free(last, v):
                continue
            search.push(last, v)
            path.append(v)
            on_path.add(v)
            done = extend(path, on_path, remaining - 1)
            on_path.discard(v)
            path.pop()
            search.pop(last, v)
            if done:
                return True
        return False

    for s in usable:
        if extend([s], {s}, len(usable) - 1):
            break
    logger.debug('Path search on n=%d explored %d nodes', n, search.explored)
    if best[0] is None:
        return _empty(GraphKind.PATH, search.explored)
    witness = _verified(polygon, Embedding.path(best[0], optimal_claimed=True))
    return OracleResult(len(best[0]) - 1, witness, search.explored, True)


def oracle_max_clique(polygon, cap=None):
    """
    Largest vertex set whose members are pairwise joined by interior
    chords. Chords may cross; only chord validity is required.
    """
    if cap is None:
        cap = config.ORACLE_CLIQUE_CAP
    _check_cap(polygon, cap)
    graph = visibility_graph(polygon)
    chord_graph = nx.Graph()
    chord_graph.add_nodes_from(range(polygon.n))
    chord_graph.add_edges_from(graph.chords)
    best = None
    explored = 0
    for clique in nx.find_cliques(chord_graph):
        explored += 1
        clique = sorted(clique)
        if len(clique) < 2:
            continue
        if (best is None or len(clique) > len(best) or
                (len(clique) == len(best) and clique < best)):
            best = clique
    if best is None:
        return _empty(GraphKind.CLIQUE, explored)
    witness = _verified(polygon, Embedding.clique(best, optimal_claimed=True), planar=False)
    return OracleResult(len(best), witness, explored, True)
