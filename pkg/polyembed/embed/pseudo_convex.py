"""
Large planar cycles in pseudo-convex polygons.

The construction keeps every non-isolated reflex vertex and fills the runs
of vertices between consecutive kept reflex vertices with alternating
non-isolated vertices, so no two selected vertices are polygon-adjacent.
Consecutive selected vertices, in counter-clockwise order, are joined by
chords. Failed chords are repaired in a fixed order:

  1. restart the selection of the offending run one vertex later (once
     per run);
  2. drop the convex endpoint of the failed pair with the smaller index;
  3. when both endpoints are reflex, drop the smaller one and record it.

The result must pass full planar verification. Optimality is claimed only
when the size reaches n // 2 or a small-polygon exhaustive search agrees.
"""
import logging

from polyembed import config
from polyembed.core.errors import InvalidInput, NoCycle
from polyembed.core.polygon import classify_vertices, is_pseudo_convex
from polyembed.core.visibility import isolated_vertices, visibility_graph
from polyembed.embed.base import Embedding
from polyembed.oracle.search import oracle_max_cycle
from polyembed.verify.verifier import ViolationKind, verify_embedding

logger = logging.getLogger(__name__)


class _Run(object):
    """
    The vertices strictly between two kept reflex vertices, in CCW order.
    With no reflex anchor the run is the whole boundary and wraps onto
    itself.
    """

    def __init__(self, start, end, members):
        self.start = start
        self.end = end
        self.members = members
        self.skip = 0

    def select(self, n, eligible):
        chosen = []
        last = self.start
        skip = self.skip
        for v in self.members:
            if v not in eligible:
                continue
            if last is not None and (v - last) % n < 2:
                continue
            if self.end is not None and (self.end - v) % n < 2:
                continue
            if skip:
                skip -= 1
                continue
            chosen.append(v)
            last = v
        if self.start is None and len(chosen) > 1 and (chosen[0] - chosen[-1]) % n < 2:
            chosen.pop()
        return chosen


def _runs(n, anchors):
    if not anchors:
        return [_Run(None, None, list(range(n)))]
    runs = []
    for a, b in zip(anchors, anchors[1:] + anchors[:1]):
        length = (b - a - 1) % n
        runs.append(_Run(a, b, [(a + 1 + t) % n for t in range(length)]))
    return runs


def _first_failed_pair(cycle, graph):
    for u, v in zip(cycle, cycle[1:] + cycle[:1]):
        if not graph.is_chord(u, v):
            return u, v
    return None


def _build(polygon, graph, isolated, reflex, diagnostics):
    """
    Select, chord-check and repair; returns a verified cycle embedding.
    """
    n = polygon.n
    anchors = sorted(r for r in reflex if r not in isolated)
    runs = _runs(n, anchors)
    run_of = {}
    for run in runs:
        for v in run.members:
            run_of[v] = run
    flipped = set()
    dropped = set()
    reflex = set(reflex)

    while True:
        kept = [r for r in anchors if r not in dropped]
        eligible = set(range(n)) - isolated - dropped - reflex
        cycle = sorted(set(kept).union(*[run.select(n, eligible) for run in runs]))
        if len(cycle) < 3:
            raise NoCycle('only %d connectable non-isolated vertices %s'
                % (len(cycle), cycle))

        failed = _first_failed_pair(cycle, graph)
        if failed is None:
            embedding = Embedding.cycle(cycle)
            violations = verify_embedding(polygon, embedding, embedding.graph_spec())
            if not violations:
                return embedding
            crossing = [v for v in violations if v.kind in
                (ViolationKind.GRAPH_EDGE_CROSSING, ViolationKind.GRAPH_EDGE_OVERLAP)]
            assert crossing, 'unexpected violations: %s' % ', '.join(map(str, violations))
            failed = crossing[0].detail

        convex = sorted(v for v in failed if v not in reflex)
        if convex:
            run = run_of[convex[0]]
            if id(run) not in flipped:
                flipped.add(id(run))
                run.skip = 1
                logger.debug('Chord %s failed; shifting run after %s', failed, run.start)
                continue
            dropped.add(convex[0])
            logger.debug('Chord %s failed; dropping convex vertex %d', failed, convex[0])
        else:
            r = min(failed)
            dropped.add(r)
            diagnostics.append('reflex vertex %d skipped' % r)
            logger.info('Chord %s failed between reflex vertices; skipping %d', failed, r)


def promote_reflex_vertices(polygon, embedding, graph=None, isolated=None):
    """
    Swap unused non-isolated reflex vertices onto a cycle.

    For every reflex vertex r that is not on the cycle but has a polygon
    neighbour on it, that neighbour is replaced by r when the resulting
    cycle still verifies.

    Parameters
    ----------
    polygon (Polygon): The polygon the cycle is embedded in.
    embedding (Embedding): A verified cycle embedding.

    Returns
    -------
    embedding (Embedding): The cycle with as many reflex vertices promoted
        as the swaps allow; the input itself when none applies.
    """
    if graph is None:
        graph = visibility_graph(polygon)
    if isolated is None:
        isolated = isolated_vertices(polygon, graph)
    cycle = list(embedding.mapping)
    for r in classify_vertices(polygon).reflex:
        if r in cycle or r in isolated:
            continue
        for neighbour in (polygon.prev(r), polygon.next(r)):
            if neighbour not in cycle:
                continue
            candidate = [r if v == neighbour else v for v in cycle]
            trial = Embedding.cycle(candidate)
            if not verify_embedding(polygon, trial, trial.graph_spec()):
                logger.debug('Promoted reflex vertex %d in place of %d', r, neighbour)
                cycle = candidate
                break
    if cycle == list(embedding.mapping):
        return embedding
    return Embedding.cycle(cycle, optimal_claimed=embedding.optimal_claimed,
        diagnostics=embedding.diagnostics)


def embed_max_cycle_pseudo_convex(polygon, confirm=True):
    """
    Planar cycle through every non-isolated reflex vertex the repairs
    allow.

    Parameters
    ----------
    polygon (Polygon): A pseudo-convex polygon with n >= 6.
    confirm (bool): Ask the exhaustive search whether the size is optimal
        when n <= config.ORACLE_CONFIRM_CAP.

    Returns
    -------
    embedding (Embedding): The verified cycle. Its diagnostics name every
        non-isolated reflex vertex left off the cycle.
    """
    if not is_pseudo_convex(polygon):
        raise InvalidInput('NotPseudoConvex', 'polygon has adjacent reflex vertices')
    n = polygon.n
    if n < 6:
        raise InvalidInput('TooFewVertices',
            'a cycle of chords needs n >= 6, polygon has %d vertices' % n)

    graph = visibility_graph(polygon)
    isolated = isolated_vertices(polygon, graph)
    reflex = classify_vertices(polygon).reflex
    diagnostics = []
    for r in reflex:
        if r in isolated:
            logger.warning('Reflex vertex %d is isolated in a pseudo-convex polygon', r)
            diagnostics.append('reflex vertex %d is isolated' % r)

    embedding = _build(polygon, graph, isolated, reflex, diagnostics)
    embedding = promote_reflex_vertices(polygon, embedding, graph, isolated)
    cycle = embedding.mapping
    for r in reflex:
        if r not in isolated and r not in cycle:
            note = 'reflex vertex %d skipped' % r
            if note not in diagnostics:
                diagnostics.append(note)

    size = len(cycle)
    optimal = size == n // 2
    if not optimal and confirm and n <= config.ORACLE_CONFIRM_CAP:
        best = oracle_max_cycle(polygon).size
        optimal = size == best
        if not optimal:
            diagnostics.append('exhaustive search found a cycle of %d edges' % best)
    elif not optimal:
        diagnostics.append('optimality not confirmed')

    result = Embedding.cycle(list(cycle), optimal_claimed=optimal, diagnostics=diagnostics)
    violations = verify_embedding(polygon, result, result.graph_spec())
    assert not violations, 'cycle rejected: %s' % ', '.join(map(str, violations))
    return result
