"""
Text and JSON formats.

Polygons and point sets are plain text, one "x y" pair per line; '#'
starts a comment and blank lines are skipped. Embeddings are JSON with
sorted keys so identical inputs always give identical bytes.
"""
import json
import logging

from polyembed.core.errors import InvalidInput, IoFailure
from polyembed.core.geometry import Point, check_point
from polyembed.core.polygon import validate_polygon
from polyembed.embed.base import Embedding, GraphKind, GraphSpec

logger = logging.getLogger(__name__)


def parse_points(text):
    points = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split('#', 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise InvalidInput('ParseError',
                'line %d: expected "x y", got %r' % (lineno, line))
        try:
            x, y = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise InvalidInput('ParseError',
                'line %d: coordinates must be integers, got %r' % (lineno, line))
        points.append(check_point(Point(x, y)))
    return points


def _read_text(path):
    try:
        with open(path, 'r') as f:
            return f.read()
    except (IOError, OSError) as e:
        raise IoFailure('cannot read %s: %s' % (path, e))


def read_points(path):
    return parse_points(_read_text(path))


def read_polygon(path, normalize=False):
    return validate_polygon(read_points(path), normalize=normalize)


def format_points(points, header=None):
    lines = [] if header is None else [header]
    lines.extend('%d %d' % (p[0], p[1]) for p in points)
    return '\n'.join(lines) + '\n'


def write_text(path, text):
    try:
        with open(path, 'w') as f:
            f.write(text)
    except (IOError, OSError) as e:
        raise IoFailure('cannot write %s: %s' % (path, e))


def write_points(path, points, header=None):
    write_text(path, format_points(points, header))


def embedding_to_dict(polygon, embedding, vertices_key='polygon'):
    """
    Schema: polygon (vertex list), graph {kind, nodes, edges} in node
    indices, mapping (node -> vertex index), edges (vertex index pairs) and
    meta {optimal_claimed, diagnostics}. Point-set drawings store their
    points under vertices_key='points'.
    """
    graph_edges = embedding.graph_edges()
    return {
        vertices_key: [[p[0], p[1]] for p in polygon],
        'graph': {
            'kind': embedding.kind.value,
            'nodes': len(embedding.mapping),
            'edges': None if graph_edges is None else [list(e) for e in graph_edges],
        },
        'mapping': list(embedding.mapping),
        'edges': [list(e) for e in embedding.edges],
        'meta': {
            'optimal_claimed': embedding.optimal_claimed,
            'diagnostics': list(embedding.diagnostics),
        },
    }


def embedding_from_dict(data):
    """
    Inverse of embedding_to_dict; returns (vertices, embedding). The vertex
    list is returned raw so the caller decides how to validate it.
    """
    try:
        meta = data.get('meta', {})
        embedding = Embedding(
            data['mapping'],
            [tuple(e) for e in data['edges']],
            GraphKind(data['graph']['kind']),
            optimal_claimed=meta.get('optimal_claimed', False),
            diagnostics=meta.get('diagnostics', []))
        vertices = [tuple(p) for p in data.get('polygon', data.get('points', []))]
    except (AttributeError, KeyError, TypeError, ValueError) as e:
        raise InvalidInput('ParseError', 'malformed embedding JSON: %r' % (e,))
    return vertices, embedding


def claimed_graph_from_dict(data):
    """
    The graph block of an embedding file: what the drawing claims to be.

    Returns
    -------
    spec (GraphSpec): Kind and size from graph.kind and graph.nodes, built
        without the minimum-size guard.
    graph_edges (list): (a, b) node index pairs, None when the file has
        no node-level edge list.
    """
    try:
        graph = data['graph']
        kind = GraphKind(graph['kind'])
        nodes = graph['nodes']
        if isinstance(nodes, bool) or not isinstance(nodes, int):
            raise TypeError('graph.nodes must be an integer, got %r' % (nodes,))
        graph_edges = graph.get('edges')
        if graph_edges is not None:
            graph_edges = [(int(a), int(b)) for a, b in graph_edges]
    except (AttributeError, KeyError, TypeError, ValueError) as e:
        raise InvalidInput('ParseError', 'malformed graph block: %r' % (e,))
    size = nodes - 1 if kind is GraphKind.PATH else nodes
    return GraphSpec(kind, size, strict=False), graph_edges


def dump_json(obj):
    return json.dumps(obj, sort_keys=True, indent=2) + '\n'


def read_json(path):
    try:
        return json.loads(_read_text(path))
    except ValueError as e:
        raise InvalidInput('ParseError', 'invalid JSON in %s: %s' % (path, e))
