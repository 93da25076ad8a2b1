"""
Command line front end.

stdout carries only machine output (JSON or polygon text); logs and
errors go to stderr. Exit codes: 0 success, 1 failed verification or no
cycle, 2 invalid input or usage, 3 size or cap violation.
"""
import argparse
import logging
import sys

from polyembed import config
from polyembed.core.errors import InvalidInput, PolyEmbedError
from polyembed.core.polygon import (classify_vertices, is_convex,
    is_pseudo_convex, u_turn_edges, validate_polygon)
from polyembed.core.visibility import (ISOLATION_READING, isolation_reasons,
    triangulation_chords, visibility_graph)
from polyembed.embed.convex import (embed_clique_convex, embed_cycle_convex,
    embed_path_convex)
from polyembed.embed.pointset import (PointSet, embed_cycle_pointset,
    embed_path_pointset)
from polyembed.embed.pseudo_convex import embed_max_cycle_pseudo_convex
from polyembed.experiments.compare import compare
from polyembed.generators.fixtures import fixture
from polyembed.generators.polygons import GenConfig, generate
from polyembed.misc.io import (claimed_graph_from_dict, dump_json, embedding_from_dict,
    embedding_to_dict, format_points, read_json, read_points, read_polygon)
from polyembed.misc.log_utils import setup_logging
from polyembed.misc.svg import render_svg
from polyembed.oracle.search import (oracle_max_clique, oracle_max_cycle,
    oracle_max_cycle_containing, oracle_max_path)
from polyembed.verify.verifier import verify_embedding

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID = 2


def load_polygon(arg, normalize=False):
    """
    '@NAME' loads a fixture, anything else is a polygon file.
    """
    if arg.startswith('@'):
        return fixture(arg[1:])
    return read_polygon(arg, normalize=normalize)


def _write(text):
    sys.stdout.write(text)
    sys.stdout.flush()


def cmd_analyze(args):
    polygon = load_polygon(args.polygon, args.normalize)
    graph = visibility_graph(polygon)
    reasons = isolation_reasons(polygon, graph)
    classification = classify_vertices(polygon).with_isolated(reasons)
    degrees = graph.adjacency.sum(axis=1) - 1
    _write(dump_json({
        'n': polygon.n,
        'convex': is_convex(polygon),
        'pseudo_convex': is_pseudo_convex(polygon),
        'reflex': classification.reflex,
        'u_turn': sorted(classification.u_turn),
        'u_turn_edges': sorted(list(e) for e in u_turn_edges(polygon)),
        'isolated': sorted(classification.isolated),
        'isolation_reasons': {str(k): v for k, v in sorted(reasons.items())},
        'isolation_reading': ISOLATION_READING,
        'chords': [list(c) for c in graph.chords],
        'visibility_degree': [int(d) for d in degrees],
        'max_noncrossing_chords': len(triangulation_chords(polygon, graph)),
    }))
    return EXIT_OK


def cmd_embed(args):
    polygon = load_polygon(args.polygon, args.normalize)
    convex = is_convex(polygon)
    if args.graph == 'path':
        size = args.size if args.size is not None else polygon.n - 3
        embedding = embed_path_convex(polygon, size)
    elif args.graph == 'clique':
        embedding = embed_clique_convex(polygon, args.size)
    elif convex:
        size = args.size if args.size is not None else polygon.n // 2
        embedding = embed_cycle_convex(polygon, size)
    else:
        if args.size is not None:
            logger.warning('--size is ignored for non-convex polygons')
        embedding = embed_max_cycle_pseudo_convex(polygon)
    if args.svg:
        render_svg(polygon, embedding, args.svg)
    _write(dump_json(embedding_to_dict(polygon, embedding)))
    return EXIT_OK


def cmd_embed_points(args):
    points = PointSet(read_points(args.points))
    if args.graph == 'path':
        embedding = embed_path_pointset(points)
    else:
        embedding = embed_cycle_pointset(points)
    _write(dump_json(embedding_to_dict(points.points, embedding, vertices_key='points')))
    return EXIT_OK


def cmd_verify(args):
    polygon = load_polygon(args.polygon, args.normalize)
    data = read_json(args.embedding)
    vertices, embedding = embedding_from_dict(data)
    spec, graph_edges = claimed_graph_from_dict(data)
    if vertices and validate_polygon(vertices, normalize=args.normalize) != polygon:
        logger.warning('Embedding file was made for a different polygon')
    violations = verify_embedding(polygon, embedding, spec, planar=args.planar,
        graph_edges=graph_edges)
    _write(dump_json({
        'ok': not violations,
        'violations': [v.to_dict() for v in violations],
    }))
    for v in violations:
        logger.info('Violation %s', v)
    return EXIT_OK if not violations else EXIT_FAILED


def cmd_oracle(args):
    polygon = load_polygon(args.polygon, args.normalize)
    if args.require_reflex and args.graph != 'cycle':
        raise InvalidInput('ParseError', '--require-reflex only applies to --graph cycle')
    if args.graph == 'path':
        result = oracle_max_path(polygon, args.cap)
    elif args.graph == 'clique':
        result = oracle_max_clique(polygon, args.cap)
    elif args.require_reflex:
        result = oracle_max_cycle_containing(polygon,
            classify_vertices(polygon).reflex, args.cap)
    else:
        result = oracle_max_cycle(polygon, args.cap)
    _write(dump_json({
        'graph': args.graph,
        'size': result.size,
        'witness': {
            'mapping': list(result.witness.mapping),
            'edges': [list(e) for e in result.witness.edges],
        },
        'explored': result.explored,
        'cap_respected': result.cap_respected,
    }))
    return EXIT_OK


def cmd_generate(args):
    cfg = GenConfig(args.kind, args.n, args.seed, args.reflex)
    polygon = generate(cfg)
    _write(format_points(polygon.vertices, cfg.header()))
    return EXIT_OK


def _n_range(text):
    try:
        lo, hi = [int(t) for t in text.split(':')]
    except ValueError:
        raise argparse.ArgumentTypeError('expected A:B, got %r' % text)
    if lo > hi:
        raise argparse.ArgumentTypeError('empty range %r' % text)
    return lo, hi


def cmd_compare(args):
    lo, hi = args.n_range
    report = compare(args.trials, lo, hi, args.seed, run_dir=args.out,
        n_parallel=args.n_parallel, cap=args.cap, plot=args.plot,
        command='compare --trials %d --n-range %d:%d --seed %d'
            % (args.trials, lo, hi, args.seed))
    _write(dump_json(report))
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog='polyembed',
        description='Embed paths, cycles and cliques into simple polygons.')
    parser.add_argument('--log-level', type=str.upper, default=config.LOG_LEVEL,
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'],
                        help='Level of the diagnostics written to stderr.')
    subparsers = parser.add_subparsers(dest='command')

    polygon_args = argparse.ArgumentParser(add_help=False)
    polygon_args.add_argument('polygon', type=str,
                              help='Polygon file ("x y" lines) or @NAME fixture.')
    polygon_args.add_argument('--normalize', action='store_true',
                              help='Accept clockwise input by reversing it.')

    p = subparsers.add_parser('analyze', parents=[polygon_args],
                              help='Classify vertices and report visibility.')
    p.set_defaults(func=cmd_analyze)

    p = subparsers.add_parser('embed', parents=[polygon_args],
                              help='Build an embedding.')
    p.add_argument('--graph', choices=['path', 'cycle', 'clique'], required=True)
    p.add_argument('--size', type=int, default=None,
                   help='Edge count (path, cycle) or node count (clique).')
    p.add_argument('--svg', type=str, default=None, help='Also render to this SVG file.')
    p.set_defaults(func=cmd_embed)

    p = subparsers.add_parser('embed-points', help='Embed into a bare point set.')
    p.add_argument('--graph', choices=['path', 'cycle'], required=True)
    p.add_argument('points', type=str)
    p.set_defaults(func=cmd_embed_points)

    p = subparsers.add_parser('verify', parents=[polygon_args],
                              help='Check an embedding JSON file.')
    p.add_argument('embedding', type=str)
    p.add_argument('--planar', action='store_true',
                   help='Also forbid crossings between graph edges.')
    p.set_defaults(func=cmd_verify)

    p = subparsers.add_parser('oracle', parents=[polygon_args],
                              help='Exhaustive maximum on a small polygon.')
    p.add_argument('--graph', choices=['path', 'cycle', 'clique'], required=True)
    p.add_argument('--cap', type=int, default=None)
    p.add_argument('--require-reflex', action='store_true',
                   help='Only cycles through every reflex vertex.')
    p.set_defaults(func=cmd_oracle)

    p = subparsers.add_parser('generate', help='Seeded polygon generator.')
    p.add_argument('--kind', choices=['convex', 'pseudoconvex', 'ortho'], required=True)
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--seed', type=int, required=True)
    p.add_argument('--reflex', type=int, default=None)
    p.set_defaults(func=cmd_generate)

    p = subparsers.add_parser('compare', help='Greedy cycle against the exhaustive search.')
    p.add_argument('--trials', type=int, required=True)
    p.add_argument('--n-range', type=_n_range, required=True)
    p.add_argument('--seed', type=int, required=True)
    p.add_argument('--n-parallel', type=int, default=config.N_PARALLEL,
                   help='Number of joblib workers.')
    p.add_argument('--cap', type=int, default=None)
    p.add_argument('--out', type=str, default=None,
                   help='Run directory; time-stamped under LOG_DIR by default.')
    p.add_argument('--plot', type=str, default=None,
                   help='Write a greedy-vs-optimum scatter plot to this SVG file.')
    p.set_defaults(func=cmd_compare)
    return parser


def dispatch(argv):
    """
    Run one command.

    Parameters
    ----------
    argv (list): Arguments without the program name.

    Returns
    -------
    code (int): Process exit code.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_INVALID
    if getattr(args, 'func', None) is None:
        parser.print_usage(sys.stderr)
        return EXIT_INVALID
    setup_logging(args.log_level)
    try:
        return args.func(args)
    except PolyEmbedError as e:
        sys.stderr.write('error: %s\n' % e)
        return e.exit_code


def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]
    return dispatch(argv)
