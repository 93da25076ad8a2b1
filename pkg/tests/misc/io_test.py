import json
import os
import shutil
import tempfile
import unittest

from polyembed.core.errors import InvalidInput, IoFailure
from polyembed.embed.base import Embedding, GraphKind, GraphSpec
from polyembed.generators.fixtures import fixture
from polyembed.misc.io import (claimed_graph_from_dict, dump_json, embedding_from_dict,
    embedding_to_dict, format_points, parse_points, read_json, read_points, read_polygon,
    write_points)


class TestPoints(unittest.TestCase):

    def setUp(self):
        self.dirname = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.dirname)

    def test_parse(self):
        text = '# square\n0 0\n\n2 0   # corner\n 2 2\n0 2\n'
        self.assertEqual([tuple(p) for p in parse_points(text)],
                         [(0, 0), (2, 0), (2, 2), (0, 2)])

    def test_parse_errors(self):
        for text in ['0 0 0\n', '0.5 1\n', 'a b\n', '0\n']:
            with self.assertRaises(InvalidInput) as ctx:
                parse_points(text)
            self.assertEqual(ctx.exception.kind, 'ParseError')
        with self.assertRaises(InvalidInput) as ctx:
            parse_points('%d 0\n' % 2 ** 31)
        self.assertEqual(ctx.exception.kind, 'CoordinateOutOfRange')

    def test_format(self):
        self.assertEqual(format_points([(0, 0), (3, -1)], '# two'), '# two\n0 0\n3 -1\n')

    def test_files(self):
        path = os.path.join(self.dirname, 'l6.poly')
        write_points(path, fixture('L6').vertices)
        self.assertEqual(read_polygon(path), fixture('L6'))
        self.assertEqual(len(read_points(path)), 6)

    def test_clockwise(self):
        path = os.path.join(self.dirname, 'cw.poly')
        write_points(path, [(0, 0), (0, 2), (2, 2), (2, 0)])
        with self.assertRaises(InvalidInput):
            read_polygon(path)
        self.assertEqual(read_polygon(path, normalize=True).n, 4)

    def test_missing_file(self):
        with self.assertRaises(IoFailure) as ctx:
            read_points(os.path.join(self.dirname, 'missing.poly'))
        self.assertEqual(ctx.exception.exit_code, 2)

    def test_bad_json(self):
        path = os.path.join(self.dirname, 'bad.json')
        with open(path, 'w') as f:
            f.write('{"mapping": [0, 2')
        with self.assertRaises(InvalidInput):
            read_json(path)


class TestEmbeddingJson(unittest.TestCase):

    def test_schema(self):
        polygon = fixture('H6')
        data = embedding_to_dict(polygon, Embedding.cycle([0, 2, 4], optimal_claimed=True))
        self.assertEqual(data['graph'], {'kind': 'cycle', 'nodes': 3,
                                         'edges': [[0, 1], [1, 2], [2, 0]]})
        self.assertEqual(data['edges'], [[0, 2], [2, 4], [4, 0]])
        self.assertEqual(data['meta'], {'optimal_claimed': True, 'diagnostics': []})
        self.assertEqual(data['polygon'][0], [4, 0])

    def test_from_dict(self):
        polygon = fixture('H6')
        embedding = Embedding.path([5, 1, 3], diagnostics=['note'])
        data = json.loads(dump_json(embedding_to_dict(polygon, embedding)))
        vertices, parsed = embedding_from_dict(data)
        self.assertEqual(parsed, embedding)
        self.assertIs(parsed.kind, GraphKind.PATH)
        self.assertEqual(vertices[1], (2, 3))

    def test_malformed(self):
        for data in [{}, {'mapping': [0], 'edges': [[0]], 'graph': {'kind': 'path'}},
                     {'mapping': [0, 1], 'edges': [], 'graph': {'kind': 'tree'}}, []]:
            with self.assertRaises(InvalidInput):
                embedding_from_dict(data)

    def test_claimed_graph(self):
        data = embedding_to_dict(fixture('H6'), Embedding.cycle([0, 2, 4]))
        spec, graph_edges = claimed_graph_from_dict(data)
        self.assertEqual(spec, GraphSpec('cycle', 3))
        self.assertEqual(graph_edges, [(0, 1), (1, 2), (2, 0)])
        data = embedding_to_dict(fixture('H6'), Embedding.path([5, 1, 3]))
        self.assertEqual(claimed_graph_from_dict(data)[0], GraphSpec('path', 2))

    def test_claimed_graph_keeps_degenerate_sizes(self):
        data = {'graph': {'kind': 'cycle', 'nodes': 2, 'edges': [[0, 1], [1, 0]]}}
        spec, _ = claimed_graph_from_dict(data)
        self.assertEqual(spec.size, 2)
        self.assertTrue(spec.is_degenerate)
        spec, graph_edges = claimed_graph_from_dict(
            {'graph': {'kind': 'path', 'nodes': 1, 'edges': None}})
        self.assertEqual(spec.size, 0)
        self.assertIsNone(graph_edges)

    def test_claimed_graph_malformed(self):
        for graph in [{'kind': 'path'}, {'kind': 'path', 'nodes': '3'},
                      {'kind': 'path', 'nodes': True}, {'kind': 'ring', 'nodes': 3},
                      {'kind': 'path', 'nodes': 3, 'edges': [[0, 1, 2]]}]:
            with self.assertRaises(InvalidInput):
                claimed_graph_from_dict({'graph': graph})
        with self.assertRaises(InvalidInput):
            claimed_graph_from_dict({})

    def test_dump_is_stable(self):
        text = dump_json({'b': 1, 'a': [1, 2]})
        self.assertEqual(text, '{\n  "a": [\n    1,\n    2\n  ],\n  "b": 1\n}\n')


if __name__ == '__main__':
    unittest.main()
