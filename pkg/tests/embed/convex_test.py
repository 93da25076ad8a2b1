import unittest

from polyembed.core.errors import InvalidInput, SizeViolation
from polyembed.core.polygon import validate_polygon
from polyembed.embed.base import GraphKind
from polyembed.embed.convex import (embed_clique_convex, embed_cycle_convex,
    embed_path_convex)
from polyembed.generators.fixtures import H6, L6, SQUARE, regular_polygon
from polyembed.generators.polygons import GenConfig, gen_convex
from polyembed.verify.verifier import ViolationKind, verify_embedding


class TestPath(unittest.TestCase):

    def test_traversals(self):
        self.assertEqual(embed_path_convex(regular_polygon(7), 4).edges,
                         [(6, 4), (4, 0), (0, 3), (3, 1)])
        self.assertEqual(embed_path_convex(regular_polygon(8), 5).edges,
                         [(7, 5), (5, 0), (0, 4), (4, 1), (1, 3)])
        self.assertEqual(embed_path_convex(validate_polygon(SQUARE), 1).edges, [(3, 1)])

    def test_truncated(self):
        embedding = embed_path_convex(regular_polygon(10), 3)
        self.assertEqual(embedding.edges, [(9, 3), (3, 0), (0, 2)])
        self.assertFalse(embedding.optimal_claimed)

    def test_every_size(self):
        for n in range(6, 65):
            polygon = gen_convex(GenConfig('convex', n, seed=n))
            embedding = embed_path_convex(polygon, n - 3)
            self.assertEqual(len(embedding.edges), n - 3)
            self.assertTrue(embedding.optimal_claimed)
            self.assertEqual(verify_embedding(polygon, embedding,
                embedding.graph_spec(), planar=True), [])

    def test_errors(self):
        with self.assertRaises(SizeViolation) as ctx:
            embed_path_convex(regular_polygon(7), 5)
        self.assertEqual(ctx.exception.kind, 'SizeOutOfRange')
        with self.assertRaises(InvalidInput) as ctx:
            embed_path_convex(validate_polygon(L6), 1)
        self.assertEqual(ctx.exception.kind, 'NotConvex')
        with self.assertRaises(InvalidInput):
            embed_path_convex(regular_polygon(7), 0)


class TestCycle(unittest.TestCase):

    def test_even_vertices(self):
        self.assertEqual(embed_cycle_convex(validate_polygon(H6), 3).edges,
                         [(0, 2), (2, 4), (4, 0)])
        self.assertEqual(embed_cycle_convex(regular_polygon(8), 4).edges,
                         [(0, 2), (2, 4), (4, 6), (6, 0)])
        self.assertEqual(embed_cycle_convex(regular_polygon(7), 3).edges,
                         [(0, 2), (2, 4), (4, 0)])

    def test_every_size(self):
        for n in range(6, 65):
            polygon = gen_convex(GenConfig('convex', n, seed=n))
            embedding = embed_cycle_convex(polygon, n // 2)
            self.assertEqual(embedding.size, n // 2)
            self.assertIs(embedding.kind, GraphKind.CYCLE)
            self.assertEqual(verify_embedding(polygon, embedding,
                embedding.graph_spec(), planar=True), [])

    def test_errors(self):
        with self.assertRaises(InvalidInput) as ctx:
            embed_cycle_convex(regular_polygon(8), 2)
        self.assertEqual(ctx.exception.kind, 'DegenerateCycle')
        with self.assertRaises(SizeViolation):
            embed_cycle_convex(regular_polygon(8), 5)
        with self.assertRaises(InvalidInput) as ctx:
            embed_cycle_convex(validate_polygon(L6), 3)
        self.assertEqual(ctx.exception.kind, 'NotConvex')


class TestClique(unittest.TestCase):

    def test_square(self):
        embedding = embed_clique_convex(validate_polygon(SQUARE))
        self.assertEqual(embedding.mapping, [0, 2])
        self.assertEqual(embedding.edges, [(0, 2)])

    def test_h6(self):
        embedding = embed_clique_convex(validate_polygon(H6))
        self.assertEqual(embedding.mapping, [0, 2, 4])
        self.assertEqual(len(embedding.edges), 3)

    def test_decagon_crosses_itself(self):
        polygon = regular_polygon(10)
        embedding = embed_clique_convex(polygon)
        self.assertEqual(embedding.mapping, [0, 2, 4, 6, 8])
        self.assertEqual(len(embedding.edges), 10)
        spec = embedding.graph_spec()
        self.assertEqual(verify_embedding(polygon, embedding, spec, planar=False), [])
        kinds = {v.kind for v in verify_embedding(polygon, embedding, spec, planar=True)}
        self.assertEqual(kinds, {ViolationKind.GRAPH_EDGE_CROSSING})

    def test_errors(self):
        with self.assertRaises(InvalidInput):
            embed_clique_convex(validate_polygon(L6))
        with self.assertRaises(SizeViolation):
            embed_clique_convex(regular_polygon(8), 5)


if __name__ == '__main__':
    unittest.main()
