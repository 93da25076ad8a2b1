import unittest

from polyembed.core.errors import GenerationFailed, InvalidInput, NoCycle
from polyembed.core.polygon import classify_vertices, validate_polygon
from polyembed.core.visibility import isolated_vertices
from polyembed.embed.base import Embedding
from polyembed.embed.pseudo_convex import (embed_max_cycle_pseudo_convex,
    promote_reflex_vertices)
from polyembed.generators.fixtures import H6, L6, T8, U8
from polyembed.generators.polygons import GenConfig, gen_pseudo_convex
from polyembed.oracle.search import oracle_max_cycle
from polyembed.verify.verifier import verify_embedding


class TestFixtures(unittest.TestCase):

    def test_hexagon(self):
        embedding = embed_max_cycle_pseudo_convex(validate_polygon(H6))
        self.assertEqual(embedding.mapping, [0, 2, 4])
        self.assertTrue(embedding.optimal_claimed)

    def test_t8(self):
        embedding = embed_max_cycle_pseudo_convex(validate_polygon(T8))
        self.assertEqual(embedding.mapping, [1, 4, 6])
        self.assertEqual(embedding.edges, [(1, 4), (4, 6), (6, 1)])
        self.assertTrue(embedding.optimal_claimed)
        self.assertEqual(embedding.diagnostics, [])

    def test_t8_unconfirmed(self):
        embedding = embed_max_cycle_pseudo_convex(validate_polygon(T8), confirm=False)
        self.assertFalse(embedding.optimal_claimed)
        self.assertEqual(embedding.diagnostics, ['optimality not confirmed'])

    def test_l6_has_no_cycle(self):
        with self.assertRaises(NoCycle):
            embed_max_cycle_pseudo_convex(validate_polygon(L6))

    def test_adjacent_reflex_pair(self):
        with self.assertRaises(InvalidInput) as ctx:
            embed_max_cycle_pseudo_convex(validate_polygon(U8))
        self.assertEqual(ctx.exception.kind, 'NotPseudoConvex')


class TestPromotion(unittest.TestCase):

    def test_nothing_to_promote(self):
        polygon = validate_polygon(T8)
        embedding = Embedding.cycle([1, 4, 6])
        self.assertIs(promote_reflex_vertices(polygon, embedding), embedding)


class TestGenerated(unittest.TestCase):

    def test_valid_and_never_above_optimum(self):
        for seed in range(12):
            n = 8 + seed % 5
            try:
                polygon = gen_pseudo_convex(GenConfig('pseudoconvex', n, seed, 1 + seed % 2))
            except GenerationFailed:
                continue
            best = oracle_max_cycle(polygon).size
            try:
                embedding = embed_max_cycle_pseudo_convex(polygon)
            except NoCycle:
                continue
            self.assertEqual(verify_embedding(polygon, embedding,
                embedding.graph_spec()), [])
            self.assertLessEqual(embedding.size, min(best, n // 2))
            if embedding.size == best:
                self.assertTrue(embedding.optimal_claimed)
            isolated = isolated_vertices(polygon)
            self.assertFalse(isolated & embedding.vertex_set)
            reflex = classify_vertices(polygon).reflex
            for r in reflex:
                if r not in isolated and r not in embedding.vertex_set:
                    self.assertIn('reflex vertex %d skipped' % r, embedding.diagnostics)


if __name__ == '__main__':
    unittest.main()
