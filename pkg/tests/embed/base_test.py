import unittest

from polyembed.core.errors import InvalidInput
from polyembed.embed.base import Embedding, GraphKind, GraphSpec


class TestGraphSpec(unittest.TestCase):

    def test_counts(self):
        self.assertEqual(GraphSpec('path', 4).node_count, 5)
        self.assertEqual(GraphSpec('path', 4).edge_count, 4)
        self.assertEqual(GraphSpec('cycle', 3).node_count, 3)
        self.assertEqual(GraphSpec('clique', 5).edge_count, 10)

    def test_minimum_sizes(self):
        for kind, size, error in [('path', 0, 'TooSmall'),
                                  ('cycle', 2, 'DegenerateCycle'),
                                  ('clique', 1, 'TooSmall')]:
            with self.assertRaises(InvalidInput) as ctx:
                GraphSpec(kind, size)
            self.assertEqual(ctx.exception.kind, error)
            loose = GraphSpec(kind, size, strict=False)
            self.assertTrue(loose.is_degenerate)
        self.assertFalse(GraphSpec('cycle', 3).is_degenerate)


class TestEmbedding(unittest.TestCase):

    def test_builders(self):
        path = Embedding.path([6, 4, 0])
        self.assertEqual(path.edges, [(6, 4), (4, 0)])
        self.assertEqual(path.size, 2)
        cycle = Embedding.cycle([0, 2, 4])
        self.assertEqual(cycle.edges, [(0, 2), (2, 4), (4, 0)])
        clique = Embedding.clique([0, 2, 4, 6])
        self.assertEqual(clique.size, 4)
        self.assertEqual(len(clique.edges), 6)
        self.assertEqual(clique.graph_spec(), GraphSpec(GraphKind.CLIQUE, 4))

    def test_graph_edges(self):
        cycle = Embedding.cycle([0, 2, 4])
        self.assertEqual(cycle.graph_edges(), [(0, 1), (1, 2), (2, 0)])
        dangling = Embedding([0, 2], [(0, 5)], GraphKind.PATH)
        self.assertIsNone(dangling.graph_edges())

    def test_relabeled(self):
        cycle = Embedding.cycle([0, 2, 4])
        relabeled = cycle.relabeled([2, 0, 1])
        self.assertEqual(relabeled.mapping, [2, 4, 0])
        self.assertEqual(relabeled.edges, cycle.edges)
        self.assertEqual(relabeled.vertex_set, cycle.vertex_set)


if __name__ == '__main__':
    unittest.main()
