import unittest

from polyembed.core.errors import InvalidInput
from polyembed.misc.ext import make_rng
from polyembed.core.geometry import (Orientation, Point, check_point,
    collinear_overlap, cross, on_segment, orientation, proper_intersect,
    segments_touch, signed_area2)


class TestPredicates(unittest.TestCase):

    def test_orientation(self):
        self.assertEqual(cross((0, 0), (1, 0), (0, 1)), 1)
        self.assertIs(orientation((0, 0), (1, 0), (0, 1)), Orientation.CCW)
        self.assertIs(orientation((0, 0), (0, 1), (1, 0)), Orientation.CW)
        self.assertIs(orientation((0, 0), (1, 1), (3, 3)), Orientation.COLLINEAR)
        self.assertIs(Orientation.CW.reverse(), Orientation.CCW)

    def test_exact_for_large_coordinates(self):
        big = 2 ** 30
        self.assertEqual(cross((-big, -big), (big, big), (big - 1, big)), 2 * big)

    def test_proper_intersect(self):
        self.assertTrue(proper_intersect(((0, 0), (2, 2)), ((0, 2), (2, 0))))
        # Shared endpoint
        self.assertFalse(proper_intersect(((0, 0), (1, 1)), ((1, 1), (2, 0))))
        # T-junction
        self.assertFalse(proper_intersect(((0, 0), (2, 0)), ((1, 0), (1, 1))))
        self.assertTrue(segments_touch(((0, 0), (2, 0)), ((1, 0), (1, 1))))
        self.assertFalse(segments_touch(((0, 0), (1, 0)), ((0, 1), (1, 1))))

    def test_collinear_overlap(self):
        self.assertTrue(collinear_overlap(((0, 0), (2, 0)), ((1, 0), (3, 0))))
        self.assertTrue(collinear_overlap(((0, 0), (0, 2)), ((0, 1), (0, 3))))
        self.assertFalse(collinear_overlap(((0, 0), (1, 0)), ((1, 0), (2, 0))))
        self.assertFalse(collinear_overlap(((0, 0), (1, 0)), ((0, 1), (1, 1))))

    def test_on_segment(self):
        self.assertTrue(on_segment((1, 1), ((0, 0), (2, 2))))
        self.assertTrue(on_segment((2, 2), ((0, 0), (2, 2))))
        self.assertFalse(on_segment((3, 3), ((0, 0), (2, 2))))
        self.assertFalse(on_segment((1, 0), ((0, 0), (2, 2))))

    def test_signed_area(self):
        square = [(0, 0), (2, 0), (2, 2), (0, 2)]
        self.assertEqual(signed_area2(square), 8)
        self.assertEqual(signed_area2(square[::-1]), -8)


def determinant(p, q, r):
    """
    Cofactor expansion of the orientation determinant, computed
    independently of cross.
    """
    return p[0] * (q[1] - r[1]) + q[0] * (r[1] - p[1]) + r[0] * (p[1] - q[1])


def random_triples(rng, count, span=2 ** 30):
    coords = rng.integers(-span, span + 1, size=(count, 3, 2))
    return [tuple((int(x), int(y)) for x, y in triple) for triple in coords]


class TestPredicateProperties(unittest.TestCase):

    def test_orientation_symmetries(self):
        for p, q, r in random_triples(make_rng(0), 100000):
            value = cross(p, q, r)
            self.assertEqual(value, determinant(p, q, r))
            self.assertEqual(cross(p, r, q), -value)
            self.assertEqual(cross(q, r, p), value)
            self.assertEqual(cross(r, p, q), value)
            self.assertIs(orientation(q, p, r), orientation(p, q, r).reverse())

    def test_collinear_at_full_scale(self):
        rng = make_rng(1)
        for _ in range(10000):
            p = [int(c) for c in rng.integers(-2 ** 29, 2 ** 29, size=2)]
            d = [int(c) for c in rng.integers(-2 ** 14, 2 ** 14, size=2)]
            t = int(rng.integers(-2 ** 14, 2 ** 14))
            q = (p[0] + d[0], p[1] + d[1])
            r = (p[0] + t * d[0], p[1] + t * d[1])
            self.assertIs(orientation(p, q, r), Orientation.COLLINEAR)
            if d[1] != 0:
                self.assertIsNot(orientation(p, q, (r[0] + 1, r[1])), Orientation.COLLINEAR)

    def test_proper_intersect_symmetry(self):
        rng = make_rng(2)
        for _ in range(20000):
            coords = rng.integers(-8, 9, size=(4, 2))
            a, b, c, d = [(int(x), int(y)) for x, y in coords]
            expected = proper_intersect((a, b), (c, d))
            for s1, s2 in [((b, a), (c, d)), ((a, b), (d, c)), ((c, d), (a, b)),
                           ((d, c), (b, a))]:
                self.assertEqual(proper_intersect(s1, s2), expected)
            self.assertEqual(collinear_overlap((a, b), (c, d)),
                             collinear_overlap((d, c), (b, a)))


class TestCheckPoint(unittest.TestCase):

    def test_accepts_integers(self):
        p = check_point(Point(3, -4))
        self.assertEqual(p, (3, -4))
        self.assertIsInstance(p.x, int)

    def test_rejects_non_integers(self):
        for bad in [(1.5, 2), (True, 0), ('1', 2)]:
            with self.assertRaises(InvalidInput) as ctx:
                check_point(bad)
            self.assertEqual(ctx.exception.kind, 'ParseError')

    def test_rejects_out_of_range(self):
        with self.assertRaises(InvalidInput) as ctx:
            check_point((2 ** 31, 0))
        self.assertEqual(ctx.exception.kind, 'CoordinateOutOfRange')

    def test_from_tuple_arity(self):
        with self.assertRaises(InvalidInput):
            Point.from_tuple((1, 2, 3))


if __name__ == '__main__':
    unittest.main()
