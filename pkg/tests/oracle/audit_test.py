import os
import shutil
import tempfile
import unittest

from polyembed.generators.fixtures import fixture, regular_polygon
from polyembed.misc.io import read_polygon
from polyembed.oracle.audit import (isolated_on_cycle, reflex_inclusive_check,
    save_counterexample, window_checks)


class TestWindows(unittest.TestCase):

    def test_t8(self):
        windows = window_checks(fixture('T8'), [1, 4, 6])
        self.assertEqual([w['window'] for w in windows],
                         [[1, 4, 6], [4, 6, 7], [6, 7, 1], [7, 1, 4]])
        self.assertEqual([w['count'] for w in windows], [3, 2, 2, 2])
        self.assertFalse(windows[0]['at_most_two'])
        self.assertTrue(all(w['at_least_one'] for w in windows))

    def test_convex(self):
        windows = window_checks(regular_polygon(8), [0, 2, 4, 6])
        self.assertEqual(len(windows), 8)
        self.assertTrue(all(w['at_least_one'] and w['at_most_two'] for w in windows))

    def test_too_few_eligible(self):
        self.assertEqual(window_checks(fixture('L6'), []), [])


class TestIsolated(unittest.TestCase):

    def test_isolated_on_cycle(self):
        polygon = fixture('T8')
        self.assertEqual(isolated_on_cycle(polygon, [1, 4, 6]), {})
        self.assertEqual(set(isolated_on_cycle(polygon, [0, 2, 4])), {0, 2})


class TestReflexInclusive(unittest.TestCase):

    def test_t8(self):
        report = reflex_inclusive_check(fixture('T8'))
        self.assertEqual(report['reflex'], [1, 4])
        self.assertEqual(report['max_cycle'], 3)
        self.assertEqual(report['witness'], [1, 4, 6])
        self.assertEqual(report['isolated_reflex'], [])
        self.assertEqual(report['max_cycle_with_reflex'], 3)
        self.assertTrue(report['holds'])
        self.assertEqual([w['window'] for w in report['window_failures']], [[1, 4, 6]])
        self.assertEqual(report['isolated_on_witness'], {})


class TestCounterexample(unittest.TestCase):

    def setUp(self):
        self.dirname = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.dirname)

    def test_round_trip(self):
        polygon = fixture('T8')
        path = save_counterexample(os.path.join(self.dirname, 'cex'), 't8', polygon,
            '# kind=fixture')
        self.assertTrue(path.endswith('t8.poly'))
        self.assertEqual(read_polygon(path), polygon)


if __name__ == '__main__':
    unittest.main()
