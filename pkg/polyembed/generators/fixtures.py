"""
Hand-written polygons shared by the tests and the command line (@NAME).
"""
import re

import numpy as np

from polyembed.core.errors import InvalidInput
from polyembed.core.polygon import is_convex, validate_polygon

SQUARE = [(0, 0), (2, 0), (2, 2), (0, 2)]

# Single reflex vertex at index 3
L6 = [(0, 0), (3, 0), (3, 1), (1, 1), (1, 3), (0, 3)]

# Bar on a stem; reflex at 1 and 4
T8 = [(0, 2), (2, 2), (2, 0), (3, 0), (3, 2), (5, 2), (5, 3), (0, 3)]

# Notched rectangle with the adjacent reflex pair 4, 5
U8 = [(0, 0), (6, 0), (6, 4), (4, 4), (4, 2), (2, 2), (2, 4), (0, 4)]

H6 = [(4, 0), (2, 3), (-2, 3), (-4, 0), (-2, -3), (2, -3)]

FIXTURES = {
    'SQUARE': SQUARE,
    'L6': L6,
    'T8': T8,
    'U8': U8,
    'H6': H6,
}

_REGULAR = re.compile(r'^REGULAR(\d+)$')


def regular_polygon(n, radius=10 ** 6):
    """
    Regular n-gon with vertex 0 at (radius, 0), counter-clockwise, rounded
    to integers.
    """
    if n < 3:
        raise InvalidInput('TooFewVertices', 'got %d vertices, need >= 3' % n)
    angles = 2 * np.pi * np.arange(n) / n
    xs = np.rint(radius * np.cos(angles)).astype(np.int64)
    ys = np.rint(radius * np.sin(angles)).astype(np.int64)
    polygon = validate_polygon(list(zip(xs.tolist(), ys.tolist())))
    assert is_convex(polygon), 'rounding broke convexity of the %d-gon' % n
    return polygon


def fixture(name):
    """
    Look up a named polygon: one of FIXTURES or REGULAR<n>, case-insensitive.
    """
    key = name.upper()
    if key in FIXTURES:
        return validate_polygon(FIXTURES[key])
    match = _REGULAR.match(key)
    if match:
        return regular_polygon(int(match.group(1)))
    raise InvalidInput('ParseError', 'unknown fixture %r; known: %s, REGULAR<n>'
        % (name, ', '.join(sorted(FIXTURES))))
