"""
SVG figures of a polygon and, optionally, an embedding drawn inside it.

The document is assembled as text with fixed number formatting, so the
same input always produces the same bytes.
"""
import logging

from polyembed import config
from polyembed.misc.io import write_text

logger = logging.getLogger(__name__)

PREAMBLE = ('<?xml version="1.0" encoding="UTF-8" standalone="no"?>\n'
            '<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN" '
            '"http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">\n')


def _num(value):
    return '%.3f' % value


class _Frame(object):
    """
    Bounding box plus margin, with y flipped so the figure is upright.
    """

    def __init__(self, points, margin):
        xs = [p[0] for p in points]
        ys = [p[1] for p in points]
        self.min_x, self.max_x = min(xs), max(xs)
        self.min_y, self.max_y = min(ys), max(ys)
        extent = max(self.max_x - self.min_x, self.max_y - self.min_y, 1)
        self.pad = margin * extent
        self.extent = extent

    def view_box(self):
        return '%s %s %s %s' % (
            _num(self.min_x - self.pad), _num(self.min_y - self.pad),
            _num(self.max_x - self.min_x + 2 * self.pad),
            _num(self.max_y - self.min_y + 2 * self.pad))

    def xy(self, p):
        return p[0], self.max_y + self.min_y - p[1]


def polygon_element(frame, polygon, stroke_width):
    points = ' '.join('%s,%s' % tuple(_num(c) for c in frame.xy(p)) for p in polygon)
    return ('<polygon points="%s" fill="%s" stroke="%s" stroke-width="%s"/>'
            % (points, config.SVG_POLYGON_FILL, config.SVG_POLYGON_STROKE,
               _num(stroke_width)))


def line_element(frame, a, b, stroke_width):
    (x1, y1), (x2, y2) = frame.xy(a), frame.xy(b)
    return ('<line x1="%s" y1="%s" x2="%s" y2="%s" stroke="%s" stroke-width="%s"/>'
            % (_num(x1), _num(y1), _num(x2), _num(y2), config.SVG_EDGE_STROKE,
               _num(stroke_width)))


def label_element(frame, p, text, size):
    x, y = frame.xy(p)
    return ('<text x="%s" y="%s" font-family="sans-serif" font-size="%s" fill="%s">%s</text>'
            % (_num(x), _num(y), _num(size), config.SVG_LABEL_COLOR, text))


def svg_document(polygon, embedding=None):
    """
    Polygon outline, graph edges in a distinct stroke and vertex index
    labels.
    """
    frame = _Frame(list(polygon), config.SVG_MARGIN)
    stroke = frame.extent / 200.0
    elements = [polygon_element(frame, polygon, stroke)]
    if embedding is not None:
        for u, v in embedding.edges:
            polygon.check_index(u)
            polygon.check_index(v)
            elements.append(line_element(frame, polygon[u], polygon[v], 2 * stroke))
    for i, p in enumerate(polygon):
        elements.append(label_element(frame, p, str(i), frame.extent / 25.0))
    return (PREAMBLE +
            '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="%s">\n'
            % frame.view_box() +
            ''.join('  %s\n' % e for e in elements) +
            '</svg>\n')


def render_svg(polygon, embedding, path):
    document = svg_document(polygon, embedding)
    write_text(path, document)
    logger.debug('Wrote %s', path)
    return path
