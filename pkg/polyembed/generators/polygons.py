"""
Seeded polygon generators.

A (kind, n, seed, reflex_target) tuple always yields the same polygon: all
randomness comes from misc.ext.make_rng and every candidate goes through
validate_polygon before it is returned.
"""
import enum
import logging

import numpy as np

from polyembed import config
from polyembed.core.errors import GenerationFailed, InvalidInput
from polyembed.core.polygon import (Polygon, classify_vertices, is_convex,
    is_pseudo_convex, validate_polygon)
from polyembed.misc.ext import make_rng

logger = logging.getLogger(__name__)


class GenKind(enum.Enum):
    CONVEX = 'convex'
    PSEUDO_CONVEX = 'pseudoconvex'
    ORTHOCONVEX_STAIRCASE = 'ortho'


class GenConfig(object):
    """
    Parameters
    ----------
    kind (GenKind): Family to draw from.
    n (int): Vertex count.
    seed (int): 64-bit seed.
    reflex_target (int): Reflex vertex count, pseudo-convex only.
    coordinate_span (int): Side of the bounding square.
    """

    def __init__(self, kind, n, seed, reflex_target=None,
            coordinate_span=None):
        self.kind = GenKind(kind)
        self.n = int(n)
        self.seed = int(seed)
        self.reflex_target = reflex_target
        self.coordinate_span = int(coordinate_span or config.GEN_COORDINATE_SPAN)
        if self.kind is GenKind.CONVEX and self.n < 3:
            raise InvalidInput('InvalidN', 'convex polygons need n >= 3, got %d' % self.n)
        if self.kind is GenKind.PSEUDO_CONVEX:
            if self.n < 6:
                raise InvalidInput('InvalidN',
                    'pseudo-convex polygons need n >= 6, got %d' % self.n)
            if self.reflex_target is None:
                self.reflex_target = 0
            self.reflex_target = int(self.reflex_target)
            if not 0 <= self.reflex_target <= self.n // 2 - 1:
                raise InvalidInput('InvalidN', 'reflex_target must be in [0, %d], got %d'
                    % (self.n // 2 - 1, self.reflex_target))
        if self.kind is GenKind.ORTHOCONVEX_STAIRCASE:
            if self.n < 8 or self.n % 2:
                raise InvalidInput('InvalidN',
                    'orthoconvex polygons need an even n >= 8, got %d' % self.n)
            self.reflex_target = (self.n - 4) // 2

    def header(self):
        """
        The '#' line written on top of generated polygon files.
        """
        return '# kind=%s n=%d seed=%d reflex_target=%s rng=%s' % (
            self.kind.value, self.n, self.seed, self.reflex_target,
            config.GEN_RNG_NAME)


def _try_validate(vertices):
    try:
        return validate_polygon(vertices)
    except InvalidInput as e:
        logger.debug('Rejected candidate: %s', e)
        return None


def _convex_candidate(rng, n, radius):
    angles = np.sort(rng.uniform(0.0, 2 * np.pi, size=n))
    xs = np.rint(radius * np.cos(angles)).astype(np.int64)
    ys = np.rint(radius * np.sin(angles)).astype(np.int64)
    return list(zip(xs.tolist(), ys.tolist()))


def _gen_convex(rng, cfg):
    radius = cfg.coordinate_span // 2
    for attempt in range(config.GEN_MAX_RETRIES):
        polygon = _try_validate(_convex_candidate(rng, cfg.n, radius))
        if polygon is not None and is_convex(polygon):
            return polygon
    raise GenerationFailed('no strictly convex %d-gon after %d attempts'
        % (cfg.n, config.GEN_MAX_RETRIES))


def gen_convex(cfg):
    """
    Points at sorted random angles on a circle of radius span / 2, rounded
    to integers and resampled until strictly convex.
    """
    return _gen_convex(make_rng(cfg.seed), cfg)


def _spread_indices(rng, n, count):
    """
    count pairwise non-adjacent vertex indices, drawn in random order.
    """
    chosen = []
    for v in rng.permutation(n).tolist():
        if len(chosen) == count:
            break
        if all((v - u) % n not in (0, 1, n - 1) for u in chosen):
            chosen.append(v)
    return sorted(chosen) if len(chosen) == count else None


def _pull_inward(vertices, v, centroid, step):
    """
    Move vertex v towards the centroid one step at a time until it turns
    reflex; returns the new vertex list or None.
    """
    origin = np.array(vertices[v], dtype=float)
    direction = centroid - origin
    norm = np.hypot(direction[0], direction[1])
    if norm == 0:
        return None
    for k in range(1, config.GEN_PERTURB_RETRIES + 1):
        moved = np.rint(origin + direction * min(k * step / norm, 1.0)).astype(np.int64)
        candidate = list(vertices)
        candidate[v] = (int(moved[0]), int(moved[1]))
        polygon = _try_validate(candidate)
        if polygon is None or not is_pseudo_convex(polygon):
            continue
        if v in classify_vertices(polygon).reflex:
            return candidate
    return None


def gen_pseudo_convex(cfg):
    """
    Start from a convex polygon and pull reflex_target pairwise
    non-adjacent vertices towards the centroid in steps of span / 64 until
    each turns reflex, re-validating after every step.
    """
    rng = make_rng(cfg.seed)
    step = cfg.coordinate_span / config.GEN_PERTURB_DIVISOR
    for attempt in range(config.GEN_MAX_RETRIES):
        base = _gen_convex(rng, cfg)
        if cfg.reflex_target == 0:
            return base
        targets = _spread_indices(rng, cfg.n, cfg.reflex_target)
        if targets is None:
            continue
        vertices = list(base.vertices)
        centroid = np.mean(np.array(vertices, dtype=float), axis=0)
        for v in targets:
            vertices = _pull_inward(vertices, v, centroid, step)
            if vertices is None:
                break
        if vertices is None:
            logger.debug('Attempt %d: could not dent vertices %s', attempt, targets)
            continue
        polygon = validate_polygon(vertices)
        if len(classify_vertices(polygon).reflex) == cfg.reflex_target:
            return polygon
    raise GenerationFailed('no pseudo-convex %d-gon with %d reflex vertices after %d attempts'
        % (cfg.n, cfg.reflex_target, config.GEN_MAX_RETRIES))


# Quadrants visited when handing out staircase steps: lower-right,
# lower-left, upper-right, upper-left
_STEP_ORDER = (0, 3, 1, 2)


def _staircase(rng, steps, span):
    """
    Lower-right staircase from the bottom edge to the right edge, with
    one reflex corner per step, confined to the lower-right quadrant.
    """
    half = span // 2
    xs = sorted(rng.choice(np.arange(half + 1, span), size=steps, replace=False).tolist())
    ys = sorted(rng.choice(np.arange(1, half), size=steps, replace=False).tolist())
    xs.append(span)
    points = [(xs[0], 0)]
    for i in range(steps):
        points.append((xs[i], ys[i]))
        points.append((xs[i + 1], ys[i]))
    return points


def _rotate(points, span, times):
    # Quarter turns about the centre of the bounding square
    for _ in range(times):
        points = [(span - y, x) for x, y in points]
    return points


def gen_orthoconvex_staircase(cfg):
    """
    Axis-parallel orthoconvex polygon: one monotone staircase per corner
    of a square, each kept inside its own quadrant, so every horizontal or
    vertical line meets the polygon in one segment. Steps are handed out
    round robin, which gives the T shape for n = 8 and the plus shape for
    n = 12.
    """
    rng = make_rng(cfg.seed)
    span = cfg.coordinate_span
    steps = [0, 0, 0, 0]
    for i in range(cfg.reflex_target):
        steps[_STEP_ORDER[i % 4]] += 1
    vertices = []
    for quadrant in range(4):
        vertices.extend(_rotate(_staircase(rng, steps[quadrant], span), span, quadrant))
    polygon = validate_polygon(vertices)
    assert len(classify_vertices(polygon).reflex) == cfg.reflex_target
    return polygon


_GENERATORS = {
    GenKind.CONVEX: gen_convex,
    GenKind.PSEUDO_CONVEX: gen_pseudo_convex,
    GenKind.ORTHOCONVEX_STAIRCASE: gen_orthoconvex_staircase,
}


def generate(cfg):
    polygon = _GENERATORS[cfg.kind](cfg)
    assert isinstance(polygon, Polygon)
    logger.debug('Generated %s', cfg.header())
    return polygon
