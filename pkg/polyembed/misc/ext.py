import logging

import numpy as np

from polyembed import config

logger = logging.getLogger(__name__)


def make_rng(seed):
    """
    The one seeded generator used everywhere: numpy's PCG64, whose stream
    for a given 64-bit seed is fixed across platforms and numpy releases.
    """
    seed = int(seed) % 2 ** 64
    logger.debug('using seed %d (%s)', seed, config.GEN_RNG_NAME)
    return np.random.Generator(np.random.PCG64(seed))
