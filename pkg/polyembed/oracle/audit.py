"""
Checks of the structural claims about maximum cycles, run against
exhaustive-search witnesses. Failures are reported, never raised: a
failing polygon is a counterexample to keep, not an error.
"""
import logging
import os

from polyembed.core.polygon import classify_vertices
from polyembed.core.visibility import isolation_reasons, visibility_graph
from polyembed.misc.io import write_points
from polyembed.oracle.search import oracle_max_cycle, oracle_max_cycle_containing

logger = logging.getLogger(__name__)


def window_checks(polygon, cycle_vertices, isolated=None):
    """
    For every window of three successive non-isolated vertices (in
    counter-clockwise order, cyclically) count the cycle vertices in it.
    Each window should hold at least one and at most two.

    Returns
    -------
    windows (list): One dict per window with keys window, count,
        at_least_one and at_most_two.
    """
    if isolated is None:
        isolated = set(isolation_reasons(polygon))
    eligible = [i for i in range(polygon.n) if i not in isolated]
    on_cycle = set(cycle_vertices)
    windows = []
    if len(eligible) < 3:
        return windows
    for k in range(len(eligible)):
        window = [eligible[(k + t) % len(eligible)] for t in range(3)]
        count = sum(1 for v in window if v in on_cycle)
        windows.append({
            'window': window,
            'count': count,
            'at_least_one': count >= 1,
            'at_most_two': count <= 2,
        })
    return windows


def isolated_on_cycle(polygon, cycle_vertices, reasons=None):
    """
    Cycle vertices that the isolation rule says cannot be there, mapped to
    the rule that isolates them.
    """
    if reasons is None:
        reasons = isolation_reasons(polygon)
    return {v: reasons[v] for v in cycle_vertices if v in reasons}


def reflex_inclusive_check(polygon, cap=None):
    """
    Compare the largest cycle through all reflex vertices with the largest
    cycle overall, and run the window checks on the overall witness.

    Returns
    -------
    report (dict): reflex, isolated_reflex, max_cycle, witness (the
        overall maximum's vertices), max_cycle_with_reflex, holds,
        window_failures and isolated_on_witness.
    """
    graph = visibility_graph(polygon)
    reasons = isolation_reasons(polygon, graph)
    reflex = classify_vertices(polygon).reflex
    best = oracle_max_cycle(polygon, cap)
    constrained = oracle_max_cycle_containing(polygon, reflex, cap)
    failures = []
    if best.size:
        failures = [w for w in window_checks(polygon, best.witness.mapping, set(reasons))
                    if not (w['at_least_one'] and w['at_most_two'])]
    report = {
        'reflex': reflex,
        'isolated_reflex': sorted(r for r in reflex if r in reasons),
        'max_cycle': best.size,
        'witness': list(best.witness.mapping),
        'max_cycle_with_reflex': constrained.size,
        'holds': constrained.size == best.size,
        'window_failures': failures,
        'isolated_on_witness': isolated_on_cycle(polygon, best.witness.mapping, reasons),
    }
    if not report['holds']:
        logger.warning('Reflex-inclusive maximum %d < overall maximum %d',
            constrained.size, best.size)
    return report


def save_counterexample(dirname, name, polygon, header=None):
    """
    Write polygon in the standard text format so it can be fed back to
    any command.
    """
    if not os.path.isdir(dirname):
        os.makedirs(dirname)
    path = os.path.join(dirname, '%s.poly' % name)
    write_points(path, polygon.vertices, header)
    logger.info('Counterexample written to %s', path)
    return path
