"""
Greedy pseudo-convex cycles against the exhaustive search, on generated
polygons.

Trials run through joblib; rows are sorted by (n, seed) afterwards so the
report does not depend on the schedule. Every discrepancy (greedy below
the optimum, a reflex-inclusive optimum below the overall optimum, a
window failure, an isolated reflex vertex) is written out as a polygon
file listed in manifest.json.
"""
import datetime
import hashlib
import json
import logging
import os
import time

import dateutil.tz
from joblib import Parallel, delayed

from polyembed import config
from polyembed.core.errors import GenerationFailed, NoCycle
from polyembed.embed.pseudo_convex import embed_max_cycle_pseudo_convex
from polyembed.generators.polygons import GenConfig, GenKind, gen_pseudo_convex
from polyembed.misc.ext import make_rng
from polyembed.misc.io import dump_json, write_text
from polyembed.misc.log_utils import logdir, prefixed, write_tabular
from polyembed.oracle.audit import reflex_inclusive_check, save_counterexample
from polyembed.verify.verifier import verify_embedding

logger = logging.getLogger(__name__)


def default_run_dir():
    now = datetime.datetime.now(dateutil.tz.tzlocal())
    return os.path.join(config.LOG_DIR, 'compare_%s' % now.strftime('%Y_%m_%d_%H_%M_%S'))


def plan_trials(trials, n_lo, n_hi, seed):
    """
    The (n, seed, reflex_target) of every trial, drawn from one seeded
    stream. reflex_target lies in [1, n // 2 - 2].
    """
    rng = make_rng(seed)
    plan = []
    for _ in range(trials):
        n = int(rng.integers(n_lo, n_hi + 1))
        reflex_target = int(rng.integers(1, max(1, n // 2 - 2) + 1))
        trial_seed = int(rng.integers(0, 2 ** 63))
        plan.append((n, trial_seed, reflex_target))
    return plan


def run_trial(n, seed, reflex_target, cap=None):
    """
    One generated polygon: greedy cycle, exhaustive optimum, reflex-
    inclusive optimum and window checks.

    Returns
    -------
    row (dict): Report row; timing_s is the only non-deterministic field.
    polygon (Polygon): The generated polygon, None if generation failed.
    """
    log = prefixed(__name__, 'n=%d seed=%d | ' % (n, seed))
    cfg = GenConfig(GenKind.PSEUDO_CONVEX, n, seed, reflex_target)
    row = {'n': n, 'seed': seed, 'reflex_target': reflex_target}
    start = time.time()
    try:
        polygon = gen_pseudo_convex(cfg)
    except GenerationFailed as e:
        log.warning('%s', e)
        row['status'] = 'generation-failed'
        return row, None

    try:
        greedy = embed_max_cycle_pseudo_convex(polygon, confirm=False)
        greedy_size = greedy.size
        greedy_valid = not verify_embedding(polygon, greedy, greedy.graph_spec())
        diagnostics = greedy.diagnostics
    except NoCycle as e:
        log.info('%s', e)
        greedy_size, greedy_valid, diagnostics = 0, True, [str(e)]

    audit = reflex_inclusive_check(polygon, cap)
    best = audit['max_cycle']

    row.update({
        'status': 'ok',
        'reflex': audit['reflex'],
        'isolated_reflex': audit['isolated_reflex'],
        'greedy_size': greedy_size,
        'greedy_valid': greedy_valid,
        'greedy_diagnostics': diagnostics,
        'oracle_size': best,
        'oracle_witness': audit['witness'],
        'oracle_reflex_size': audit['max_cycle_with_reflex'],
        'reflex_inclusive_holds': audit['holds'],
        'window_failures': [w['window'] for w in audit['window_failures']],
        'isolated_on_witness': sorted(audit['isolated_on_witness']),
        'agreement': greedy_size == best,
        'size_ratio': 1.0 if best == 0 else greedy_size / float(best),
        'timing_s': time.time() - start,
    })
    if greedy_size > best:
        log.error('Greedy cycle of %d edges beats the exhaustive optimum %d',
            greedy_size, best)
    return row, polygon


def discrepancies(row):
    if row.get('status') != 'ok':
        return []
    reasons = []
    if row['greedy_size'] < row['oracle_size']:
        reasons.append('greedy-below-optimum')
    if row['greedy_size'] > row['oracle_size']:
        reasons.append('greedy-above-optimum')
    if not row['greedy_valid']:
        reasons.append('greedy-invalid')
    if not row['reflex_inclusive_holds']:
        reasons.append('reflex-inclusive-shortfall')
    if row['window_failures']:
        reasons.append('window-check-failed')
    if row['isolated_reflex']:
        reasons.append('isolated-reflex-vertex')
    if row['isolated_on_witness']:
        reasons.append('isolated-vertex-on-witness')
    return reasons


def summarize(rows):
    done = [r for r in rows if r.get('status') == 'ok']
    total = len(done)
    if not total:
        return {'trials': len(rows), 'completed': 0}

    def ratio(key):
        return sum(1 for r in done if r[key]) / float(total)

    return {
        'trials': len(rows),
        'completed': total,
        'agreement_ratio': ratio('agreement'),
        'greedy_valid_ratio': ratio('greedy_valid'),
        'reflex_inclusive_ratio': ratio('reflex_inclusive_holds'),
        'mean_size_ratio': sum(r['size_ratio'] for r in done) / float(total),
        'greedy_above_optimum': sum(1 for r in done if r['greedy_size'] > r['oracle_size']),
    }


def input_digest(params):
    blob = json.dumps(params, sort_keys=True).encode('utf-8')
    return hashlib.sha256(blob).hexdigest()


def plot_sizes(rows, path):
    """
    Greedy size against exhaustive optimum per trial, as SVG.
    """
    import matplotlib
    matplotlib.use('Agg')
    import matplotlib.pyplot as plt

    plt.rcParams['svg.hashsalt'] = 'polyembed'
    done = [r for r in rows if r.get('status') == 'ok']
    fig, ax = plt.subplots(figsize=(5, 5))
    sizes = [r['oracle_size'] for r in done] + [r['greedy_size'] for r in done] + [1]
    top = max(sizes) + 1
    ax.plot([0, top], [0, top], color='#999999', linewidth=1)
    ax.scatter([r['oracle_size'] for r in done], [r['greedy_size'] for r in done],
        color=config.SVG_EDGE_STROKE, s=18)
    ax.set_xlabel('exhaustive maximum cycle')
    ax.set_ylabel('greedy cycle')
    ax.set_xlim(0, top)
    ax.set_ylim(0, top)
    fig.savefig(path, format='svg', metadata={'Date': None})
    plt.close(fig)
    return path


def compare(trials, n_lo, n_hi, seed, run_dir=None, n_parallel=None, cap=None,
        plot=None, command=None):
    """
    Run the comparison and write report.json, progress.csv, the
    counterexample polygons and manifest.json under run_dir.

    Parameters
    ----------
    trials (int): Number of generated polygons.
    n_lo (int): Smallest vertex count, at least 8.
    n_hi (int): Largest vertex count, at most the oracle cap.
    seed (int): Seed of the trial plan.
    run_dir (str): Output directory; a time-stamped one under
        config.LOG_DIR by default.
    n_parallel (int): joblib workers.

    Returns
    -------
    report (dict): The deterministic RunReport.
    """
    if n_parallel is None:
        n_parallel = config.N_PARALLEL
    if run_dir is None:
        run_dir = default_run_dir()
    params = {'trials': trials, 'n_range': [n_lo, n_hi], 'seed': seed,
              'cap': cap if cap is not None else config.ORACLE_CYCLE_CAP}
    plan = plan_trials(trials, n_lo, n_hi, seed)

    with logdir(run_dir, params):
        logger.info('Running %d trials with %d workers', trials, n_parallel)
        results = Parallel(n_jobs=n_parallel)(
            delayed(run_trial)(n, s, r, cap) for n, s, r in plan)
        results.sort(key=lambda item: (item[0]['n'], item[0]['seed']))
        rows = [row for row, _ in results]

        manifest = []
        for row, polygon in results:
            reasons = discrepancies(row)
            if not reasons or polygon is None:
                continue
            name = 'n%d_seed%d' % (row['n'], row['seed'])
            header = GenConfig(GenKind.PSEUDO_CONVEX, row['n'], row['seed'],
                row['reflex_target']).header()
            save_counterexample(os.path.join(run_dir, 'counterexamples'), name,
                polygon, header)
            manifest.append({
                'file': os.path.join('counterexamples', '%s.poly' % name),
                'reasons': reasons,
                'reproduce': 'generate --kind pseudoconvex --n %d --seed %d --reflex %d'
                    % (row['n'], row['seed'], row['reflex_target']),
            })
        write_text(os.path.join(run_dir, 'manifest.json'), dump_json(manifest))
        write_tabular(os.path.join(run_dir, 'progress.csv'),
            [{k: v for k, v in row.items() if not isinstance(v, list)} for row in rows])

        report = {
            'command': command or 'compare',
            'input_digest': input_digest(params),
            'params': params,
            'summary': summarize(rows),
            'rows': [{k: v for k, v in row.items() if k != 'timing_s'} for row in rows],
            'counterexamples': manifest,
        }
        write_text(os.path.join(run_dir, 'report.json'), dump_json(report))
        if plot:
            plot_sizes(rows, plot)
        summary = report['summary']
        logger.info('Agreement %.3f over %d completed trials; %d counterexamples',
            summary.get('agreement_ratio', 0.0), summary['completed'], len(manifest))
    return report
