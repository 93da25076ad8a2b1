import contextlib
import csv
import json
import logging
import os
import sys

from polyembed import config

PACKAGE_LOGGER = 'polyembed'

FORMAT = '%(asctime)s %(name)s %(levelname)s %(message)s'


def setup_logging(level=None, text_log_file=None):
    """
    Send the package's log records to stderr, and to a file if asked.
    stdout is left for machine-readable output only.
    """
    logger = logging.getLogger(PACKAGE_LOGGER)
    logger.setLevel(level or config.LOG_LEVEL)
    if not any(getattr(h, '_polyembed_stderr', False) for h in logger.handlers):
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(FORMAT))
        handler._polyembed_stderr = True
        logger.addHandler(handler)
    if text_log_file:
        add_text_output(text_log_file)
    return logger


def add_text_output(path):
    handler = logging.FileHandler(path, mode='a')
    handler.setFormatter(logging.Formatter(FORMAT))
    logging.getLogger(PACKAGE_LOGGER).addHandler(handler)
    return handler


def remove_text_output(handler):
    logging.getLogger(PACKAGE_LOGGER).removeHandler(handler)
    handler.close()


class PrefixLogger(logging.LoggerAdapter):
    """
    Prepends a fixed prefix, e.g. 'n=10 seed=3 | ', to every message.
    """

    def process(self, msg, kwargs):
        return '%s%s' % (self.extra['prefix'], msg), kwargs


def prefixed(name, prefix):
    return PrefixLogger(logging.getLogger(name), {'prefix': prefix})


@contextlib.contextmanager
def logdir(dirname, params=None):
    """
    Run directory: creates it, tees the package log into debug.log and
    writes params.json when parameters are given.
    """
    if not os.path.isdir(dirname):
        os.makedirs(dirname)
    handler = add_text_output(os.path.join(dirname, 'debug.log'))
    if params is not None:
        with open(os.path.join(dirname, 'params.json'), 'w') as f:
            json.dump(params, f, sort_keys=True, indent=2)
    try:
        yield dirname
    finally:
        remove_text_output(handler)


def write_tabular(path, rows):
    """
    Write report rows (dicts) as a csv table; missing cells stay empty.
    """
    if not rows:
        return
    keys = sorted(set().union(*rows))
    with open(path, 'w') as f:
        writer = csv.DictWriter(f, fieldnames=keys, lineterminator='\n')
        writer.writeheader()
        for row in rows:
            writer.writerow(row)
