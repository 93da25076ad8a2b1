import os.path as osp

PROJECT_PATH = osp.abspath(osp.join(osp.dirname(__file__), '..'))

LOG_DIR = PROJECT_PATH + "/data"

LOG_LEVEL = "INFO"

# Points are exact integers bounded by this magnitude, so every predicate
# intermediate stays well inside 128-bit range.
COORD_LIMIT = 2 ** 30

ORACLE_CYCLE_CAP = 16

ORACLE_PATH_CAP = 16

ORACLE_CLIQUE_CAP = 20

# The pseudo-convex greedy asks the oracle to confirm optimality up to this n
ORACLE_CONFIRM_CAP = 12

GEN_COORDINATE_SPAN = 10 ** 6

GEN_MAX_RETRIES = 64

GEN_PERTURB_DIVISOR = 64

GEN_PERTURB_RETRIES = 32

GEN_RNG_NAME = "PCG64"

SVG_MARGIN = 0.05

SVG_POLYGON_STROKE = "#000000"

SVG_POLYGON_FILL = "#f4f4f4"

SVG_EDGE_STROKE = "#d62728"

SVG_LABEL_COLOR = "#1f4e9c"

N_PARALLEL = 1

# Above this size the O(n^2) no-three-collinear guard of the point-set cycle
# is skipped
GENERAL_POSITION_CHECK_LIMIT = 2000

if osp.exists(osp.join(osp.dirname(__file__), "config_personal.py")):
    from .config_personal import *
