# Toolkit Configuration Settings

import sys
import os
from pathlib import Path

# Precision Settings
# Working precision N (coefficients a_0..a_N). QMZV_PRECISION overrides the
# default; an explicit --terms/--precision flag on the CLI wins over both.
BASE_PRECISION = 100


def _env_int(name, default, minimum=1):
    raw = os.getenv(name)
    if raw is None or raw.strip() == '':
        return default
    try:
        value = int(raw)
    except ValueError:
        return default
    return value if value >= minimum else default


DEFAULT_PRECISION = _env_int('QMZV_PRECISION', BASE_PRECISION)

# Verification precisions used by the worked-example suites
CONVERSION_CHECK_PRECISION = 100
PRODUCT_CHECK_PRECISION = 60
ORACLE_CHECK_PRECISION = 40
D_REPRESENTATION_CHECK_PRECISION = 80
CONJECTURE_CHECK_PRECISION = 200

# Family names
FAMILY_EULERIAN = 'eulerian'
FAMILY_OKOUNKOV = 'okounkov'
FAMILY_MONOMIAL = 'monomial'
BUILTIN_FAMILIES = (FAMILY_EULERIAN, FAMILY_OKOUNKOV, FAMILY_MONOMIAL)

# Basis labels carried by LinComb values
BASIS_BRACKETS = 'eulerian-brackets'
BASIS_OKOUNKOV = 'okounkov'
BASIS_MONOMIAL = 'monomial'

# d[k-2] representation: the pair sum runs over a+b = k + offset.
# Both offsets are tried by resolve_pair_weight_offset(); 0 is the one
# that survives series verification.
CANDIDATE_PAIR_WEIGHT_OFFSETS = (0, 2)
RESOLVED_PAIR_WEIGHT_OFFSET = 0
PAIR_OFFSET_CHECK_WEIGHTS = tuple(range(3, 9))

# Relation finding
RELATION_SAFETY_FACTOR = 2  # require N >= factor * len(candidates)

# Concurrency (joblib workers for candidate / block expansion)
N_JOBS = _env_int('QMZV_JOBS', 1)
JOBLIB_PREFER = 'threads'

# Memo tables kept on each PolyFamily (expansions, stuffle products,
# inverse slots); oldest entries are evicted past this many per table.
FAMILY_MEMO_LIMIT = _env_int('QMZV_MEMO_LIMIT', 4096)

# Logging
LOG_LEVEL = os.getenv('QMZV_LOG_LEVEL', 'WARNING').upper()
LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'

# Exit codes (stable, documented in README)
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INADMISSIBLE = 2
EXIT_CLOSURE = 3
EXIT_REFUTED = 4
EXIT_NO_SOLUTION = 5

# Output
OUTPUT_FORMATS = ('text', 'json', 'table')
DEFAULT_OUTPUT_FORMAT = 'text'

# Data directory
# Prefer the project's `data/` folder when it exists and is writable
# (developer runs); otherwise fall back to a per-user location.
BASE_DIR = Path(__file__).resolve().parents[1]
PROJECT_DATA = BASE_DIR / 'data'


def _choose_data_dir():
    try:
        if PROJECT_DATA.exists() and os.access(str(PROJECT_DATA), os.W_OK):
            return PROJECT_DATA
    except OSError:
        pass

    if sys.platform.startswith('win'):
        user_base = os.getenv('LOCALAPPDATA') or os.path.expanduser('~')
    else:
        user_base = os.getenv('XDG_DATA_HOME') or os.path.expanduser('~')

    return Path(user_base) / 'qmzv' / 'data'


DATA_DIR = Path(_choose_data_dir()).expanduser().resolve()

# Shipped identity files always come from the project tree; DATA_DIR is
# where user-written identity/lincomb files are looked up when given by name.
PROJECT_IDENTITY_DIR = PROJECT_DATA / 'identities'
IDENTITY_DIR = DATA_DIR / 'identities'
