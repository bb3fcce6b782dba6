"""
Application settings for the cblink scheme analyzer.
"""

# Application metadata
APP_TITLE = "cblink"
APP_VERSION = "1.0.0"
APP_DESCRIPTION = "Liaison and Cayley-Bacharach analysis of 0-dimensional projective schemes"

# Data storage settings
DATA_DIR = "data"
REPORTS_DIR = "reports"
CUBICS_W_FILE = "cubics_W.json"
CUBICS_X_FILE = "cubics_X.json"
QUADRICS_X_FILE = "quadrics_X.json"
QUADRICS_Y_FILE = "quadrics_Y.json"
P1_QUARTIC_FILE = "p1_quartic.json"

# Base fields
DEFAULT_FIELD = "Q"
DEFAULT_PRIME = 32003

# Randomized constructions (all seeded)
DEFAULT_SEED = 0
ENVELOPE_COEFF_BOUND = 50
ENVELOPE_RETRY_BUDGET = 32
TRACE_RETRY_BUDGET = 16
TRACE_COEFF_BOUND = 20
FUNCTIONAL_RETRY_BUDGET = 16
FUNCTIONAL_COEFF_BOUND = 20

# Degree loops stop here at the latest
DEGREE_SAFETY_BOUND = 40

# Cayley-Bacharach methods, in the order used when one verdict is enough
CBP_METHODS = ["canonical", "piece", "colon", "separators", "annihilator"]
CBP_METHOD_ORDER = ["canonical", "piece", "colon", "separators"]

# Output settings
OUTPUT_FORMATS = ["text", "json"]
DEFAULT_OUTPUT_FORMAT = "text"
JSON_INDENT = 2
EMPTY_SCHEME_MARKER = "(empty scheme)"

# Logging
LOG_LEVEL = "WARNING"
LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"

# Exit codes
EXIT_OK = 0
EXIT_CHECKS_FAILED = 1
EXIT_VALIDATION = 2
EXIT_PRECONDITION = 3
EXIT_RETRY_EXHAUSTED = 4

# Environment variables consulted before the values above
ENV_PREFIX = "CBLINK_"
