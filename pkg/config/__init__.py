"""
Configuration package for the cblink scheme analyzer.
"""

import os

# Import settings to make them available when importing the package
from config.settings import (
    APP_TITLE, APP_VERSION, APP_DESCRIPTION,
    DATA_DIR, REPORTS_DIR,
    CUBICS_W_FILE, CUBICS_X_FILE, QUADRICS_X_FILE,
    QUADRICS_Y_FILE, P1_QUARTIC_FILE,
    DEFAULT_FIELD, DEFAULT_PRIME, DEFAULT_SEED,
    ENVELOPE_COEFF_BOUND, ENVELOPE_RETRY_BUDGET,
    TRACE_RETRY_BUDGET, TRACE_COEFF_BOUND,
    FUNCTIONAL_RETRY_BUDGET, FUNCTIONAL_COEFF_BOUND,
    DEGREE_SAFETY_BOUND, CBP_METHODS, CBP_METHOD_ORDER,
    OUTPUT_FORMATS, DEFAULT_OUTPUT_FORMAT, JSON_INDENT, EMPTY_SCHEME_MARKER,
    LOG_LEVEL, LOG_FORMAT,
    EXIT_OK, EXIT_CHECKS_FAILED, EXIT_VALIDATION, EXIT_PRECONDITION, EXIT_RETRY_EXHAUSTED,
    ENV_PREFIX,
)


def runtime_setting(name, default):
    """
    Look up a setting in the environment first, then fall back to the default.

    Args:
        name (str): Setting name without prefix, e.g. "SEED".
        default: Value used when the variable is unset; its type is used to
            convert the environment string.

    Returns:
        The environment value converted to the type of ``default``, or ``default``.
    """
    raw = os.environ.get(ENV_PREFIX + name)
    if raw is None:
        return default
    if isinstance(default, bool):
        return raw.strip().lower() in ("1", "true", "yes")
    if isinstance(default, int):
        return int(raw)
    return raw
