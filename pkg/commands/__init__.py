"""
Command implementations behind the cblink subcommands.

Every ``run_*`` function takes the parsed argparse namespace and returns a
plain report dict; rendering and exit codes are handled by main.
"""

from commands.analysis import run_analyze
from commands.linkage import run_ci_envelope, run_link_report, run_residual
from commands.cbp import run_cbp
from commands.points import run_point_degrees, run_separators
from commands.dedekind import run_dedekind
from commands.selftest import run_selftest
