"""
Utility package for the cblink command line: scheme files and report rendering.
"""

# Import main modules to make them available when importing the package
from utils.data_manager import (
    ensure_data_directory, golden_path, load_data, save_report,
    parse_scheme_file, scheme_from_data, scheme_to_data,
)

from utils.report_tables import (
    agreement_table, emit, format_hf, jsonable, render_json, render_text,
)
