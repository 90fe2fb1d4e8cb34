"""
boolinfo Utils Module
=====================

Utility functions shared by the CLI, the search layer and the tests.

Modules:
- truth_table: 'n:HEX' codec and batch table construction
- function_spec: 'dictator:1@n=3'-style parser
- grids: alpha grid parsing with per-check defaults
- random_utils: seeded random functions and tables
- output: CSV / JSON writers
- data_loader: config/verification_data.json access
"""

from boolinfo.utils.truth_table import format_table, parse_table, tables_from_ints, hex_width
from boolinfo.utils.function_spec import parse_function_spec, format_function_spec
from boolinfo.utils.grids import parse_grid, linspace_grid, corollary_grid
from boolinfo.utils.random_utils import make_rng, random_balanced, random_function, random_real_table
from boolinfo.utils.output import write_csv, write_json, to_json, open_sink

__all__ = [
    'format_table',
    'parse_table',
    'tables_from_ints',
    'hex_width',
    'parse_function_spec',
    'format_function_spec',
    'parse_grid',
    'linspace_grid',
    'corollary_grid',
    'make_rng',
    'random_balanced',
    'random_function',
    'random_real_table',
    'write_csv',
    'write_json',
    'to_json',
    'open_sink',
]
