"""
boolinfo Search Module
======================

Exhaustive and sampled verification over Boolean-function classes.

Modules:
- enumeration: FunctionClass, ranked truth-table streams
- batch: chunk evaluation on (B, 2^n) table blocks
- parallel: worker pool, deterministic fold, JSON-lines checkpoints
- reports: PointSummary / PartialReport / SearchReport
- verification: verify_* runs and search_maximizers
- experiments: majority-vs-dictator moment crossover
"""

from boolinfo.search.enumeration import (
    Scope,
    FunctionClass,
    class_size,
    iter_truth_table_ints,
    enumerate_functions,
)
from boolinfo.search.reports import SearchReport, Violation, PointSummary, PartialReport, ScanPoint
from boolinfo.search.verification import (
    CHECKS,
    verify_conjecture,
    verify_theorem1,
    verify_moment_bounds,
    verify_corollary,
    verify_sampled,
    verify_taylor,
    verify_hypercontractivity,
    search_maximizers,
)
from boolinfo.search.experiments import moment_crossover_experiment, CrossoverTable
from boolinfo.utils.random_utils import random_balanced

__all__ = [
    'Scope',
    'FunctionClass',
    'class_size',
    'iter_truth_table_ints',
    'enumerate_functions',
    'SearchReport',
    'Violation',
    'PointSummary',
    'PartialReport',
    'ScanPoint',
    'CHECKS',
    'verify_conjecture',
    'verify_theorem1',
    'verify_moment_bounds',
    'verify_corollary',
    'verify_sampled',
    'verify_taylor',
    'verify_hypercontractivity',
    'search_maximizers',
    'moment_crossover_experiment',
    'CrossoverTable',
    'random_balanced',
]
