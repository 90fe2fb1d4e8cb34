"""
boolinfo
========

Exact information measures of Boolean functions observed through a binary
symmetric channel, the closed-form bounds on them, and exhaustive
verification of those bounds at small n.

Packages:
- boolinfo.core: logging, step context, configuration, assertions, errors
- boolinfo.analysis: hypercube, channel, bounds
- boolinfo.search: enumeration, parallel scans, verification runs, experiments
- boolinfo.utils: truth-table codec, function specs, grids, output writers
"""

__version__ = "1.0.0"
