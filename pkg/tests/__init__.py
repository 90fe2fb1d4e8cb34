"""
Tests Package
=============

Test suites for boolinfo, one module per area:

1. Analysis: hypercube, channel, bounds (closed forms and decimal oracles)
2. Search: enumeration, parallel folds, checkpoints, verification runs
3. Front end: function specs, grids, output writers, CLI commands
4. Property tests (hypothesis) on random truth tables

Expected values live in config/verification_data.json.
"""
