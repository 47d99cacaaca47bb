"""
Test package for flagk.

Unit and property tests per module, CLI tests and the golden-file tests
for the G2 expansion.
"""
