#!/usr/bin/env python3
"""
Exception types for flagk.

Input and precondition problems derive from ValueError; violations of facts
the theory guarantees derive from RuntimeError. The CLI maps the first group
to exit status 2 and ConsistencyError to exit status 1.
"""


class FlagKError(Exception):
    """Base class of every error raised by flagk."""


class RootDataError(FlagKError, ValueError):
    """Invalid Cartan type, rank, simple-root index or weight."""


class GroupCapError(FlagKError, ValueError):
    """The Weyl group is larger than the configured cap."""

    def __init__(self, cap):
        super().__init__(f"Weyl group exceeds the configured cap of {cap} elements")
        self.cap = cap


class NotReducedError(FlagKError, ValueError):
    """A word of simple reflections is not reduced."""


class NoLiftError(FlagKError, ValueError):
    """A coset chain has no lift below the given Weyl element."""


class PreconditionError(FlagKError, ValueError):
    """An operation was called outside its stated precondition."""


class ConsistencyError(FlagKError, RuntimeError):
    """A property guaranteed by the theory did not hold."""
