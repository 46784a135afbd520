"""Exception types shared across the package.

Two failure families matter to callers (and to the CLI exit-code mapping):
malformed input versus a computation whose internal consistency checks
failed.  Everything derives from LatcohError so `except LatcohError` catches
both.
"""


class LatcohError(Exception):
    pass


class InputError(LatcohError):
    """Malformed or out-of-contract input (bad JSON, empty generator list...)."""


class ValidationError(LatcohError):
    """An internal consistency check failed on structurally valid input."""
