"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class Pin2Error(Exception):
    """Base class for all package errors."""


class InputError(Pin2Error, ValueError):
    """Invalid user-supplied data.  The CLI maps these to exit code 2."""


# graded modules
class InvalidStep(InputError):
    pass


class InvalidTower(InputError):
    pass


# decompositions
class EvenD(InputError):
    pass


class DNotAtMostOne(InputError):
    pass


class MonotonicityViolation(InputError):
    pass


class LengthViolation(InputError):
    pass


class NotJSplitForm(InputError):
    pass


class MultipleInfiniteTowers(InputError):
    pass


# Seifert front end
class NotCoprime(InputError):
    pass


class PositiveFibration(InputError):
    pass


class UnsupportedInput(InputError):
    pass


class DivergentTau(InputError):
    pass


# chain oracle
class TruncationTooLow(Pin2Error):
    """The Borel homology window did not stabilize within the margin."""


class RelationError(Pin2Error):
    """A constructed complex violates the module relations."""
