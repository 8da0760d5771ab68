"""Exception hierarchy shared by all mforge modules."""

from __future__ import annotations

from fractions import Fraction


class MforgeError(Exception):
    """Base class for every error raised by the library."""


class DimensionMismatch(MforgeError, ValueError):
    pass


class NotMinusculeValue(MforgeError, ValueError):
    """2(v.a)/(a.a) is not one of -1, 0, +1 (or not integral, for reflections)."""

    def __init__(self, value: Fraction, v=None, a=None):
        self.value = value
        self.v = v
        self.a = a
        super().__init__(f"2(v.a)/(a.a) = {value} for v={v}, a={a}")


class InvalidSimpleSystem(MforgeError, ValueError):
    pass


class InvalidSystem(MforgeError, ValueError):
    """Raised when a checked constructor is given a pair that fails validation."""

    def __init__(self, report):
        self.report = report
        n = len(report.violations)
        super().__init__(f"not a minuscule system: {n} violation(s), first: {report.violations[0]}")


class NonIntegerEntry(MforgeError, ValueError):
    pass


class GcmViolation(MforgeError, ValueError):
    def __init__(self, problems: list[str]):
        self.problems = problems
        super().__init__("; ".join(problems))


class ParameterOutOfRange(MforgeError, ValueError):
    pass


class UnknownEntry(MforgeError, KeyError):
    pass


class UnknownLabel(MforgeError, KeyError):
    pass


class EmptyRestriction(MforgeError, ValueError):
    pass


class EmptySlice(MforgeError, ValueError):
    pass


class EmptySimpleSlice(MforgeError, ValueError):
    pass


class NotSubsets(MforgeError, ValueError):
    pass


class ZeroRoot(MforgeError, ValueError):
    pass


class SeedNotInPsi(MforgeError, ValueError):
    pass


class NotInPsi(MforgeError, ValueError):
    pass


class NotFiniteType(MforgeError, ValueError):
    pass


class DependentSimpleSystem(MforgeError, ValueError):
    pass


class NotOnPolytope(MforgeError, ValueError):
    pass


class EqualVertices(MforgeError, ValueError):
    pass


class NotALineDistance(MforgeError, ValueError):
    pass


class WrongSystem(MforgeError, ValueError):
    pass


class SystemFormatError(MforgeError, ValueError):
    pass


class EmptyPsi(MforgeError, ValueError):
    pass


class DuplicateVertex(MforgeError, ValueError):
    pass
