"""Exceptions shared across the package.

Geometric preconditions raise subclasses of GeometryError; file syntax
problems raise SpecSyntaxError / SpecSemanticError, which carry a line
number so the command line tool can point at the offending input.
"""


class GeometryError(ValueError):
    """Base class for violated geometric preconditions."""


class ZeroVector(GeometryError):
    def __init__(self):
        super().__init__("direction must be a nonzero integer vector")


class NonPrimitive(GeometryError):
    """An integer vector whose components share a factor > 1.

    Collapse vectors must be primitive, otherwise the boundary circle
    action is not free and the quotient is not a manifold.
    """

    def __init__(self, vector):
        self.vector = tuple(vector)
        super().__init__(f"vector {self.vector} is not primitive")


class ZeroSlopeSegment(GeometryError):
    """An angle profile is constant on one affine piece."""

    def __init__(self, segment):
        self.segment = segment
        super().__init__(f"profile is constant on segment {segment}; the form is not contact there")


class NonMonotone(GeometryError):
    """The slope of an angle profile changes sign between pieces."""

    def __init__(self, segment):
        self.segment = segment
        super().__init__(f"profile slope changes sign at segment {segment}")


class NonPositiveRadial(GeometryError):
    def __init__(self, t, value):
        self.t, self.value = t, value
        super().__init__(f"radial profile must be positive; value at t={t} is {value}")


class OutsideDomain(GeometryError):
    def __init__(self, t, lo, hi):
        super().__init__(f"t={t} lies outside the domain [{lo}, {hi}]")


class InvalidCutSpec(GeometryError):
    """Raised by operations that need a valid cut spec; carries the violations."""

    def __init__(self, violations):
        self.violations = tuple(violations)
        detail = "; ".join(v.message for v in self.violations)
        super().__init__(f"cut spec is invalid: {detail}")


class EndpointMismatch(GeometryError):
    """Two forms whose boundary angle directions differ cannot be joined by
    the straight-line plane-field homotopy."""

    def __init__(self, end, dir_a, dir_b):
        self.end = end
        super().__init__(
            f"boundary angle directions differ at t={end}: {dir_a} vs {dir_b}"
        )


class SliceNotRepresentable(GeometryError):
    """A ray slice whose cut boundary does not land on a rational parameter.

    Slicing produces new compact pieces whose breakpoints must be rational
    to form cut specs.  This holds whenever the profile's breakpoint angles
    and the window are exact lattice directions (all cases arising from the
    standard rotating forms); anything else is refused rather than rounded.
    """


class SpecSyntaxError(Exception):
    """Malformed input file (bad key, bad literal, duplicate)."""

    def __init__(self, line, message):
        self.line = line
        super().__init__(f"line {line}: {message}")


class SpecSemanticError(Exception):
    """Well-formed input describing bad geometry; wraps the cause."""

    def __init__(self, line, message):
        self.line = line
        super().__init__(f"line {line}: {message}")
