"""Exception hierarchy shared by every module."""


class EdsfError(Exception):
    """Base class for domain errors (CLI exit code 2)."""


class SingularCurve(EdsfError):
    pass


class PointNotOnCurve(EdsfError):
    pass


class TorsionOrIdentity(EdsfError):
    """[n]P hit the identity, so P is torsion (or the identity itself)."""


class TorsionPoint(TorsionOrIdentity):
    pass


class NonSquareDenominator(EdsfError):
    pass


class NonNormalized(EdsfError):
    """The base point is not integral, so D_1 != 1."""


class NonExactQuotient(EdsfError):
    pass


class PreconditionFailed(EdsfError):
    pass


class ParityUnsupported(EdsfError):
    pass


class TheoremViolation(EdsfError):
    pass


class BadReduction(EdsfError):
    pass


class NonInvertibleDenominator(EdsfError):
    pass


class NonInvertibleSlope(EdsfError):
    """A slope denominator shares the factor ``factor`` with the modulus."""

    def __init__(self, factor, modulus):
        super().__init__(f"slope denominator shares factor {factor} with modulus {modulus}")
        self.factor = factor
        self.modulus = modulus


class OracleScaleExceeded(EdsfError):
    pass


class FactorizationTimeout(EdsfError):
    def __init__(self, message, partial):
        super().__init__(message)
        self.partial = partial


class IdentityHasNoHeight(EdsfError):
    pass


class ParseError(EdsfError):
    def __init__(self, message, line=None, field=None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field!r}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.line = line
        self.field = field


class ValidationError(EdsfError):
    pass


class InfeasibleComputation(EdsfError):
    """Requested integers would exceed the configured size cap."""
