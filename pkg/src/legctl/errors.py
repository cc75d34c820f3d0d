"""Exception hierarchy shared by all legctl modules."""


class LegctlError(Exception):
    """Base class; `exit_code` is what the CLI returns when this escapes."""

    exit_code = 3


class InputError(LegctlError):
    exit_code = 2


class MathError(LegctlError):
    exit_code = 3


# exact_arith
class SingularMatrix(MathError):
    pass


class NotSymmetric(MathError):
    pass


class OutOfRange(MathError):
    pass


# diagram
class ParseError(InputError):
    pass


class InvalidDiagram(InputError):
    pass


class AsymmetricLinking(InvalidDiagram):
    pass


class InvalidGroup(InvalidDiagram):
    pass


# invariants
class NonIntegerResult(MathError):
    pass


class NotHomologySphere(MathError):
    pass


# seifert
class UnsupportedForm(MathError):
    pass


class InfiniteSlope(MathError):
    pass


class UnsupportedSlope(MathError):
    pass


class UnsupportedInput(MathError):
    pass


# families
class InvalidParams(InputError):
    pass
