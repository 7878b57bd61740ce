class FriezeLabError(ValueError):
  """
    Base class of every error raised on purpose by frieze-lab.
    exit_code is what the command line returns when the error escapes a command.
  """

  exit_code = 1


class ExactArithmeticError(FriezeLabError):
  pass


class PolynomialDivisionError(ExactArithmeticError, ZeroDivisionError):

  def __init__(self, message: str="division by zero polynomial"):
    super().__init__(message)


class NotASquareError(ExactArithmeticError):

  def __init__(self, message: str="not a perfect square"):
    super().__init__(message)


class ParseError(ExactArithmeticError):
  pass


class QuiverError(FriezeLabError):
  pass


class BoundaryError(FriezeLabError):
  pass


class TilingError(FriezeLabError):
  pass


class FriezeError(FriezeLabError):
  pass


class InvariantBreach(FriezeLabError):
  """
    A mathematical identity that must hold did not. Raised for bugs, never for bad input.
  """

  exit_code = 2


class TilingInvariantError(InvariantBreach):
  pass


class LinearizationError(InvariantBreach):
  pass


class PeriodError(InvariantBreach):
  pass


class LaurentError(InvariantBreach):
  pass


class SplitError(InvariantBreach):

  def __init__(self, message: str="extreme ray value is not a fork product"):
    super().__init__(message)


class VerificationError(InvariantBreach):
  pass
