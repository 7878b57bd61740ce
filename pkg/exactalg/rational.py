import operator
import re

from sympy import Rational, fraction, together
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from exactalg.polynomial import Monomial, Polynomial, field_for, lift_element
from util.errors import ExactArithmeticError, ParseError, PolynomialDivisionError

_ALLOWED_TEXT = re.compile(r"^[u0-9\s+\-*/^()]+$")
_VARIABLE = re.compile(r"u(\d+)")
_TRANSFORMATIONS = standard_transformations + (convert_xor,)


class RationalFunction:
  """
    Reduced fraction of integer polynomials in u0, u1, ...
    Instances are immutable. The fraction is kept canonical: coprime numerator and denominator,
    coprime integer contents, and a denominator whose graded lex leading coefficient is positive.
  """

  def __init__(self, element):
    self._element = element
    self._key = None

  @staticmethod
  def constant(value, size: int=1):
    value = Rational(value)
    ring = field_for(size).ring
    return rf_canonicalize(Polynomial(ring.ground_new(int(value.p))), Polynomial(ring.ground_new(int(value.q))))

  @staticmethod
  def variable(index: int, size: int=None):
    size = max(size or 1, index + 1)
    field = field_for(size)
    return RationalFunction(field.gens[size - 1 - index])

  @staticmethod
  def from_polynomial(p: Polynomial):
    return RationalFunction(field_for(p.size).new(p.element))

  @property
  def element(self):
    return self._element

  @property
  def size(self) -> int:
    return self._element.field.ngens

  @property
  def numerator(self) -> Polynomial:
    return Polynomial(self._element.numer)

  @property
  def denominator(self) -> Polynomial:
    return Polynomial(self._element.denom)

  @property
  def variables(self) -> set:
    return self.numerator.variables | self.denominator.variables

  @property
  def key(self) -> tuple:
    """
      Size independent identity of the canonical form, used for equality, hashing and pickling.
    """

    if self._key is None:
      self._key = (
        tuple((tuple(sorted(m.exponents.items())), c) for m, c in self.numerator.terms()),
        tuple((tuple(sorted(m.exponents.items())), c) for m, c in self.denominator.terms()))
    return self._key

  def lifted(self, size: int):
    if size == self.size:
      return self
    field = field_for(size)
    return RationalFunction(field.raw_new(lift_element(self._element.numer, size), lift_element(self._element.denom, size)))

  def is_zero(self) -> bool:
    return not self._element.numer

  def is_constant(self) -> bool:
    return self._element.numer.is_ground and self._element.denom.is_ground

  def constant_value(self) -> Rational:
    if not self.is_constant():
      raise ExactArithmeticError(f"{self} is not a constant")
    return Rational(self.numerator.leading_coefficient, self.denominator.leading_coefficient)

  def _pair(self, other):
    if not isinstance(other, RationalFunction):
      other = RationalFunction.constant(other, self.size)
    size = max(self.size, other.size)
    return self.lifted(size)._element, other.lifted(size)._element

  def __add__(self, other):
    a, b = self._pair(other)
    return RationalFunction(a + b)

  def __sub__(self, other):
    a, b = self._pair(other)
    return RationalFunction(a - b)

  def __mul__(self, other):
    a, b = self._pair(other)
    return RationalFunction(a * b)

  def __truediv__(self, other):
    a, b = self._pair(other)
    if not b:
      raise PolynomialDivisionError()
    return RationalFunction(a / b)

  def __radd__(self, other):
    return self + other

  def __rmul__(self, other):
    return self * other

  def __rsub__(self, other):
    return RationalFunction.constant(other, self.size) - self

  def __rtruediv__(self, other):
    return RationalFunction.constant(other, self.size) / self

  def __neg__(self):
    return RationalFunction(-self._element)

  def __pow__(self, exp: int):
    if exp < 0:
      return RationalFunction.constant(1, self.size) / self ** -exp
    return RationalFunction(self._element ** exp)

  def __eq__(self, other):
    if isinstance(other, (int, Rational)):
      other = RationalFunction.constant(other)
    if not isinstance(other, RationalFunction):
      return NotImplemented
    return self.key == other.key

  def __hash__(self):
    return hash(self.key)

  def __reduce__(self):
    return (_from_key, (self.key,))

  def __str__(self):
    num = self.numerator
    den = self.denominator
    if den == 1:
      return str(num)
    num_text = str(num)
    if len(num.terms()) > 1:
      num_text = f"({num_text})"
    den_text = str(den)
    if len(den.terms()) > 1 or "*" in den_text:
      den_text = f"({den_text})"
    return f"{num_text}/{den_text}"

  def __repr__(self):
    return f"RationalFunction({self})"


def _from_key(key: tuple) -> RationalFunction:
  num = Polynomial.from_terms({Monomial(dict(m)): c for m, c in key[0]})
  den = Polynomial.from_terms({Monomial(dict(m)): c for m, c in key[1]})
  return rf_canonicalize(num, den)


def rf_canonicalize(num: Polynomial, den: Polynomial) -> RationalFunction:
  if den.is_zero():
    raise PolynomialDivisionError()
  size = max(num.size, den.size)
  field = field_for(size)
  return RationalFunction(field.new(lift_element(num.element, size), lift_element(den.element, size)))


_ops = {
  "add": operator.add,
  "sub": operator.sub,
  "mul": operator.mul,
  "div": operator.truediv,
}


def rf_arith(a: RationalFunction, b: RationalFunction, op: str) -> RationalFunction:
  if op not in _ops:
    raise ExactArithmeticError(f"unknown operation {op}")
  return _ops[op](a, b)


def laurent_decompose(f: RationalFunction):
  """
    Returns (numerator, denominator monomial) when the denominator is a single monomial
    with coefficient 1, None otherwise.
  """

  terms = f.denominator.terms()
  if len(terms) != 1 or terms[0][1] != 1:
    return None
  return f.numerator, terms[0][0]


def is_positive(f: RationalFunction) -> bool:
  return all(c > 0 for _, c in f.numerator.terms())


def _evaluate_polynomial(p: Polynomial, assignment: dict) -> Rational:
  total = Rational(0)
  for monomial, coeff in p.terms():
    value = Rational(coeff)
    for index, exp in monomial.exponents.items():
      if index not in assignment:
        raise ExactArithmeticError(f"assignment does not cover u{index}")
      value *= Rational(assignment[index]) ** exp
    total += value
  return total


def evaluate(f: RationalFunction, assignment: dict) -> Rational:
  """
    Exact value of f with u_i replaced by assignment[i].
  """

  den = _evaluate_polynomial(f.denominator, assignment)
  if den == 0:
    raise PolynomialDivisionError("denominator vanishes at the assignment")
  return _evaluate_polynomial(f.numerator, assignment) / den


def _substitute_polynomial(p: Polynomial, assignment: dict, size: int) -> RationalFunction:
  total = RationalFunction.constant(0, size)
  for monomial, coeff in p.terms():
    value = RationalFunction.constant(coeff, size)
    for index, exp in monomial.exponents.items():
      replacement = assignment.get(index)
      if replacement is None:
        replacement = RationalFunction.variable(index, size)
      elif not isinstance(replacement, RationalFunction):
        replacement = RationalFunction.constant(replacement, size)
      value = value * replacement ** exp
    total = total + value
  return total


def substitute(f: RationalFunction, assignment: dict) -> RationalFunction:
  """
    Replaces u_i by assignment[i] (a number or a RationalFunction); other variables stay.
  """

  size = f.size
  den = _substitute_polynomial(f.denominator, assignment, size)
  if den.is_zero():
    raise PolynomialDivisionError("denominator vanishes under the substitution")
  return _substitute_polynomial(f.numerator, assignment, size) / den


def parse_rational(text: str) -> RationalFunction:
  """
    Parses the canonical text form, e.g. (u1*u2*u4*u5 + u3^2 + 2*u3 + 1)/(u3*u4*u5).
  """

  if not text or not _ALLOWED_TEXT.match(text):
    raise ParseError(f"not a rational function: '{text}'")
  size = max([int(i) for i in _VARIABLE.findall(text)] + [0]) + 1
  field = field_for(size)
  local = {str(s): s for s in field.symbols}
  try:
    expr = parse_expr(text, local_dict=local, transformations=_TRANSFORMATIONS)
    num, den = fraction(together(expr))
    ring = field.ring
    result = rf_canonicalize(Polynomial(ring.from_expr(num)), Polynomial(ring.from_expr(den)))
  except ExactArithmeticError:
    raise
  except Exception as e:
    raise ParseError(f"not a rational function: '{text}'") from e
  return result
