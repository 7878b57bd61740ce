from functools import lru_cache

from sympy import Symbol, ZZ, integer_nthroot
from sympy.polys.fields import FracField
from sympy.polys.orderings import grlex

from util.errors import ExactArithmeticError, NotASquareError


@lru_cache(maxsize=None)
def field_for(size: int) -> FracField:
  """
    The fraction field ZZ(u0, ..., u{size-1}).
    Generators are listed from the highest index down, so graded lex compares u{size-1} first
    and u0 < u1 < u2 < ... holds for printing and sign normalization.
  """

  if size < 1:
    raise ExactArithmeticError(f"a field needs at least one variable, got size {size}")
  return FracField([Symbol(f"u{i}") for i in reversed(range(size))], ZZ, grlex)


def lift_element(element, size: int):
  """
    Moves a sympy polynomial into the ring of field_for(size). size must not shrink the ring.
  """

  old_size = element.ring.ngens
  if old_size == size:
    return element
  if old_size > size:
    raise ExactArithmeticError(f"cannot shrink a polynomial from {old_size} to {size} variables")
  ring = field_for(size).ring
  pad = (0,) * (size - old_size)
  return ring.from_dict({pad + monom: coeff for monom, coeff in element.items()})


class Monomial:
  """
    Product of variables u_i with positive exponents; the empty product is 1.
  """

  def __init__(self, exponents: dict=None):
    stored = {}
    for index, exp in (exponents or {}).items():
      if index < 0 or exp < 0:
        raise ExactArithmeticError(f"invalid monomial factor u{index}^{exp}")
      if exp:
        stored[int(index)] = int(exp)
    self._exponents = tuple(sorted(stored.items()))

  @staticmethod
  def from_tuple(monom: tuple):
    size = len(monom)
    return Monomial({size - 1 - pos: exp for pos, exp in enumerate(monom) if exp})

  def to_tuple(self, size: int) -> tuple:
    exps = [0] * size
    for index, exp in self._exponents:
      if index >= size:
        raise ExactArithmeticError(f"u{index} does not exist among {size} variables")
      exps[size - 1 - index] = exp
    return tuple(exps)

  @property
  def exponents(self) -> dict:
    return dict(self._exponents)

  @property
  def degree(self) -> int:
    return sum(exp for _, exp in self._exponents)

  @property
  def max_index(self) -> int:
    return max((index for index, _ in self._exponents), default=-1)

  def is_one(self) -> bool:
    return not self._exponents

  def __mul__(self, other):
    exps = self.exponents
    for index, exp in other._exponents:
      exps[index] = exps.get(index, 0) + exp
    return Monomial(exps)

  def __eq__(self, other):
    return isinstance(other, Monomial) and self._exponents == other._exponents

  def __hash__(self):
    return hash(self._exponents)

  def __str__(self):
    if not self._exponents:
      return "1"
    return "*".join(f"u{index}" if exp == 1 else f"u{index}^{exp}" for index, exp in self._exponents)

  def __repr__(self):
    return f"Monomial({self})"


class Polynomial:
  """
    Integer polynomial in u0, u1, ...
    Wraps a sympy sparse polynomial; rings of different sizes are lifted to the larger one on demand.
  """

  def __init__(self, element):
    self._element = element

  @staticmethod
  def from_terms(terms: dict, size: int=None):
    """
      terms maps Monomial to integer coefficient. Zero coefficients are dropped.
    """

    needed = max((m.max_index for m in terms), default=-1) + 1
    size = max(size or 1, needed, 1)
    ring = field_for(size).ring
    return Polynomial(ring.from_dict({m.to_tuple(size): int(c) for m, c in terms.items() if c}))

  @staticmethod
  def constant(value: int, size: int=1):
    return Polynomial(field_for(size).ring.ground_new(int(value)))

  @staticmethod
  def variable(index: int, size: int=None):
    size = max(size or 1, index + 1)
    ring = field_for(size).ring
    return Polynomial(ring.gens[size - 1 - index])

  @property
  def element(self):
    return self._element

  @property
  def size(self) -> int:
    return self._element.ring.ngens

  def lifted(self, size: int):
    return Polynomial(lift_element(self._element, size))

  def terms(self) -> list:
    """
      (Monomial, int) pairs in descending graded lex order.
    """

    return [(Monomial.from_tuple(monom), int(coeff)) for monom, coeff in self._element.terms()]

  def is_zero(self) -> bool:
    return not self._element

  def is_constant(self) -> bool:
    return self._element.is_ground

  @property
  def leading_coefficient(self) -> int:
    if not self._element:
      return 0
    return int(self._element.terms()[0][1])

  @property
  def variables(self) -> set:
    found = set()
    for m, _ in self.terms():
      found.update(m.exponents)
    return found

  def _pair(self, other):
    if isinstance(other, int):
      other = Polynomial.constant(other, self.size)
    size = max(self.size, other.size)
    return lift_element(self._element, size), lift_element(other._element, size)

  def __add__(self, other):
    a, b = self._pair(other)
    return Polynomial(a + b)

  def __sub__(self, other):
    a, b = self._pair(other)
    return Polynomial(a - b)

  def __mul__(self, other):
    a, b = self._pair(other)
    return Polynomial(a * b)

  __radd__ = __add__
  __rmul__ = __mul__

  def __neg__(self):
    return Polynomial(-self._element)

  def __pow__(self, exp: int):
    return Polynomial(self._element ** exp)

  def __eq__(self, other):
    if isinstance(other, int):
      other = Polynomial.constant(other)
    if not isinstance(other, Polynomial):
      return NotImplemented
    a, b = self._pair(other)
    return a == b

  def __hash__(self):
    return hash(frozenset(self.terms()))

  def __str__(self):
    return format_terms(self.terms())

  def __repr__(self):
    return f"Polynomial({self})"


def format_terms(terms: list) -> str:
  if not terms:
    return "0"
  out = ""
  for position, (monomial, coeff) in enumerate(terms):
    magnitude = abs(coeff)
    if monomial.is_one():
      piece = str(magnitude)
    elif magnitude == 1:
      piece = str(monomial)
    else:
      piece = f"{magnitude}*{monomial}"
    if position == 0:
      out = piece if coeff > 0 else f"-{piece}"
    else:
      out += (" + " if coeff > 0 else " - ") + piece
  return out


def poly_sqrt(p: Polynomial) -> Polynomial:
  """
    Square root of a perfect square, with positive leading coefficient.
    Term-by-term long division against the leading term of the root; raises NotASquareError otherwise.
  """

  element = p.element
  if not element:
    return p
  ring = element.ring
  root = ring.zero
  rest = element
  lead = None
  while rest:
    monom, coeff = rest.terms()[0]
    coeff = int(coeff)
    if lead is None:
      if coeff < 0 or any(exp % 2 for exp in monom):
        raise NotASquareError()
      lead_coeff, exact = integer_nthroot(coeff, 2)
      if not exact:
        raise NotASquareError()
      lead = (tuple(exp // 2 for exp in monom), int(lead_coeff))
      term = lead
    else:
      quotient = tuple(a - b for a, b in zip(monom, lead[0]))
      if any(exp < 0 for exp in quotient) or coeff % (2 * lead[1]):
        raise NotASquareError()
      term = (quotient, coeff // (2 * lead[1]))
    root = root + ring.from_dict({term[0]: term[1]})
    rest = element - root ** 2
  return Polynomial(root)
