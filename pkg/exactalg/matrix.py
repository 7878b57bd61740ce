from exactalg.rational import RationalFunction


class Matrix2:
  """
    2x2 matrix [[a, b], [c, d]] over RationalFunction.
  """

  def __init__(self, a, b, c, d):
    self.a, self.b, self.c, self.d = a, b, c, d

  @staticmethod
  def diagonal(p, q):
    zero = RationalFunction.constant(0)
    return Matrix2(p, zero, zero, q)

  def __matmul__(self, other):
    return Matrix2(
      self.a * other.a + self.b * other.c, self.a * other.b + self.b * other.d,
      self.c * other.a + self.d * other.c, self.c * other.b + self.d * other.d)

  def row_times(self, row: tuple) -> tuple:
    """
      (p, q) . M
    """

    p, q = row
    return (p * self.a + q * self.c, p * self.b + q * self.d)

  def det(self):
    return self.a * self.d - self.b * self.c

  def __eq__(self, other):
    return isinstance(other, Matrix2) and (self.a, self.b, self.c, self.d) == (other.a, other.b, other.c, other.d)

  def __str__(self):
    return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"


def letter_matrix(left, letter: str, right) -> Matrix2:
  """
    M(a, x, b) = [[a, 1], [0, b]] and M(a, y, b) = [[b, 0], [1, a]].
  """

  one = RationalFunction.constant(1)
  zero = RationalFunction.constant(0)
  if letter == "x":
    return Matrix2(left, one, zero, right)
  return Matrix2(right, zero, one, left)


def row_product(row: tuple, matrices, column: tuple):
  """
    row . M_1 ... M_k . column, accumulated left to right.
  """

  for matrix in matrices:
    row = matrix.row_times(row)
  return row[0] * column[0] + row[1] * column[1]
