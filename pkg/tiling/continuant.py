from exactalg.matrix import letter_matrix, row_product
from exactalg.rational import RationalFunction
from boundary.generator import LinearWord


def continuant(a) -> RationalFunction:
  """
    Signed continuant q_k(a_1, ..., a_k) = q_{k-1} a_k - q_{k-2}, with q_{-1} = 0 and q_0 = 1.
    It equals the determinant of the tridiagonal matrix with diagonal a and unit off-diagonals.

    Parameters:
      a (sequence) : entries supporting +, - and *; RationalFunction in practice

    Returns:
      q_k, or the constant 1 for an empty sequence
  """

  a = list(a)
  if not a:
    return RationalFunction.constant(1)
  previous, current = 0, 1
  for entry in a:
    previous, current = current, entry * current - previous
  return current


def _word_product(word: LinearWord, row_head: bool):
  b = word.values
  letters = word.letters
  n = len(letters) - 1
  matrices = [letter_matrix(b[i - 1], letters[i - 1], b[i]) for i in range(2, n + 1)]
  one = RationalFunction.constant(1)
  row = (one, b[0]) if row_head else (b[0], one)
  value = row_product(row, matrices, (one, b[n + 1]))
  for i in range(1, n + 1):
    value = value / b[i]
  return value


def tiling_formula(word: LinearWord) -> RationalFunction:
  """
    Value of a tiling point from its word b_0 y b_1 ... x b_{n+1}:

      1 / (b_1 ... b_n) . (1, b_0) . M(b_1, x_2, b_2) ... M(b_{n-1}, x_n, b_n) . (1; b_{n+1})

    For the shortest word b_0 y b_1 x b_2 the product is empty and the value is (1 + b_0 b_2) / b_1.
  """

  return _word_product(word, True)


def continuant_formula(word: LinearWord) -> RationalFunction:
  """
    Same product with the leading row (b_0, 1); applied to the word of a column range it gives
    the continuant of the range's linearization coefficients.
  """

  return _word_product(word, False)
